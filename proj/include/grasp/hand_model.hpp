#ifndef GRASP_HAND_MODEL_HPP_
#define GRASP_HAND_MODEL_HPP_

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "grasp/geometry.hpp"

namespace grasp
{

/// Vector over the actuated joints (angles [rad] or torques [N m]).
using JointVector = Eigen::VectorXd;

/// 6D hand pose; rotation must be orthonormal with det +1 within 1e-9.
using HandPose = Frame;

struct RevoluteJoint
{
  Eigen::Vector3d axis;    // unit, in the joint's own frame
  Eigen::Vector3d offset;  // translation from the parent frame
  double lower = -3.15;    // angle limits [rad]
  double upper = 3.15;
};

struct Finger
{
  std::string name;
  Frame base;  // finger root in the hand base frame
  std::vector<RevoluteJoint> joints;
};

/// Ratio-1 coupling: angle(follower) == angle(leader) at all times.
struct Coupling
{
  int finger = 0;
  int leader = 0;
  int follower = 0;
};

/// Candidate contact location on the hand surface. `finger == kPalm` marks
/// sites on the fixed base, which never move with the joints.
struct ContactSite
{
  static constexpr int kPalm = -1;

  int finger = kPalm;
  int link = 0;                // joint index owning the link (unused for palm)
  Eigen::Vector3d position;    // link-local [m]
  Eigen::Vector3d normal;      // link-local outward unit normal of the hand surface
  bool fingertip = false;      // distal-link site
};

/// Joint-level impedance gains (Eq.-style law: tau = k_p (q_d - q_m) - k_d qdot_m).
struct ImpedanceParams
{
  double k_p = 5.0;   // [N m / rad], > 0
  double k_d = 0.05;  // [N m s / rad], >= 0

  void validate() const;
};

/// Kinematic description of a multi-finger hand: serial revolute chains,
/// ratio-1 couplings and candidate contact sites. Immutable after
/// construction; all queries are pure.
class HandModel
{
public:
  HandModel(std::vector<Finger> fingers, std::vector<Coupling> couplings,
            std::vector<ContactSite> contact_sites, std::string name = "hand");

  const std::string& name() const { return name_; }
  const std::vector<Finger>& fingers() const { return fingers_; }
  const std::vector<Coupling>& couplings() const { return couplings_; }
  const std::vector<ContactSite>& contact_sites() const { return contact_sites_; }

  /// Number of actuated (non-follower) joints.
  int actuated_count() const { return actuated_count_; }

  /// Actuated index of chain joint (finger, joint); followers map to their
  /// leader's actuated index.
  int actuated_index(int finger, int joint) const;

  bool is_follower(int finger, int joint) const;

  /// Expands actuated angles to full per-chain angles (followers copied
  /// from their leaders).
  std::vector<std::vector<double>> expand(const JointVector& q) const;

  /// Joint limits over the actuated joints.
  JointVector lower_limits() const;
  JointVector upper_limits() const;

  JointVector clamp_to_limits(const JointVector& q) const;

  /// Loads and validates a hand description from the JSON schema documented
  /// in configs/hands/. Unknown fields are rejected.
  static HandModel load(const std::string& path);
  static HandModel from_json_text(const std::string& text, const std::string& context);

private:
  void validate() const;
  void build_index();

  std::string name_;
  std::vector<Finger> fingers_;
  std::vector<Coupling> couplings_;
  std::vector<ContactSite> contact_sites_;
  std::vector<std::vector<int>> actuated_index_;  // [finger][joint] -> actuated id
  std::vector<std::vector<bool>> follower_;
  int actuated_count_ = 0;
};

}  // namespace grasp

#endif  // GRASP_HAND_MODEL_HPP_
