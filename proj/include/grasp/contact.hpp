#ifndef GRASP_CONTACT_HPP_
#define GRASP_CONTACT_HPP_

#include <vector>

#include <Eigen/Dense>

#include "grasp/geometry.hpp"
#include "grasp/hand_model.hpp"

namespace grasp
{

/// Elastic contact parameters. A uniform spring stiffness is the default;
/// per-contact values may override it when building a ContactSet.
struct ElasticParams
{
  double mu = 0.4;       // friction coefficient, > 0
  double k_c = 10000.0;  // contact spring stiffness [N/m], > 0

  // Optional softplus blending of the piecewise force law, for solvers that
  // want a smooth landscape. The exact law is the default.
  bool smoothed = false;
  double smooth_beta = 1e4;

  void validate() const;
};

/// One hand-object contact: position and outward object normal in the hand
/// base frame, plus the hand link carrying it.
struct Contact
{
  Eigen::Vector3d position;  // [m], hand frame
  Eigen::Vector3d normal;    // unit, points out of the object
  int finger = ContactSite::kPalm;
  int link = 0;
  bool fingertip = false;
  double k_c = 0.0;  // per-contact stiffness override; 0 = use ElasticParams.k_c
};

/// Fixed contact set of a grasp together with the spring displacement at
/// controller start (d_init, stacked 3N).
struct ContactSet
{
  std::vector<Contact> contacts;
  Eigen::VectorXd d_init;  // length 3N

  int count() const { return static_cast<int>(contacts.size()); }

  void validate() const;
};

/// Stacked contact forces plus the per-contact normal/tangential split.
struct ContactForces
{
  Eigen::VectorXd f;                          // stacked 3N [N]
  std::vector<Eigen::Vector3d> normal_part;   // f_n,i (along n_i)
  std::vector<Eigen::Vector3d> tangent_part;  // f_t,i (in the tangent plane)
};

/// Spring displacement of every contact: d = G^T dx - J dq + d_init.
Eigen::VectorXd displacement(const ContactSet& contacts, const Eigen::MatrixXd& grasp_matrix,
                             const Eigen::MatrixXd& jacobian, const Vector6d& dx,
                             const JointVector& dq);

/// Piecewise elastic force law. Per contact the displacement splits into a
/// normal and a tangential component; the normal force is a one-sided linear
/// spring and the tangential force is clamped to the friction cone. Ties on
/// the branch conditions resolve to the second branch; the slip direction at
/// zero tangential displacement is defined as zero.
ContactForces contact_force(const ElasticParams& params, const ContactSet& contacts,
                            const Eigen::VectorXd& d);

}  // namespace grasp

#endif  // GRASP_CONTACT_HPP_
