#include "grasp/hand_model.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "grasp/json_util.hpp"

namespace grasp
{

void ImpedanceParams::validate() const
{
  if (!(k_p > 0.0)) {
    throw std::invalid_argument("impedance: k_p must be > 0");
  }
  if (!(k_d >= 0.0)) {
    throw std::invalid_argument("impedance: k_d must be >= 0");
  }
}

HandModel::HandModel(std::vector<Finger> fingers, std::vector<Coupling> couplings,
                     std::vector<ContactSite> contact_sites, std::string name)
    : name_(std::move(name)),
      fingers_(std::move(fingers)),
      couplings_(std::move(couplings)),
      contact_sites_(std::move(contact_sites))
{
  build_index();
  validate();
}

void HandModel::build_index()
{
  follower_.assign(fingers_.size(), {});
  actuated_index_.assign(fingers_.size(), {});
  for (std::size_t f = 0; f < fingers_.size(); ++f) {
    follower_[f].assign(fingers_[f].joints.size(), false);
    actuated_index_[f].assign(fingers_[f].joints.size(), -1);
  }
  for (const Coupling& c : couplings_) {
    if (c.finger < 0 || c.finger >= static_cast<int>(fingers_.size())) {
      throw std::invalid_argument("coupling references unknown finger");
    }
    const int n = static_cast<int>(fingers_[c.finger].joints.size());
    if (c.leader < 0 || c.leader >= n || c.follower < 0 || c.follower >= n || c.leader == c.follower) {
      throw std::invalid_argument("coupling references invalid joint ids");
    }
    follower_[c.finger][c.follower] = true;
  }
  int id = 0;
  for (std::size_t f = 0; f < fingers_.size(); ++f) {
    for (std::size_t j = 0; j < fingers_[f].joints.size(); ++j) {
      if (!follower_[f][j]) {
        actuated_index_[f][j] = id++;
      }
    }
  }
  actuated_count_ = id;
  // followers resolve to their leader's actuated slot
  for (const Coupling& c : couplings_) {
    const int leader_id = actuated_index_[c.finger][c.leader];
    if (leader_id < 0) {
      throw std::invalid_argument("coupling follower chained to another follower");
    }
    actuated_index_[c.finger][c.follower] = leader_id;
  }
}

void HandModel::validate() const
{
  if (fingers_.empty()) {
    throw std::invalid_argument("hand must have at least one finger");
  }
  for (const Finger& finger : fingers_) {
    if (!is_rotation_matrix(finger.base.rotation)) {
      throw std::invalid_argument("finger base rotation is not orthonormal");
    }
    for (const RevoluteJoint& joint : finger.joints) {
      if (std::abs(joint.axis.norm() - 1.0) > 1e-9) {
        throw std::invalid_argument("joint axis must be unit length within 1e-9");
      }
      if (!(joint.lower <= joint.upper)) {
        throw std::invalid_argument("joint limits must satisfy lower <= upper");
      }
    }
  }
  std::set<std::pair<int, int>> leaders;
  std::set<std::pair<int, int>> followers;
  for (const Coupling& c : couplings_) {
    leaders.insert({c.finger, c.leader});
    if (!followers.insert({c.finger, c.follower}).second) {
      throw std::invalid_argument("joint appears twice as a coupling follower");
    }
  }
  for (const Coupling& c : couplings_) {
    if (leaders.count({c.finger, c.follower}) > 0) {
      throw std::invalid_argument("coupling follower may not be a leader");
    }
  }
  for (const ContactSite& site : contact_sites_) {
    if (site.finger != ContactSite::kPalm) {
      if (site.finger < 0 || site.finger >= static_cast<int>(fingers_.size())) {
        throw std::invalid_argument("contact site references unknown finger");
      }
      if (site.link < 0 || site.link >= static_cast<int>(fingers_[site.finger].joints.size())) {
        throw std::invalid_argument("contact site references unknown link");
      }
    }
    if (std::abs(site.normal.norm() - 1.0) > 1e-9) {
      throw std::invalid_argument("contact site normal must be unit length within 1e-9");
    }
  }
}

int HandModel::actuated_index(int finger, int joint) const
{
  return actuated_index_.at(finger).at(joint);
}

bool HandModel::is_follower(int finger, int joint) const
{
  return follower_.at(finger).at(joint);
}

std::vector<std::vector<double>> HandModel::expand(const JointVector& q) const
{
  if (q.size() != actuated_count_) {
    throw std::invalid_argument("joint vector length does not match actuated joint count");
  }
  std::vector<std::vector<double>> full(fingers_.size());
  for (std::size_t f = 0; f < fingers_.size(); ++f) {
    full[f].resize(fingers_[f].joints.size());
    for (std::size_t j = 0; j < fingers_[f].joints.size(); ++j) {
      full[f][j] = q[actuated_index_[f][j]];
    }
  }
  return full;
}

JointVector HandModel::lower_limits() const
{
  JointVector lo(actuated_count_);
  for (std::size_t f = 0; f < fingers_.size(); ++f) {
    for (std::size_t j = 0; j < fingers_[f].joints.size(); ++j) {
      if (!follower_[f][j]) {
        lo[actuated_index_[f][j]] = fingers_[f].joints[j].lower;
      }
    }
  }
  return lo;
}

JointVector HandModel::upper_limits() const
{
  JointVector hi(actuated_count_);
  for (std::size_t f = 0; f < fingers_.size(); ++f) {
    for (std::size_t j = 0; j < fingers_[f].joints.size(); ++j) {
      if (!follower_[f][j]) {
        hi[actuated_index_[f][j]] = fingers_[f].joints[j].upper;
      }
    }
  }
  return hi;
}

JointVector HandModel::clamp_to_limits(const JointVector& q) const
{
  return q.cwiseMax(lower_limits()).cwiseMin(upper_limits());
}

namespace
{

Eigen::Vector3d parse_vec3(const nlohmann::json& j, const std::string& context)
{
  if (!j.is_array() || j.size() != 3) {
    throw std::invalid_argument(context + ": expected an array of 3 numbers");
  }
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

}  // namespace

HandModel HandModel::from_json_text(const std::string& text, const std::string& context)
{
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(context + ": " + e.what());
  }

  check_keys(j, {"schema_version", "fingers", "contact_sites"}, {"name", "couplings"}, context);
  if (j["schema_version"].get<int>() != 1) {
    throw std::invalid_argument(context + ": unsupported schema_version");
  }

  std::vector<Finger> fingers;
  for (const auto& jf : j.at("fingers")) {
    check_keys(jf, {"joints"}, {"name", "base_position", "base_rpy"}, context + ".fingers");
    Finger finger;
    finger.name = jf.value("name", "finger" + std::to_string(fingers.size()));
    const Eigen::Vector3d pos =
        jf.contains("base_position") ? parse_vec3(jf["base_position"], context) : Eigen::Vector3d::Zero();
    const Eigen::Vector3d rpy =
        jf.contains("base_rpy") ? parse_vec3(jf["base_rpy"], context) : Eigen::Vector3d::Zero();
    finger.base = frame_from_rpy(pos, rpy);
    for (const auto& jj : jf.at("joints")) {
      check_keys(jj, {"axis", "offset"}, {"limits"}, context + ".joints");
      RevoluteJoint joint;
      joint.axis = parse_vec3(jj.at("axis"), context);
      joint.offset = parse_vec3(jj.at("offset"), context);
      if (jj.contains("limits")) {
        const auto& lim = jj["limits"];
        if (!lim.is_array() || lim.size() != 2) {
          throw std::invalid_argument(context + ": limits must be [lower, upper]");
        }
        joint.lower = lim[0].get<double>();
        joint.upper = lim[1].get<double>();
      }
      finger.joints.push_back(joint);
    }
    fingers.push_back(std::move(finger));
  }

  std::vector<Coupling> couplings;
  if (j.contains("couplings")) {
    for (const auto& jc : j["couplings"]) {
      check_keys(jc, {"finger", "leader", "follower"}, {}, context + ".couplings");
      couplings.push_back({jc["finger"].get<int>(), jc["leader"].get<int>(), jc["follower"].get<int>()});
    }
  }

  std::vector<ContactSite> sites;
  for (const auto& js : j.at("contact_sites")) {
    check_keys(js, {"finger", "position", "normal"}, {"link", "fingertip"}, context + ".contact_sites");
    ContactSite site;
    site.finger = js["finger"].get<int>();
    site.link = js.value("link", 0);
    site.position = parse_vec3(js["position"], context);
    site.normal = parse_vec3(js["normal"], context);
    site.fingertip = js.value("fingertip", false);
    sites.push_back(site);
  }

  return HandModel(std::move(fingers), std::move(couplings), std::move(sites),
                   j.value("name", "hand"));
}

HandModel HandModel::load(const std::string& path)
{
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open hand config: " + path);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str(), path);
}

}  // namespace grasp
