#include "grasp/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace grasp
{

Eigen::Matrix3d skew(const Eigen::Vector3d& v)
{
  Eigen::Matrix3d m;
  m << 0.0, -v.z(), v.y(),
      v.z(), 0.0, -v.x(),
      -v.y(), v.x(), 0.0;
  return m;
}

Eigen::Matrix3d axis_angle_rotation(const Eigen::Vector3d& axis, double angle)
{
  const Eigen::Matrix3d k = skew(axis);
  return Eigen::Matrix3d::Identity() + std::sin(angle) * k + (1.0 - std::cos(angle)) * k * k;
}

Eigen::Matrix3d rotation_vector_to_matrix(const Eigen::Vector3d& r)
{
  const double angle = r.norm();
  if (angle < 1e-12) {
    // second-order series keeps the map smooth through zero
    return Eigen::Matrix3d::Identity() + skew(r) + 0.5 * skew(r) * skew(r);
  }
  return axis_angle_rotation(r / angle, angle);
}

double rotation_angle_between(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b)
{
  const Eigen::Matrix3d rel = a * b.transpose();
  const double c = std::clamp((rel.trace() - 1.0) * 0.5, -1.0, 1.0);
  return std::acos(c);
}

bool is_rotation_matrix(const Eigen::Matrix3d& r, double tol)
{
  const double ortho = (r * r.transpose() - Eigen::Matrix3d::Identity()).norm();
  return ortho <= tol && std::abs(r.determinant() - 1.0) <= tol;
}

Frame frame_from_rpy(const Eigen::Vector3d& position, const Eigen::Vector3d& rpy)
{
  Frame f;
  f.rotation = (Eigen::AngleAxisd(rpy.z(), Eigen::Vector3d::UnitZ()) *
                Eigen::AngleAxisd(rpy.y(), Eigen::Vector3d::UnitY()) *
                Eigen::AngleAxisd(rpy.x(), Eigen::Vector3d::UnitX()))
                   .toRotationMatrix();
  f.translation = position;
  return f;
}

}  // namespace grasp
