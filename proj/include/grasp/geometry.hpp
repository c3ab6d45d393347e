#ifndef GRASP_GEOMETRY_HPP_
#define GRASP_GEOMETRY_HPP_

#include <Eigen/Dense>

namespace grasp
{

using Vector6d = Eigen::Matrix<double, 6, 1>;

/// Rigid transform (rotation + translation). Composition via operator*.
struct Frame
{
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  Frame operator*(const Frame& other) const
  {
    return Frame{rotation * other.rotation, rotation * other.translation + translation};
  }

  Eigen::Vector3d apply(const Eigen::Vector3d& p) const { return rotation * p + translation; }

  Eigen::Vector3d rotate(const Eigen::Vector3d& v) const { return rotation * v; }

  Frame inverse() const
  {
    Frame f;
    f.rotation = rotation.transpose();
    f.translation = -f.rotation * translation;
    return f;
  }
};

/// Skew-symmetric matrix such that skew(a) * b == a.cross(b).
Eigen::Matrix3d skew(const Eigen::Vector3d& v);

/// Rotation about a (unit) axis by an angle, Rodrigues form.
Eigen::Matrix3d axis_angle_rotation(const Eigen::Vector3d& axis, double angle);

/// Exponential map of a rotation vector.
Eigen::Matrix3d rotation_vector_to_matrix(const Eigen::Vector3d& r);

/// Geodesic angle between two rotations, in [0, pi].
double rotation_angle_between(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b);

/// True if R is orthonormal with det +1 within tol.
bool is_rotation_matrix(const Eigen::Matrix3d& r, double tol = 1e-9);

Frame frame_from_rpy(const Eigen::Vector3d& position, const Eigen::Vector3d& rpy);

}  // namespace grasp

#endif  // GRASP_GEOMETRY_HPP_
