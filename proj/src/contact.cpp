#include "grasp/contact.hpp"

#include <cmath>
#include <stdexcept>

namespace grasp
{

void ElasticParams::validate() const
{
  if (!(mu > 0.0)) {
    throw std::invalid_argument("elastic: mu must be > 0");
  }
  if (!(k_c > 0.0)) {
    throw std::invalid_argument("elastic: k_c must be > 0");
  }
  if (smoothed && !(smooth_beta > 0.0)) {
    throw std::invalid_argument("elastic: smooth_beta must be > 0");
  }
}

void ContactSet::validate() const
{
  for (const Contact& c : contacts) {
    if (std::abs(c.normal.norm() - 1.0) > 1e-9) {
      throw std::invalid_argument("contact normal must be unit length within 1e-9");
    }
  }
  if (d_init.size() != 3 * count()) {
    throw std::invalid_argument("d_init length must be 3N");
  }
}

Eigen::VectorXd displacement(const ContactSet& contacts, const Eigen::MatrixXd& grasp_matrix,
                             const Eigen::MatrixXd& jacobian, const Vector6d& dx,
                             const JointVector& dq)
{
  const int n3 = 3 * contacts.count();
  if (grasp_matrix.rows() != 6 || grasp_matrix.cols() != n3) {
    throw std::invalid_argument("grasp matrix must be 6 x 3N");
  }
  if (jacobian.rows() != n3 || jacobian.cols() != dq.size()) {
    throw std::invalid_argument("jacobian must be 3N x L");
  }
  return grasp_matrix.transpose() * dx - jacobian * dq + contacts.d_init;
}

namespace
{

double softplus(double x, double beta)
{
  const double bx = beta * x;
  if (bx > 30.0) {
    return x;
  }
  if (bx < -30.0) {
    return std::exp(bx) / beta;
  }
  return std::log1p(std::exp(bx)) / beta;
}

double smooth_min(double a, double b, double beta)
{
  // -(1/beta) log(exp(-beta a) + exp(-beta b)), stabilized around min(a, b)
  const double m = std::min(a, b);
  return m - std::log(std::exp(-beta * (a - m)) + std::exp(-beta * (b - m))) / beta;
}

}  // namespace

ContactForces contact_force(const ElasticParams& params, const ContactSet& contacts,
                            const Eigen::VectorXd& d)
{
  const int n = contacts.count();
  if (d.size() != 3 * n) {
    throw std::invalid_argument("displacement length must be 3N");
  }

  ContactForces out;
  out.f.setZero(3 * n);
  out.normal_part.resize(n);
  out.tangent_part.resize(n);

  for (int i = 0; i < n; ++i) {
    const Contact& c = contacts.contacts[i];
    const double k_c = c.k_c > 0.0 ? c.k_c : params.k_c;
    const Eigen::Vector3d d_i = d.segment<3>(3 * i);
    const double s = c.normal.dot(d_i);
    const Eigen::Vector3d d_n = s * c.normal;
    const Eigen::Vector3d d_t = d_i - d_n;
    const double dt_norm = d_t.norm();

    Eigen::Vector3d f_n;
    Eigen::Vector3d f_t;
    if (!params.smoothed) {
      f_n = (s < 0.0) ? (k_c * d_n).eval() : Eigen::Vector3d::Zero().eval();
      const double fn_norm = f_n.norm();
      if (k_c * dt_norm < params.mu * fn_norm) {
        f_t = k_c * d_t;
      } else {
        f_t = dt_norm > 0.0 ? (params.mu * fn_norm / dt_norm * d_t).eval()
                            : Eigen::Vector3d::Zero().eval();
      }
    } else {
      const double fn_mag = k_c * softplus(-s, params.smooth_beta);
      f_n = -fn_mag * c.normal;
      const double ft_mag = smooth_min(k_c * dt_norm, params.mu * fn_mag, params.smooth_beta);
      f_t = dt_norm > 0.0 ? (ft_mag / dt_norm * d_t).eval() : Eigen::Vector3d::Zero().eval();
    }

    out.normal_part[i] = f_n;
    out.tangent_part[i] = f_t;
    out.f.segment<3>(3 * i) = f_n + f_t;
  }
  return out;
}

}  // namespace grasp
