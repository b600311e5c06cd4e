#include "plvo/se3.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace plvo {

Eigen::Matrix3d skew(const Eigen::Vector3d& v) {
  Eigen::Matrix3d m;
  m << 0.0, -v.z(), v.y(), v.z(), 0.0, -v.x(), -v.y(), v.x(), 0.0;
  return m;
}

Eigen::Matrix3d so3_exp(const Eigen::Vector3d& omega) {
  const double theta = omega.norm();
  const Eigen::Matrix3d W = skew(omega);
  if (theta < 1e-10) {
    return Eigen::Matrix3d::Identity() + W + 0.5 * W * W;
  }
  const double s = std::sin(theta) / theta;
  const double c = (1.0 - std::cos(theta)) / (theta * theta);
  return Eigen::Matrix3d::Identity() + s * W + c * W * W;
}

Eigen::Vector3d so3_log(const Eigen::Matrix3d& R) {
  const double tr = R.trace();
  const double cos_theta = std::clamp(0.5 * (tr - 1.0), -1.0, 1.0);
  const double theta = std::acos(cos_theta);
  Eigen::Vector3d w(R(2, 1) - R(1, 2), R(0, 2) - R(2, 0), R(1, 0) - R(0, 1));
  if (theta < 1e-10) {
    return 0.5 * w;
  }
  if (theta > M_PI - 1e-6) {
    // Near pi the axis comes from the symmetric part.
    Eigen::Matrix3d S = 0.5 * (R + Eigen::Matrix3d::Identity());
    Eigen::Vector3d axis = S.diagonal().cwiseMax(0.0).cwiseSqrt();
    int k;
    S.diagonal().maxCoeff(&k);
    if (R((k + 2) % 3, (k + 1) % 3) - R((k + 1) % 3, (k + 2) % 3) < 0.0) {
      axis = -axis;
    }
    // Fix relative signs from off-diagonals.
    for (int i = 0; i < 3; ++i) {
      if (i != k && S(k, i) < 0.0) axis(i) = -std::abs(axis(i));
    }
    axis.normalize();
    return theta * axis;
  }
  return (0.5 * theta / std::sin(theta)) * w;
}

Eigen::Matrix3d orthonormalize_rotation(const Eigen::Matrix3d& M) {
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix3d R = svd.matrixU() * svd.matrixV().transpose();
  if (R.determinant() < 0.0) {
    Eigen::Matrix3d flip = Eigen::Matrix3d::Identity();
    flip(2, 2) = -1.0;
    R = svd.matrixU() * flip * svd.matrixV().transpose();
  }
  return R;
}

double PoseSE3::rotation_angle_to(const PoseSE3& other) const {
  const Eigen::Matrix3d dR = rotation * other.rotation.transpose();
  const double c = std::clamp(0.5 * (dR.trace() - 1.0), -1.0, 1.0);
  return std::acos(c);
}

bool PoseSE3::rotation_valid(double tol) const {
  const Eigen::Matrix3d err =
      rotation.transpose() * rotation - Eigen::Matrix3d::Identity();
  return err.cwiseAbs().maxCoeff() <= tol &&
         std::abs(rotation.determinant() - 1.0) <= tol;
}

namespace {

Eigen::Matrix3d so3_left_jacobian(const Eigen::Vector3d& omega) {
  const double theta = omega.norm();
  const Eigen::Matrix3d W = skew(omega);
  if (theta < 1e-8) {
    return Eigen::Matrix3d::Identity() + 0.5 * W + W * W / 6.0;
  }
  const double t2 = theta * theta;
  const double a = (1.0 - std::cos(theta)) / t2;
  const double b = (theta - std::sin(theta)) / (t2 * theta);
  return Eigen::Matrix3d::Identity() + a * W + b * W * W;
}

}  // namespace

PoseSE3 se3_exp(const Vector6d& delta) {
  const Eigen::Vector3d v = delta.head<3>();
  const Eigen::Vector3d omega = delta.tail<3>();
  PoseSE3 out;
  out.rotation = so3_exp(omega);
  out.translation = so3_left_jacobian(omega) * v;
  return out;
}

PoseSE3 se3_increment(const PoseSE3& pose, const Vector6d& delta) {
  return se3_exp(delta).compose(pose);
}

Matrix6d se3_adjoint(const PoseSE3& pose) {
  Matrix6d adj = Matrix6d::Zero();
  adj.topLeftCorner<3, 3>() = pose.rotation;
  adj.bottomRightCorner<3, 3>() = pose.rotation;
  adj.topRightCorner<3, 3>() = skew(pose.translation) * pose.rotation;
  return adj;
}

}  // namespace plvo
