#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace plvo {

using Vector6d = Eigen::Matrix<double, 6, 1>;
using Matrix6d = Eigen::Matrix<double, 6, 6>;

Eigen::Matrix3d skew(const Eigen::Vector3d& v);

// Rodrigues formula and its inverse.
Eigen::Matrix3d so3_exp(const Eigen::Vector3d& omega);
Eigen::Vector3d so3_log(const Eigen::Matrix3d& R);

// Nearest rotation (polar projection via SVD).
Eigen::Matrix3d orthonormalize_rotation(const Eigen::Matrix3d& M);

// Rigid transform mapping world coordinates into the camera frame:
// X_c = R * X_w + t.
struct PoseSE3 {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  static PoseSE3 identity() { return {}; }

  Eigen::Vector3d apply(const Eigen::Vector3d& x_world) const {
    return rotation * x_world + translation;
  }

  // this ∘ rhs: first rhs, then this.
  PoseSE3 compose(const PoseSE3& rhs) const {
    return {rotation * rhs.rotation, rotation * rhs.translation + translation};
  }

  PoseSE3 inverse() const {
    return {rotation.transpose(), -(rotation.transpose() * translation)};
  }

  // Camera center in world coordinates.
  Eigen::Vector3d center() const { return -(rotation.transpose() * translation); }

  double rotation_angle_to(const PoseSE3& other) const;
  double distance_to(const PoseSE3& other) const {
    return (center() - other.center()).norm();
  }

  // SO(3) membership: ‖RᵀR − I‖ and |det R − 1| within tol.
  bool rotation_valid(double tol = 1e-9) const;
};

// Left-multiplicative SE(3) update: returns Exp(delta) ∘ pose with
// delta = (translational, rotational) in the camera frame.
PoseSE3 se3_increment(const PoseSE3& pose, const Vector6d& delta);

// Full SE(3) exponential, delta = (v, omega).
PoseSE3 se3_exp(const Vector6d& delta);

// Adjoint of a pose under the (v, omega) ordering:
// Exp(Adj(T) d) ∘ T = T ∘ Exp(d).
Matrix6d se3_adjoint(const PoseSE3& pose);

}  // namespace plvo
