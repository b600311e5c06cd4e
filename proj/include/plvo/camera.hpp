#pragma once

#include <Eigen/Core>
#include <stdexcept>

#include "plvo/se3.hpp"

namespace plvo {

struct PinholeIntrinsics {
  double fx = 0.0;
  double fy = 0.0;
  double cx = 0.0;
  double cy = 0.0;
  int image_width = 0;
  int image_height = 0;

  Eigen::Vector2d project(const Eigen::Vector3d& x_cam) const {
    return {fx * x_cam.x() / x_cam.z() + cx, fy * x_cam.y() / x_cam.z() + cy};
  }

  // Unit-z viewing ray through a pixel, camera frame.
  Eigen::Vector3d ray(const Eigen::Vector2d& px) const {
    return {(px.x() - cx) / fx, (px.y() - cy) / fy, 1.0};
  }

  bool contains(const Eigen::Vector2d& px, double margin = 0.0) const {
    return px.x() >= margin && px.x() <= image_width - 1 - margin &&
           px.y() >= margin && px.y() <= image_height - 1 - margin;
  }

  // d(project)/d(x_cam).
  Eigen::Matrix<double, 2, 3> projection_jacobian(const Eigen::Vector3d& x) const {
    const double iz = 1.0 / x.z();
    Eigen::Matrix<double, 2, 3> j;
    j << fx * iz, 0.0, -fx * x.x() * iz * iz, 0.0, fy * iz, -fy * x.y() * iz * iz;
    return j;
  }

  // Maps the camera-frame plane normal of a 3D line to implicit 2D line
  // coefficients (consistent with project(): points of the line land on the
  // returned line for any fx, fy).
  Eigen::Matrix3d line_projection_matrix() const {
    Eigen::Matrix3d p;
    p << fy, 0.0, 0.0, 0.0, fx, 0.0, -fy * cx, -fx * cy, fx * fy;
    return p;
  }

  void validate() const {
    if (!(fx > 0.0) || !(fy > 0.0)) {
      throw std::invalid_argument("intrinsics: focal lengths must be positive");
    }
    if (cx < 0.0 || cx > image_width || cy < 0.0 || cy > image_height) {
      throw std::invalid_argument("intrinsics: principal point outside image");
    }
  }
};

// Rectified stereo pair sharing intrinsics; the right camera sees points
// shifted by -baseline along X, so disparity u_left - u_right is positive.
struct StereoRig {
  PinholeIntrinsics intrinsics;
  double baseline = 0.0;

  PoseSE3 right_from_left() const {
    PoseSE3 p;
    p.translation = Eigen::Vector3d(-baseline, 0.0, 0.0);
    return p;
  }

  void validate() const {
    intrinsics.validate();
    if (!(baseline > 0.0)) {
      throw std::invalid_argument("stereo rig: baseline must be positive");
    }
  }
};

}  // namespace plvo
