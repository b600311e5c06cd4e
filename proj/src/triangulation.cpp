#include "plvo/triangulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace plvo {

std::optional<Eigen::Vector3d> triangulate_point_stereo(
    const Eigen::Vector2d& u_left, const Eigen::Vector2d& u_right,
    const StereoRig& rig, const TriangulationParams& params) {
  const double disparity = u_left.x() - u_right.x();
  if (disparity <= params.min_disparity) return std::nullopt;
  if (std::abs(u_left.y() - u_right.y()) > params.max_vertical_offset) {
    return std::nullopt;
  }
  const auto& K = rig.intrinsics;
  const double b = rig.baseline;
  return Eigen::Vector3d(b * (u_left.x() - K.cx) / disparity,
                         b * (u_left.y() - K.cy) * (K.fx / K.fy) / disparity,
                         b * K.fx / disparity);
}

Plane3D back_project_plane(const LineSegment2D& seg, const PoseSE3& pose,
                           const PinholeIntrinsics& K) {
  const Eigen::Vector3d r1 = K.ray(seg.p1);
  const Eigen::Vector3d r2 = K.ray(seg.p2);
  const Eigen::Vector3d n_cam = r1.cross(r2).normalized();
  Plane3D plane;
  plane.normal = pose.rotation.transpose() * n_cam;
  plane.offset = -plane.normal.dot(pose.center());
  return plane;
}

namespace {

// Positive-depth check of a world point in a camera.
bool in_front(const PoseSE3& pose, const Eigen::Vector3d& x_world) {
  return pose.apply(x_world).z() > 0.0;
}

}  // namespace

LineTriangulationResult triangulate_line_two_planes(
    const LineSegment2D& seg1, const PoseSE3& pose1, const LineSegment2D& seg2,
    const PoseSE3& pose2, const PinholeIntrinsics& K,
    const TriangulationParams& params) {
  LineTriangulationResult result;
  const Plane3D pi1 = back_project_plane(seg1, pose1, K);
  const Plane3D pi2 = back_project_plane(seg2, pose2, K);

  const double cos_angle = std::clamp(std::abs(pi1.normal.dot(pi2.normal)), 0.0, 1.0);
  if (std::acos(cos_angle) < params.min_plane_angle) {
    result.failure = LineTriangulationFailure::kDegenerateGeometry;
    return result;
  }

  PluckerLine line;
  line.v = pi1.normal.cross(pi2.normal).normalized();
  // Point on both planes: solve [n1; n2; v]ᵀ-stacked system.
  Eigen::Matrix3d A;
  A.row(0) = pi1.normal.transpose();
  A.row(1) = pi2.normal.transpose();
  A.row(2) = line.v.transpose();
  const Eigen::Vector3d rhs(-pi1.offset, -pi2.offset, 0.0);
  const Eigen::Vector3d point = A.fullPivLu().solve(rhs);
  line.n = point.cross(line.v);

  // Cheirality over the observed extent.
  const auto extent = trim_endpoints(line, {{pose1, seg1}, {pose2, seg2}}, K);
  if (!in_front(pose1, extent.first) || !in_front(pose1, extent.second) ||
      !in_front(pose2, extent.first) || !in_front(pose2, extent.second)) {
    result.failure = LineTriangulationFailure::kBehindCamera;
    return result;
  }
  result.line = line;
  return result;
}

PluckerLine triangulate_line_from_points(const Eigen::Vector3d& x1,
                                         const Eigen::Vector3d& x2) {
  return PluckerLine::from_two_points(x1, x2);
}

std::optional<std::pair<int, int>> select_support_points(
    const std::vector<Eigen::Vector2d>& pixels, const LineSegment2D& seg) {
  if (pixels.size() < 2) return std::nullopt;
  int best = -1, second = -1;
  double best_d = std::numeric_limits<double>::max();
  double second_d = std::numeric_limits<double>::max();
  for (int i = 0; i < static_cast<int>(pixels.size()); ++i) {
    const double d = point_line_distance(pixels[i], seg);
    if (d < best_d) {
      second = best;
      second_d = best_d;
      best = i;
      best_d = d;
    } else if (d < second_d) {
      second = i;
      second_d = d;
    }
  }
  return std::make_pair(best, second);
}

std::pair<Eigen::Vector3d, Eigen::Vector3d> trim_endpoints(
    const PluckerLine& world_line,
    const std::vector<std::pair<PoseSE3, LineSegment2D>>& observations,
    const PinholeIntrinsics& K) {
  const PluckerLine line = world_line.normalized();
  const Eigen::Vector3d p0 = line.closest_point_to_origin();
  const Eigen::Vector3d& v = line.v;

  double s_min = std::numeric_limits<double>::max();
  double s_max = std::numeric_limits<double>::lowest();
  for (const auto& [pose, seg] : observations) {
    const Eigen::Vector3d c = pose.center();
    for (const auto& px : {seg.p1, seg.p2}) {
      const Eigen::Vector3d d = (pose.rotation.transpose() * K.ray(px)).normalized();
      // Closest point on the line to the ray (c, d): minimize over (s, t)
      // ‖p0 + s v − c − t d‖².
      const double vd = v.dot(d);
      const double denom = 1.0 - vd * vd;
      if (denom < 1e-12) continue;  // ray parallel to the line
      const Eigen::Vector3d w = c - p0;
      const double s = (v.dot(w) - vd * d.dot(w)) / denom;
      s_min = std::min(s_min, s);
      s_max = std::max(s_max, s);
    }
  }
  if (s_min > s_max) {
    s_min = -0.5;
    s_max = 0.5;
  }
  return {p0 + s_min * v, p0 + s_max * v};
}

}  // namespace plvo
