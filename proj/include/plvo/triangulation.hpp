#pragma once

#include <Eigen/Core>
#include <optional>
#include <utility>
#include <vector>

#include "plvo/camera.hpp"
#include "plvo/line_geometry.hpp"
#include "plvo/se3.hpp"

namespace plvo {

// Plane normal·X + offset = 0 with a unit normal.
struct Plane3D {
  Eigen::Vector3d normal = Eigen::Vector3d::UnitZ();
  double offset = 0.0;

  double signed_distance(const Eigen::Vector3d& x) const {
    return normal.dot(x) + offset;
  }
};

struct TriangulationParams {
  // Two-plane intersection is rejected below this plane-normal angle.
  double min_plane_angle = 1.0 * M_PI / 180.0;
  double min_disparity = 1e-9;
  double max_vertical_offset = 2.0;  // rectified pair gate, px
};

// Closed-form rectified-stereo depth in the left-camera frame. Empty for
// non-positive disparity or a vertical offset above the gate.
std::optional<Eigen::Vector3d> triangulate_point_stereo(
    const Eigen::Vector2d& u_left, const Eigen::Vector2d& u_right,
    const StereoRig& rig, const TriangulationParams& params = {});

// World-frame plane spanned by the camera center and the segment's two
// viewing rays.
Plane3D back_project_plane(const LineSegment2D& seg, const PoseSE3& pose,
                           const PinholeIntrinsics& K);

enum class LineTriangulationFailure {
  kDegenerateGeometry,  // near-parallel back-projection planes
  kBehindCamera,
};

struct LineTriangulationResult {
  std::optional<PluckerLine> line;
  std::optional<LineTriangulationFailure> failure;
  bool ok() const { return line.has_value(); }
};

// Intersects the two observations' back-projection planes. Cheirality of the
// observed extent is checked against both cameras.
LineTriangulationResult triangulate_line_two_planes(
    const LineSegment2D& seg1, const PoseSE3& pose1, const LineSegment2D& seg2,
    const PoseSE3& pose2, const PinholeIntrinsics& K,
    const TriangulationParams& params = {});

// Fallback construction from two already-triangulated points on the line.
PluckerLine triangulate_line_from_points(const Eigen::Vector3d& x1,
                                         const Eigen::Vector3d& x2);

// Picks the two point indices with the smallest segment distance in the image.
// Empty when fewer than two candidates exist.
std::optional<std::pair<int, int>> select_support_points(
    const std::vector<Eigen::Vector2d>& pixels, const LineSegment2D& seg);

// Closest points on the infinite line to the endpoint viewing rays of each
// observation; returns the extremal pair along the direction.
std::pair<Eigen::Vector3d, Eigen::Vector3d> trim_endpoints(
    const PluckerLine& world_line,
    const std::vector<std::pair<PoseSE3, LineSegment2D>>& observations,
    const PinholeIntrinsics& K);

}  // namespace plvo
