#pragma once

#include <Eigen/Core>
#include <optional>

#include "plvo/camera.hpp"
#include "plvo/se3.hpp"

namespace plvo {

// 2D segment carrying the implicit line a*x + b*y + c = 0 with a²+b² = 1.
struct LineSegment2D {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  Eigen::Vector2d p1 = Eigen::Vector2d::Zero();
  Eigen::Vector2d p2 = Eigen::Vector2d::Zero();

  // Throws std::invalid_argument on coincident endpoints.
  static LineSegment2D from_endpoints(const Eigen::Vector2d& p1,
                                      const Eigen::Vector2d& p2);

  double length() const { return (p2 - p1).norm(); }
  Eigen::Vector2d midpoint() const { return 0.5 * (p1 + p2); }
  Eigen::Vector2d direction() const { return (p2 - p1).normalized(); }
  Eigen::Vector3d coefficients() const { return {a, b, c}; }

  bool valid(double tol = 1e-6) const;
};

double point_line_distance(const Eigen::Vector2d& p, const LineSegment2D& l);

// Distance against raw (possibly unnormalized) coefficients; sign tells the
// side of the line.
double signed_point_line_distance(const Eigen::Vector2d& p,
                                  const Eigen::Vector3d& coeffs);

// 3D line as (plane normal through the origin, direction). Stored pairs are
// moment-consistent: P × v = n for every point P on the line, so the pair is
// meaningful under transform_line / project_line. Scale is projective: (n, v)
// and λ(n, v) are the same line.
struct PluckerLine {
  Eigen::Vector3d n = Eigen::Vector3d::Zero();
  Eigen::Vector3d v = Eigen::Vector3d::Zero();

  // Throws std::invalid_argument on coincident points. Output has ‖v‖ = 1,
  // v along (x1 − x2), n = x1 × v.
  static PluckerLine from_two_points(const Eigen::Vector3d& x1,
                                     const Eigen::Vector3d& x2);

  // Joint rescale so that ‖v‖ = 1; requires a finite line (v ≠ 0).
  PluckerLine normalized() const;

  double constraint_error() const { return std::abs(n.dot(v)); }
  bool valid(double tol = 1e-9) const {
    return v.norm() > 1e-12 && constraint_error() <= tol * std::max(1.0, n.norm() * v.norm());
  }

  // Point of the line closest to the origin (requires v ≠ 0).
  Eigen::Vector3d closest_point_to_origin() const {
    return v.cross(n) / v.squaredNorm();
  }

  double distance_to_point(const Eigen::Vector3d& x) const {
    return (x.cross(v.normalized()) - n / v.norm()).norm();
  }
};

// Minimal 4-DoF line parameterization for optimization.
struct OrthonormalLine {
  Eigen::Matrix3d U = Eigen::Matrix3d::Identity();
  Eigen::Matrix2d W = Eigen::Matrix2d::Identity();
  // Chained-update counter; drives periodic re-orthonormalization.
  int updates_since_renorm = 0;

  bool valid(double tol = 1e-9) const;
};

// Closed-form conversion (columns n̂, v̂, n̂×v̂; W from (‖n‖,‖v‖) up to scale).
// Empty for degenerate input: n ≈ 0 (line through the origin) or v ≈ 0.
std::optional<OrthonormalLine> plucker_to_orthonormal(const PluckerLine& line);

// Same map computed through a dense QR factorization of [n | v]; kept as a
// cross-check of the closed form.
std::optional<OrthonormalLine> plucker_to_orthonormal_qr(const PluckerLine& line);

// Inverse map at unit 2-norm scale: n = W(0,0)·u1, v = W(1,0)·u2. The result
// may be an invalid line (v = 0) when W has a zero second component; callers
// check PluckerLine::valid().
PluckerLine orthonormal_to_plucker(const OrthonormalLine& line);

// World-to-camera transform of Plücker coordinates:
// n_c = R n_w + [t]× R v_w, v_c = R v_w.
PluckerLine transform_line(const PoseSE3& pose, const PluckerLine& world_line);

// Raw implicit coefficients of the projected line (no normalization). Empty
// when the line passes through the camera center (n_c ≈ 0).
std::optional<Eigen::Vector3d> project_line_raw(const PinholeIntrinsics& K,
                                                const PluckerLine& cam_line);

// Unit-normalized (a²+b²=1) coefficients; additionally empty for lines that
// project to infinity (a = b = 0).
std::optional<Eigen::Vector3d> project_line(const PinholeIntrinsics& K,
                                            const PluckerLine& cam_line);

// Right-multiplicative minimal update: U·Exp([δ₁..₃]×), W·Rot2(δ₄), with
// periodic polar re-orthonormalization to bound drift over long chains.
OrthonormalLine orthonormal_update(const OrthonormalLine& line,
                                   const Eigen::Vector4d& delta);

}  // namespace plvo
