#include "plvo/line_geometry.hpp"

#include <Eigen/QR>
#include <cmath>
#include <stdexcept>

namespace plvo {

namespace {
constexpr int kRenormPeriod = 100;
}

LineSegment2D LineSegment2D::from_endpoints(const Eigen::Vector2d& p1,
                                            const Eigen::Vector2d& p2) {
  const Eigen::Vector2d d = p2 - p1;
  const double len = d.norm();
  if (len < 1e-12) {
    throw std::invalid_argument("segment endpoints are coincident");
  }
  LineSegment2D seg;
  seg.p1 = p1;
  seg.p2 = p2;
  seg.a = -d.y() / len;
  seg.b = d.x() / len;
  seg.c = -(seg.a * p1.x() + seg.b * p1.y());
  return seg;
}

bool LineSegment2D::valid(double tol) const {
  if ((p2 - p1).norm() < 1e-12) return false;
  if (std::abs(a * a + b * b - 1.0) > 1e-9) return false;
  const double r1 = std::abs(a * p1.x() + b * p1.y() + c);
  const double r2 = std::abs(a * p2.x() + b * p2.y() + c);
  return r1 <= tol && r2 <= tol;
}

double point_line_distance(const Eigen::Vector2d& p, const LineSegment2D& l) {
  return std::abs(l.a * p.x() + l.b * p.y() + l.c) /
         std::sqrt(l.a * l.a + l.b * l.b);
}

double signed_point_line_distance(const Eigen::Vector2d& p,
                                  const Eigen::Vector3d& coeffs) {
  return (coeffs.x() * p.x() + coeffs.y() * p.y() + coeffs.z()) /
         coeffs.head<2>().norm();
}

PluckerLine PluckerLine::from_two_points(const Eigen::Vector3d& x1,
                                         const Eigen::Vector3d& x2) {
  const Eigen::Vector3d diff = x1 - x2;
  const double len = diff.norm();
  if (len < 1e-12) {
    throw std::invalid_argument("line points are coincident");
  }
  PluckerLine line;
  line.v = diff / len;
  line.n = x1.cross(line.v);
  return line;
}

PluckerLine PluckerLine::normalized() const {
  const double s = v.norm();
  return {n / s, v / s};
}

bool OrthonormalLine::valid(double tol) const {
  const Eigen::Matrix3d eu = U.transpose() * U - Eigen::Matrix3d::Identity();
  if (eu.cwiseAbs().maxCoeff() > tol) return false;
  if (std::abs(U.determinant() - 1.0) > tol) return false;
  const Eigen::Matrix2d ew = W.transpose() * W - Eigen::Matrix2d::Identity();
  if (ew.cwiseAbs().maxCoeff() > tol) return false;
  if (std::abs(W.determinant() - 1.0) > tol) return false;
  // Planar rotation structure.
  return std::abs(W(0, 0) - W(1, 1)) <= tol && std::abs(W(0, 1) + W(1, 0)) <= tol;
}

std::optional<OrthonormalLine> plucker_to_orthonormal(const PluckerLine& line) {
  const double nn = line.n.norm();
  const double nv = line.v.norm();
  if (nn < 1e-12 || nv < 1e-12) {
    return std::nullopt;
  }
  OrthonormalLine out;
  out.U.col(0) = line.n / nn;
  out.U.col(1) = line.v / nv;
  out.U.col(2) = line.n.cross(line.v) / (line.n.cross(line.v)).norm();
  const double s = std::hypot(nn, nv);
  const double cos_phi = nn / s;
  const double sin_phi = nv / s;
  out.W << cos_phi, -sin_phi, sin_phi, cos_phi;
  return out;
}

std::optional<OrthonormalLine> plucker_to_orthonormal_qr(const PluckerLine& line) {
  const double nn = line.n.norm();
  const double nv = line.v.norm();
  if (nn < 1e-12 || nv < 1e-12) {
    return std::nullopt;
  }
  Eigen::Matrix<double, 3, 2> nv_mat;
  nv_mat.col(0) = line.n;
  nv_mat.col(1) = line.v;
  Eigen::HouseholderQR<Eigen::Matrix<double, 3, 2>> qr(nv_mat);
  Eigen::Matrix3d Q = qr.householderQ();
  Eigen::Matrix<double, 3, 2> R = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix column signs so the diagonal of R is positive.
  for (int i = 0; i < 2; ++i) {
    if (R(i, i) < 0.0) {
      R.row(i) = -R.row(i);
      Q.col(i) = -Q.col(i);
    }
  }
  if (Q.determinant() < 0.0) {
    Q.col(2) = -Q.col(2);
  }
  OrthonormalLine out;
  out.U = Q;
  const double s = std::hypot(R(0, 0), R(1, 1));
  out.W << R(0, 0) / s, -R(1, 1) / s, R(1, 1) / s, R(0, 0) / s;
  return out;
}

PluckerLine orthonormal_to_plucker(const OrthonormalLine& line) {
  PluckerLine out;
  out.n = line.W(0, 0) * line.U.col(0);
  out.v = line.W(1, 0) * line.U.col(1);
  return out;
}

PluckerLine transform_line(const PoseSE3& pose, const PluckerLine& world_line) {
  PluckerLine out;
  const Eigen::Vector3d rv = pose.rotation * world_line.v;
  out.n = pose.rotation * world_line.n + pose.translation.cross(rv);
  out.v = rv;
  return out;
}

std::optional<Eigen::Vector3d> project_line_raw(const PinholeIntrinsics& K,
                                                const PluckerLine& cam_line) {
  const double scale = std::max(1.0, cam_line.v.norm());
  if (cam_line.n.norm() < 1e-12 * scale) {
    return std::nullopt;  // line through the camera center
  }
  return K.line_projection_matrix() * cam_line.n;
}

std::optional<Eigen::Vector3d> project_line(const PinholeIntrinsics& K,
                                            const PluckerLine& cam_line) {
  const auto raw = project_line_raw(K, cam_line);
  if (!raw) return std::nullopt;
  const double ab = raw->head<2>().norm();
  if (ab < 1e-12 * raw->norm()) {
    return std::nullopt;  // projects to the line at infinity
  }
  return *raw / ab;
}

OrthonormalLine orthonormal_update(const OrthonormalLine& line,
                                   const Eigen::Vector4d& delta) {
  OrthonormalLine out;
  out.U = line.U * so3_exp(delta.head<3>());
  const double cs = std::cos(delta(3));
  const double sn = std::sin(delta(3));
  Eigen::Matrix2d rot;
  rot << cs, -sn, sn, cs;
  out.W = line.W * rot;
  out.updates_since_renorm = line.updates_since_renorm + 1;
  if (out.updates_since_renorm >= kRenormPeriod) {
    out.U = orthonormalize_rotation(out.U);
    const Eigen::Vector2d col = out.W.col(0).normalized();
    out.W << col(0), -col(1), col(1), col(0);
    out.updates_since_renorm = 0;
  }
  return out;
}

}  // namespace plvo
