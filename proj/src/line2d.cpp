#include "plvo/line2d.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace plvo {

void MergeParams::validate() const {
  if (!(max_angle > 0.0) || !(max_midpoint_dist > 0.0) ||
      !(max_endpoint_gap > 0.0) || !(min_length > 0.0)) {
    throw std::invalid_argument("merge params must be strictly positive");
  }
}

void MatchParams::validate() const {
  if (!(min_score > 0.0) || min_score > 1.0) {
    throw std::invalid_argument("min_score must be in (0, 1]");
  }
  if (min_shared_points < 1) {
    throw std::invalid_argument("min_shared_points must be >= 1");
  }
  if (!(assoc_max_dist > 0.0)) {
    throw std::invalid_argument("assoc_max_dist must be positive");
  }
}

namespace {

bool intervals_overlap(double a0, double a1, double b0, double b1) {
  return std::max(std::min(a0, a1), std::min(b0, b1)) <=
         std::min(std::max(a0, a1), std::max(b0, b1));
}

double closest_endpoint_gap(const LineSegment2D& s, const LineSegment2D& t) {
  double best = std::numeric_limits<double>::max();
  for (const auto& p : {s.p1, s.p2}) {
    for (const auto& q : {t.p1, t.p2}) {
      best = std::min(best, (p - q).norm());
    }
  }
  return best;
}

bool mergeable(const LineSegment2D& s, const LineSegment2D& t,
               const MergeParams& params) {
  const double cos_angle = std::abs(s.direction().dot(t.direction()));
  if (std::acos(std::clamp(cos_angle, 0.0, 1.0)) >= params.max_angle) {
    return false;
  }
  if (point_line_distance(s.midpoint(), t) > params.max_midpoint_dist ||
      point_line_distance(t.midpoint(), s) > params.max_midpoint_dist) {
    return false;
  }
  const bool overlap_x = intervals_overlap(s.p1.x(), s.p2.x(), t.p1.x(), t.p2.x());
  const bool overlap_y = intervals_overlap(s.p1.y(), s.p2.y(), t.p1.y(), t.p2.y());
  if (!overlap_x && !overlap_y) {
    return closest_endpoint_gap(s, t) >= params.max_endpoint_gap ? false : true;
  }
  return true;
}

LineSegment2D merge_pair(const LineSegment2D& s, const LineSegment2D& t) {
  // New endpoints are the two with maximal mutual distance among the four.
  const Eigen::Vector2d pts[4] = {s.p1, s.p2, t.p1, t.p2};
  double best = -1.0;
  int bi = 0, bj = 1;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const double d = (pts[i] - pts[j]).norm();
      if (d > best) {
        best = d;
        bi = i;
        bj = j;
      }
    }
  }
  return LineSegment2D::from_endpoints(pts[bi], pts[bj]);
}

}  // namespace

std::vector<LineSegment2D> merge_segments(const std::vector<LineSegment2D>& segments,
                                          const MergeParams& params) {
  params.validate();
  std::vector<LineSegment2D> out = segments;
  while (true) {
    double best_len = -1.0;
    int bi = -1, bj = -1;
    for (int i = 0; i < static_cast<int>(out.size()); ++i) {
      for (int j = i + 1; j < static_cast<int>(out.size()); ++j) {
        if (!mergeable(out[i], out[j], params)) continue;
        const double combined = out[i].length() + out[j].length();
        if (combined > best_len) {
          best_len = combined;
          bi = i;
          bj = j;
        }
      }
    }
    if (bi < 0) break;
    out[bi] = merge_pair(out[bi], out[bj]);
    out.erase(out.begin() + bj);
  }
  return out;
}

std::vector<LineSegment2D> filter_short(const std::vector<LineSegment2D>& segments,
                                        double min_length) {
  std::vector<LineSegment2D> out;
  out.reserve(segments.size());
  for (const auto& s : segments) {
    if (s.length() >= min_length) out.push_back(s);
  }
  return out;
}

PointLineAssociation associate_points_to_lines(
    const std::vector<Eigen::Vector2d>& points,
    const std::vector<LineSegment2D>& segments, double assoc_max_dist,
    Execution exec) {
  // Per-point membership computed in parallel, inverted serially so the
  // result is independent of scheduling.
  std::vector<std::vector<int>> point_to_lines(points.size());
  for_each_chunk(points.size(), exec, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const Eigen::Vector2d& p = points[i];
      for (int j = 0; j < static_cast<int>(segments.size()); ++j) {
        const LineSegment2D& s = segments[j];
        if (point_line_distance(p, s) >= assoc_max_dist) continue;
        const bool in_x = p.x() >= std::min(s.p1.x(), s.p2.x()) &&
                          p.x() <= std::max(s.p1.x(), s.p2.x());
        const bool in_y = p.y() >= std::min(s.p1.y(), s.p2.y()) &&
                          p.y() <= std::max(s.p1.y(), s.p2.y());
        if (in_x || in_y) point_to_lines[i].push_back(j);
      }
    }
  });
  PointLineAssociation assoc;
  assoc.line_to_points.assign(segments.size(), {});
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (int j : point_to_lines[i]) {
      assoc.line_to_points[j].push_back(static_cast<int>(i));
    }
  }
  return assoc;
}

std::vector<LineMatch> match_lines(const PointLineAssociation& assoc_a,
                                   const PointLineAssociation& assoc_b,
                                   const std::vector<std::pair<int, int>>& point_matches,
                                   const MatchParams& params) {
  params.validate();
  // Invert association of frame b: point -> lines.
  std::map<int, std::vector<int>> point_to_lines_b;
  for (int lb = 0; lb < static_cast<int>(assoc_b.line_count()); ++lb) {
    for (int p : assoc_b.line_to_points[lb]) point_to_lines_b[p].push_back(lb);
  }
  std::map<int, std::vector<int>> point_to_lines_a;
  for (int la = 0; la < static_cast<int>(assoc_a.line_count()); ++la) {
    for (int p : assoc_a.line_to_points[la]) point_to_lines_a[p].push_back(la);
  }

  // Shared matched-point counts per candidate pair. A point on several lines
  // votes for each of them.
  std::map<std::pair<int, int>, int> votes;
  for (const auto& [pa, pb] : point_matches) {
    const auto ita = point_to_lines_a.find(pa);
    const auto itb = point_to_lines_b.find(pb);
    if (ita == point_to_lines_a.end() || itb == point_to_lines_b.end()) continue;
    for (int la : ita->second) {
      for (int lb : itb->second) ++votes[{la, lb}];
    }
  }

  std::vector<LineMatch> candidates;
  for (const auto& [pair, n_pm] : votes) {
    const int n_a = assoc_a.point_count(pair.first);
    const int n_b = assoc_b.point_count(pair.second);
    if (n_a == 0 || n_b == 0) continue;
    const double score = static_cast<double>(n_pm) / std::min(n_a, n_b);
    if (score > params.min_score && n_pm > params.min_shared_points) {
      candidates.push_back({pair.first, pair.second, score, n_pm});
    }
  }

  // One-to-one by descending score; ties broken by lower indices.
  std::sort(candidates.begin(), candidates.end(),
            [](const LineMatch& x, const LineMatch& y) {
              if (x.score != y.score) return x.score > y.score;
              if (x.line_a != y.line_a) return x.line_a < y.line_a;
              return x.line_b < y.line_b;
            });
  std::vector<LineMatch> out;
  std::vector<char> used_a(assoc_a.line_count(), 0), used_b(assoc_b.line_count(), 0);
  for (const auto& c : candidates) {
    if (used_a[c.line_a] || used_b[c.line_b]) continue;
    used_a[c.line_a] = used_b[c.line_b] = 1;
    out.push_back(c);
  }
  return out;
}

}  // namespace plvo
