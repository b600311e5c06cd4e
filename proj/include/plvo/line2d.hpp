#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <utility>
#include <vector>

#include "plvo/line_geometry.hpp"
#include "plvo/parallel.hpp"

namespace plvo {

struct MergeParams {
  double max_angle = 3.0 * M_PI / 180.0;  // δ_θ
  double max_midpoint_dist = 3.0;         // δ_d, px
  double max_endpoint_gap = 10.0;         // δ_ep, px
  double min_length = 50.0;               // post-merge filter, px

  void validate() const;
};

struct MatchParams {
  double min_score = 0.8;      // δ_S
  int min_shared_points = 3;   // δ_N
  double assoc_max_dist = 3.0; // px

  void validate() const;
};

// line index -> sorted keypoint indices within that line's gate. A point may
// belong to several lines.
struct PointLineAssociation {
  std::vector<std::vector<int>> line_to_points;

  int point_count(int line) const {
    return static_cast<int>(line_to_points[line].size());
  }
  std::size_t line_count() const { return line_to_points.size(); }
};

// Fixed-point merging of fragmented segments: pairs are merged greedily by
// descending combined length while they satisfy the angle, mutual midpoint
// distance, and (when axis projections are disjoint) endpoint gap conditions.
std::vector<LineSegment2D> merge_segments(const std::vector<LineSegment2D>& segments,
                                          const MergeParams& params);

// Keeps segments with length >= min_length.
std::vector<LineSegment2D> filter_short(const std::vector<LineSegment2D>& segments,
                                        double min_length);

// p belongs to l iff its line distance is < assoc_max_dist and its x or y
// coordinate falls inside the segment's endpoint range on that axis.
PointLineAssociation associate_points_to_lines(
    const std::vector<Eigen::Vector2d>& points,
    const std::vector<LineSegment2D>& segments, double assoc_max_dist,
    Execution exec = Execution::kSerial);

struct LineMatch {
  int line_a = -1;
  int line_b = -1;
  double score = 0.0;
  int shared_points = 0;
};

// Votes segment pairs through matched keypoints: score = N_pm / min(N_m, N_n);
// emits pairs above both gates, one-to-one by descending score.
std::vector<LineMatch> match_lines(const PointLineAssociation& assoc_a,
                                   const PointLineAssociation& assoc_b,
                                   const std::vector<std::pair<int, int>>& point_matches,
                                   const MatchParams& params);

}  // namespace plvo
