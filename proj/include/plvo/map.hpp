#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plvo/line2d.hpp"
#include "plvo/line_geometry.hpp"
#include "plvo/se3.hpp"

namespace plvo {

struct Frame {
  std::int64_t id = -1;
  double timestamp = 0.0;
  PoseSE3 pose;  // world -> camera (left)
  std::vector<Eigen::Vector2d> keypoints;
  std::vector<LineSegment2D> segments;
  PointLineAssociation associations;
  int tracked_map_points = 0;
};

// A frame promoted to the map backbone, with right-camera observations kept
// for stereo triangulation and stereo residuals.
struct Keyframe {
  Frame frame;
  std::vector<Eigen::Vector2d> right_keypoints;
  std::vector<LineSegment2D> right_segments;
  // Per-left-feature stereo partner index, -1 when unmatched.
  std::vector<int> keypoint_stereo;
  std::vector<int> segment_stereo;
  // Per-left-feature landmark links, -1 when unlinked.
  std::vector<std::int64_t> keypoint_landmark;
  std::vector<std::int64_t> segment_landmark;

  std::int64_t id() const { return frame.id; }
};

struct Observation {
  std::int64_t keyframe_id = -1;
  int feature_index = -1;
  auto operator<=>(const Observation&) const = default;
};

struct MapPoint {
  std::int64_t id = -1;
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  std::vector<Observation> observations;
  std::int64_t created_keyframe = -1;
};

struct MapLine {
  std::int64_t id = -1;
  PluckerLine line;
  std::pair<Eigen::Vector3d, Eigen::Vector3d> endpoints;
  std::vector<Observation> observations;
  std::int64_t created_keyframe = -1;
};

struct KeyframeThresholds {
  double min_distance = 0.3;               // δ_d^kf, m
  double min_angle = 15.0 * M_PI / 180.0;  // δ_θ^kf
  int low_track = 60;                      // N₁^kf
  int critical_track = 20;                 // N₂^kf
  int window = 5;                          // N_kf^go

  void validate() const;
};

struct KeyframeDecision {
  bool is_keyframe = false;
  int rule = 0;  // 1..4, first that fired; 0 when none
};

// The four promotion rules, evaluated in order:
// 1. distance to the last keyframe exceeds min_distance;
// 2. rotation angle to the last keyframe exceeds min_angle;
// 3. tracked count strictly between critical_track and low_track;
// 4. tracked above critical_track after the previous frame dropped below it.
KeyframeDecision keyframe_decision(const Frame& frame, const Frame& last_keyframe,
                                   const Frame& prev_frame,
                                   const KeyframeThresholds& th);

class Map {
 public:
  Keyframe& insert_keyframe(Keyframe kf);  // throws on id collision

  std::int64_t create_map_point(const Eigen::Vector3d& position,
                                std::int64_t created_kf,
                                std::optional<std::int64_t> forced_id = {});
  std::int64_t create_map_line(const PluckerLine& line,
                               const std::pair<Eigen::Vector3d, Eigen::Vector3d>& endpoints,
                               std::int64_t created_kf,
                               std::optional<std::int64_t> forced_id = {});

  // Bidirectional insertion; throws when the target does not exist and
  // returns false on duplicate observations.
  bool insert_point_observation(std::int64_t point_id, std::int64_t kf_id,
                                int keypoint_index);
  bool insert_line_observation(std::int64_t line_id, std::int64_t kf_id,
                               int segment_index);

  void remove_map_point(std::int64_t id);
  void remove_map_line(std::int64_t id);

  // Removes landmarks still observed by fewer than two keyframes once
  // current_kf is at least three keyframes past their creation.
  int cull_landmarks(std::int64_t current_kf_id);

  // The `count` keyframes sharing the most landmark observations with
  // current (ties and padding by recency); always contains current, ordered
  // by ascending id.
  std::vector<std::int64_t> covisibility_window(std::int64_t current_kf_id,
                                                int count) const;

  // Full-scan bidirectional consistency check; returns human-readable
  // violations (empty means consistent).
  std::vector<std::string> audit() const;

  std::string to_json() const;

  const std::map<std::int64_t, Keyframe>& keyframes() const { return keyframes_; }
  const std::map<std::int64_t, MapPoint>& points() const { return points_; }
  const std::map<std::int64_t, MapLine>& lines() const { return lines_; }
  Keyframe& keyframe(std::int64_t id) { return keyframes_.at(id); }
  const Keyframe& keyframe(std::int64_t id) const { return keyframes_.at(id); }
  MapPoint& point(std::int64_t id) { return points_.at(id); }
  const MapPoint& point(std::int64_t id) const { return points_.at(id); }
  MapLine& line(std::int64_t id) { return lines_.at(id); }
  const MapLine& line(std::int64_t id) const { return lines_.at(id); }
  bool has_point(std::int64_t id) const { return points_.count(id) > 0; }
  bool has_line(std::int64_t id) const { return lines_.count(id) > 0; }

 private:
  std::map<std::int64_t, Keyframe> keyframes_;
  std::map<std::int64_t, MapPoint> points_;
  std::map<std::int64_t, MapLine> lines_;
  std::int64_t next_landmark_id_ = 0;
};

}  // namespace plvo
