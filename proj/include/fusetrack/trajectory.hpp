#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fusetrack/geometry.hpp"

namespace fusetrack {

struct FeatureStream;

/// Ordered waypoint polyline. Closed paths return to the first waypoint once
/// per lap; open paths (the line shape) traverse back and forth.
struct WaypointPath {
  std::vector<Point2D> waypoints;
  int laps = 1;
  bool closed = true;
};

enum class ShapeKind { Square, Circle, Triangle, TriangleInverted, Line };

ShapeKind parse_shape(const std::string& name);
std::string shape_name(ShapeKind shape);

/// Walking-pattern bounds. Corners are taken at a reduced speed and rounded
/// with a circular fillet whose radius keeps lateral acceleration within
/// max_accel, so sampled velocities never jump.
struct MotionProfile {
  double cruise_speed = 1.0;     // m/s
  double max_accel = 1.5;        // m/s^2
  double corner_slowdown = 0.5;  // speed factor floor at a full U-turn
};

/// Uniformly sampled ground-truth trajectory.
struct SampledTrajectory {
  std::vector<double> timestamps;
  std::vector<Point2D> positions;
  std::vector<Velocity2D> velocities;
  std::vector<std::size_t> lap_boundaries;  // sample index at each lap completion
  double dt = 0.0;

  std::size_t size() const { return timestamps.size(); }
};

/// Builds the waypoint polyline of a named canonical shape. `size` is the
/// side length (square/triangle), diameter (circle) or length (line).
WaypointPath generate_shape(ShapeKind shape, Point2D center, double size, int laps);

/// Time-parameterizes a waypoint path under the motion profile and samples
/// it at the given rate. Throws std::invalid_argument on degenerate paths.
SampledTrajectory sample_trajectory(const WaypointPath& path, const MotionProfile& profile,
                                    double rate_hz);

/// Writes the feature/label training corpus as CSV (one row per timestep,
/// schema: traj_id,t,plcr_1..L,tdof,amplitude,confidence,x,y with a #links=
/// header line). Returns the number of data rows written.
std::size_t export_training_set(const std::vector<SampledTrajectory>& trajectories,
                                const std::vector<FeatureStream>& features,
                                const std::string& destination);

}  // namespace fusetrack
