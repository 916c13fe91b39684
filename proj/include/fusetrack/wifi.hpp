#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "fusetrack/geometry.hpp"
#include "fusetrack/rng.hpp"

namespace fusetrack {

struct SampledTrajectory;

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

struct WifiConfig {
  double carrier_frequency = 5.8e9;  // Hz
  double plcr_rate = 100.0;          // Hz
  double noise_sigma_v = 0.05;       // m/s, per-link PLCR noise std

  double wavelength() const { return kSpeedOfLight / carrier_frequency; }
};

/// Per-link coefficient rows mapping 2-D velocity to path-length change
/// rates at a fixed position. Rows are sums (LoS) or differences
/// (receiver pair) of two unit vectors, so entries stay in [-2, 2].
struct SteeringMatrix {
  Eigen::Matrix<double, Eigen::Dynamic, 2> rows;
  double condition_number = 0.0;
  bool rank_deficient = false;
};

/// Time series of per-link PLCR (or differential PLCR) values.
struct PlcrSeries {
  std::vector<double> timestamps;
  std::vector<std::vector<double>> values;  // [timestep][link], m/s
  std::vector<bool> valid;                  // per-timestep coefficient validity
  LinkMode mode = LinkMode::Los;

  std::size_t size() const { return timestamps.size(); }
  std::size_t link_count() const { return values.empty() ? 0 : values.front().size(); }
};

/// Gradient of reflection_path_length at p: sum of the unit vectors from the
/// link endpoints to p. Throws if p coincides with an endpoint.
std::array<double, 2> los_coefficients(Point2D p, const LinkGeometry& link);

/// Gradient of path_difference over the receiver pair: difference of the two
/// unit vectors. Throws if p coincides with either receiver.
std::array<double, 2> nlos_coefficients(Point2D p, const LinkGeometry& pair);

/// Coefficient row dispatched on link mode.
std::array<double, 2> link_coefficients(Point2D p, const LinkGeometry& link);

/// Per-step, per-link dot product of the coefficient row at the true position
/// with the true velocity. `noise` (optional) adds i.i.d. gaussian noise of
/// std noise_sigma_v to every value. Samples whose position coincides with a
/// link endpoint are flagged invalid instead of aborting the series.
PlcrSeries synthesize_plcr(const SampledTrajectory& traj,
                           const std::vector<LinkGeometry>& links,
                           const WifiConfig& cfg, Rng* noise = nullptr);

/// Stacks coefficient rows for all links evaluated at p.
SteeringMatrix build_steering_matrix(Point2D p, const std::vector<LinkGeometry>& links);

/// Least-squares velocity from the steering matrix and a PLCR vector.
/// Throws std::domain_error on rank-deficient geometry (no silent fallback).
Velocity2D recover_velocity(const SteeringMatrix& m, const Eigen::VectorXd& r);

/// Condition number above which steering geometry is declared degenerate.
inline constexpr double kSteeringConditionLimit = 1e8;

}  // namespace fusetrack
