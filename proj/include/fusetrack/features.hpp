#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fusetrack/acoustic.hpp"
#include "fusetrack/geometry.hpp"
#include "fusetrack/trajectory.hpp"
#include "fusetrack/wifi.hpp"

namespace fusetrack {

/// Time-aligned tracker input: per-link PLCR (or DPLCR) values at every
/// timestep plus sparse acoustic measurements at their own cadence.
struct FeatureStream {
  std::vector<double> timestamps;
  std::vector<std::vector<double>> plcr;                     // [timestep][link]
  std::vector<std::optional<AcousticMeasurement>> acoustic;  // per timestep
  LinkMode mode = LinkMode::Los;
  double dt = 0.0;

  std::size_t size() const { return timestamps.size(); }
  std::size_t link_count() const { return plcr.empty() ? 0 : plcr.front().size(); }
};

/// Knobs for turning a ground-truth trajectory into a feature stream.
struct SynthesisOptions {
  double tdof_rate = 10.0;        // Hz, acoustic measurement cadence
  bool waveform_acoustic = false; // full chirp pipeline instead of the oracle
  bool plcr_noise = false;
  bool tdof_noise = false;
  double min_confidence = 0.05;   // below this the measurement is dropped
  std::uint64_t seed = 0;         // base seed for the noise/offset streams
};

/// Forward model: synthesizes the PLCR matrix and acoustic measurements a
/// receiver would observe along `traj`. Acoustic amplitude and confidence
/// come from the distance to the nearer speaker; with waveform_acoustic the
/// measurement is extracted from a simulated chirp window under a random
/// receiver clock offset (stream "clock_offset" of the seed).
FeatureStream synthesize_features(const SampledTrajectory& traj,
                                  const std::vector<LinkGeometry>& links,
                                  const SpeakerPair& speakers, const WifiConfig& wifi,
                                  const AcousticConfig& acoustic,
                                  const SynthesisOptions& options);

/// Noiseless re-synthesis of the features a reconstructed trajectory implies,
/// reusing the acoustic timestamps (and confidences) of `observed`. This is
/// the forward map the reconstruction loss compares against observations.
FeatureStream resynthesize_features(const SampledTrajectory& traj,
                                    const std::vector<LinkGeometry>& links,
                                    const SpeakerPair& speakers,
                                    const FeatureStream& observed);

/// Feature stream CSV with #links= and #mode= header tags.
void write_feature_stream(const FeatureStream& stream, const std::string& path);
FeatureStream read_feature_stream(const std::string& path);

/// Truth trajectory CSV (t,x,y,vx,vy,lap).
void write_trajectory(const SampledTrajectory& traj, const std::string& path);
SampledTrajectory read_trajectory(const std::string& path);

}  // namespace fusetrack
