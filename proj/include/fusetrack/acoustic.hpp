#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fusetrack/geometry.hpp"
#include "fusetrack/rng.hpp"

namespace fusetrack {

enum class ChirpDirection { Up, Down };

/// Linear FMCW sweep parameters. The defaults put the sweep in the
/// near-inaudible 18-22 kHz band with 400 resolvable delay bins per sweep,
/// and make the periodic sweep train phase-continuous.
struct ChirpConfig {
  double f_min = 18000.0;       // Hz
  double bandwidth = 4000.0;    // Hz
  double sweep_time = 0.1;      // s
  double sample_rate = 48000.0; // Hz
  ChirpDirection direction = ChirpDirection::Up;

  std::size_t samples_per_sweep() const {
    return static_cast<std::size_t>(sweep_time * sample_rate + 0.5);
  }
  void validate() const;
};

/// Real-valued sample buffer on a uniform clock.
struct Waveform {
  std::vector<double> samples;
  double sample_rate = 48000.0;
  double start_offset = 0.0;  // seconds, timeline position of samples[0]
};

/// One cross-chirp observation: signed time-difference-of-flight between the
/// up-chirp and down-chirp speakers, with the stronger template correlation
/// amplitude and its derived confidence.
struct AcousticMeasurement {
  double tdof = 0.0;        // s, positive when the up-chirp speaker is farther
  double amplitude = 0.0;   // received amplitude of the stronger template
  double confidence = 0.0;  // in [0, 1]
  double timestamp = 0.0;   // s
};

struct AcousticConfig {
  double c_s = 343.0;                 // m/s, speed of sound
  double ref_amplitude_at_1m = 2000.0;
  double effective_range = 1.0;       // m, confidence reaches 1 at this distance
  ChirpConfig chirp_up{};
  ChirpConfig chirp_down{18000.0, 4000.0, 0.1, 48000.0, ChirpDirection::Down};
  double noise_sigma_d = 1e-4;        // s, oracle-generator TDoF noise std

  /// Amplitude of the confidence saturation point.
  static constexpr double kConfidenceFullAmplitude = 2000.0;
};

struct DelayEstimate {
  double delay = 0.0;      // s
  double amplitude = 0.0;  // peak amplitude in waveform units
};

/// One sweep of the configured chirp, cos(2*pi*f_min*t + pi*B*t^2/T) for the
/// up direction and the mirrored falling sweep for down.
Waveform synth_chirp(const ChirpConfig& cfg);

/// Delays a waveform by distance/c_s (windowed-sinc fractional delay) and
/// applies the 1/max(distance, 0.1) spreading loss referenced to 1 m.
Waveform propagate(const Waveform& w, double distance, const AcousticConfig& cfg);

/// Dechirp delay estimate: mixes the received signal against the reference
/// sweep and reads the dominant beat frequency, t_d = beat * T / B, with
/// parabolic sub-bin peak interpolation. Empty when no peak clears the noise
/// floor or the overlap is shorter than half a sweep.
std::optional<DelayEstimate> mix_and_estimate_delay(const Waveform& reference,
                                                    const Waveform& received,
                                                    const ChirpConfig& cfg);

/// Full cross-chirp extraction: per-template delays from one received window,
/// differenced so any receiver clock offset cancels, wrapped to half a sweep
/// period. Confidence 0 (and tdof 0) when either template is undetected.
AcousticMeasurement extract_tdof(const Waveform& received, const AcousticConfig& cfg,
                                 double rx_clock_offset);

/// Linear amplitude-to-confidence ramp, clipped to [0, 1], saturating at the
/// detection-range amplitude of 2000.
double confidence_score(double amplitude, const AcousticConfig& cfg);

/// Geometric fast path: path_difference / c_s, optionally with gaussian noise
/// of std noise_sigma_d, clamped to the physically reachable +-baseline/c_s.
double tdof_oracle(Point2D p, const SpeakerPair& pair, const AcousticConfig& cfg,
                   Rng* noise = nullptr);

/// Simulates the window a receiver at `p` captures while both speakers play
/// their phase-continuous sweep trains. The window covers `duration` seconds
/// of receiver time starting at `window_start`; the receiver clock lags the
/// speakers' shared clock by `rx_clock_offset`.
Waveform synthesize_received_window(Point2D p, const SpeakerPair& pair,
                                    const AcousticConfig& cfg, double window_start,
                                    double rx_clock_offset, double duration);

/// Delay spanned by one spectral bin of the dechirp estimator for this config.
double delay_resolution(const ChirpConfig& cfg);

/// Raw 32-bit-float little-endian dump with a text sidecar (<path>.meta).
void dump_waveform(const Waveform& w, const std::string& path);
Waveform load_waveform(const std::string& path);

}  // namespace fusetrack
