#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "eegdur/types.hpp"

namespace eegdur {

// Canonical EEG bands, Hz. Used by the synthetic generator and the PSD
// band-power features.
struct Band {
  const char* name;
  double lo, hi;
};

inline constexpr std::array<Band, 5> kEegBands = {{{"delta", 0.5, 4.0},
                                                   {"theta", 4.0, 8.0},
                                                   {"alpha", 8.0, 13.0},
                                                   {"beta", 13.0, 30.0},
                                                   {"gamma", 30.0, 45.0}}};

struct Range {
  double lo = 0.0, hi = 0.0;
};

// Desk-scale stand-in for the public EEG corpora: every subject gets a
// fixed generative model (one oscillator per band at a subject-specific
// frequency/amplitude, per-channel gains, 1/f^beta background) so that
// subjects are separable while individual samples stay noisy.
struct SynthSpec {
  std::string name = "synth";
  std::string condition = "rest";
  std::size_t n_subjects = 10;
  std::size_t n_channels = 6;
  double fs = 128.0;
  double duration_s = 60.0;

  // per-subject draws
  std::array<Range, 5> band_amp = {{{0.5, 2.0},   // delta
                                    {0.5, 2.5},   // theta
                                    {1.0, 5.0},   // alpha
                                    {0.5, 3.0},   // beta
                                    {0.2, 1.0}}}; // gamma
  Range channel_gain = {0.6, 1.4};   // per (channel, band) modulation
  Range pink_amp = {1.0, 3.0};       // RMS of the 1/f^beta background
  Range pink_beta = {0.8, 1.4};      // spectral exponent
  double noise_floor = 2.5;          // white-noise sigma, per sample

  std::uint64_t seed = 1;
};

// Deterministic given spec (including seed): equal specs produce
// bit-identical datasets. Throws data_error when n_subjects < 2.
Dataset generate_synthetic_dataset(const SynthSpec& spec);

}  // namespace eegdur
