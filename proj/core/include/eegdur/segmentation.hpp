#pragma once

#include <vector>

#include "eegdur/types.hpp"

namespace eegdur {

// The 19 default segment durations in seconds: dense below 1 s, then
// half-integer steps to 5 s and integer steps to 10 s. Overridable via
// RunConfig.
std::vector<double> default_duration_grid();

// Number of samples in a window of duration_s at rate fs:
// floor(duration_s * fs), evaluated with a 1e-9 guard against binary
// representation error of decimal durations.
long samples_per_segment(double duration_s, double fs);

// Cut a recording into non-overlapping consecutive windows starting at
// sample 0; the trailing remainder is discarded. Returns an empty list
// (callers may warn) when the recording is shorter than one window.
// Throws data_error when floor(duration_s*fs) < 2.
std::vector<Segment> segment_recording(const Recording& recording, double duration_s);

}  // namespace eegdur
