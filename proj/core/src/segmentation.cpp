#include "eegdur/segmentation.hpp"

#include <cmath>
#include <string>

#include "eegdur/errors.hpp"

namespace eegdur {

std::vector<double> default_duration_grid() {
  return {0.1, 0.2, 0.3, 0.4, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0,
          3.5, 4.0, 4.5, 5.0, 6.0, 7.0, 8.0, 9.0, 10.0};
}

long samples_per_segment(double duration_s, double fs) {
  return static_cast<long>(std::floor(duration_s * fs + 1e-9));
}

std::vector<Segment> segment_recording(const Recording& recording, double duration_s) {
  if (duration_s <= 0.0) throw data_error("segmentation: duration must be > 0");
  const long len = samples_per_segment(duration_s, recording.fs);
  if (len < 2)
    throw data_error("segmentation: window of " + std::to_string(duration_s) +
                     " s at fs=" + std::to_string(recording.fs) +
                     " has fewer than 2 samples");

  const std::size_t window = static_cast<std::size_t>(len);
  const std::size_t n = recording.n_samples();
  std::vector<Segment> segments;
  if (window > n) return segments;  // degenerate: no full window fits

  const std::size_t count = n / window;
  segments.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    Segment seg;
    seg.subject_id = recording.subject_id;
    seg.fs = recording.fs;
    seg.duration_s = duration_s;
    seg.source_offset = s * window;
    seg.data.reserve(recording.n_channels());
    for (const auto& ch : recording.data)
      seg.data.emplace_back(ch.begin() + static_cast<long>(seg.source_offset),
                            ch.begin() + static_cast<long>(seg.source_offset + window));
    segments.push_back(std::move(seg));
  }
  return segments;
}

}  // namespace eegdur
