#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace eegdur {

// One subject/session multi-channel EEG time series. Samples are stored
// channel-major: data[c][i] is microvolts of channel c at sample i.
struct Recording {
  std::string subject_id;
  std::string condition;           // e.g. "rest", "workload"
  double fs = 0.0;                 // sampling rate, Hz
  std::vector<std::string> channels;
  std::vector<std::vector<double>> data;  // [n_channels][n_samples]

  std::size_t n_channels() const { return data.size(); }
  std::size_t n_samples() const { return data.empty() ? 0 : data[0].size(); }

  // throws data_error on invariant violation
  void validate() const;
};

struct Dataset {
  std::string name;
  std::vector<Recording> recordings;

  std::set<std::string> subjects() const;

  // throws data_error: channel lists must match across recordings,
  // >= 2 distinct subjects, every recording valid
  void validate() const;
};

// A fixed-duration window of a Recording; the unit of classification.
struct Segment {
  std::string subject_id;
  double fs = 0.0;
  double duration_s = 0.0;
  std::size_t source_offset = 0;   // start index in the parent recording
  std::vector<std::vector<double>> data;  // [n_channels][L]

  std::size_t n_channels() const { return data.size(); }
  std::size_t length() const { return data.empty() ? 0 : data[0].size(); }
};

}  // namespace eegdur
