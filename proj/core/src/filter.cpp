#include "eegdur/filter.hpp"

#include <cmath>
#include <string>

#include "eegdur/errors.hpp"

namespace eegdur {

namespace {

void check_cutoff(double cutoff_hz, double fs) {
  if (fs <= 0.0) throw data_error("filter: fs must be > 0");
  if (cutoff_hz <= 0.0 || cutoff_hz >= fs / 2.0)
    throw data_error("filter: cutoff " + std::to_string(cutoff_hz) +
                     " Hz outside (0, fs/2) for fs=" + std::to_string(fs));
}

}  // namespace

FirstOrderSection design_first_order_lowpass(double cutoff_hz, double fs) {
  check_cutoff(cutoff_hz, fs);
  const double k = std::tan(M_PI * cutoff_hz / fs);
  FirstOrderSection s;
  s.b0 = k / (k + 1.0);
  s.b1 = s.b0;
  s.a1 = (k - 1.0) / (k + 1.0);
  return s;
}

FirstOrderSection design_first_order_highpass(double cutoff_hz, double fs) {
  check_cutoff(cutoff_hz, fs);
  const double k = std::tan(M_PI * cutoff_hz / fs);
  FirstOrderSection s;
  s.b0 = 1.0 / (k + 1.0);
  s.b1 = -s.b0;
  s.a1 = (k - 1.0) / (k + 1.0);
  return s;
}

std::vector<double> bandpass_filter(const std::vector<double>& signal, double fs,
                                    double low_hz, double high_hz) {
  if (signal.size() < 2) throw data_error("filter: signal must have at least 2 samples");
  if (!(low_hz < high_hz))
    throw data_error("filter: low cutoff must be below high cutoff");
  const FirstOrderSection hp = design_first_order_highpass(low_hz, fs);
  const FirstOrderSection lp = design_first_order_lowpass(high_hz, fs);

  std::vector<double> tmp(signal.size()), out(signal.size());
  hp.apply(signal.data(), tmp.data(), signal.size());
  lp.apply(tmp.data(), out.data(), tmp.size());
  return out;
}

std::vector<std::vector<double>> bandpass_filter_channels(
    const std::vector<std::vector<double>>& channels, double fs, double low_hz,
    double high_hz) {
  std::vector<std::vector<double>> out;
  out.reserve(channels.size());
  for (const auto& ch : channels) out.push_back(bandpass_filter(ch, fs, low_hz, high_hz));
  return out;
}

}  // namespace eegdur
