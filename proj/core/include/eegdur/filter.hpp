#pragma once

#include <cstddef>
#include <vector>

namespace eegdur {

// One first-order IIR section y[n] = b0*x[n] + b1*x[n-1] - a1*y[n-1],
// obtained from the analog prototypes H_lp(s) = wc/(s+wc) and
// H_hp(s) = s/(s+wc) by the bilinear transform with frequency pre-warping
// wc = tan(pi*fc/fs). With K = tan(pi*fc/fs):
//   low-pass:   b0 = b1 = K/(K+1),        a1 = (K-1)/(K+1)
//   high-pass:  b0 = 1/(K+1), b1 = -b0,   a1 = (K-1)/(K+1)
struct FirstOrderSection {
  double b0 = 1.0, b1 = 0.0, a1 = 0.0;

  void apply(const double* x, double* y, std::size_t n) const {
    double xm1 = 0.0, ym1 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double yi = b0 * x[i] + b1 * xm1 - a1 * ym1;
      xm1 = x[i];
      ym1 = yi;
      y[i] = yi;
    }
  }
};

FirstOrderSection design_first_order_lowpass(double cutoff_hz, double fs);
FirstOrderSection design_first_order_highpass(double cutoff_hz, double fs);

// Causal forward band-pass: first-order Butterworth high-pass at low_hz
// cascaded with first-order Butterworth low-pass at high_hz.
// Requires 0 < low_hz < high_hz < fs/2 and signal.size() >= 2.
std::vector<double> bandpass_filter(const std::vector<double>& signal, double fs,
                                    double low_hz, double high_hz);

// Convenience: filter every channel of a multi-channel buffer.
std::vector<std::vector<double>> bandpass_filter_channels(
    const std::vector<std::vector<double>>& channels, double fs, double low_hz,
    double high_hz);

}  // namespace eegdur
