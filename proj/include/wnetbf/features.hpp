// features.hpp
// Real-valued network-facing packings of complex spectrograms, and the
// filter-and-sum evaluation that turns an estimated filter tensor back into
// a single-channel spectrogram.
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "wnetbf/stft.hpp"

namespace wnetbf {

// T x F x 2M, channels 0..M-1 magnitudes, M..2M-1 phases in (-pi, pi].
struct FeatureTensor {
  std::size_t frames = 0;
  std::size_t bins = 0;
  std::size_t mics = 0;
  std::vector<double> values;  // row-major (t, f, c), c fastest

  FeatureTensor() = default;
  FeatureTensor(std::size_t t, std::size_t f, std::size_t m)
      : frames(t), bins(f), mics(m), values(t * f * 2 * m, 0.0) {}

  std::size_t channels() const { return 2 * mics; }
  double& at(std::size_t t, std::size_t f, std::size_t c) {
    return values[(t * bins + f) * 2 * mics + c];
  }
  double at(std::size_t t, std::size_t f, std::size_t c) const {
    return values[(t * bins + f) * 2 * mics + c];
  }
};

// T x F x 2M, channels 0..M-1 real parts, M..2M-1 imaginary parts of the
// conjugated weights W*_m(t,f); the stored values multiply X_m directly.
struct FilterTensor {
  std::size_t frames = 0;
  std::size_t bins = 0;
  std::size_t mics = 0;
  std::vector<double> values;

  FilterTensor() = default;
  FilterTensor(std::size_t t, std::size_t f, std::size_t m)
      : frames(t), bins(f), mics(m), values(t * f * 2 * m, 0.0) {}

  std::size_t channels() const { return 2 * mics; }
  double& at(std::size_t t, std::size_t f, std::size_t c) {
    return values[(t * bins + f) * 2 * mics + c];
  }
  double at(std::size_t t, std::size_t f, std::size_t c) const {
    return values[(t * bins + f) * 2 * mics + c];
  }

  cplx weight(std::size_t t, std::size_t f, std::size_t m) const {
    return {at(t, f, m), at(t, f, mics + m)};
  }
};

inline FeatureTensor pack_features(const Spectrogram& spec) {
  FeatureTensor out(spec.frames, spec.bins, spec.mics);
  const std::size_t m_count = spec.mics;
  for (std::size_t t = 0; t < spec.frames; ++t) {
    for (std::size_t f = 0; f < spec.bins; ++f) {
      for (std::size_t m = 0; m < m_count; ++m) {
        const cplx& c = spec.at(t, f, m);
        out.at(t, f, m) = std::abs(c);
        double ph = (c == cplx(0.0, 0.0)) ? 0.0 : std::arg(c);
        if (ph == -std::numbers::pi) ph = std::numbers::pi;
        out.at(t, f, m_count + m) = ph;
      }
    }
  }
  return out;
}

inline Spectrogram unpack_features(const FeatureTensor& feat, const AnalysisConfig& cfg = {}) {
  Spectrogram out(feat.frames, feat.bins, feat.mics, cfg);
  for (std::size_t t = 0; t < feat.frames; ++t)
    for (std::size_t f = 0; f < feat.bins; ++f)
      for (std::size_t m = 0; m < feat.mics; ++m) {
        const double mag = feat.at(t, f, m);
        const double ph = feat.at(t, f, feat.mics + m);
        out.at(t, f, m) = cplx(mag * std::cos(ph), mag * std::sin(ph));
      }
  return out;
}

// S_hat(t,f) = sum_m W*_m(t,f) X_m(t,f). The tensor already stores the
// conjugated weights, so this is a plain complex multiply-accumulate.
inline Spectrogram apply_filters(const FilterTensor& filters, const Spectrogram& spec) {
  if (filters.frames != spec.frames || filters.bins != spec.bins || filters.mics != spec.mics)
    throw std::invalid_argument("apply_filters: shape mismatch");
  Spectrogram out(spec.frames, spec.bins, 1, spec.config);
  for (std::size_t t = 0; t < spec.frames; ++t)
    for (std::size_t f = 0; f < spec.bins; ++f) {
      cplx acc(0.0, 0.0);
      for (std::size_t m = 0; m < spec.mics; ++m) acc += filters.weight(t, f, m) * spec.at(t, f, m);
      out.at(t, f) = acc;
    }
  return out;
}

}  // namespace wnetbf
