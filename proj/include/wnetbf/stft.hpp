// stft.hpp
// Time-frequency analysis and synthesis. Analysis drops the DC bin and keeps
// Nyquist, so a 1024-point transform yields 512 bins; synthesis reinserts a
// zero DC bin. Window is periodic Hann, which sums to a constant at 75%
// overlap, so the interior of istft(stft(x)) reproduces x.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "wnetbf/audio.hpp"
#include "wnetbf/fft.hpp"

namespace wnetbf {

struct AnalysisConfig {
  std::size_t fft_size = 1024;
  std::size_t hop = 256;
  std::string window = "hann";  // periodic
  bool drop_dc = true;

  std::size_t num_bins() const { return drop_dc ? fft_size / 2 : fft_size / 2 + 1; }

  void validate() const {
    if (!is_pow2(fft_size)) throw std::invalid_argument("stft: fft_size must be a power of two");
    if (hop == 0 || fft_size % hop != 0)
      throw std::invalid_argument("stft: hop must divide fft_size");
    if (window != "hann" && window != "rect")
      throw std::invalid_argument("stft: unknown window '" + window + "'");
  }

  bool operator==(const AnalysisConfig&) const = default;
};

inline std::vector<double> make_window(const AnalysisConfig& cfg) {
  std::vector<double> w(cfg.fft_size, 1.0);
  if (cfg.window == "hann") {
    for (std::size_t n = 0; n < cfg.fft_size; ++n)
      w[n] = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * double(n) / double(cfg.fft_size)));
  }
  return w;
}

// Complex STFT coefficients, frame-major: coeffs[(t * bins + f) * mics + m].
// mics == 1 holds the single-channel quantities (clean reference, enhanced
// output, masks' magnitude sources).
struct Spectrogram {
  std::size_t frames = 0;
  std::size_t bins = 0;
  std::size_t mics = 0;
  std::vector<cplx> coeffs;
  AnalysisConfig config;

  Spectrogram() = default;
  Spectrogram(std::size_t t, std::size_t f, std::size_t m, AnalysisConfig cfg = {})
      : frames(t), bins(f), mics(m), coeffs(t * f * m), config(cfg) {}

  cplx& at(std::size_t t, std::size_t f, std::size_t m = 0) {
    return coeffs[(t * bins + f) * mics + m];
  }
  const cplx& at(std::size_t t, std::size_t f, std::size_t m = 0) const {
    return coeffs[(t * bins + f) * mics + m];
  }

  Spectrogram channel(std::size_t m) const {
    Spectrogram out(frames, bins, 1, config);
    for (std::size_t t = 0; t < frames; ++t)
      for (std::size_t f = 0; f < bins; ++f) out.at(t, f) = at(t, f, m);
    return out;
  }

  double total_energy() const {
    double acc = 0.0;
    for (const auto& c : coeffs) acc += std::norm(c);
    return acc;
  }
};

inline std::size_t stft_num_frames(std::size_t len, const AnalysisConfig& cfg) {
  if (len < cfg.fft_size) return 0;
  return (len - cfg.fft_size) / cfg.hop + 1;
}

inline Spectrogram stft(const Waveform& wave, const AnalysisConfig& cfg) {
  cfg.validate();
  if (wave.size() < cfg.fft_size)
    throw std::invalid_argument("stft: input shorter than one frame");
  const std::size_t frames = stft_num_frames(wave.size(), cfg);
  const std::size_t bins = cfg.num_bins();
  const std::size_t first_bin = cfg.drop_dc ? 1 : 0;
  const std::vector<double> win = make_window(cfg);
  Spectrogram spec(frames, bins, 1, cfg);
  std::vector<double> frame(cfg.fft_size);
  for (std::size_t t = 0; t < frames; ++t) {
    const double* src = wave.samples.data() + t * cfg.hop;
    for (std::size_t n = 0; n < cfg.fft_size; ++n) frame[n] = src[n] * win[n];
    std::vector<cplx> bins_full = rfft(frame);
    for (std::size_t f = 0; f < bins; ++f) spec.at(t, f) = bins_full[f + first_bin];
  }
  return spec;
}

inline Spectrogram stft_multi(const MultichannelWaveform& waves, const AnalysisConfig& cfg) {
  waves.validate();
  Spectrogram first = stft(waves.channels[0], cfg);
  Spectrogram out(first.frames, first.bins, waves.num_channels(), cfg);
  for (std::size_t t = 0; t < first.frames; ++t)
    for (std::size_t f = 0; f < first.bins; ++f) out.at(t, f, 0) = first.at(t, f);
  for (std::size_t m = 1; m < waves.num_channels(); ++m) {
    Spectrogram s = stft(waves.channels[m], cfg);
    for (std::size_t t = 0; t < s.frames; ++t)
      for (std::size_t f = 0; f < s.bins; ++f) out.at(t, f, m) = s.at(t, f);
  }
  return out;
}

// Weighted overlap-add with the analysis window reapplied on synthesis and a
// per-sample normalization by the accumulated squared window.
inline Waveform istft(const Spectrogram& spec, const AnalysisConfig& cfg) {
  cfg.validate();
  if (spec.mics != 1) throw std::invalid_argument("istft: expected a single-channel spectrogram");
  if (spec.config != cfg) throw std::invalid_argument("istft: config does not match spectrogram");
  if (spec.bins != cfg.num_bins()) throw std::invalid_argument("istft: bin count mismatch");
  const std::size_t first_bin = cfg.drop_dc ? 1 : 0;
  const std::size_t len = (spec.frames - 1) * cfg.hop + cfg.fft_size;
  const std::vector<double> win = make_window(cfg);
  std::vector<double> acc(len, 0.0), norm(len, 0.0);
  std::vector<cplx> bins_full(cfg.fft_size / 2 + 1, cplx(0.0, 0.0));
  for (std::size_t t = 0; t < spec.frames; ++t) {
    bins_full[0] = 0.0;
    for (std::size_t f = 0; f < spec.bins; ++f) bins_full[f + first_bin] = spec.at(t, f);
    std::vector<double> frame = irfft(bins_full, cfg.fft_size);
    double* dst = acc.data() + t * cfg.hop;
    double* nrm = norm.data() + t * cfg.hop;
    for (std::size_t n = 0; n < cfg.fft_size; ++n) {
      dst[n] += frame[n] * win[n];
      nrm[n] += win[n] * win[n];
    }
  }
  Waveform out;
  out.samples.resize(len);
  for (std::size_t n = 0; n < len; ++n)
    out.samples[n] = norm[n] > 1e-12 ? acc[n] / norm[n] : 0.0;
  return out;
}

}  // namespace wnetbf
