// audio.hpp
// Time-domain signal types shared by the simulator, beamformers and metrics.
#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace wnetbf {

constexpr double kCanonicalRate = 16000.0;

struct Waveform {
  std::vector<double> samples;
  double sample_rate = kCanonicalRate;

  std::size_t size() const { return samples.size(); }
  double duration() const { return double(samples.size()) / sample_rate; }
};

struct MultichannelWaveform {
  std::vector<Waveform> channels;
  int reference_index = 0;

  std::size_t num_channels() const { return channels.size(); }
  std::size_t length() const { return channels.empty() ? 0 : channels[0].size(); }

  void validate() const {
    if (channels.empty()) throw std::invalid_argument("multichannel waveform: no channels");
    for (const auto& ch : channels) {
      if (ch.size() != channels[0].size() || ch.sample_rate != channels[0].sample_rate)
        throw std::invalid_argument("multichannel waveform: channel length/rate mismatch");
    }
  }
};

inline double signal_power(const std::vector<double>& x) {
  double acc = 0.0;
  for (double v : x) acc += v * v;
  return x.empty() ? 0.0 : acc / double(x.size());
}

inline double signal_energy(const std::vector<double>& x) {
  double acc = 0.0;
  for (double v : x) acc += v * v;
  return acc;
}

}  // namespace wnetbf
