// wav.hpp
// 16-bit PCM little-endian RIFF reader/writer, mono or N-channel.
// 16 kHz is the canonical rate; files at an integer multiple are decimated
// on read (windowed-sinc lowpass, then keep every k-th sample).
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <numbers>
#include <string>
#include <vector>

#include "wnetbf/audio.hpp"
#include "wnetbf/errors.hpp"

namespace wnetbf {

namespace detail {

inline void put_u32(std::string& s, std::uint32_t v) {
  s.push_back(char(v & 0xff));
  s.push_back(char((v >> 8) & 0xff));
  s.push_back(char((v >> 16) & 0xff));
  s.push_back(char((v >> 24) & 0xff));
}

inline void put_u16(std::string& s, std::uint16_t v) {
  s.push_back(char(v & 0xff));
  s.push_back(char((v >> 8) & 0xff));
}

inline std::uint32_t get_u32(const char* p) {
  return std::uint32_t(std::uint8_t(p[0])) | std::uint32_t(std::uint8_t(p[1])) << 8 |
         std::uint32_t(std::uint8_t(p[2])) << 16 | std::uint32_t(std::uint8_t(p[3])) << 24;
}

inline std::uint16_t get_u16(const char* p) {
  return std::uint16_t(std::uint8_t(p[0]) | (std::uint8_t(p[1]) << 8));
}

}  // namespace detail

inline std::int16_t quantize_s16(double v) {
  double scaled = std::round(v * 32767.0);
  scaled = std::clamp(scaled, -32768.0, 32767.0);
  return std::int16_t(scaled);
}

inline void write_wav(const std::string& path, const MultichannelWaveform& waves) {
  waves.validate();
  const std::uint16_t channels = std::uint16_t(waves.num_channels());
  const std::uint32_t rate = std::uint32_t(waves.channels[0].sample_rate);
  const std::uint32_t num_samples = std::uint32_t(waves.length());
  const std::uint32_t data_bytes = num_samples * channels * 2;

  std::string buf;
  buf.reserve(44 + data_bytes);
  buf += "RIFF";
  detail::put_u32(buf, 36 + data_bytes);
  buf += "WAVEfmt ";
  detail::put_u32(buf, 16);
  detail::put_u16(buf, 1);  // PCM
  detail::put_u16(buf, channels);
  detail::put_u32(buf, rate);
  detail::put_u32(buf, rate * channels * 2);
  detail::put_u16(buf, std::uint16_t(channels * 2));
  detail::put_u16(buf, 16);
  buf += "data";
  detail::put_u32(buf, data_bytes);
  for (std::uint32_t n = 0; n < num_samples; ++n)
    for (std::uint16_t c = 0; c < channels; ++c)
      detail::put_u16(buf, std::uint16_t(quantize_s16(waves.channels[c].samples[n])));

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out.write(buf.data(), std::streamsize(buf.size()));
  if (!out) throw IoError("short write: " + path);
}

inline void write_wav(const std::string& path, const Waveform& wave) {
  MultichannelWaveform mc;
  mc.channels.push_back(wave);
  write_wav(path, mc);
}

inline std::vector<double> decimate_integer(const std::vector<double>& x, std::size_t factor) {
  if (factor <= 1) return x;
  // lowpass at the target Nyquist, 127-tap Hann-windowed sinc
  const int half = 63;
  const double cutoff = 0.5 / double(factor);  // cycles per input sample
  std::vector<double> h(2 * half + 1);
  for (int n = -half; n <= half; ++n) {
    double s = n == 0 ? 2.0 * cutoff
                      : std::sin(2.0 * std::numbers::pi * cutoff * n) / (std::numbers::pi * n);
    double w = 0.5 * (1.0 + std::cos(std::numbers::pi * double(n) / double(half + 1)));
    h[std::size_t(n + half)] = s * w;
  }
  std::vector<double> out;
  out.reserve(x.size() / factor + 1);
  for (std::size_t i = 0; i < x.size(); i += factor) {
    double acc = 0.0;
    for (int n = -half; n <= half; ++n) {
      std::ptrdiff_t j = std::ptrdiff_t(i) + n;
      if (j >= 0 && j < std::ptrdiff_t(x.size())) acc += x[std::size_t(j)] * h[std::size_t(n + half)];
    }
    out.push_back(acc);
  }
  return out;
}

inline MultichannelWaveform read_wav(const std::string& path, bool to_canonical_rate = true) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path);
  std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (buf.size() < 44 || buf.compare(0, 4, "RIFF") != 0 || buf.compare(8, 4, "WAVE") != 0)
    throw IoError("not a RIFF/WAVE file: " + path);

  std::uint16_t channels = 0, bits = 0, format = 0;
  std::uint32_t rate = 0;
  std::size_t data_off = 0, data_len = 0;
  std::size_t pos = 12;
  while (pos + 8 <= buf.size()) {
    const std::string id = buf.substr(pos, 4);
    const std::uint32_t sz = detail::get_u32(buf.data() + pos + 4);
    const std::size_t body = pos + 8;
    if (id == "fmt " && sz >= 16) {
      format = detail::get_u16(buf.data() + body);
      channels = detail::get_u16(buf.data() + body + 2);
      rate = detail::get_u32(buf.data() + body + 4);
      bits = detail::get_u16(buf.data() + body + 14);
    } else if (id == "data") {
      data_off = body;
      data_len = std::min<std::size_t>(sz, buf.size() - body);
    }
    pos = body + sz + (sz & 1);
  }
  if (format != 1 || bits != 16) throw IoError("unsupported WAV encoding (need 16-bit PCM): " + path);
  if (channels == 0 || rate == 0 || data_off == 0) throw IoError("malformed WAV: " + path);

  const std::size_t num_samples = data_len / (std::size_t(channels) * 2);
  MultichannelWaveform out;
  out.channels.assign(channels, Waveform{{}, double(rate)});
  for (auto& ch : out.channels) ch.samples.resize(num_samples);
  for (std::size_t n = 0; n < num_samples; ++n)
    for (std::size_t c = 0; c < channels; ++c) {
      const char* p = buf.data() + data_off + (n * channels + c) * 2;
      std::int16_t v = std::int16_t(detail::get_u16(p));
      out.channels[c].samples[n] = double(v) / 32767.0;
    }

  if (to_canonical_rate && double(rate) != kCanonicalRate) {
    if (std::fmod(double(rate), kCanonicalRate) != 0.0)
      throw IoError("sample rate " + std::to_string(rate) + " is not an integer multiple of 16000: " + path);
    const std::size_t factor = std::size_t(double(rate) / kCanonicalRate);
    for (auto& ch : out.channels) {
      ch.samples = decimate_integer(ch.samples, factor);
      ch.sample_rate = kCanonicalRate;
    }
  }
  return out;
}

}  // namespace wnetbf
