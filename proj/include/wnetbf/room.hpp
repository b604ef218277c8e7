// room.hpp
// Shoebox-room geometry and image-source impulse responses. Images are the
// standard mirror expansion: per dimension the image coordinate is
// (1-2p)*s + 2n*L with reflection count |2n - p|; a source at distance d
// contributes beta^reflections / (4 pi d) at delay d/c, placed with an
// 81-tap windowed-sinc fractional delay.
#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "wnetbf/audio.hpp"
#include "wnetbf/errors.hpp"
#include "wnetbf/rng.hpp"

namespace wnetbf {

using Vec3 = std::array<double, 3>;

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }
inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

struct RoomConfig {
  Vec3 dims{8.0, 6.0, 3.0};
  double reflection_coeff = 0.45;   // beta, uniform on all six surfaces
  int reflection_order = 17;        // gamma
  double sound_speed = 343.0;

  void validate() const {
    if (dims[0] <= 0 || dims[1] <= 0 || dims[2] <= 0)
      throw std::invalid_argument("room: dimensions must be positive");
    if (reflection_coeff < 0.0 || reflection_coeff >= 1.0)
      throw std::invalid_argument("room: reflection coefficient must be in [0,1)");
    if (reflection_order < 0) throw std::invalid_argument("room: reflection order must be >= 0");
  }

  bool contains(const Vec3& p, double margin = 0.0) const {
    return p[0] > margin && p[0] < dims[0] - margin && p[1] > margin && p[1] < dims[1] - margin &&
           p[2] > margin && p[2] < dims[2] - margin;
  }
};

struct ArrayGeometry {
  Vec3 center{2.0, 3.0, 0.5};
  double diameter = 0.0926;
  int mic_count = 6;
  double orientation = 0.0;  // angle of mic 0 in the xy plane
};

inline std::vector<Vec3> array_positions(const ArrayGeometry& geom) {
  if (geom.mic_count < 1) throw std::invalid_argument("array: need at least one microphone");
  const double r = geom.diameter / 2.0;
  std::vector<Vec3> out;
  out.reserve(std::size_t(geom.mic_count));
  for (int m = 0; m < geom.mic_count; ++m) {
    const double a = geom.orientation + 2.0 * std::numbers::pi * double(m) / double(geom.mic_count);
    out.push_back({geom.center[0] + r * std::cos(a), geom.center[1] + r * std::sin(a), geom.center[2]});
  }
  return out;
}

struct SourceTrajectory {
  Vec3 start{0.0, 0.0, 0.0};
  Vec3 velocity{0.0, 0.0, 0.0};

  Vec3 position(double t) const { return start + t * velocity; }
  bool is_static() const { return velocity[0] == 0.0 && velocity[1] == 0.0 && velocity[2] == 0.0; }
};

struct ScenarioSpec {
  RoomConfig room;
  ArrayGeometry array;
  SourceTrajectory speech_source;
  std::vector<SourceTrajectory> noise_sources;
  double target_snr_db = 5.0;
  std::uint64_t seed = 0;

  void validate() const {
    room.validate();
    if (noise_sources.empty() || noise_sources.size() > 3)
      throw std::invalid_argument("scenario: noise source count must be 1..3");
  }
};

struct ImpulseResponse {
  std::vector<double> taps;
  double sample_rate = kCanonicalRate;
};

struct ImageSource {
  Vec3 pos;
  int reflections;
};

inline std::vector<ImageSource> enumerate_images(const RoomConfig& room, const Vec3& src,
                                                 int max_order) {
  std::vector<ImageSource> out;
  const int nmax = max_order / 2 + 1;
  for (int px = 0; px <= 1; ++px)
    for (int nx = -nmax; nx <= nmax; ++nx) {
      const int kx = std::abs(2 * nx - px);
      if (kx > max_order) continue;
      for (int py = 0; py <= 1; ++py)
        for (int ny = -nmax; ny <= nmax; ++ny) {
          const int ky = std::abs(2 * ny - py);
          if (kx + ky > max_order) continue;
          for (int pz = 0; pz <= 1; ++pz)
            for (int nz = -nmax; nz <= nmax; ++nz) {
              const int kz = std::abs(2 * nz - pz);
              if (kx + ky + kz > max_order) continue;
              Vec3 pos{(1 - 2 * px) * src[0] + 2.0 * nx * room.dims[0],
                       (1 - 2 * py) * src[1] + 2.0 * ny * room.dims[1],
                       (1 - 2 * pz) * src[2] + 2.0 * nz * room.dims[2]};
              out.push_back({pos, kx + ky + kz});
            }
        }
    }
  return out;
}

namespace detail {
constexpr int kSincHalfWidth = 40;  // 81 taps

inline double windowed_sinc(double u) {
  const double limit = double(kSincHalfWidth) + 0.5;
  if (std::abs(u) >= limit) return 0.0;
  const double s = u == 0.0 ? 1.0 : std::sin(std::numbers::pi * u) / (std::numbers::pi * u);
  const double w = 0.5 * (1.0 + std::cos(std::numbers::pi * u / limit));
  return s * w;
}
}  // namespace detail

inline ImpulseResponse image_source_ir(const RoomConfig& room, const Vec3& src, const Vec3& mic,
                                       double fs = kCanonicalRate) {
  room.validate();
  if (!room.contains(src) || !room.contains(mic))
    throw std::invalid_argument("image_source_ir: source and mic must be strictly inside the room");
  if (norm(src - mic) == 0.0)
    throw std::invalid_argument("image_source_ir: source and mic coincide");

  const auto images = enumerate_images(room, src, room.reflection_order);
  double max_delay = 0.0;
  for (const auto& im : images)
    max_delay = std::max(max_delay, norm(im.pos - mic) / room.sound_speed * fs);

  ImpulseResponse ir;
  ir.sample_rate = fs;
  ir.taps.assign(std::size_t(std::lround(max_delay)) + detail::kSincHalfWidth + 1, 0.0);
  for (const auto& im : images) {
    const double d = norm(im.pos - mic);
    const double tau = d / room.sound_speed * fs;
    const double amp = std::pow(room.reflection_coeff, double(im.reflections)) /
                       (4.0 * std::numbers::pi * d);
    const long center = std::lround(tau);
    for (long k = center - detail::kSincHalfWidth; k <= center + detail::kSincHalfWidth; ++k) {
      if (k < 0 || k >= long(ir.taps.size())) continue;
      ir.taps[std::size_t(k)] += amp * detail::windowed_sinc(double(k) - tau);
    }
  }
  return ir;
}

enum class Split { kTrain, kVal, kTest };

inline std::string to_string(Split s) {
  switch (s) {
    case Split::kTrain: return "train";
    case Split::kVal: return "val";
    default: return "test";
  }
}

inline Split split_from_string(const std::string& s) {
  if (s == "train") return Split::kTrain;
  if (s == "val") return Split::kVal;
  if (s == "test") return Split::kTest;
  throw std::invalid_argument("unknown split '" + s + "'");
}

// Train draws room dimensions and beta uniformly from the published ranges;
// val and test use the fixed rooms. Sources are placed uniformly with a
// 0.2 m wall margin. Moving scenarios give every noise source the +y 0.2 m/s
// drift and keep the whole trajectory inside the margin.
inline ScenarioSpec sample_scenario(Rng& rng, Split split, bool moving = false,
                                    double clip_seconds = 4.8, double snr_mean_db = 5.0,
                                    double snr_std_db = 5.0) {
  constexpr double kMargin = 0.2;
  ScenarioSpec spec;
  switch (split) {
    case Split::kTrain:
      spec.room.dims = {rng.uniform(6.0, 9.0), rng.uniform(4.0, 7.0), rng.uniform(2.5, 3.5)};
      spec.room.reflection_coeff = rng.uniform(0.2, 0.8);
      break;
    case Split::kVal:
      spec.room.dims = {8.0, 6.0, 3.0};
      spec.room.reflection_coeff = 0.45;
      break;
    case Split::kTest:
      spec.room.dims = {7.0, 7.0, 2.8};
      spec.room.reflection_coeff = 0.4;
      break;
  }
  spec.room.reflection_order = 17;
  spec.array.center = {spec.room.dims[0] / 4.0, spec.room.dims[1] / 2.0, 0.5};
  spec.array.diameter = 0.0926;
  spec.array.mic_count = 6;

  auto draw_point = [&](double y_headroom) {
    return Vec3{rng.uniform(kMargin, spec.room.dims[0] - kMargin),
                rng.uniform(kMargin, spec.room.dims[1] - kMargin - y_headroom),
                rng.uniform(kMargin, spec.room.dims[2] - kMargin)};
  };

  spec.speech_source.start = draw_point(0.0);
  const int noise_count = 1 + int(rng.next_below(3));
  const Vec3 drift = moving ? Vec3{0.0, 0.2, 0.0} : Vec3{0.0, 0.0, 0.0};
  const double headroom = moving ? 0.2 * clip_seconds : 0.0;
  for (int i = 0; i < noise_count; ++i)
    spec.noise_sources.push_back({draw_point(headroom), drift});

  spec.target_snr_db = rng.gaussian(snr_mean_db, snr_std_db);
  return spec;
}

}  // namespace wnetbf
