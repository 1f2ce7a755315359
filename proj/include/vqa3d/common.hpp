#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace vqa3d {

// Errors carry the violated constraint in the message.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class FormatError : public Error {
 public:
  explicit FormatError(const std::string& msg) : Error(msg) {}
};

struct Vec2 {
  double x = 0.0, y = 0.0;
};

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const { return std::sqrt(dot(*this)); }
  Vec3 normalized() const {
    double n = norm();
    return n > 0 ? Vec3{x / n, y / n, z / n} : Vec3{};
  }
};

// Row-major 3x3, applied as m * v.
struct Mat3 {
  double m[9] = {1, 0, 0, 0, 1, 0, 0, 0, 1};

  static Mat3 identity() { return {}; }
  static Mat3 rot_z(double a) {
    double c = std::cos(a), s = std::sin(a);
    return {{c, -s, 0, s, c, 0, 0, 0, 1}};
  }
  Vec3 operator*(const Vec3& v) const {
    return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
            m[3] * v.x + m[4] * v.y + m[5] * v.z,
            m[6] * v.x + m[7] * v.y + m[8] * v.z};
  }
  Mat3 operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0;
        for (int k = 0; k < 3; ++k) s += m[i * 3 + k] * o.m[k * 3 + j];
        r.m[i * 3 + j] = s;
      }
    return r;
  }
};

template <typename T>
struct Grid2D {
  int height = 0, width = 0;
  std::vector<T> data;

  Grid2D() = default;
  Grid2D(int h, int w, T fill = T{}) : height(h), width(w), data(size_t(h) * w, fill) {}
  T& at(int y, int x) { return data[size_t(y) * width + x]; }
  const T& at(int y, int x) const { return data[size_t(y) * width + x]; }
  bool in_bounds(int y, int x) const { return y >= 0 && y < height && x >= 0 && x < width; }
  size_t size() const { return data.size(); }
  bool operator==(const Grid2D& o) const {
    return height == o.height && width == o.width && data == o.data;
  }
};

// H x W x C feature grid, channel-last.
struct FeatureGrid {
  int height = 0, width = 0, channels = 0;
  std::vector<float> data;

  FeatureGrid() = default;
  FeatureGrid(int h, int w, int c) : height(h), width(w), channels(c), data(size_t(h) * w * c, 0.f) {}
  float* at(int y, int x) { return data.data() + (size_t(y) * width + x) * channels; }
  const float* at(int y, int x) const { return data.data() + (size_t(y) * width + x) * channels; }
  size_t pixels() const { return size_t(height) * width; }
  bool operator==(const FeatureGrid& o) const {
    return height == o.height && width == o.width && channels == o.channels && data == o.data;
  }
};

constexpr float kDepthBackground = std::numeric_limits<float>::infinity();
constexpr int kNoInstance = -1;
constexpr int kNoPart = -1;

inline double deg2rad(double d) { return d * M_PI / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / M_PI; }

// Normalize angle to [0, 2*pi).
inline double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * M_PI);
  if (a < 0) a += 2.0 * M_PI;
  if (a >= 2.0 * M_PI) a = 0.0;
  return a;
}

// splitmix64; used to derive independent child seeds from one root seed.
inline uint64_t mix_seed(uint64_t seed) {
  seed += 0x9e3779b97f4a7c15ULL;
  seed = (seed ^ (seed >> 30)) * 0xbf58476d1ce4e5b9ULL;
  seed = (seed ^ (seed >> 27)) * 0x94d049bb133111ebULL;
  return seed ^ (seed >> 31);
}

inline uint64_t derive_seed(uint64_t root, uint64_t stream, uint64_t index = 0) {
  return mix_seed(root ^ mix_seed(stream ^ mix_seed(index)));
}

using Rng = std::mt19937_64;

inline Rng make_rng(uint64_t root, uint64_t stream, uint64_t index = 0) {
  return Rng(derive_seed(root, stream, index));
}

// Fixed stream tags so every consumer draws from an independent stream.
namespace seed_stream {
constexpr uint64_t kAssets = 1;
constexpr uint64_t kSceneLayout = 2;
constexpr uint64_t kSceneNoise = 3;
constexpr uint64_t kAttrNoise = 4;
constexpr uint64_t kQuestions = 5;
constexpr uint64_t kCalibration = 6;
}  // namespace seed_stream

}  // namespace vqa3d
