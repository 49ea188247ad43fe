#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "refrec/core/vec.hpp"

namespace refrec {

// Row-major, top-left origin, C interleaved float channels.
template <int C>
struct Image {
  int width = 0, height = 0;
  std::vector<float> data;

  Image() = default;
  Image(int w, int h, float fill = 0.f) : width(w), height(h), data(size_t(w) * h * C, fill) {}

  float* px(int x, int y) { return data.data() + (size_t(y) * width + x) * C; }
  const float* px(int x, int y) const { return data.data() + (size_t(y) * width + x) * C; }
  bool inside(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
  size_t pixel_count() const { return size_t(width) * height; }
};

using ImageRGB = Image<3>;
using ImageGray = Image<1>;

inline void set_rgb(ImageRGB& im, int x, int y, const Vec3& c) {
  float* p = im.px(x, y);
  p[0] = float(c.x);
  p[1] = float(c.y);
  p[2] = float(c.z);
}

inline Vec3 get_rgb(const ImageRGB& im, int x, int y) {
  const float* p = im.px(x, y);
  return {p[0], p[1], p[2]};
}

inline double srgb_encode(double u) {
  u = std::clamp(u, 0.0, 1.0);
  return u <= 0.0031308 ? 12.92 * u : 1.055 * std::pow(u, 1.0 / 2.4) - 0.055;
}

inline double srgb_decode(double s) {
  s = std::clamp(s, 0.0, 1.0);
  return s <= 0.04045 ? s / 12.92 : std::pow((s + 0.055) / 1.055, 2.4);
}

// Bilinear fetch with clamped coordinates; (u,v) in [0,1] maps across the
// full image with half-texel insets.
template <int C>
inline void bilinear_fetch(const Image<C>& im, double u, double v, double out[C]) {
  double fx = u * im.width - 0.5;
  double fy = v * im.height - 0.5;
  int x0 = int(std::floor(fx)), y0 = int(std::floor(fy));
  double ax = fx - x0, ay = fy - y0;
  int x1 = x0 + 1, y1 = y0 + 1;
  x0 = std::clamp(x0, 0, im.width - 1);
  x1 = std::clamp(x1, 0, im.width - 1);
  y0 = std::clamp(y0, 0, im.height - 1);
  y1 = std::clamp(y1, 0, im.height - 1);
  const float* p00 = im.px(x0, y0);
  const float* p10 = im.px(x1, y0);
  const float* p01 = im.px(x0, y1);
  const float* p11 = im.px(x1, y1);
  for (int c = 0; c < C; ++c) {
    double top = p00[c] * (1 - ax) + p10[c] * ax;
    double bot = p01[c] * (1 - ax) + p11[c] * ax;
    out[c] = top * (1 - ay) + bot * ay;
  }
}

}  // namespace refrec
