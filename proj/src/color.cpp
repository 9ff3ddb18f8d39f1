#include "lpr/color.hpp"

#include <cmath>

#include "lpr/common.hpp"

namespace lpr {

torch::Tensor rgb_to_hsv(const torch::Tensor& rgb) {
  if (rgb.dim() != 3 || rgb.size(0) != 3) throw DimensionError("rgb_to_hsv expects {3,H,W}");
  auto in = rgb.detach().to(torch::kFloat32).contiguous();
  auto out = torch::zeros_like(in);
  auto a = in.accessor<float, 3>();
  auto o = out.accessor<float, 3>();
  const int64_t h = in.size(1), w = in.size(2);
  for (int64_t y = 0; y < h; ++y) {
    for (int64_t x = 0; x < w; ++x) {
      const float r = a[0][y][x], g = a[1][y][x], b = a[2][y][x];
      const float mx = std::max(r, std::max(g, b));
      const float mn = std::min(r, std::min(g, b));
      const float c = mx - mn;
      float hue = 0.f;
      if (c > 0.f) {
        if (mx == r)
          hue = std::fmod((g - b) / c, 6.f);
        else if (mx == g)
          hue = (b - r) / c + 2.f;
        else
          hue = (r - g) / c + 4.f;
        hue /= 6.f;
        if (hue < 0.f) hue += 1.f;
      }
      o[0][y][x] = hue;
      o[1][y][x] = mx > 0.f ? c / mx : 0.f;
      o[2][y][x] = mx;
    }
  }
  return out;
}

torch::Tensor hsv_to_rgb(const torch::Tensor& hsv) {
  if (hsv.dim() != 3 || hsv.size(0) != 3) throw DimensionError("hsv_to_rgb expects {3,H,W}");
  auto in = hsv.detach().to(torch::kFloat32).contiguous();
  auto out = torch::zeros_like(in);
  auto a = in.accessor<float, 3>();
  auto o = out.accessor<float, 3>();
  const int64_t h = in.size(1), w = in.size(2);
  for (int64_t y = 0; y < h; ++y) {
    for (int64_t x = 0; x < w; ++x) {
      const float hu = a[0][y][x] * 6.f, s = a[1][y][x], v = a[2][y][x];
      const int i = static_cast<int>(std::floor(hu)) % 6;
      const float f = hu - std::floor(hu);
      const float p = v * (1.f - s);
      const float q = v * (1.f - s * f);
      const float t = v * (1.f - s * (1.f - f));
      float r, g, b;
      switch (i < 0 ? i + 6 : i) {
        case 0: r = v, g = t, b = p; break;
        case 1: r = q, g = v, b = p; break;
        case 2: r = p, g = v, b = t; break;
        case 3: r = p, g = q, b = v; break;
        case 4: r = t, g = p, b = v; break;
        default: r = v, g = p, b = q; break;
      }
      o[0][y][x] = r;
      o[1][y][x] = g;
      o[2][y][x] = b;
    }
  }
  return out;
}

}  // namespace lpr
