#include "lpr/imaging_sim.hpp"

#include <random>

#include "lpr/color.hpp"
#include "lpr/common.hpp"

namespace lpr {

namespace {

void require_even_2d(const torch::Tensor& t, const char* what) {
  if (t.size(-2) % 2 != 0 || t.size(-1) % 2 != 0)
    throw DimensionError(std::string(what) + " requires even H and W, got " +
                         std::to_string(t.size(-2)) + "x" + std::to_string(t.size(-1)));
}

// RGGB parity -> channel index
inline int cfa_channel(int64_t y, int64_t x) {
  if (y % 2 == 0) return x % 2 == 0 ? 0 : 1;
  return x % 2 == 0 ? 1 : 2;
}

}  // namespace

torch::Tensor mosaic_bayer(const torch::Tensor& img) {
  if (img.dim() != 3 || img.size(0) != 3) throw DimensionError("mosaic_bayer expects {3,H,W}");
  require_even_2d(img, "mosaic_bayer");
  auto in = img.detach().to(torch::kFloat32).contiguous();
  const int64_t h = in.size(1), w = in.size(2);
  auto out = torch::empty({h, w}, torch::kFloat32);
  auto a = in.accessor<float, 3>();
  auto o = out.accessor<float, 2>();
  for (int64_t y = 0; y < h; ++y)
    for (int64_t x = 0; x < w; ++x) o[y][x] = a[cfa_channel(y, x)][y][x];
  return out;
}

torch::Tensor simulate_photon_capture(const torch::Tensor& bayer, const PhotonSimParams& params) {
  if (bayer.dim() != 2) throw DimensionError("simulate_photon_capture expects {H,W}");
  if (params.ppp <= 0) throw ParameterError("ppp must be positive");
  if (params.read_noise_sigma < 0) throw ParameterError("read_noise_sigma must be >= 0");
  if (params.quantum_efficiency <= 0 || params.quantum_efficiency > 1)
    throw ParameterError("quantum_efficiency must be in (0,1]");

  auto in = bayer.detach().to(torch::kFloat32).contiguous();
  const double mean = in.mean().item<double>();
  if (mean <= 0) throw ParameterError("degenerate Bayer frame: mean must be positive");

  const double gain = params.ppp * params.quantum_efficiency / mean;
  const int64_t h = in.size(0), w = in.size(1);
  auto out = torch::empty({h, w}, torch::kFloat32);
  auto a = in.accessor<float, 2>();
  auto o = out.accessor<float, 2>();

  std::mt19937_64 rng(params.seed);
  std::normal_distribution<double> readout(0.0, 1.0);
  for (int64_t y = 0; y < h; ++y) {
    for (int64_t x = 0; x < w; ++x) {
      const double lambda = a[y][x] * gain;
      double count = 0.0;
      if (lambda > 0) {
        std::poisson_distribution<int64_t> photon(lambda);
        count = static_cast<double>(photon(rng));
      }
      if (params.read_noise_sigma > 0) count += params.read_noise_sigma * readout(rng);
      o[y][x] = static_cast<float>(count);
    }
  }
  return out;
}

torch::Tensor scale_to_8bit(const torch::Tensor& counts) {
  auto in = counts.detach().to(torch::kFloat32);
  const double mx = in.max().item<double>();
  if (mx <= 0) return torch::zeros_like(in);
  return (in.clamp_min(0) * (255.0 / mx)).clamp(0, 255);
}

torch::Tensor demosaic_bilinear(const torch::Tensor& raw) {
  if (raw.dim() != 2) throw DimensionError("demosaic_bilinear expects {H,W}");
  require_even_2d(raw, "demosaic_bilinear");

  namespace F = torch::nn::functional;
  auto in = (raw.detach().to(torch::kFloat32) / 255.0).contiguous();
  const int64_t h = in.size(0), w = in.size(1);

  // per-channel sparse grids and sample masks
  auto sparse = torch::zeros({1, 3, h, w}, torch::kFloat32);
  auto mask = torch::zeros({1, 3, h, w}, torch::kFloat32);
  {
    auto a = in.accessor<float, 2>();
    auto s = sparse.accessor<float, 4>();
    auto m = mask.accessor<float, 4>();
    for (int64_t y = 0; y < h; ++y) {
      for (int64_t x = 0; x < w; ++x) {
        const int c = cfa_channel(y, x);
        s[0][c][y][x] = a[y][x];
        m[0][c][y][x] = 1.0f;
      }
    }
  }

  // G gets the cross kernel, R/B the full bilinear kernel; normalizing by the
  // convolved mask turns both into averages over the available neighbors.
  auto kern = torch::zeros({3, 1, 3, 3}, torch::kFloat32);
  kern[0] = torch::tensor({{1.f, 2.f, 1.f}, {2.f, 4.f, 2.f}, {1.f, 2.f, 1.f}});
  kern[1] = torch::tensor({{0.f, 1.f, 0.f}, {1.f, 4.f, 1.f}, {0.f, 1.f, 0.f}});
  kern[2] = kern[0];

  auto pad = F::PadFuncOptions({1, 1, 1, 1}).mode(torch::kReplicate);
  auto num = F::conv2d(F::pad(sparse, pad), kern, F::Conv2dFuncOptions().groups(3));
  auto den = F::conv2d(F::pad(mask, pad), kern, F::Conv2dFuncOptions().groups(3));
  return (num / den).squeeze(0).contiguous();
}

torch::Tensor synthesize_low_photon(const torch::Tensor& gt, const PhotonSimParams& params) {
  return demosaic_bilinear(scale_to_8bit(simulate_photon_capture(mosaic_bayer(gt), params)));
}

torch::Tensor synthesize_underexposure(const torch::Tensor& gt, double factor) {
  if (factor < 0.1 || factor > 0.9)
    throw ParameterError("underexposure factor must be in [0.1, 0.9]");
  auto hsv = rgb_to_hsv(gt);
  hsv[2] *= factor;
  return hsv_to_rgb(hsv);
}

}  // namespace lpr
