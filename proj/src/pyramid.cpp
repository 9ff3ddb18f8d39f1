#include "lpr/pyramid.hpp"

#include "lpr/common.hpp"

namespace lpr {

namespace F = torch::nn::functional;

namespace {

torch::Tensor as_4d(const torch::Tensor& t, bool& was_3d) {
  if (t.dim() == 4) {
    was_3d = false;
    return t;
  }
  if (t.dim() == 3) {
    was_3d = true;
    return t.unsqueeze(0);
  }
  throw DimensionError("pyramid ops expect {C,H,W} or {N,C,H,W}");
}

// Interleave x with the mean of adjacent samples along `dim` (-1 or -2),
// replicating the far edge. Doubles that dimension.
torch::Tensor up_axis(const torch::Tensor& x, int64_t dim) {
  const int64_t n = x.size(dim);
  auto shifted = torch::cat({x.slice(dim, 1, n), x.slice(dim, n - 1, n)}, dim);
  auto odd = 0.5 * (x + shifted);
  auto stacked = torch::stack({x, odd}, dim < 0 ? dim : dim + 1);
  auto sizes = x.sizes().vec();
  sizes[sizes.size() + dim] *= 2;  // dim is negative
  return stacked.reshape(sizes);
}

}  // namespace

torch::Tensor gaussian_smooth(const torch::Tensor& img) {
  bool was_3d = false;
  auto x = as_4d(img, was_3d);
  const int64_t c = x.size(1);
  auto k1 = torch::tensor({1.f, 4.f, 6.f, 4.f, 1.f}, x.options()) / 16.0;
  auto kcol = k1.reshape({1, 1, 5, 1}).expand({c, 1, 5, 1}).contiguous();
  auto krow = k1.reshape({1, 1, 1, 5}).expand({c, 1, 1, 5}).contiguous();
  auto padded = F::pad(x, F::PadFuncOptions({2, 2, 2, 2}).mode(torch::kReplicate));
  auto y = F::conv2d(padded, kcol, F::Conv2dFuncOptions().groups(c));
  y = F::conv2d(y, krow, F::Conv2dFuncOptions().groups(c));
  return was_3d ? y.squeeze(0) : y;
}

torch::Tensor downsample(const torch::Tensor& img) {
  if (img.size(-2) % 2 != 0 || img.size(-1) % 2 != 0)
    throw DimensionError("downsample requires even H and W");
  auto y = gaussian_smooth(img);
  return y.slice(-2, 0, y.size(-2), 2).slice(-1, 0, y.size(-1), 2).contiguous();
}

torch::Tensor upsample(const torch::Tensor& img) {
  bool was_3d = false;
  auto x = as_4d(img, was_3d);
  x = up_axis(x, -2);
  x = up_axis(x, -1);
  return (was_3d ? x.squeeze(0) : x).contiguous();
}

LaplacianPyramid laplacian_decompose(const torch::Tensor& img) {
  if (img.size(-2) % 4 != 0 || img.size(-1) % 4 != 0)
    throw DimensionError("laplacian_decompose requires H and W divisible by 4");
  auto t1 = downsample(img);
  auto t2 = downsample(t1);
  auto h_full = img - upsample(t1);
  auto h_half = t1 - upsample(t2);
  return {t2, {h_half, h_full}};
}

torch::Tensor laplacian_reconstruct(const torch::Tensor& top,
                                    const std::vector<torch::Tensor>& highs, double k) {
  auto img = top;
  for (const auto& high : highs) {
    if (high.size(-2) != img.size(-2) * 2 || high.size(-1) != img.size(-1) * 2)
      throw DimensionError("laplacian_reconstruct: high-frequency shape does not chain");
    img = upsample(img) + k * high;
  }
  return img;
}

PyramidTargets make_training_targets(const torch::Tensor& gt) {
  auto pyr = laplacian_decompose(gt);
  auto o_half = downsample(gt);
  return {pyr.top, o_half, pyr.highs[0], pyr.highs[1]};
}

}  // namespace lpr
