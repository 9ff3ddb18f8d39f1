#pragma once

#include <torch/torch.h>

#include <vector>

namespace lpr {

// Gaussian-smoothed 2x resampling and the two-level Laplacian pyramid used
// both for supervision targets and inside the network graph. All ops accept
// {C,H,W} or {N,C,H,W}, preserve dtype, and are differentiable.

// Separable 5x5 binomial smoothing (1,4,6,4,1)/16 per axis, replicate padding.
torch::Tensor gaussian_smooth(const torch::Tensor& img);

// gaussian_smooth, then keep every second row/column starting at index 0.
// H and W must be even.
torch::Tensor downsample(const torch::Tensor& img);

// Exact 2x bilinear upsampling, phase-consistent with the even-index
// decimation above: out[2j] = y[j], out[2j+1] = (y[j]+y[j+1])/2 with the far
// edge replicated. Constant and affine signals pass through unchanged away
// from borders.
torch::Tensor upsample(const torch::Tensor& img);

struct LaplacianPyramid {
  torch::Tensor top;                // quarter-scale base
  std::vector<torch::Tensor> highs; // [h_half, h_full], coarse to fine
};

// Two-level decomposition (H, W divisible by 4):
//   t1 = down(x), t2 = down(t1), h_full = x - up(t1), h_half = t1 - up(t2).
LaplacianPyramid laplacian_decompose(const torch::Tensor& img);

// Iteratively image = upsample(image) + k * high, coarse to fine. No
// clamping. k=1 inverts laplacian_decompose.
torch::Tensor laplacian_reconstruct(const torch::Tensor& top,
                                    const std::vector<torch::Tensor>& highs, double k);

// Supervision targets for the multi-level denoiser.
struct PyramidTargets {
  torch::Tensor o_quarter; // down(down(gt))
  torch::Tensor o_half;    // down(gt)
  torch::Tensor h_half;    // o_half - up(o_quarter)
  torch::Tensor h_full;    // gt - up(o_half)
};

PyramidTargets make_training_targets(const torch::Tensor& gt);

}  // namespace lpr
