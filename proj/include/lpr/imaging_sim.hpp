#pragma once

#include <torch/torch.h>

#include <cstdint>

namespace lpr {

// Low-photon-count raw imaging synthesis. The chain is
//   mosaic -> Poisson photon capture + Gaussian readout noise -> 8-bit
//   scaling -> bilinear demosaic
// and every stage is a pure function of (inputs, seed).
//
// The Bayer layout is fixed RGGB:
//   (even,even)=R  (even,odd)=G  (odd,even)=G  (odd,odd)=B

struct PhotonSimParams {
  double ppp = 5.0;                // mean photons per pixel over the frame
  double read_noise_sigma = 0.25;  // readout noise stddev, electrons
  double quantum_efficiency = 1.0; // fraction of photons detected; scales ppp
  uint64_t seed = 0;
};

// {3,H,W} in [0,1] -> {H,W} in [0,1]; selects one channel per pixel by
// RGGB parity. H and W must be even.
torch::Tensor mosaic_bayer(const torch::Tensor& img);

// {H,W} in [0,1] -> {H,W} photon counts. Each element is drawn from
// Poisson(bayer/mean(bayer) * ppp * qe) plus Gaussian(0, sigma). Counts can
// go negative through readout noise. All-zero input is rejected (degenerate
// mean).
torch::Tensor simulate_photon_capture(const torch::Tensor& bayer, const PhotonSimParams& params);

// Counts -> {H,W} in [0,255]: negatives clamped to 0, then scaled so the
// maximum count maps to 255. A non-positive maximum yields all zeros.
torch::Tensor scale_to_8bit(const torch::Tensor& counts);

// {H,W} raw in [0,255] -> {3,H,W} RGB in [0,1]. Sampled CFA sites keep their
// exact value; missing samples are bilinear averages of same-channel
// neighbors, with replicate padding at the borders.
torch::Tensor demosaic_bilinear(const torch::Tensor& raw);

// Full pipeline: demosaic(scale(capture(mosaic(gt)))).
torch::Tensor synthesize_low_photon(const torch::Tensor& gt, const PhotonSimParams& params);

// Underexposure synthesis for LA training: scales the HSV V channel by
// `factor` (must lie in [0.1, 0.9]); H and S are unchanged.
torch::Tensor synthesize_underexposure(const torch::Tensor& gt, double factor);

}  // namespace lpr
