#pragma once

#include <torch/torch.h>

namespace lpr {

// RGB <-> HSV on {3,H,W} float tensors. H is stored in turns [0,1),
// S and V in [0,1]. Achromatic pixels get H = S = 0.
torch::Tensor rgb_to_hsv(const torch::Tensor& rgb);
torch::Tensor hsv_to_rgb(const torch::Tensor& hsv);

}  // namespace lpr
