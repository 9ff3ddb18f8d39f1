#pragma once

#include <torch/torch.h>

#include <string>

namespace lpr {

// Images are CHW float32 tensors in [0,1] throughout the library:
// {3,H,W} for RGB, {1,H,W} or {H,W} for single-channel maps.

// Reads an 8- or 16-bit PNG (gray/palette/RGB/RGBA) as {3,H,W} float in [0,1].
torch::Tensor read_png_rgb(const std::string& path);

// Writes a {3,H,W} tensor as an 8-bit RGB PNG. Values are clamped to [0,1].
void write_png_rgb(const std::string& path, const torch::Tensor& img);

// Raw Bayer frames hold [0,255] float counts. They are stored as 16-bit
// grayscale PNG with stored = round(v * 256) (8.8 fixed point).
void write_png_raw16(const std::string& path, const torch::Tensor& raw);
torch::Tensor read_png_raw16(const std::string& path);

// Center crop so both spatial dims are divisible by `multiple`.
torch::Tensor crop_to_multiple(const torch::Tensor& img, int64_t multiple);

}  // namespace lpr
