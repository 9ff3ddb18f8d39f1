#include "lpr/image_io.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <memory>
#include <vector>

#include "lpr/common.hpp"

namespace lpr {

namespace {

struct FileCloser {
  void operator()(FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<FILE, FileCloser>;

struct PngReader {
  png_structp png = nullptr;
  png_infop info = nullptr;
  ~PngReader() {
    if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
  }
};

struct PngWriter {
  png_structp png = nullptr;
  png_infop info = nullptr;
  ~PngWriter() {
    if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
  }
};

// Decodes into row-major interleaved samples. Returns bit depth (8 or 16)
// and channel count after the requested transforms.
void decode_png(const std::string& path, std::vector<uint16_t>& out, int& height, int& width,
                int& channels, int& bit_depth) {
  FilePtr fp(std::fopen(path.c_str(), "rb"));
  if (!fp) throw DataError("cannot open PNG file: " + path);

  png_byte header[8];
  if (std::fread(header, 1, 8, fp.get()) != 8 || png_sig_cmp(header, 0, 8) != 0)
    throw DataError("not a PNG file: " + path);

  PngReader r;
  r.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!r.png) throw DataError("libpng init failed");
  r.info = png_create_info_struct(r.png);
  if (!r.info) throw DataError("libpng init failed");
  if (setjmp(png_jmpbuf(r.png))) throw DataError("corrupt PNG file: " + path);

  png_init_io(r.png, fp.get());
  png_set_sig_bytes(r.png, 8);
  png_read_info(r.png, r.info);

  width = static_cast<int>(png_get_image_width(r.png, r.info));
  height = static_cast<int>(png_get_image_height(r.png, r.info));
  bit_depth = png_get_bit_depth(r.png, r.info);
  const int color_type = png_get_color_type(r.png, r.info);

  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(r.png);
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(r.png);
  if (png_get_valid(r.png, r.info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(r.png);
  png_set_strip_alpha(r.png);
  if (bit_depth == 16) png_set_swap(r.png);  // PNG is big-endian on disk
  png_read_update_info(r.png, r.info);

  bit_depth = png_get_bit_depth(r.png, r.info);
  channels = png_get_channels(r.png, r.info);
  const size_t rowbytes = png_get_rowbytes(r.png, r.info);

  std::vector<uint8_t> raw(static_cast<size_t>(height) * rowbytes);
  std::vector<png_bytep> rows(height);
  for (int y = 0; y < height; ++y) rows[y] = raw.data() + static_cast<size_t>(y) * rowbytes;
  png_read_image(r.png, rows.data());
  png_read_end(r.png, nullptr);

  out.resize(static_cast<size_t>(height) * width * channels);
  if (bit_depth == 16) {
    const uint16_t* src = reinterpret_cast<const uint16_t*>(raw.data());
    std::copy(src, src + out.size(), out.begin());
  } else {
    for (size_t i = 0; i < out.size(); ++i) out[i] = raw[i];
  }
}

void encode_png(const std::string& path, const uint8_t* data, int height, int width, int channels,
                int bit_depth) {
  FilePtr fp(std::fopen(path.c_str(), "wb"));
  if (!fp) throw DataError("cannot open PNG file for writing: " + path);

  PngWriter w;
  w.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!w.png) throw DataError("libpng init failed");
  w.info = png_create_info_struct(w.png);
  if (!w.info) throw DataError("libpng init failed");
  if (setjmp(png_jmpbuf(w.png))) throw DataError("PNG write failed: " + path);

  png_init_io(w.png, fp.get());
  const int color = channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB;
  png_set_IHDR(w.png, w.info, width, height, bit_depth, color, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(w.png, w.info);

  const size_t rowbytes = static_cast<size_t>(width) * channels * (bit_depth / 8);
  std::vector<png_bytep> rows(height);
  for (int y = 0; y < height; ++y)
    rows[y] = const_cast<png_bytep>(data + static_cast<size_t>(y) * rowbytes);
  png_write_image(w.png, rows.data());
  png_write_end(w.png, nullptr);
}

}  // namespace

torch::Tensor read_png_rgb(const std::string& path) {
  std::vector<uint16_t> samples;
  int h = 0, w = 0, c = 0, depth = 8;
  decode_png(path, samples, h, w, c, depth);

  auto img = torch::empty({3, h, w}, torch::kFloat32);
  auto acc = img.accessor<float, 3>();
  const float scale = depth == 16 ? 1.0f / 65535.0f : 1.0f / 255.0f;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const uint16_t* px = samples.data() + (static_cast<size_t>(y) * w + x) * c;
      for (int ch = 0; ch < 3; ++ch) acc[ch][y][x] = scale * px[c == 1 ? 0 : ch];
    }
  }
  return img;
}

void write_png_rgb(const std::string& path, const torch::Tensor& img) {
  if (img.dim() != 3 || img.size(0) != 3) throw DimensionError("write_png_rgb expects {3,H,W}");
  auto t = img.detach().to(torch::kFloat32).clamp(0, 1).contiguous();
  const int h = static_cast<int>(t.size(1));
  const int w = static_cast<int>(t.size(2));
  auto acc = t.accessor<float, 3>();
  std::vector<uint8_t> buf(static_cast<size_t>(h) * w * 3);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      for (int c = 0; c < 3; ++c)
        buf[(static_cast<size_t>(y) * w + x) * 3 + c] =
            static_cast<uint8_t>(std::lround(acc[c][y][x] * 255.0f));
  encode_png(path, buf.data(), h, w, 3, 8);
}

void write_png_raw16(const std::string& path, const torch::Tensor& raw) {
  if (raw.dim() != 2) throw DimensionError("write_png_raw16 expects {H,W}");
  auto t = raw.detach().to(torch::kFloat32).clamp(0, 255).contiguous();
  const int h = static_cast<int>(t.size(0));
  const int w = static_cast<int>(t.size(1));
  auto acc = t.accessor<float, 2>();
  // big-endian sample order per the PNG spec
  std::vector<uint8_t> buf(static_cast<size_t>(h) * w * 2);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const uint16_t v = static_cast<uint16_t>(std::lround(acc[y][x] * 256.0f));
      buf[(static_cast<size_t>(y) * w + x) * 2] = static_cast<uint8_t>(v >> 8);
      buf[(static_cast<size_t>(y) * w + x) * 2 + 1] = static_cast<uint8_t>(v & 0xff);
    }
  }
  encode_png(path, buf.data(), h, w, 1, 16);
}

torch::Tensor read_png_raw16(const std::string& path) {
  std::vector<uint16_t> samples;
  int h = 0, w = 0, c = 0, depth = 8;
  decode_png(path, samples, h, w, c, depth);
  if (c != 1 || depth != 16) throw DataError("expected 16-bit grayscale PNG: " + path);
  auto raw = torch::empty({h, w}, torch::kFloat32);
  auto acc = raw.accessor<float, 2>();
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) acc[y][x] = samples[static_cast<size_t>(y) * w + x] / 256.0f;
  return raw;
}

torch::Tensor crop_to_multiple(const torch::Tensor& img, int64_t multiple) {
  const int64_t h = img.size(-2), w = img.size(-1);
  const int64_t nh = (h / multiple) * multiple;
  const int64_t nw = (w / multiple) * multiple;
  if (nh == 0 || nw == 0)
    throw DimensionError("image smaller than required multiple " + std::to_string(multiple));
  const int64_t y0 = (h - nh) / 2, x0 = (w - nw) / 2;
  return img.slice(-2, y0, y0 + nh).slice(-1, x0, x0 + nw).contiguous();
}

}  // namespace lpr
