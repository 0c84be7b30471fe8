#pragma once

#include <cstdint>
#include <fstream>
#include <iterator>
#include <filesystem>
#include <string>
#include <vector>

#include "spellbench/error.hpp"

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

namespace spellbench {

// Row-major 8-bit image, `channels` interleaved samples per pixel.
struct Raster {
  int width = 0;
  int height = 0;
  int channels = 0;
  std::vector<std::uint8_t> pixels;

  std::uint8_t at(int x, int y, int c) const {
    return pixels[static_cast<std::size_t>((y * width + x) * channels + c)];
  }
};

inline Raster decode_image(const std::string& bytes) {
  const cv::Mat buf(1, static_cast<int>(bytes.size()), CV_8U,
                    const_cast<char*>(bytes.data()));
  cv::Mat img = cv::imdecode(buf, cv::IMREAD_UNCHANGED);
  if (img.empty()) throw ParseError("undecodable image");
  if (img.depth() != CV_8U) img.convertTo(img, CV_8U);
  Raster r;
  r.width = img.cols;
  r.height = img.rows;
  r.channels = img.channels();
  r.pixels.resize(static_cast<std::size_t>(r.width) * r.height * r.channels);
  for (int y = 0; y < r.height; ++y) {
    const std::uint8_t* row = img.ptr<std::uint8_t>(y);
    std::copy(row, row + static_cast<std::size_t>(r.width) * r.channels,
              r.pixels.begin() + static_cast<std::size_t>(y) * r.width * r.channels);
  }
  return r;
}

inline Raster load_image(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open image " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode_image(bytes);
}

// Bilinear resample with center-aligned sampling: source position of
// destination pixel d is (d + 0.5) * scale - 0.5, edges clamped. Identity
// when sizes match; constant images stay constant.
inline Raster resize_bilinear(const Raster& src, int out_w, int out_h) {
  if (src.width <= 0 || src.height <= 0 || src.pixels.empty())
    throw ContractError("resize_bilinear: empty image");
  Raster dst;
  dst.width = out_w;
  dst.height = out_h;
  dst.channels = src.channels;
  dst.pixels.resize(static_cast<std::size_t>(out_w) * out_h * src.channels);
  const double sx = static_cast<double>(src.width) / out_w;
  const double sy = static_cast<double>(src.height) / out_h;
  for (int y = 0; y < out_h; ++y) {
    double fy = (y + 0.5) * sy - 0.5;
    if (fy < 0) fy = 0;
    int y0 = static_cast<int>(fy);
    if (y0 > src.height - 1) y0 = src.height - 1;
    const int y1 = std::min(y0 + 1, src.height - 1);
    const double wy = fy - y0;
    for (int x = 0; x < out_w; ++x) {
      double fx = (x + 0.5) * sx - 0.5;
      if (fx < 0) fx = 0;
      int x0 = static_cast<int>(fx);
      if (x0 > src.width - 1) x0 = src.width - 1;
      const int x1 = std::min(x0 + 1, src.width - 1);
      const double wx = fx - x0;
      for (int c = 0; c < src.channels; ++c) {
        const double top = src.at(x0, y0, c) * (1.0 - wx) + src.at(x1, y0, c) * wx;
        const double bot = src.at(x0, y1, c) * (1.0 - wx) + src.at(x1, y1, c) * wx;
        const double v = top * (1.0 - wy) + bot * wy;
        dst.pixels[static_cast<std::size_t>((y * out_w + x) * src.channels + c)] =
            static_cast<std::uint8_t>(v + 0.5);
      }
    }
  }
  return dst;
}

// The OCR submission size: every image becomes a fixed 64x64 square
// (aspect ratio intentionally not preserved).
inline Raster preprocess_image(const Raster& image) { return resize_bilinear(image, 64, 64); }

inline std::string encode_png(const Raster& r) {
  const int type = CV_MAKETYPE(CV_8U, r.channels);
  const cv::Mat img(r.height, r.width, type, const_cast<std::uint8_t*>(r.pixels.data()));
  std::vector<uchar> out;
  if (!cv::imencode(".png", img, out)) throw Error("PNG encode failed");
  return std::string(out.begin(), out.end());
}

}  // namespace spellbench
