#include "spellbench/image.hpp"

#include "doctest.h"

using namespace spellbench;

namespace {

Raster make_raster(int w, int h, int channels, std::uint8_t fill) {
  Raster r;
  r.width = w;
  r.height = h;
  r.channels = channels;
  r.pixels.assign(static_cast<std::size_t>(w) * h * channels, fill);
  return r;
}

}  // namespace

TEST_CASE("preprocess_image produces a fixed 64x64 square") {
  Raster wide = make_raster(128, 64, 3, 0);
  // Horizontal gradient so the squeeze is observable.
  for (int y = 0; y < 64; ++y)
    for (int x = 0; x < 128; ++x)
      for (int c = 0; c < 3; ++c)
        wide.pixels[static_cast<std::size_t>((y * 128 + x) * 3 + c)] = static_cast<std::uint8_t>(x * 2);
  const Raster out = preprocess_image(wide);
  CHECK(out.width == 64);
  CHECK(out.height == 64);
  CHECK(out.channels == 3);
  // Still monotone left-to-right after the squeeze.
  CHECK(out.at(0, 32, 0) < out.at(32, 32, 0));
  CHECK(out.at(32, 32, 0) < out.at(63, 32, 0));
}

TEST_CASE("64x64 input resamples to itself") {
  Raster src = make_raster(64, 64, 1, 0);
  for (std::size_t i = 0; i < src.pixels.size(); ++i)
    src.pixels[i] = static_cast<std::uint8_t>((i * 131) % 251);
  const Raster out = preprocess_image(src);
  CHECK(out.pixels == src.pixels);
}

TEST_CASE("constant images stay constant under rescale") {
  const Raster out = preprocess_image(make_raster(200, 100, 3, 137));
  for (std::uint8_t v : out.pixels) CHECK(v == 137);
}

TEST_CASE("png encode/decode round trip") {
  Raster src = make_raster(9, 5, 3, 0);
  for (std::size_t i = 0; i < src.pixels.size(); ++i)
    src.pixels[i] = static_cast<std::uint8_t>((7 * i + 3) % 256);
  const std::string png = encode_png(src);
  const Raster back = decode_image(png);
  CHECK(back.width == 9);
  CHECK(back.height == 5);
  CHECK(back.channels == 3);
  CHECK(back.pixels == src.pixels);
}

TEST_CASE("undecodable bytes raise a parse error") {
  CHECK_THROWS_AS(decode_image("definitely not an image"), ParseError);
}
