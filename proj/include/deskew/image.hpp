#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "deskew/error.hpp"

namespace deskew {

/// Row-major intensity raster in ink-space: 0.0 = background (white paper),
/// 1.0 = full black ink. All sub-pixel arithmetic happens in this space.
struct Grayscale {
  int width = 0;
  int height = 0;
  std::vector<double> data; // width * height intensities in [0, 1]

  Grayscale() = default;
  Grayscale(int w, int h, double fill = 0.0)
      : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {
    if (w < 1 || h < 1)
      throw Error("Grayscale dimensions must be >= 1");
  }

  double &at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
  double at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }

  const double *row(int y) const { return data.data() + static_cast<std::size_t>(y) * width; }
  double *row(int y) { return data.data() + static_cast<std::size_t>(y) * width; }

  double total_ink() const {
    double s = 0.0;
    for (double v : data)
      s += v;
    return s;
  }
};

/// Thresholded raster; mask value 1 marks a foreground (black ink) pixel.
struct BinaryGlyph {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> mask;

  BinaryGlyph() = default;
  BinaryGlyph(int w, int h)
      : width(w), height(h), mask(static_cast<std::size_t>(w) * h, 0) {
    if (w < 1 || h < 1)
      throw Error("BinaryGlyph dimensions must be >= 1");
  }

  bool at(int x, int y) const { return mask[static_cast<std::size_t>(y) * width + x] != 0; }
  void set(int x, int y, bool v) { mask[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0; }

  long foreground_count() const {
    long n = 0;
    for (auto m : mask)
      n += m;
    return n;
  }
};

enum class BandKind { upper, lower };

/// Half-open row range [row_start, row_end) into a parent glyph.
struct Band {
  int row_start = 0;
  int row_end = 0;
  BandKind kind = BandKind::upper;

  int rows() const { return row_end - row_start; }
};

inline BinaryGlyph binarize(const Grayscale &img, double threshold = 0.5) {
  if (!(threshold > 0.0 && threshold < 1.0))
    throw Error("binarize threshold must lie in (0, 1)");
  BinaryGlyph g(img.width, img.height);
  for (std::size_t i = 0; i < img.data.size(); ++i)
    g.mask[i] = img.data[i] >= threshold ? 1 : 0;
  return g;
}

/// Re-embed a mask as a 0/1 grayscale raster.
inline Grayscale embed(const BinaryGlyph &glyph) {
  Grayscale img(glyph.width, glyph.height);
  for (std::size_t i = 0; i < glyph.mask.size(); ++i)
    img.data[i] = glyph.mask[i] ? 1.0 : 0.0;
  return img;
}

/// Top-25% and bottom-25% bands. bandH = floor(height / 4); each band needs
/// at least two rows, so height must be >= 8.
inline std::pair<Band, Band> split_bands(int height) {
  if (height < 8)
    throw GlyphTooSmallError("glyph height must be >= 8 to form 25% bands");
  const int band_h = height / 4;
  Band upper{0, band_h, BandKind::upper};
  Band lower{height - band_h, height, BandKind::lower};
  return {upper, lower};
}

inline std::pair<Band, Band> split_bands(const BinaryGlyph &glyph) {
  return split_bands(glyph.height);
}

inline BinaryGlyph flip_horizontal(const BinaryGlyph &glyph) {
  BinaryGlyph out(glyph.width, glyph.height);
  for (int y = 0; y < glyph.height; ++y)
    for (int x = 0; x < glyph.width; ++x)
      out.set(x, y, glyph.at(glyph.width - 1 - x, y));
  return out;
}

inline Grayscale flip_horizontal(const Grayscale &img) {
  Grayscale out(img.width, img.height);
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x)
      out.at(x, y) = img.at(img.width - 1 - x, y);
  return out;
}

/// Pad with background columns/rows; ink is untouched.
inline Grayscale pad(const Grayscale &img, int left, int right, int top = 0,
                     int bottom = 0) {
  Grayscale out(img.width + left + right, img.height + top + bottom);
  for (int y = 0; y < img.height; ++y)
    std::copy(img.row(y), img.row(y) + img.width, out.row(y + top) + left);
  return out;
}

} // namespace deskew
