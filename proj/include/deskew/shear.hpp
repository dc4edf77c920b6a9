#pragma once

#include <cmath>
#include <numbers>
#include <optional>

#include "deskew/correct.hpp"
#include "deskew/error.hpp"
#include "deskew/image.hpp"

namespace deskew {

/// Horizontal shear with a known, exact angle. Positive theta leans the top
/// of the image to the right (the italic sense); rows at anchor_row do not
/// move. Default anchor is the bottom row.
struct ShearSpec {
  double theta_deg = 0.0;
  std::optional<int> anchor_row; // defaults to height - 1

  ShearSpec() = default;
  explicit ShearSpec(double theta, std::optional<int> anchor = std::nullopt)
      : theta_deg(theta), anchor_row(anchor) {
    if (!(std::abs(theta) < 45.0))
      throw Error("shear angle must satisfy |theta| < 45 degrees");
  }
};

/// Inverse-mapped, linearly interpolated shear. The canvas is widened by
/// ceil(height * tan|theta|) so no ink is clipped; the same interpolation
/// kernel as the corrector is used (shift_row), so oracle round trips measure
/// only algorithmic error.
inline Grayscale shear(const Grayscale &img, const ShearSpec &spec) {
  const int anchor = spec.anchor_row.value_or(img.height - 1);
  if (anchor < 0 || anchor >= img.height)
    throw Error("shear anchor row out of range");

  const double t = std::tan(spec.theta_deg * std::numbers::pi / 180.0);
  const int widen = static_cast<int>(std::ceil(img.height * std::abs(t)));
  const int out_width = img.width + widen;

  // Row displacement d(y) = (anchor - y) * tan(theta); shift the origin left
  // by the most negative displacement so every row stays on the canvas.
  const double d_top = anchor * t;
  const double d_bottom = (anchor - (img.height - 1)) * t;
  const double min_d = std::min({0.0, d_top, d_bottom});
  const int origin = static_cast<int>(std::ceil(-min_d));

  Grayscale out(out_width, img.height);
  for (int y = 0; y < img.height; ++y) {
    const double shift = origin + (anchor - y) * t;
    const auto row = shift_row(
        std::span<const double>(img.row(y), static_cast<std::size_t>(img.width)),
        shift, out_width);
    std::copy(row.begin(), row.end(), out.row(y));
  }
  return out;
}

/// Integer column offset of the sheared image's origin relative to the
/// input's; nonzero only when some rows displace leftward.
inline int shear_origin_offset(int height, const ShearSpec &spec) {
  const int anchor = spec.anchor_row.value_or(height - 1);
  const double t = std::tan(spec.theta_deg * std::numbers::pi / 180.0);
  const double d_top = anchor * t;
  const double d_bottom = (anchor - (height - 1)) * t;
  const double min_d = std::min({0.0, d_top, d_bottom});
  return static_cast<int>(std::ceil(-min_d));
}

} // namespace deskew
