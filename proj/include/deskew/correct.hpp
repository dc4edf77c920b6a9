#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "deskew/detect.hpp"
#include "deskew/error.hpp"
#include "deskew/image.hpp"

namespace deskew {

/// Per-row horizontal displacements of the extended COG line against the
/// vertical normal through the lower centroid. d(y) = (y - cghl) / m with
/// m the COG-line slope dy/dx; a vertical COG line yields all-zero offsets.
struct RowShiftPlan {
  std::vector<double> offsets; // one entry per image row
  double anchor_x = 0.0;       // the normal line's column (== cgwl)
  double slope_m = std::numeric_limits<double>::infinity();

  double max_abs_offset() const {
    double m = 0.0;
    for (double d : offsets)
      m = std::max(m, std::abs(d));
    return m;
  }
};

struct CorrectedGlyph {
  Grayscale image;       // widened canvas, sub-pixel intensities
  SkewEstimate residual; // re-measured on the re-binarized result
};

inline RowShiftPlan build_shift_plan(const CentroidPair &centroids, int height) {
  const double cgwu = centroids.upper.x, cghu = centroids.upper.y;
  const double cgwl = centroids.lower.x, cghl = centroids.lower.y;
  if (!(cghu < cghl))
    throw InvalidCentroidsError("upper centroid must lie strictly above lower");

  RowShiftPlan plan;
  plan.anchor_x = cgwl;
  plan.offsets.assign(static_cast<std::size_t>(height), 0.0);
  if (cgwu == cgwl)
    return plan; // vertical COG line, nothing to remove

  plan.slope_m = (cghu - cghl) / (cgwu - cgwl);
  for (int y = 0; y < height; ++y)
    plan.offsets[static_cast<std::size_t>(y)] = (y - cghl) / plan.slope_m;
  return plan;
}

/// Horizontal sub-pixel translation of one row by inverse-mapped linear
/// interpolation; source reads outside the row are background (0).
inline std::vector<double> shift_row(std::span<const double> row, double shift,
                                     int out_width) {
  const auto n = static_cast<std::ptrdiff_t>(row.size());
  std::vector<double> out(static_cast<std::size_t>(out_width), 0.0);
  for (int x = 0; x < out_width; ++x) {
    const double p = x - shift;
    const double fl = std::floor(p);
    const auto i0 = static_cast<std::ptrdiff_t>(fl);
    const double f = p - fl;
    const double a = (i0 >= 0 && i0 < n) ? row[static_cast<std::size_t>(i0)] : 0.0;
    const double b =
        (i0 + 1 >= 0 && i0 + 1 < n) ? row[static_cast<std::size_t>(i0 + 1)] : 0.0;
    out[static_cast<std::size_t>(x)] = (1.0 - f) * a + f * b;
  }
  return out;
}

/// Remove the detected slant by shifting each grayscale row by -d(y), so the
/// COG line is brought onto the normal through the lower centroid. The canvas
/// is widened by ceil(max |d|) on each side; the residual is re-measured on
/// the result binarized at the given threshold.
inline CorrectedGlyph correct(const BinaryGlyph &glyph, const Grayscale &gray,
                              double threshold = 0.5) {
  if (glyph.width != gray.width || glyph.height != gray.height)
    throw Error("correct: glyph and grayscale dimensions differ");

  const auto [estimate, centroids] = estimate_skew(glyph);
  (void)estimate;
  const RowShiftPlan plan = build_shift_plan(centroids, gray.height);

  const int margin = static_cast<int>(std::ceil(plan.max_abs_offset()));
  Grayscale out(gray.width + 2 * margin, gray.height);
  for (int y = 0; y < gray.height; ++y) {
    const auto shifted =
        shift_row(std::span<const double>(gray.row(y), static_cast<std::size_t>(gray.width)),
                  margin - plan.offsets[static_cast<std::size_t>(y)], out.width);
    std::copy(shifted.begin(), shifted.end(), out.row(y));
  }

  CorrectedGlyph result{std::move(out), {}};
  result.residual = estimate_skew(binarize(result.image, threshold)).first;
  return result;
}

} // namespace deskew
