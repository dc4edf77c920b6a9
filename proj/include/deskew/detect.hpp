#pragma once

#include <cmath>
#include <numbers>
#include <utility>

#include "deskew/error.hpp"
#include "deskew/image.hpp"

namespace deskew {

/// Foreground extrema and half-zone counts of one 25% band. The zone split is
/// the image's vertical midline at column floor(width / 2); that column
/// belongs to the right zone.
struct BandStats {
  int min_x = 0;
  int max_x = 0;
  long left_count = 0;
  long right_count = 0;
};

/// Sub-pixel point, full-image coordinates (x right, y down).
struct Centroid {
  double x = 0.0;
  double y = 0.0;
};

/// The two gravity centers: (cgwu, cghu) for the upper band and
/// (cgwl, cghl) for the lower band, both in the full-image frame.
struct CentroidPair {
  Centroid upper;
  Centroid lower;
};

enum class Tilt { left, right, none };

inline const char *to_string(Tilt t) {
  switch (t) {
  case Tilt::left:
    return "left";
  case Tilt::right:
    return "right";
  default:
    return "none";
  }
}

struct SkewEstimate {
  double angle_deg = 0.0; // always >= 0
  Tilt direction = Tilt::none;
};

inline BandStats band_stats(const BinaryGlyph &glyph, const Band &band) {
  if (band.row_start < 0 || band.row_end > glyph.height || band.rows() < 1)
    throw Error("band out of range for glyph");
  const int mid = glyph.width / 2;
  BandStats st;
  st.min_x = glyph.width;
  st.max_x = -1;
  for (int y = band.row_start; y < band.row_end; ++y) {
    for (int x = 0; x < glyph.width; ++x) {
      if (!glyph.at(x, y))
        continue;
      st.min_x = std::min(st.min_x, x);
      st.max_x = std::max(st.max_x, x);
      (x < mid ? st.left_count : st.right_count) += 1;
    }
  }
  if (st.max_x < 0)
    throw EmptyBandError(band.kind == BandKind::upper
                             ? "upper 25% band has no foreground pixels"
                             : "lower 25% band has no foreground pixels");
  return st;
}

/// Upper-band gravity center. The width coordinate follows the three-case
/// rule on the half-zone pixel counts:
///   left > right  -> minwu + (maxwu - minwu) / 4
///   left < right  -> minwu + (maxwu - minwu) / 2
///   left == right -> minwu + (maxwu - minwu) / 2
/// The height coordinate is the band's row midpoint.
inline Centroid upper_centroid(const BandStats &stats, const Band &band) {
  const double span = static_cast<double>(stats.max_x - stats.min_x);
  double cgwu;
  if (stats.left_count > stats.right_count)
    cgwu = stats.min_x + span / 4.0;
  else
    cgwu = stats.min_x + span / 2.0;
  const double cghu = band.row_start + (band.row_end - band.row_start) / 2.0;
  return {cgwu, cghu};
}

/// Lower-band gravity center: extent midpoint for width, band row midpoint
/// (in the full-image frame) for height.
inline Centroid lower_centroid(const BandStats &stats, const Band &band) {
  const double cgwl = stats.min_x + (stats.max_x - stats.min_x) / 2.0;
  const double cghl = band.row_start + (band.row_end - band.row_start) / 2.0;
  return {cgwl, cghl};
}

/// Slant angle from the line joining the two band centroids:
/// angle = atan(|cgwu - cgwl| / (cghl - cghu)) in degrees, i.e. the
/// deviation of the glyph's axis from vertical.
inline std::pair<SkewEstimate, CentroidPair> estimate_skew(const BinaryGlyph &glyph) {
  const auto [upper_band, lower_band] = split_bands(glyph);
  const BandStats upper_stats = band_stats(glyph, upper_band);
  const BandStats lower_stats = band_stats(glyph, lower_band);

  CentroidPair cg;
  cg.upper = upper_centroid(upper_stats, upper_band);
  cg.lower = lower_centroid(lower_stats, lower_band);

  const double perpendicular = std::abs(cg.upper.x - cg.lower.x);
  const double base = cg.lower.y - cg.upper.y;

  SkewEstimate est;
  est.angle_deg = 180.0 * std::atan(perpendicular / base) / std::numbers::pi;
  if (cg.upper.x > cg.lower.x)
    est.direction = Tilt::right;
  else if (cg.upper.x < cg.lower.x)
    est.direction = Tilt::left;
  else
    est.direction = Tilt::none;
  return {est, cg};
}

} // namespace deskew
