#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "deskew/correct.hpp"
#include "deskew/detect.hpp"
#include "deskew/error.hpp"
#include "deskew/image.hpp"
#include "deskew/pnm.hpp"

namespace deskew {

/// Relative skew reduction in percent, clamped to [0, 100]. Angles below
/// 0.01 degrees count as zero skew.
inline double accuracy(double before_deg, double after_deg) {
  constexpr double kZero = 0.01;
  if (before_deg < kZero)
    return after_deg < kZero ? 100.0 : 0.0;
  const double pct = (before_deg - after_deg) / before_deg * 100.0;
  return std::clamp(pct, 0.0, 100.0);
}

struct ReportRow {
  std::string name;
  double before_deg = std::numeric_limits<double>::quiet_NaN();
  double after_deg = std::numeric_limits<double>::quiet_NaN();
  double accuracy_pct = std::numeric_limits<double>::quiet_NaN();
  double time_ms = 0.0;
  std::string error; // nonempty when this image failed detection

  bool ok() const { return error.empty(); }
};

struct CorpusSummary {
  std::size_t images = 0;
  std::size_t failures = 0;
  double mean_accuracy_pct = 0.0;
  double mean_time_ms = 0.0;
};

struct CorpusReport {
  std::vector<ReportRow> rows;
  CorpusSummary summary;
};

struct RunConfig {
  double threshold = 0.5;
  int timing_runs = 5; // median-of-N, detect+correct only
};

/// Detect + correct one glyph, timing the pipeline (I/O excluded) as the
/// median of config.timing_runs repetitions.
inline ReportRow evaluate_glyph(const std::string &name, const Grayscale &gray,
                                const RunConfig &config = {}) {
  ReportRow row;
  row.name = name;
  try {
    const BinaryGlyph glyph = binarize(gray, config.threshold);
    std::vector<double> times;
    SkewEstimate before{}, after{};
    for (int run = 0; run < std::max(1, config.timing_runs); ++run) {
      const auto t0 = std::chrono::steady_clock::now();
      before = estimate_skew(glyph).first;
      after = correct(glyph, gray, config.threshold).residual;
      const auto t1 = std::chrono::steady_clock::now();
      times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    std::sort(times.begin(), times.end());
    row.before_deg = before.angle_deg;
    row.after_deg = after.angle_deg;
    row.accuracy_pct = accuracy(row.before_deg, row.after_deg);
    row.time_ms = times[times.size() / 2];
  } catch (const Error &e) {
    row.error = e.what();
  }
  return row;
}

/// Run the pipeline over every PGM in a directory, in filename order. Images
/// that fail detection become error rows; the batch always completes.
inline CorpusReport run_corpus(const std::string &corpus_dir,
                               const RunConfig &config = {}) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(corpus_dir))
    throw Error("'" + corpus_dir + "' is not a readable directory");

  std::vector<fs::path> files;
  for (const auto &entry : fs::directory_iterator(corpus_dir)) {
    if (!entry.is_regular_file())
      continue;
    const auto ext = entry.path().extension().string();
    if (ext == ".pgm" || ext == ".pnm")
      files.push_back(entry.path());
  }
  if (files.empty())
    throw EmptyCorpusError("no PGM images found in '" + corpus_dir + "'");
  std::sort(files.begin(), files.end());

  CorpusReport report;
  double acc_sum = 0.0, time_sum = 0.0;
  for (const auto &path : files) {
    ReportRow row;
    try {
      const Grayscale gray = load_pnm_file(path.string());
      row = evaluate_glyph(path.stem().string(), gray, config);
    } catch (const Error &e) {
      row.name = path.stem().string();
      row.error = e.what();
    }
    if (row.ok()) {
      acc_sum += row.accuracy_pct;
      time_sum += row.time_ms;
    } else {
      ++report.summary.failures;
    }
    report.rows.push_back(std::move(row));
  }
  report.summary.images = report.rows.size();
  const auto ok_count = report.summary.images - report.summary.failures;
  if (ok_count > 0) {
    report.summary.mean_accuracy_pct = acc_sum / static_cast<double>(ok_count);
    report.summary.mean_time_ms = time_sum / static_cast<double>(ok_count);
  }
  return report;
}

// --- report serialization ---------------------------------------------------

namespace detail {

inline std::string format_row(const ReportRow &row) {
  char buf[160];
  if (row.ok()) {
    std::snprintf(buf, sizeof(buf), "%s,%.3f,%.3f,%.2f,%lld", row.name.c_str(),
                  row.before_deg, row.after_deg, row.accuracy_pct,
                  static_cast<long long>(std::llround(row.time_ms)));
  } else {
    std::snprintf(buf, sizeof(buf), "%s,nan,nan,nan,0", row.name.c_str());
  }
  return buf;
}

} // namespace detail

/// Columns: name, before_deg, after_deg, accuracy_pct, time_ms. Angles carry
/// 3 decimals, accuracy 2, time is integer milliseconds. Error rows emit nan
/// angle fields; their notes live in the Markdown report and on stderr.
inline std::string to_csv(const std::vector<ReportRow> &rows) {
  std::string out = "name,before_deg,after_deg,accuracy_pct,time_ms\n";
  for (const auto &row : rows) {
    out += detail::format_row(row);
    out += '\n';
  }
  return out;
}

inline std::vector<ReportRow> parse_csv(const std::string &csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line != "name,before_deg,after_deg,accuracy_pct,time_ms")
    throw FormatError("CSV: missing report header");
  std::vector<ReportRow> rows;
  while (std::getline(in, line)) {
    if (line.empty())
      continue;
    std::istringstream fields(line);
    std::string cell;
    std::array<std::string, 5> cells;
    std::size_t i = 0;
    while (std::getline(fields, cell, ',')) {
      if (i >= cells.size())
        throw FormatError("CSV: too many columns: '" + line + "'");
      cells[i++] = cell;
    }
    if (i != cells.size())
      throw FormatError("CSV: too few columns: '" + line + "'");
    ReportRow row;
    row.name = cells[0];
    row.before_deg = std::stod(cells[1]);
    row.after_deg = std::stod(cells[2]);
    row.accuracy_pct = std::stod(cells[3]);
    row.time_ms = std::stod(cells[4]);
    if (std::isnan(row.before_deg))
      row.error = "failed";
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string to_markdown(const CorpusReport &report) {
  std::string out = "| name | before (deg) | after (deg) | accuracy (%) | time (ms) | note |\n"
                    "|------|--------------|-------------|--------------|-----------|------|\n";
  char buf[256];
  for (const auto &row : report.rows) {
    if (row.ok()) {
      std::snprintf(buf, sizeof(buf), "| %s | %.3f | %.3f | %.2f | %lld | |\n",
                    row.name.c_str(), row.before_deg, row.after_deg,
                    row.accuracy_pct, static_cast<long long>(std::llround(row.time_ms)));
      out += buf;
    } else {
      out += "| " + row.name + " | - | - | - | - | " + row.error + " |\n";
    }
  }
  std::snprintf(buf, sizeof(buf),
                "\n%zu images, %zu failed; mean accuracy %.2f%%, mean time %.1f ms\n",
                report.summary.images, report.summary.failures,
                report.summary.mean_accuracy_pct, report.summary.mean_time_ms);
  out += buf;
  return out;
}

// --- annotation -------------------------------------------------------------

namespace detail {

// 5x7 bitmap glyphs for the caption: digits, '.', tilt letters.
inline const std::uint8_t *caption_glyph(char c) {
  static constexpr std::array<std::array<std::uint8_t, 7>, 14> glyphs = {{
      {0x0E, 0x11, 0x13, 0x15, 0x19, 0x11, 0x0E}, // 0
      {0x04, 0x0C, 0x04, 0x04, 0x04, 0x04, 0x0E}, // 1
      {0x0E, 0x11, 0x01, 0x02, 0x04, 0x08, 0x1F}, // 2
      {0x1F, 0x02, 0x04, 0x02, 0x01, 0x11, 0x0E}, // 3
      {0x02, 0x06, 0x0A, 0x12, 0x1F, 0x02, 0x02}, // 4
      {0x1F, 0x10, 0x1E, 0x01, 0x01, 0x11, 0x0E}, // 5
      {0x06, 0x08, 0x10, 0x1E, 0x11, 0x11, 0x0E}, // 6
      {0x1F, 0x01, 0x02, 0x04, 0x08, 0x08, 0x08}, // 7
      {0x0E, 0x11, 0x11, 0x0E, 0x11, 0x11, 0x0E}, // 8
      {0x0E, 0x11, 0x11, 0x0F, 0x01, 0x02, 0x0C}, // 9
      {0x00, 0x00, 0x00, 0x00, 0x00, 0x0C, 0x0C}, // .
      {0x10, 0x10, 0x10, 0x10, 0x10, 0x10, 0x1F}, // L
      {0x1E, 0x11, 0x11, 0x1E, 0x14, 0x12, 0x11}, // R
      {0x11, 0x19, 0x15, 0x13, 0x11, 0x11, 0x11}, // N
  }};
  if (c >= '0' && c <= '9')
    return glyphs[static_cast<std::size_t>(c - '0')].data();
  switch (c) {
  case '.':
    return glyphs[10].data();
  case 'L':
    return glyphs[11].data();
  case 'R':
    return glyphs[12].data();
  case 'N':
    return glyphs[13].data();
  default:
    return nullptr; // rendered as a space
  }
}

inline void stamp_text(Grayscale &img, int x0, int y0, const std::string &text) {
  int x = x0;
  for (char c : text) {
    if (const std::uint8_t *rows = caption_glyph(c)) {
      for (int dy = 0; dy < 7; ++dy)
        for (int dx = 0; dx < 5; ++dx)
          if (rows[dy] & (0x10 >> dx)) {
            const int px = x + dx, py = y0 + dy;
            if (px >= 0 && px < img.width && py >= 0 && py < img.height)
              img.at(px, py) = 1.0;
          }
    }
    x += 6;
  }
}

} // namespace detail

/// Render the glyph (light), the extended COG line (black), the vertical
/// normal through the lower centroid (mid gray), and the angle in a fixed
/// 16-row caption margin below the image.
inline Grayscale annotate(const BinaryGlyph &glyph, const CentroidPair &centroids,
                          const SkewEstimate &estimate) {
  constexpr int kCaptionRows = 16;
  Grayscale out(glyph.width, glyph.height + kCaptionRows);
  for (int y = 0; y < glyph.height; ++y)
    for (int x = 0; x < glyph.width; ++x)
      if (glyph.at(x, y))
        out.at(x, y) = 0.35;

  const double cgwl = centroids.lower.x, cghl = centroids.lower.y;
  const double dx = centroids.upper.x - cgwl;
  const double dy = centroids.upper.y - cghl; // negative: upper is above lower

  const int normal_x = static_cast<int>(std::lround(cgwl));
  for (int y = 0; y < glyph.height; ++y) {
    if (normal_x >= 0 && normal_x < out.width)
      out.at(normal_x, y) = std::max(out.at(normal_x, y), 0.6);
    // COG line extended to the top and bottom rows
    const double x = dx == 0.0 ? cgwl : cgwl + (y - cghl) * dx / dy;
    const int xi = static_cast<int>(std::lround(x));
    if (xi >= 0 && xi < out.width)
      out.at(xi, y) = 1.0;
  }

  char caption[32];
  std::snprintf(caption, sizeof(caption), "%.3f %c", estimate.angle_deg,
                estimate.direction == Tilt::left    ? 'L'
                : estimate.direction == Tilt::right ? 'R'
                                                    : 'N');
  detail::stamp_text(out, 2, glyph.height + 4, caption);
  return out;
}

} // namespace deskew
