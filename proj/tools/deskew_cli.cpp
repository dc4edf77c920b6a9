#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "deskew/deskew.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitProcessing = 2;

int cmd_detect(const std::string &input, double threshold,
               const std::string &annotate_path) {
  const auto gray = deskew::load_pnm_file(input);
  const auto glyph = deskew::binarize(gray, threshold);
  const auto [estimate, centroids] = deskew::estimate_skew(glyph);
  std::printf("angle_deg=%.3f direction=%s cgwu=%.3f cghu=%.3f cgwl=%.3f cghl=%.3f\n",
              estimate.angle_deg, deskew::to_string(estimate.direction),
              centroids.upper.x, centroids.upper.y, centroids.lower.x,
              centroids.lower.y);
  if (!annotate_path.empty()) {
    const auto overlay = deskew::annotate(glyph, centroids, estimate);
    deskew::save_pnm_file(annotate_path, overlay);
  }
  return kExitOk;
}

int cmd_correct(const std::string &input, const std::string &output,
                double threshold, bool report) {
  const auto gray = deskew::load_pnm_file(input);
  const auto glyph = deskew::binarize(gray, threshold);
  const auto before = deskew::estimate_skew(glyph).first;
  const auto corrected = deskew::correct(glyph, gray, threshold);
  deskew::save_pnm_file(output, corrected.image);
  if (report) {
    std::printf("before_deg=%.3f after_deg=%.3f accuracy_pct=%.2f\n",
                before.angle_deg, corrected.residual.angle_deg,
                deskew::accuracy(before.angle_deg, corrected.residual.angle_deg));
  }
  return kExitOk;
}

int cmd_synth(const std::string &input, const std::string &output, double angle,
              int anchor) {
  const auto gray = deskew::load_pnm_file(input);
  deskew::ShearSpec spec(angle, anchor >= 0 ? std::optional<int>(anchor)
                                            : std::nullopt);
  deskew::save_pnm_file(output, deskew::shear(gray, spec));
  return kExitOk;
}

int cmd_bench(const std::string &dir, const std::string &format,
              const std::string &output, double threshold) {
  deskew::RunConfig config;
  config.threshold = threshold;
  const auto report = deskew::run_corpus(dir, config);
  for (const auto &row : report.rows)
    if (!row.ok())
      std::fprintf(stderr, "warning: %s: %s\n", row.name.c_str(), row.error.c_str());

  const std::string body = format == "md" ? deskew::to_markdown(report)
                                          : deskew::to_csv(report.rows);
  if (output.empty()) {
    std::fputs(body.c_str(), stdout);
  } else {
    std::ofstream out(output);
    if (!out)
      throw deskew::Error("cannot write '" + output + "'");
    out << body;
  }
  std::fprintf(stderr, "%zu images, %zu failed; mean accuracy %.2f%%, mean time %.1f ms\n",
               report.summary.images, report.summary.failures,
               report.summary.mean_accuracy_pct, report.summary.mean_time_ms);
  return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Per-glyph slant detection (COG band method) and sub-pixel correction"};
  app.require_subcommand(1);

  double threshold = 0.5;
  std::string input, output, annotate_path;

  auto *detect = app.add_subcommand("detect", "Measure the slant of one glyph image");
  detect->add_option("img", input, "input PGM")->required();
  detect->add_option("--threshold", threshold, "binarization threshold in (0,1)");
  detect->add_option("--annotate", annotate_path, "write a COG-line overlay PGM");

  bool report = false;
  auto *correct = app.add_subcommand("correct", "Remove the detected slant");
  correct->add_option("img", input, "input PGM")->required();
  correct->add_option("-o,--output", output, "corrected PGM")->required();
  correct->add_option("--threshold", threshold, "binarization threshold in (0,1)");
  correct->add_flag("--report", report, "print before/after angles and accuracy");

  double angle = 0.0;
  int anchor = -1;
  auto *synth = app.add_subcommand("synth", "Shear a glyph by an exact angle");
  synth->add_option("--angle", angle, "shear angle in degrees, |angle| < 45")->required();
  synth->add_option("img", input, "input PGM")->required();
  synth->add_option("-o,--output", output, "sheared PGM")->required();
  synth->add_option("--anchor", anchor, "anchor row (default: bottom row)");

  std::string dir, format = "csv";
  auto *bench = app.add_subcommand("bench", "Detect+correct every PGM in a directory");
  bench->add_option("dir", dir, "corpus directory")->required();
  bench->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"csv", "md"}));
  bench->add_option("-o,--output", output, "report file (default: stdout)");
  bench->add_option("--threshold", threshold, "binarization threshold in (0,1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (detect->parsed())
      return cmd_detect(input, threshold, annotate_path);
    if (correct->parsed())
      return cmd_correct(input, output, threshold, report);
    if (synth->parsed())
      return cmd_synth(input, output, angle, anchor);
    return cmd_bench(dir, format, output, threshold);
  } catch (const std::exception &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitProcessing;
  }
}
