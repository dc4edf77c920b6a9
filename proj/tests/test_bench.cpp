#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <random>

#include "deskew/bench.hpp"
#include "deskew/shear.hpp"
#include "test_util.hpp"

using namespace deskew;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir(const std::string &tag) {
    path = fs::temp_directory_path() / ("deskew_test_" + tag);
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("accuracy reproduces the published reference rows") {
  CHECK(accuracy(10.112, 1.245) == Catch::Approx(87.69).margin(0.01));
  CHECK(accuracy(14.543, 0.901) == Catch::Approx(93.80).margin(0.01));
  CHECK(accuracy(14.424, 1.345) == Catch::Approx(90.675).margin(0.005));
  CHECK(accuracy(13.424, 0.0) == 100.0);
}

TEST_CASE("accuracy edge behavior") {
  CHECK(accuracy(10.0, 0.0) == 100.0);
  CHECK(accuracy(10.0, 10.0) == 0.0);
  CHECK(accuracy(10.0, 25.0) == 0.0); // clamped: correction made it worse
  CHECK(accuracy(0.0, 0.0) == 100.0);
  CHECK(accuracy(0.005, 3.0) == 0.0);
}

TEST_CASE("accuracy is scale invariant") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> angle(0.05, 30.0), scale(0.1, 10.0);
  for (int iter = 0; iter < 50; ++iter) {
    const double b = angle(rng), a = angle(rng), k = scale(rng);
    CHECK(accuracy(k * b, k * a) == Catch::Approx(accuracy(b, a)).margin(1e-9));
  }
}

TEST_CASE("run_corpus reports every readable image and survives bad inputs") {
  TempDir dir("corpus");
  for (double theta : {5.0, 10.0, 15.0, 20.0}) {
    const auto img = testutil::sheared_bar(theta, 200);
    char name[32];
    std::snprintf(name, sizeof(name), "bar%02d.pgm", static_cast<int>(theta));
    save_pnm_file((dir.path / name).string(), img);
  }
  save_pnm_file((dir.path / "tiny.pgm").string(), Grayscale(10, 7)); // too small
  std::ofstream(dir.path / "notes.txt") << "ignored\n";

  const auto report = run_corpus(dir.path.string());
  REQUIRE(report.rows.size() == 5);
  CHECK(report.summary.images == 5);
  CHECK(report.summary.failures == 1);
  for (const auto &row : report.rows) {
    if (row.name == "tiny") {
      CHECK_FALSE(row.ok());
      CHECK_FALSE(row.error.empty());
    } else {
      REQUIRE(row.ok());
      CHECK(row.after_deg <= 0.5);
      CHECK(row.accuracy_pct >= 95.0);
    }
  }
}

TEST_CASE("run_corpus rejects an empty corpus") {
  TempDir dir("empty");
  CHECK_THROWS_AS(run_corpus(dir.path.string()), EmptyCorpusError);
  CHECK_THROWS_AS(run_corpus((dir.path / "missing").string()), Error);
}

TEST_CASE("CSV report round-trips through its parser") {
  std::vector<ReportRow> rows;
  rows.push_back({"A-italic", 13.424, 0.113, 99.16, 3.0, ""});
  rows.push_back({"bad", 0, 0, 0, 0, "upper 25% band has no foreground pixels"});
  rows.push_back({"bar05", 5.012, 0.201, 95.99, 1.0, ""});
  const std::string csv = to_csv(rows);
  CHECK(to_csv(parse_csv(csv)) == csv);

  const auto parsed = parse_csv(csv);
  REQUIRE(parsed.size() == 3);
  CHECK(parsed[0].name == "A-italic");
  CHECK(parsed[0].before_deg == Catch::Approx(13.424));
  CHECK_FALSE(parsed[1].ok());
  CHECK(parse_csv(csv).size() == rows.size());
}

TEST_CASE("annotate adds a fixed 16-row caption margin") {
  const auto gray = testutil::vertical_bar(30, 40, 15);
  const auto glyph = binarize(gray);
  const auto [est, cg] = estimate_skew(glyph);
  const auto overlay = annotate(glyph, cg, est);
  CHECK(overlay.width == glyph.width);
  CHECK(overlay.height == glyph.height + 16);
}

TEST_CASE("annotate draws coincident lines for a zero-skew glyph") {
  const auto glyph = binarize(testutil::vertical_bar(30, 40, 15));
  const auto [est, cg] = estimate_skew(glyph);
  REQUIRE(est.angle_deg == 0.0);
  const auto overlay = annotate(glyph, cg, est);
  // Single overlaid line: full intensity on the bar column, nothing drawn at
  // line strength elsewhere in the glyph area.
  for (int y = 0; y < glyph.height; ++y)
    for (int x = 0; x < glyph.width; ++x) {
      if (x == 15)
        CHECK(overlay.at(x, y) == 1.0);
      else
        CHECK(overlay.at(x, y) < 0.6);
    }
}

TEST_CASE("evaluate_glyph on an upright bar reports zero skew") {
  const auto row = evaluate_glyph("bar", testutil::vertical_bar(5, 60, 2));
  REQUIRE(row.ok());
  CHECK(row.before_deg == 0.0);
  CHECK(row.accuracy_pct == 100.0);
}
