#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "deskew/correct.hpp"
#include "deskew/shear.hpp"
#include "test_util.hpp"

using namespace deskew;

TEST_CASE("build_shift_plan is all zeros for a vertical COG line") {
  const CentroidPair cg{{10.0, 5.0}, {10.0, 35.0}};
  const auto plan = build_shift_plan(cg, 40);
  REQUIRE(plan.offsets.size() == 40);
  for (double d : plan.offsets)
    CHECK(d == 0.0);
  CHECK(std::isinf(plan.slope_m));
  CHECK(plan.anchor_x == 10.0);
}

TEST_CASE("build_shift_plan evaluates the extended COG line per row") {
  const CentroidPair cg{{15.0, 5.0}, {10.0, 35.0}};
  const auto plan = build_shift_plan(cg, 40);
  CHECK(plan.slope_m == Catch::Approx(-6.0));
  CHECK(plan.offsets[5] == Catch::Approx(5.0));
  CHECK(plan.offsets[35] == Catch::Approx(0.0));
}

TEST_CASE("build_shift_plan offsets are affine in the row index") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> col(0.0, 50.0);
  for (int iter = 0; iter < 20; ++iter) {
    const double cgwu = col(rng), cgwl = col(rng);
    const CentroidPair cg{{cgwu, 10.0}, {cgwl, 80.0}};
    const auto plan = build_shift_plan(cg, 101);
    const auto &d = plan.offsets;
    CHECK(d[0] - 2.0 * d[50] + d[100] == Catch::Approx(0.0).margin(1e-9));
  }
}

TEST_CASE("build_shift_plan rejects inverted centroids") {
  const CentroidPair cg{{15.0, 35.0}, {10.0, 5.0}};
  CHECK_THROWS_AS(build_shift_plan(cg, 40), InvalidCentroidsError);
}

TEST_CASE("shift_row kernel") {
  const std::vector<double> in{0.0, 1.0, 0.0, 0.0};
  SECTION("zero shift pads with background") {
    CHECK(shift_row(in, 0.0, 6) == std::vector<double>{0, 1, 0, 0, 0, 0});
  }
  SECTION("half-pixel shift splits intensity between neighbors") {
    const auto out = shift_row(in, 0.5, 6);
    CHECK(out[0] == 0.0);
    CHECK(out[1] == Catch::Approx(0.5));
    CHECK(out[2] == Catch::Approx(0.5));
    CHECK(out[3] == 0.0);
  }
  SECTION("integer shift is a pure translation") {
    CHECK(shift_row(in, 2.0, 6) == std::vector<double>{0, 0, 0, 1, 0, 0});
  }
}

TEST_CASE("shift_row conserves mass when the row has clearance") {
  std::mt19937 rng(37);
  std::uniform_real_distribution<double> shift(-5.0, 5.0);
  for (int iter = 0; iter < 50; ++iter) {
    auto img = testutil::random_image(rng, 20, 1);
    const auto row = pad(img, 6, 6); // background clearance on both sides
    const auto out = shift_row(
        std::span<const double>(row.data.data(), row.data.size()), shift(rng), 40);
    double in_mass = img.total_ink(), out_mass = 0.0;
    for (double v : out)
      out_mass += v;
    CHECK(out_mass == Catch::Approx(in_mass).margin(1e-6));
  }
}

TEST_CASE("correct leaves a zero-skew glyph untouched") {
  const auto gray = testutil::vertical_bar(9, 40, 4);
  const auto glyph = binarize(gray);
  const auto result = correct(glyph, gray);
  CHECK(result.image.data == gray.data);
  CHECK(result.residual.angle_deg == 0.0);
}

TEST_CASE("correct removes a synthetic shear from a thin bar") {
  const auto gray = testutil::sheared_bar(10.0);
  const auto glyph = binarize(gray);
  const auto result = correct(glyph, gray);
  CHECK(result.residual.angle_deg <= 0.5);
  CHECK(result.image.height == gray.height);
  CHECK(result.image.width >= gray.width);
}

TEST_CASE("correct conserves ink mass") {
  for (double theta : {-15.0, -6.0, 4.0, 12.0, 19.0}) {
    const auto gray = shear(testutil::vertical_bar(3, 80, 1), ShearSpec(theta));
    const auto result = correct(binarize(gray), gray);
    CHECK(result.image.total_ink() == Catch::Approx(gray.total_ink()).margin(1e-6));
  }
}

TEST_CASE("rows above the lower centroid shift against the tilt") {
  const auto gray = testutil::sheared_bar(12.0);
  const auto [est, cg] = estimate_skew(binarize(gray));
  REQUIRE(est.direction == Tilt::right);
  const auto plan = build_shift_plan(cg, gray.height);
  for (int y = 0; y < gray.height; ++y) {
    const double applied = -plan.offsets[static_cast<std::size_t>(y)];
    if (y < static_cast<int>(cg.lower.y))
      CHECK(applied < 0.0); // leftward, against the rightward lean
    else if (y > static_cast<int>(std::ceil(cg.lower.y)))
      CHECK(applied > 0.0);
  }
}

TEST_CASE("the row nearest the lower centroid barely moves") {
  const auto gray = testutil::sheared_bar(18.0);
  const auto [est, cg] = estimate_skew(binarize(gray));
  const auto plan = build_shift_plan(cg, gray.height);
  const auto anchor_row = static_cast<std::size_t>(std::lround(cg.lower.y));
  CHECK(std::abs(plan.offsets[anchor_row]) < 1.0);
}

TEST_CASE("correcting twice changes the residual by at most 0.5 degrees") {
  for (double theta : {5.0, 11.0, 17.0}) {
    // Two ink columns: a single column thins below the binarization
    // threshold once a second pass of interpolation spreads its mass.
    Grayscale bar(42, 100);
    for (int y = 0; y < 100; ++y) {
      bar.at(30, y) = 1.0;
      bar.at(31, y) = 1.0;
    }
    const auto gray = shear(bar, ShearSpec(theta));
    const auto once = correct(binarize(gray), gray);
    const auto twice = correct(binarize(once.image), once.image);
    CHECK(std::abs(twice.residual.angle_deg - once.residual.angle_deg) <= 0.5);
  }
}
