#include <doctest.h>

#include <cmath>
#include <numbers>

#include "xxc/asymptotics.hpp"
#include "xxc/errors.hpp"

using namespace xxc;
using std::numbers::ln2;

TEST_SUITE_BEGIN("asymptotics");

TEST_CASE("the offset constant reproduces its quoted value") {
  CHECK(constants::offset_C == doctest::Approx(1.4850543).epsilon(1e-6));
  CHECK(constants::offset_C ==
        1.0 + std::numbers::egamma - 6.0 * 0.0221603 * ln2);
}

TEST_CASE("branch selection on the symmetric line") {
  CHECK(symmetric_branch(1.0 / 0.9) == SymmetricBranch::KLambdaBelowKH);
  CHECK(symmetric_branch(1.0 / 0.6) == SymmetricBranch::KLambdaAboveKH);
  CHECK_THROWS_AS(symmetric_branch(0.9), DomainError);
}

TEST_CASE("closed-form offsets frozen from direct evaluation") {
  CHECK(analytic_entropy_offset(1.0 / 0.6, SymmetricBranch::KLambdaAboveKH) ==
        doctest::Approx(0.714476187678082).epsilon(1e-12));
  CHECK(analytic_entropy_offset(1.0 / 0.9, SymmetricBranch::KLambdaBelowKH) ==
        doctest::Approx(0.739211496524652).epsilon(1e-12));
  // wrong branch: the radicand goes non-positive
  CHECK_THROWS_AS(analytic_entropy_offset(1.0 / 0.6, SymmetricBranch::KLambdaBelowKH),
                  DomainError);
  CHECK_THROWS_AS(analytic_entropy_offset(1.0 / 0.9, SymmetricBranch::KLambdaAboveKH),
                  DomainError);
  CHECK_THROWS_AS(analytic_entropy_offset(std::numbers::sqrt2,
                                          SymmetricBranch::KLambdaBelowKH),
                  DomainError);
  // logarithmic divergence toward 1/lambda = 1/sqrt2
  const double near = analytic_entropy_offset(1.0 / 0.705, SymmetricBranch::KLambdaAboveKH);
  const double nearer = analytic_entropy_offset(1.0 / 0.7069, SymmetricBranch::KLambdaAboveKH);
  CHECK(nearer < near);
  CHECK(nearer < -0.5);
}

TEST_CASE("scaling length factor: frozen value, boundary zero, identity with the offset") {
  CHECK(scaling_length_factor(1.0 / 0.6, SymmetricBranch::KLambdaAboveKH) ==
        doctest::Approx(std::sqrt(0.4375)).epsilon(1e-14));
  CHECK(scaling_length_factor(std::numbers::sqrt2, SymmetricBranch::KLambdaBelowKH) == 0.0);
  CHECK(scaling_length_factor(std::numbers::sqrt2, SymmetricBranch::KLambdaAboveKH) == 0.0);
  CHECK_THROWS_AS(scaling_length_factor(1.0 / 0.9, SymmetricBranch::KLambdaAboveKH),
                  DomainError);

  for (double inv : {0.3, 0.6, 0.74, 0.9}) {
    const double lambda = 1.0 / inv;
    const auto branch = symmetric_branch(lambda);
    const double via_factor =
        2.0 / 3.0 *
        (std::log(scaling_length_factor(lambda, branch)) + std::log(1024.0) +
         constants::offset_C);
    const double via_offset =
        2.0 / 3.0 * std::log(1024.0) + analytic_entropy_offset(lambda, branch);
    CHECK(via_factor == doctest::Approx(via_offset).epsilon(1e-12));
  }
}

TEST_CASE("scaled-length form of the entropy at a checkable size") {
  const double lambda = 1.0 / 0.6;
  const double factor = scaling_length_factor(lambda, symmetric_branch(lambda));
  const double scaled = 512.0 * factor;
  REQUIRE(scaled >= 50.0);
  const double s = entropy_pipeline({0.6, lambda}, 512).nats;
  CHECK(std::abs(s - 2.0 / 3.0 * (std::log(scaled) + constants::offset_C)) <= 0.01);
}

TEST_CASE("log fit: exact recovery of synthetic data") {
  EntropySeries series;
  series.params = {0.5, 1.3};
  const double a = 2.0 / 3.0, b = 0.25;
  for (int block : with_parity_partners(geometric_grid(16, 512, 12)))
    series.points.emplace_back(block, a * std::log(static_cast<double>(block)) + b);
  const auto fit = fit_log_growth(series, {16, 512});
  CHECK(fit.prefactor == doctest::Approx(a).epsilon(1e-12));
  CHECK(fit.offset == doctest::Approx(b).epsilon(1e-12));
  CHECK(fit.residual_rms <= 1e-12);
  CHECK(fit.raw_residual_rms <= 1e-12);

  // window filtering: only the in-window pairs participate
  const auto narrow = fit_log_growth(series, {64, 512});
  CHECK(narrow.prefactor == doctest::Approx(a).epsilon(1e-12));
  CHECK(narrow.raw_points < fit.raw_points);
}

TEST_CASE("log fit: failure modes") {
  EntropySeries series;
  series.params = {0.5, 0.0};
  for (int block : {8, 9, 16, 17, 32, 33}) series.points.emplace_back(block, 1.0);
  CHECK_THROWS_AS(fit_log_growth(series, {8, 33}), FitError);   // 6 < 8 points
  CHECK_THROWS_AS(fit_log_growth(series, {33, 8}), ConfigError);
  series.points.emplace_back(30, 1.0);  // breaks monotonicity
  CHECK_THROWS_AS(fit_log_growth(series, {8, 33}), ConfigError);
}

TEST_CASE("log fit: identically zero series fits a zero line") {
  EntropySeries series;
  series.params = {1.5, 0.0};
  for (int block : with_parity_partners(geometric_grid(8, 256, 10)))
    series.points.emplace_back(block, entropy_pipeline(series.params, block).nats);
  const auto fit = fit_log_growth(series, {8, 256});
  CHECK(fit.prefactor == 0.0);
  CHECK(fit.offset == 0.0);
  CHECK(fit.residual_rms == 0.0);
}

TEST_CASE("log fit on computed series at a small window") {
  const auto grid = with_parity_partners(geometric_grid(32, 256, 12));
  const auto undriven = fit_log_growth(entropy_series({0.5, 0.0}, grid), {32, 256});
  CHECK(undriven.prefactor == doctest::Approx(1.0 / 3.0).epsilon(0.02));
  const auto driven = fit_log_growth(entropy_series({0.5, 1.3}, grid), {32, 256});
  CHECK(driven.prefactor == doctest::Approx(2.0 / 3.0).epsilon(0.02));
}

TEST_CASE("geometric grids and parity partners") {
  const auto grid = geometric_grid(200, 2048, 24);
  CHECK(grid.size() == 24);
  CHECK(grid.front() == 200);
  CHECK(grid.back() == 2048);
  for (std::size_t i = 1; i < grid.size(); ++i) CHECK(grid[i] > grid[i - 1]);

  const auto padded = with_parity_partners({8, 9, 64});
  CHECK(padded == std::vector<int>{8, 9, 10, 64, 65});
  CHECK_THROWS_AS(geometric_grid(0, 100, 5), ConfigError);
  CHECK_THROWS_AS(geometric_grid(100, 10, 5), ConfigError);
}

TEST_CASE("collapse curves share the grid and vanish at the crossing") {
  CollapseConfig config;
  config.anchors = {0.5};
  config.block_sizes = {128, 192};
  config.x_max = 8.0;
  config.points_per_side = 16;
  const auto curves = scaling_collapse(config);
  REQUIRE(curves.size() == 2);
  CHECK(curves[0].x == curves[1].x);
  CHECK(curves[0].x.size() == 33);
  for (const auto& curve : curves) {
    CHECK(curve.x[16] == 0.0);
    CHECK(curve.delta_s[16] == 0.0);
    for (double ds : curve.delta_s) CHECK(std::isfinite(ds));
  }
  // even at these small sizes the curves track each other closely
  CHECK(collapse_spread(curves) < 0.05);
}

TEST_CASE("collapse rejects paths that leave the adjacent phases") {
  CollapseConfig config;
  config.anchors = {0.1};  // k_h = 0.100, so x_max/L must stay below that
  config.block_sizes = {32};
  config.x_max = 8.0;
  CHECK_THROWS_AS(scaling_collapse(config), ConfigError);
}

TEST_CASE("one-sided collapse along the current-onset line") {
  CollapseConfig config;
  config.transition = TransitionLine::KLambdaZero;
  config.anchors = {0.5};
  config.block_sizes = {96};
  config.x_max = 6.0;
  config.points_per_side = 12;
  const auto curves = scaling_collapse(config);
  REQUIRE(curves.size() == 1);
  CHECK(curves[0].x.front() == 0.0);
  CHECK(curves[0].delta_s.front() == 0.0);
  CHECK(curves[0].x.size() == 13);
  // entropy rises once the current starts to flow
  CHECK(curves[0].delta_s.back() > 0.1);
}

TEST_CASE("far from the crossing the excess entropy grows logarithmically in x") {
  CollapseConfig config;
  config.anchors = {0.5};
  config.block_sizes = {256};
  config.x_max = 32.0;
  config.points_per_side = 8;
  const auto curve = scaling_collapse(config).front();
  double at16 = 0, at32 = 0, at_m16 = 0, at_m32 = 0;
  for (std::size_t j = 0; j < curve.x.size(); ++j) {
    if (curve.x[j] == 16.0) at16 = curve.delta_s[j];
    if (curve.x[j] == 32.0) at32 = curve.delta_s[j];
    if (curve.x[j] == -16.0) at_m16 = curve.delta_s[j];
    if (curve.x[j] == -32.0) at_m32 = curve.delta_s[j];
  }
  // measured 0.29 / 0.31 against the crossover prefactor (2/3 - 1/3) = 1/3
  CHECK((at32 - at16) / ln2 > 0.22);
  CHECK((at32 - at16) / ln2 < 0.42);
  CHECK((at_m32 - at_m16) / ln2 > 0.22);
  CHECK((at_m32 - at_m16) / ln2 < 0.42);
}

TEST_SUITE_END();
