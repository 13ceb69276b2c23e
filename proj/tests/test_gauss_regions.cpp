#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "zic/gauss_regions.hpp"

using zic::GaussParams;
using zic::RateRegion;
using zic::RhoResult;

namespace {

// Reference maximum on a dense rho grid; step 1e-6 unless told otherwise.
template <class F>
double grid_max(F&& f, double step = 1e-6) {
  double best = f(-1.0);
  for (double rho = -1.0 + step; rho <= 1.0 + step / 2; rho += step)
    best = std::max(best, f(std::min(rho, 1.0)));
  return best;
}

}  // namespace

TEST_CASE("frozen spot values at snr 100, inr 25") {
  const GaussParams g{100, 25, 0};
  REQUIRE(zic::single_user_rate(g) == Catch::Approx(3.3291057414).margin(1e-6));
  REQUIRE(zic::thm4_sum_bound(g) == Catch::Approx(5.0485095839).margin(1e-6));
  REQUIRE(zic::thm5_sum_bound(g) == Catch::Approx(4.3079916237).margin(1e-6));
  REQUIRE(zic::r2_secrecy_objective(g, 0) == Catch::Approx(3.1713371936).margin(1e-6));
  REQUIRE(zic::sigma_y2_given_s(g, 0) == Catch::Approx(8.3734409391).margin(1e-6));
  REQUIRE(zic::thm6_sum_objective(g, 0) == Catch::Approx(4.8637817131).margin(1e-6));
  // cg = 0 pins rho = 0 in the assembled bounds
  REQUIRE(zic::thm5_r2_bound(g) == zic::r2_secrecy_objective(g, 0));
  REQUIRE(zic::thm6_sum_bound(g) == zic::thm6_sum_objective(g, 0));
}

TEST_CASE("frozen spot values at snr 100, inr 225") {
  REQUIRE(zic::r2_secrecy_objective({100, 225, 0}, 0) ==
          Catch::Approx(2.4995849952).margin(1e-6));
  REQUIRE(zic::thm4_sum_bound({100, 225, 1}) == Catch::Approx(5.9092840194).margin(1e-6));

  // with cooperation the R2 bound optimizes over rho
  const GaussParams g{100, 225, 1};
  const RhoResult best = zic::maximize_over_rho(
      [&](double rho) { return zic::r2_secrecy_objective(g, rho); });
  REQUIRE(best.value == Catch::Approx(2.7600364850).margin(1e-6));
  REQUIRE(best.rho == Catch::Approx(-0.6733333333).margin(1e-3));
  REQUIRE(zic::thm6_r2_bound(g) == Catch::Approx(2.7600364850).margin(1e-6));
  REQUIRE(zic::thm6_sum_bound(g) == Catch::Approx(4.7990512623).margin(1e-6));
}

TEST_CASE("side-information residual variance hits the noise floor") {
  REQUIRE(zic::sigma_y2_given_s({0, 0, 0}, 0) == 1.0);
  REQUIRE(zic::sigma_y2_given_s({0, 7, 0}, 0) == 1.0);
  REQUIRE(zic::sigma_y2_given_s({4096, 262144, 0}, 0) == Catch::Approx(1.0312459479).margin(1e-6));
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> lg(-1, 4), rho(-1, 1);
  for (int trial = 0; trial < 200; ++trial) {
    const GaussParams g{std::pow(10.0, lg(rng)), std::pow(10.0, lg(rng)), 0};
    REQUIRE(zic::sigma_y2_given_s(g, rho(rng)) >= 1.0 - 1e-9);
  }
}

TEST_CASE("secrecy objective stays nonnegative across the rho range") {
  std::mt19937 rng(6);
  std::uniform_real_distribution<double> lg(-1, 4), rho(-1, 1);
  for (int trial = 0; trial < 200; ++trial) {
    const GaussParams g{std::pow(10.0, lg(rng)), std::pow(10.0, lg(rng)), 0};
    REQUIRE(zic::r2_secrecy_objective(g, rho(rng)) >= 0.0);
  }
}

TEST_CASE("maximize_over_rho finds smooth maxima and honors ties") {
  const RhoResult parab = zic::maximize_over_rho([](double r) {
    return -(r - 0.3) * (r - 0.3);
  });
  REQUIRE(std::abs(parab.rho - 0.3) <= 1e-6);
  REQUIRE(parab.value >= -1e-12);

  const RhoResult flat = zic::maximize_over_rho([](double) { return 2.5; });
  REQUIRE(flat.value == 2.5);

  // plateau tie: the coarse scan keeps the smallest rho
  const RhoResult step = zic::maximize_over_rho([](double r) { return r < -0.5 ? 1.0 : 0.0; });
  REQUIRE(step.value == 1.0);
  REQUIRE(step.rho <= -0.999);

  const RhoResult edge = zic::maximize_over_rho([](double r) { return r; });
  REQUIRE(edge.value == Catch::Approx(1.0).margin(1e-9));

  REQUIRE_THROWS_AS(zic::maximize_over_rho([](double r) {
                      return r == 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
                    }),
                    zic::numeric_error);
}

TEST_CASE("maximize_over_rho matches a dense grid within 1e-6 bits") {
  std::mt19937 rng(20240818);
  std::uniform_real_distribution<double> lg(-1, 4);
  std::uniform_int_distribution<int> pick_cg(1, 4);
  for (int trial = 0; trial < 20; ++trial) {
    const GaussParams g{std::pow(10.0, lg(rng)), std::pow(10.0, lg(rng)), pick_cg(rng) * 0.5};
    auto r2 = [&](double rho) { return zic::r2_secrecy_objective(g, rho); };
    auto sum = [&](double rho) { return zic::thm6_sum_objective(g, rho); };
    REQUIRE(std::abs(zic::maximize_over_rho(r2).value - grid_max(r2)) <= 1e-6);
    REQUIRE(std::abs(zic::maximize_over_rho(sum).value - grid_max(sum)) <= 1e-6);
  }
}

TEST_CASE("region assembly and parameter validation") {
  const GaussParams g{100, 25, 0};
  const RateRegion r4 = zic::thm4_region(g);
  REQUIRE(r4.constraints.size() == 3);
  REQUIRE(r4.constraints[0].b == zic::single_user_rate(g));
  REQUIRE(r4.constraints[2].b == zic::thm4_sum_bound(g));

  const RateRegion r5 = zic::thm5_region(g);
  REQUIRE(r5.constraints[1].b == zic::thm5_r2_bound(g));
  REQUIRE(r5.constraints[2].b == zic::thm5_sum_bound(g));

  const RateRegion best = zic::best_outer_region(g);
  REQUIRE(best.constraints.size() == 9);
  REQUIRE(zic::is_subset(best, r4));
  REQUIRE(zic::is_subset(best, r5));
  REQUIRE(zic::is_subset(best, zic::thm6_region(g)));

  REQUIRE_THROWS_AS(zic::thm5_region({100, 225, 0}), zic::regime_error);
  REQUIRE(zic::best_outer_region({100, 225, 0}).constraints.size() == 6);

  REQUIRE_THROWS_AS(zic::thm4_region({-1, 0, 0}), zic::param_error);
  REQUIRE_THROWS_AS(zic::thm4_region({1, 0, -0.5}), zic::param_error);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  REQUIRE_THROWS_AS(zic::thm4_region({nan, 0, 0}), zic::param_error);
  REQUIRE_THROWS_AS(GaussParams::from_gains(-2, 1, 0.5), zic::param_error);

  const GaussParams fig = GaussParams::from_gains(100, 1, 0.5);
  REQUIRE(fig.snr == 100.0);
  REQUIRE(fig.inr == 25.0);
}

TEST_CASE("zero power collapses everything to the origin") {
  const RateRegion r4 = zic::thm4_region({0, 0, 0});
  for (const zic::Constraint& c : r4.constraints) REQUIRE(c.b == 0.0);
  REQUIRE(zic::vertices(r4).size() == 1);

  const RateRegion r5 = zic::thm5_region({0, 0, 2});
  REQUIRE(r5.constraints[0].b == 0.0);
  REQUIRE(r5.constraints[1].b == 0.0);
  REQUIRE(r5.constraints[2].b == 2.0);  // sum bound keeps the cooperation credit
  REQUIRE(zic::area(r5) == 0.0);
}

TEST_CASE("cross-link-aware bound dominates the cooperative MAC bound") {
  for (double snr : {1.0, 10.0, 100.0, 5000.0})
    for (double inr : {0.0, 1.0, 10.0, 100.0})
      for (double cg : {0.0, 1.0, 2.0}) {
        if (inr > snr) continue;
        const GaussParams g{snr, inr, cg};
        REQUIRE(zic::thm5_sum_bound(g) <= zic::thm4_sum_bound(g) + 1e-9);
        REQUIRE(zic::thm5_r2_bound(g) <= zic::single_user_rate(g) + 1e-9);
      }
}

TEST_CASE("more cooperation never shrinks any region") {
  const std::vector<std::pair<double, double>> points{{50, 10}, {100, 25}, {100, 225}, {3, 7}};
  for (const auto& [snr, inr] : points)
    for (double lo : {0.0, 0.5, 1.5}) {
      const GaussParams glo{snr, inr, lo}, ghi{snr, inr, lo + 0.5};
      REQUIRE(zic::is_subset(zic::thm4_region(glo), zic::thm4_region(ghi)));
      REQUIRE(zic::is_subset(zic::thm6_region(glo), zic::thm6_region(ghi)));
      REQUIRE(zic::is_subset(zic::best_outer_region(glo), zic::best_outer_region(ghi)));
      if (inr <= snr) REQUIRE(zic::is_subset(zic::thm5_region(glo), zic::thm5_region(ghi)));
    }
}
