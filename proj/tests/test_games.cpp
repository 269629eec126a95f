#include "doctest.h"
#include "qadv/core.hpp"
#include "qadv/games.hpp"

#include <cmath>

using namespace qadv;
using namespace qadv::games;

TEST_CASE("two-party p=2 echo strategy") {
  // inputs {00,11}: deviation 0 on 00, deviation (2 - 1) = 1 on 11 -> Corr 0
  GameSpec g(Prime(2), 2, DistKind::UniformDitResidueZero);
  LinearStrategy b{DitString(Prime(2), {0, 0})};
  CHECK(strategy_correlation_exact(g, b) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("exhaustive sum equals product form") {
  for (int p : {3, 5}) {
    for (DistKind d : {DistKind::UniformDitResidueZero, DistKind::HammingEncodedUniformBinary}) {
      size_t n = (p == 3) ? 5 : 3;
      GameSpec g(Prime(p), n, d);
      Rng rng = make_rng(3, p + (d == DistKind::UniformDitResidueZero ? 0 : 100));
      for (int t = 0; t < 10; ++t) {
        std::vector<uint8_t> off(n);
        for (auto& v : off) v = static_cast<uint8_t>(rng() % p);
        LinearStrategy s{DitString(Prime(p), off)};
        double ex = strategy_correlation_exact(g, s);
        double pf = strategy_correlation_product_form(g, s);
        CHECK(std::abs(ex - pf) < 1e-10);
      }
    }
  }
}

TEST_CASE("everything fixed gives |Corr| = 1 for some b") {
  // all symbols restricted to known values with residue 0: single input point
  GameSpec g(Prime(3), 2, DistKind::UniformDitResidueZero, {1, 2});
  double best = 0.0;
  for (int b0 = 0; b0 < 3; ++b0)
    for (int b1 = 0; b1 < 3; ++b1) {
      LinearStrategy s{DitString(Prime(3), {uint8_t(b0), uint8_t(b1)})};
      best = std::max(best, std::abs(strategy_correlation_exact(g, s)));
    }
  CHECK(best == doctest::Approx(1.0));
}

TEST_CASE("single party p=3 slice {0}") {
  GameSpec g(Prime(3), 1, DistKind::UniformDitResidueZero);
  auto res = optimal_classical_correlation_bruteforce(g);
  CHECK(res.value == doctest::Approx(1.0));
  CHECK(res.best.offsets[0] == 0);
}

TEST_CASE("per-symbol factor case tables") {
  // paper's qutrit case tables: dit {0.45, 0.3, 0.85}, binary {0.59, 0.04, 0.89}
  double dit_caps[3] = {0.45, 0.30, 0.85};
  double bin_caps[3] = {0.59, 0.04, 0.89};
  for (int b = 0; b < 3; ++b) {
    CHECK(std::abs(per_symbol_factor(Prime(3), b, DistKind::UniformDitResidueZero)) <
          dit_caps[b] + 1e-9);
    CHECK(std::abs(per_symbol_factor(Prime(3), b, DistKind::HammingEncodedUniformBinary)) <
          bin_caps[b] + 1e-9);
  }
  // frozen values from direct evaluation of the roots-of-unity sums
  CHECK(std::abs(per_symbol_factor(Prime(3), 2, DistKind::UniformDitResidueZero)) ==
        doctest::Approx(0.84397).epsilon(1e-4));
  CHECK(std::abs(per_symbol_factor(Prime(3), 2, DistKind::HammingEncodedUniformBinary)) ==
        doctest::Approx(0.88302).epsilon(1e-4));
}

TEST_CASE("brute force never exceeds closed-form bound") {
  for (DistKind d : {DistKind::UniformDitResidueZero, DistKind::HammingEncodedUniformBinary}) {
    for (size_t n : {3u, 4u, 5u}) {
      for (size_t r : {0u, 2u}) {
        std::vector<uint8_t> fixed(r, 1);
        GameSpec g(Prime(3), n, d, fixed);
        auto res = optimal_classical_correlation_bruteforce(g);
        size_t syms = g.symbol_count();
        double bound = classical_correlation_upper_bound(Prime(3), syms, r, d);
        CHECK(res.value <= bound + 1e-12);
      }
    }
  }
}

TEST_CASE("paper scaling: brute <= (p/(p-1)) 0.85^n for uniform dits") {
  GameSpec g(Prime(3), 6, DistKind::UniformDitResidueZero);
  auto res = optimal_classical_correlation_bruteforce(g);
  CHECK(res.value <= 1.5 * std::pow(0.85, 6.0));
}

TEST_CASE("binary closed-form base magnitude equals max binary factor") {
  for (int p : {3, 5, 7}) {
    double maxfac = 0.0;
    for (int b = 0; b < p; ++b)
      maxfac = std::max(maxfac,
                        std::abs(per_symbol_factor(Prime(p), b, DistKind::HammingEncodedUniformBinary)));
    // |base|^{1/(p-1)} per bit; per party it equals maxfac
    double re1 = classical_correlation_upper_bound_re(Prime(p), static_cast<size_t>(p - 1) + 1, 1,
                                                      DistKind::HammingEncodedUniformBinary);
    // one free party: Re(base)/(p-1) <= maxfac/(p-1)
    CHECK(std::abs(re1) <= maxfac / (p - 1.0) + 1e-12);
  }
}

TEST_CASE("c_p increases toward 1 from below") {
  double prev = 0.0;
  for (int p : {3, 5, 7, 11, 13}) {
    double maxfac = 0.0;
    for (int b = 0; b < p; ++b)
      maxfac = std::max(maxfac,
                        std::abs(per_symbol_factor(Prime(p), b, DistKind::HammingEncodedUniformBinary)));
    CHECK(maxfac < 1.0);
    CHECK(maxfac > prev);
    prev = maxfac;
  }
}

TEST_CASE("winning probability bounds p=3") {
  // n = 12 is the first dit size with bound < 1/2; n = 18 for the binary case
  CHECK(winning_probability_bound_p3(12, 0, DistKind::UniformDitResidueZero) < 0.5);
  CHECK(winning_probability_bound_p3(11, 0, DistKind::UniformDitResidueZero) >= 0.5);
  CHECK(winning_probability_bound_p3(18, 0, DistKind::HammingEncodedUniformBinary) < 0.5);
  CHECK(winning_probability_bound_p3(17, 0, DistKind::HammingEncodedUniformBinary) >= 0.5);
  // n -> infinity limit is 1/3, monotone decreasing in n - r
  double prev = 2.0;
  for (size_t n = 2; n < 60; ++n) {
    double v = winning_probability_bound_p3(n, 0, DistKind::UniformDitResidueZero);
    CHECK(v < prev);
    prev = v;
  }
  CHECK(prev == doctest::Approx(1.0 / 3.0).epsilon(1e-3));
}

TEST_CASE("restriction never increases the bound-normalized optimum") {
  // fixing symbols reduces to a smaller game: optimum stays within bound(n, r)
  GameSpec g0(Prime(3), 4, DistKind::UniformDitResidueZero);
  auto r0 = optimal_classical_correlation_bruteforce(g0);
  for (uint8_t v1 = 0; v1 < 3; ++v1) {
    GameSpec g(Prime(3), 4, DistKind::UniformDitResidueZero, {v1, uint8_t((3 - v1) % 3)});
    auto res = optimal_classical_correlation_bruteforce(g);
    CHECK(res.value <=
          classical_correlation_upper_bound(Prime(3), 4, 2, DistKind::UniformDitResidueZero) + 1e-12);
  }
  CHECK(r0.value <=
        classical_correlation_upper_bound(Prime(3), 4, 0, DistKind::UniformDitResidueZero) + 1e-12);
}

TEST_CASE("bounds monotone decreasing in n - r") {
  for (DistKind d : {DistKind::UniformDitResidueZero, DistKind::HammingEncodedUniformBinary}) {
    double prev = 10.0;
    for (size_t n = 2; n <= 40; n += 2) {
      double v = classical_correlation_upper_bound(Prime(3), n, 0, d);
      CHECK(v < prev);
      prev = v;
    }
  }
}
