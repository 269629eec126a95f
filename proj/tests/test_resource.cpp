#include "doctest.h"
#include "qadv/resource.hpp"

#include <cmath>

using namespace qadv;
using namespace qadv::resource;

TEST_CASE("crossover is monotone increasing in depth") {
  for (BoundFormula f : {BoundFormula::ExactAc0, BoundFormula::ExactBptf,
                         BoundFormula::AverageBptf}) {
    double prev = 0.0;
    for (int d = 3; d <= 6; ++d) {
      CrossoverModel m;
      m.formula = f;
      m.d = d;
      m.c_lower = (f == BoundFormula::AverageBptf) ? 40.0 : 4.0;
      auto c = resource_crossover(m);
      CHECK(c.log10_n > prev);
      prev = c.log10_n;
    }
  }
}

TEST_CASE("bound decreases when the classical constant shrinks") {
  CrossoverModel a, b;
  a.formula = b.formula = BoundFormula::ExactAc0;
  a.d = b.d = 3;
  a.c_lower = 4.0;
  b.c_lower = 2.0;
  CHECK(resource_crossover(a).log10_n < resource_crossover(b).log10_n);
}

TEST_CASE("documented constants land the reported orders of magnitude") {
  // constants derived in the repo docs: c_lower = 4 reproduces the 1e11-scale
  // exact AC0 figure at depth 3; the same constant puts the bPTF exact case
  // at the 1e22 scale, and c_lower = 40 puts the average case at 1e40
  CrossoverModel ac0{BoundFormula::ExactAc0, 3, 1.0, 4.0};
  auto c1 = resource_crossover(ac0);
  CHECK(std::abs(c1.log10_n - 11.0) <= 1.0);

  CrossoverModel bptf{BoundFormula::ExactBptf, 3, 1.0, 4.0};
  auto c2 = resource_crossover(bptf);
  CHECK(std::abs(c2.log10_n - 22.0) <= 1.0);

  CrossoverModel avg{BoundFormula::AverageBptf, 3, 1.0, 40.0};
  auto c3 = resource_crossover(avg);
  CHECK(std::abs(c3.log10_n - 40.0) <= 1.5);
}

TEST_CASE("log-space evaluation stays finite far beyond double range") {
  CrossoverModel m{BoundFormula::ExactAc0, 3, 1.0, 1.0};
  CHECK(std::isfinite(log2_classical_bound(m, 1e300)));
  CHECK(std::isfinite(log2_quantum_size(m, 1e300)));
}

TEST_CASE("no crossover reported when the classical bound is crushed") {
  CrossoverModel m{BoundFormula::ExactAc0, 3, 1.0, 1e-300};
  CHECK_THROWS_AS(resource_crossover(m), NoCrossover);
}
