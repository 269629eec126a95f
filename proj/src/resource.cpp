#include "qadv/resource.hpp"

#include <cmath>

namespace qadv::resource {

namespace {

constexpr double kLog2of10 = 3.321928094887362;

// closed forms evaluated at lgn = log2(n); log-space so n up to 1e400 works
double classical_at(const CrossoverModel& m, double lgn) {
  if (m.d < 3) throw std::invalid_argument("CrossoverModel: d >= 3");
  double inv = 1.0 / (m.d - 1);
  double pref = std::exp(1.0 / (1.0 - m.d));
  double lg_nlogn = lgn + std::log2(lgn);
  switch (m.formula) {
    case BoundFormula::ExactAc0:
      // n / (sqrt(n log n) * log(n log n))
      return m.c_lower * pref * std::exp2((lgn - 0.5 * lg_nlogn - std::log2(lg_nlogn)) * inv);
    case BoundFormula::ExactBptf:
      // n^{3/10} / (sqrt(log n) * log(n log n))
      return m.c_lower * pref *
             std::exp2((0.3 * lgn - 0.5 * std::log2(lgn) - std::log2(lg_nlogn)) * inv);
    case BoundFormula::AverageBptf: {
      // largest log2 s keeping the failure exponent above 1:
      // n^{8/5} (n log n)^{-1-2/q} 2^{-2q}, q = sqrt(log n + log log n),
      // raised to 1/(2d-2)
      double q = std::sqrt(lg_nlogn);
      double lg_expo = 1.6 * lgn - (1.0 + 2.0 / q) * lg_nlogn - 2.0 * q;
      return m.c_lower * std::exp2(lg_expo / (2.0 * m.d - 2.0));
    }
  }
  throw std::invalid_argument("classical_at: formula");
}

double quantum_at(const CrossoverModel& m, double lgn) {
  // all-to-all circuit: Theta(n log n) qupits and gates
  return std::log2(m.c_q) + lgn + std::log2(lgn);
}

}  // namespace

double log2_classical_bound(const CrossoverModel& m, double n) {
  return classical_at(m, std::log2(n));
}

double log2_quantum_size(const CrossoverModel& m, double n) {
  return quantum_at(m, std::log2(n));
}

Crossover resource_crossover(const CrossoverModel& m) {
  auto diff = [&](double h) {
    double lgn = h * kLog2of10;
    return classical_at(m, lgn) - quantum_at(m, lgn);
  };
  double lo = 1.0, hi = 400.0;
  if (diff(lo) >= 0.0) return {lo, std::pow(10.0, lo)};
  if (diff(hi) < 0.0) throw NoCrossover("resource_crossover: no crossover in [10, 1e400]");
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (diff(mid) >= 0.0)
      hi = mid;
    else
      lo = mid;
  }
  return {hi, std::pow(10.0, hi)};
}

}  // namespace qadv::resource
