#pragma once

#include "qadv/core.hpp"

namespace qadv::resource {

struct NoCrossover : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class BoundFormula {
  ExactAc0,       // exact hardness, k = O(1), all-to-all
  ExactBptf,      // exact hardness, k = n^{1/(5d)}
  AverageBptf,    // average-case exponent, k = n^{1/(5d)}
};

// Classical-size lower bound vs quantum upper bound crossover. The hidden
// asymptotic constants are exposed as knobs defaulting to 1; c_lower scales
// the classical exponent, c_q the quantum size c_q * n * log2(n).
struct CrossoverModel {
  BoundFormula formula = BoundFormula::ExactAc0;
  int d = 3;          // classical depth
  double c_q = 1.0;   // quantum size constant
  double c_lower = 1.0;
};

// log2 of the classical size lower bound at input size n (log-space, exact).
double log2_classical_bound(const CrossoverModel& m, double n);

// log2 of the quantum circuit size at input size n.
double log2_quantum_size(const CrossoverModel& m, double n);

// Smallest n with log2(classical) >= log2(quantum), by bisection on log10 n
// over [1, 400]. Throws NoCrossover when the range never crosses.
struct Crossover {
  double log10_n = 0.0;
  double n = 0.0;  // inf past the double range
};
Crossover resource_crossover(const CrossoverModel& m);

}  // namespace qadv::resource
