#pragma once

#include "qadv/core.hpp"

namespace qadv::games {

// n-party modular XOR game. Parties see dits x_i with sum(x) mod p = 0 and
// answer y_i = x_i + b_i; the deviation from the game target is
// sum_i (x_i + b_i) - |x|/p mod p. For the Hamming-binary distribution the
// underlying sample space is bit strings of length n*(p-1), encoded blockwise,
// and r counts restricted bits; for the dit distribution r counts dits.
struct GameSpec {
  Prime p;
  size_t n_parties = 0;
  DistKind dist = DistKind::UniformDitResidueZero;  // dit or Hamming-binary
  size_t r = 0;                       // restricted symbols (bits or dits)
  std::vector<uint8_t> fixed_values;  // the r fixed symbols, known to all

  GameSpec(Prime p_, size_t n, DistKind d, std::vector<uint8_t> fixed = {});
  size_t symbol_count() const;  // total underlying symbols (bits or dits)
};

struct LinearStrategy {
  DitString offsets;  // b_i in F_p, one per party
};

// Per-symbol factor sum_x w(x) * e^{2 pi i x ((p-1) + p b)/p^2}; w is the
// symbol marginal of the distribution (uniform dit or Hamming-binary block).
cplx per_symbol_factor(Prime p, int b, DistKind dist);

// Exhaustive expectation of Re(omega^{sum(x_i+b_i) - |x|/p}) over the game's
// conditional slice. Throws TooLarge past the enumeration cap.
double strategy_correlation_exact(const GameSpec& game, const LinearStrategy& b);

// Same expectation evaluated by the character-sum product factorization
// (exact for the product-form marginals used here).
double strategy_correlation_product_form(const GameSpec& game, const LinearStrategy& b);

struct BruteForceResult {
  LinearStrategy best;
  double value = 0.0;
};

// Max over all p^n offset vectors; ties broken by lexicographically smallest b.
BruteForceResult optimal_classical_correlation_bruteforce(const GameSpec& game);

// Closed-form bound (p/(p-1)) * maxfac^{(n-r)/symbols-per-party}, where maxfac
// is the largest per-symbol factor magnitude for the distribution. Dominates
// the brute-force optimum whenever at least two parties remain free.
double classical_correlation_upper_bound(Prime p, size_t n, size_t r, DistKind dist);

// Literal real part of the paper-style closed form, reported alongside.
double classical_correlation_upper_bound_re(Prime p, size_t n, size_t r, DistKind dist);

// p=3 winning-probability bounds: 1/3 + (17/20)^{n-r} (dits) and
// 1/3 + (9/10)^{(n-r)/2} (bits).
double winning_probability_bound_p3(size_t n, size_t r, DistKind dist);

}  // namespace qadv::games
