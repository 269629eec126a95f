#include "qadv/games.hpp"

#include <cmath>

namespace qadv::games {

GameSpec::GameSpec(Prime p_, size_t n, DistKind d, std::vector<uint8_t> fixed)
    : p(p_), n_parties(n), dist(d), r(fixed.size()), fixed_values(std::move(fixed)) {
  if (dist == DistKind::UniformBinaryResidueZero)
    throw std::invalid_argument("GameSpec: use UniformDitResidueZero or HammingEncodedUniformBinary");
  int base = (dist == DistKind::UniformDitResidueZero) ? p.value : 2;
  for (uint8_t v : fixed_values)
    if (v >= base) throw DigitOutOfRange("GameSpec: fixed value out of range");
  if (r > symbol_count()) throw std::invalid_argument("GameSpec: more fixed symbols than symbols");
}

size_t GameSpec::symbol_count() const {
  return dist == DistKind::UniformDitResidueZero ? n_parties
                                                 : n_parties * (p.value - 1);
}

cplx per_symbol_factor(Prime p, int b, DistKind dist) {
  int pp = p.value;
  long long step = (pp - 1) + static_cast<long long>(pp) * mod_p(b, pp);
  cplx f = 0.0;
  if (dist == DistKind::UniformDitResidueZero) {
    for (int x = 0; x < pp; ++x) f += root_of_unity(step * x, pp * pp) / double(pp);
  } else {
    for (int x = 0; x < pp; ++x)
      f += encoding_bias(p, x) * root_of_unity(step * x, pp * pp);
  }
  return f;
}

// Deviation of the strategy on one input: sum(x_i + b_i) - |x|/p, as a root
// of unity in 1/p^2 turns so the nonlinear |x|/p term stays exact.
static cplx deviation_phase(const GameSpec& g, const LinearStrategy& strat,
                            const std::vector<uint8_t>& dits) {
  int p = g.p.value;
  long long w = 0;
  long long lin = 0;
  for (size_t i = 0; i < dits.size(); ++i) {
    w += dits[i];
    lin += dits[i] + strat.offsets[i];
  }
  // e^{2 pi i (lin - w/p)/p} = e^{2 pi i (p*lin - w)/p^2}
  return root_of_unity(p * lin - w, static_cast<long long>(p) * p);
}

template <typename Fn>
static void for_each_slice_input(const GameSpec& g, Fn&& fn) {
  int p = g.p.value;
  size_t total = g.symbol_count();
  size_t free_syms = total - g.r;
  int base = (g.dist == DistKind::UniformDitResidueZero) ? p : 2;
  double cap = std::pow(static_cast<double>(base), static_cast<double>(free_syms));
  if (cap > (1 << 22)) throw TooLarge("game enumeration cap exceeded");
  std::vector<uint8_t> sym(total, 0);
  for (size_t i = 0; i < g.r; ++i) sym[i] = g.fixed_values[i];
  uint64_t count = static_cast<uint64_t>(cap);
  for (uint64_t mask = 0; mask < count; ++mask) {
    uint64_t v = mask;
    long long w = 0;
    for (size_t i = 0; i < total; ++i) {
      if (i >= g.r) {
        sym[i] = static_cast<uint8_t>(v % base);
        v /= base;
      }
      w += sym[i];
    }
    if (w % p != 0) continue;
    if (g.dist == DistKind::UniformDitResidueZero) {
      fn(sym);
    } else {
      std::vector<uint8_t> dits(g.n_parties);
      int blk = p - 1;
      for (size_t j = 0; j < g.n_parties; ++j) {
        int s = 0;
        for (int i = 0; i < blk; ++i) s += sym[j * blk + i];
        dits[j] = static_cast<uint8_t>(s);
      }
      fn(dits);
    }
  }
}

double strategy_correlation_exact(const GameSpec& g, const LinearStrategy& strat) {
  if (strat.offsets.size() != g.n_parties)
    throw LengthMismatch("strategy_correlation_exact: one offset per party");
  double num = 0.0;
  long long slice = 0;
  for_each_slice_input(g, [&](const std::vector<uint8_t>& dits) {
    num += deviation_phase(g, strat, dits).real();
    slice += 1;
  });
  if (slice == 0) throw EmptyDistribution("strategy_correlation_exact: empty slice");
  return num / static_cast<double>(slice);
}

double strategy_correlation_product_form(const GameSpec& g, const LinearStrategy& strat) {
  // The offsets only contribute the global phase omega^{|b|}; the residue-zero
  // conditioning unrolls into a character sum: for each twist k the symbols
  // factorize, with per-symbol factor e^{2 pi i x ((p-1) + pk)/p^2}.
  int p = g.p.value;
  if (g.r != 0)
    throw std::invalid_argument("product form implemented for unrestricted games");
  cplx num = 0.0, norm = 0.0;
  for (int k = 0; k < p; ++k) {
    cplx prod = 1.0, nprod = 1.0;
    for (size_t i = 0; i < g.n_parties; ++i) {
      prod *= per_symbol_factor(g.p, k, g.dist);
      // slice weight: same twist without the deviation phase
      cplx nf = 0.0;
      if (g.dist == DistKind::UniformDitResidueZero) {
        for (int x = 0; x < p; ++x) nf += root_of_unity(static_cast<long long>(k) * x, p) / double(p);
      } else {
        for (int x = 0; x < p; ++x)
          nf += encoding_bias(g.p, x) * root_of_unity(static_cast<long long>(k) * x, p);
      }
      nprod *= nf;
    }
    num += prod;
    norm += nprod;
  }
  cplx phase = root_of_unity(strat.offsets.weight(), p);
  return (phase * num / norm).real();
}

BruteForceResult optimal_classical_correlation_bruteforce(const GameSpec& g) {
  int p = g.p.value;
  double total = std::pow(static_cast<double>(p), static_cast<double>(g.n_parties));
  if (total > 1e6) throw TooLarge("brute force cap p^n <= 1e6 exceeded");

  // The deviation of the offset strategy only involves the input through its
  // weight, so the slice enumeration collapses to a weight histogram; each
  // strategy is then an O(n) lookup. This is the same exhaustive sum as
  // strategy_correlation_exact, grouped by weight (tested for agreement).
  std::vector<double> count_by_weight;
  for_each_slice_input(g, [&](const std::vector<uint8_t>& dits) {
    size_t w = 0;
    for (uint8_t d : dits) w += d;
    if (count_by_weight.size() <= w) count_by_weight.resize(w + 1, 0.0);
    count_by_weight[w] += 1.0;
  });
  double slice = 0.0;
  for (double c : count_by_weight) slice += c;
  if (slice == 0.0) throw EmptyDistribution("brute force: empty slice");
  // corr(b) = sum_w N_w Re(w_{p^2}^{(p-1) w + p |b|}) / slice
  std::vector<double> corr_by_offset(p, 0.0);
  for (int boff = 0; boff < p; ++boff) {
    double acc = 0.0;
    for (size_t w = 0; w < count_by_weight.size(); ++w)
      acc += count_by_weight[w] *
             root_of_unity(static_cast<long long>(p - 1) * w +
                               static_cast<long long>(p) * boff,
                           static_cast<long long>(p) * p)
                 .real();
    corr_by_offset[boff] = acc / slice;
  }

  BruteForceResult best;
  best.best.offsets = DitString::filled(g.p, g.n_parties);
  best.value = -2.0;
  std::vector<uint8_t> b(g.n_parties, 0);
  uint64_t count = static_cast<uint64_t>(total);
  for (uint64_t idx = 0; idx < count; ++idx) {
    uint64_t v = idx;
    long long bsum = 0;
    // lexicographic order: earliest party is the most significant digit
    for (size_t i = g.n_parties; i-- > 0;) {
      b[i] = static_cast<uint8_t>(v % p);
      bsum += b[i];
      v /= p;
    }
    double c = corr_by_offset[mod_p(bsum, p)];
    if (c > best.value + 1e-15) {
      best.value = c;
      best.best = LinearStrategy{DitString(g.p, b)};
    }
  }
  return best;
}

double classical_correlation_upper_bound(Prime p, size_t n, size_t r, DistKind dist) {
  if (n <= r) throw std::invalid_argument("bound needs n > r");
  double maxfac = 0.0;
  for (int b = 0; b < p.value; ++b)
    maxfac = std::max(maxfac, std::abs(per_symbol_factor(p, b, dist)));
  double parties = dist == DistKind::UniformDitResidueZero
                       ? static_cast<double>(n - r)
                       : static_cast<double>(n - r) / (p.value - 1);
  return p.value / (p.value - 1.0) * std::pow(maxfac, parties);
}

double classical_correlation_upper_bound_re(Prime p, size_t n, size_t r, DistKind dist) {
  int pp = p.value;
  cplx w = root_of_unity(1, static_cast<long long>(pp) * pp);
  cplx base;
  double parties;
  if (dist == DistKind::UniformDitResidueZero) {
    // -e^{2pi i/p^2}(-1 + e^{2pi i (p^2-1)/p})/(-1 + e^{2pi i/p^2}), per party,
    // normalized by p^{n-1}(p-1) with n the free party count.
    cplx num = -w * (root_of_unity(pp * pp - 1, pp) - 1.0);
    base = num / (w - 1.0);
    parties = static_cast<double>(n - r);
    return (std::pow(base, parties)).real() /
           (std::pow(static_cast<double>(pp), parties - 1.0) * (pp - 1.0));
  }
  // 2^{1-p} e^{2pi i/p^2} (e^{-2pi i/p^2}(1+e^{2pi i/p^2}))^p / (1+e^{2pi i/p^2})
  cplx b2 = std::pow(2.0, 1 - pp) * w * std::pow((1.0 + w) / w, pp) / (1.0 + w);
  parties = static_cast<double>(n - r) / (pp - 1);
  return std::pow(b2, parties).real() / (pp - 1.0);
}

double winning_probability_bound_p3(size_t n, size_t r, DistKind dist) {
  // n counts parties; r counts restricted dits (dit case) or bits (binary
  // case, 2 bits per party), so the binary exponent is (2n - r)/2.
  if (dist == DistKind::UniformDitResidueZero) {
    if (n <= r) throw std::invalid_argument("bound needs n > r");
    return 1.0 / 3.0 + std::pow(17.0 / 20.0, static_cast<double>(n - r));
  }
  if (2 * n <= r) throw std::invalid_argument("bound needs 2n > r");
  return 1.0 / 3.0 + std::pow(9.0 / 10.0, static_cast<double>(2 * n - r) / 2.0);
}

}  // namespace qadv::games
