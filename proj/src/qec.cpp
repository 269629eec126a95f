#include "qadv/qec.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qadv::qec {

PauliOperator PauliOperator::identity(int p, size_t n_sites) {
  PauliOperator e;
  e.p = p;
  e.x_exp.assign(n_sites, 0);
  e.z_exp.assign(n_sites, 0);
  return e;
}

void PauliOperator::mul(const PauliOperator& o) {
  // (Z(a)X(b)) (Z(c)X(d)) = w^{-bc} Z(a+c) X(b+d)
  long long cross = 0;
  for (size_t i = 0; i < x_exp.size(); ++i) cross += static_cast<long long>(x_exp[i]) * o.z_exp[i];
  phase = mod_p(phase + o.phase - cross, p);
  for (size_t i = 0; i < x_exp.size(); ++i) {
    x_exp[i] = static_cast<uint8_t>((x_exp[i] + o.x_exp[i]) % p);
    z_exp[i] = static_cast<uint8_t>((z_exp[i] + o.z_exp[i]) % p);
  }
}

size_t PauliOperator::support_size() const {
  size_t c = 0;
  for (size_t i = 0; i < x_exp.size(); ++i) c += (x_exp[i] != 0 || z_exp[i] != 0);
  return c;
}

bool PauliOperator::is_identity_up_to_phase() const { return support_size() == 0; }

SurfaceLattice::SurfaceLattice(Prime p_, size_t L_) : p(p_), L(L_) {
  if (L < 2) throw std::invalid_argument("SurfaceLattice: L >= 2");
  int side = static_cast<int>(2 * L - 1);
  for (int r = 0; r < side; ++r)
    for (int c = 0; c < side; ++c)
      if ((r % 2 == 0 && c % 2 == 0) || (r % 2 == 1 && c % 2 == 1)) {
        index_[{r, c}] = sites_.size();
        sites_.push_back({r, c});
      }
  auto add_term = [&](Stabilizer& s, int r, int c, int e) {
    auto it = index_.find({r, c});
    if (it != index_.end()) s.terms.push_back({it->second, e});
  };
  // X stars at (r even, c odd): X, X^-1 horizontally; X, X^-1 vertically
  for (int r = 0; r < side; r += 2)
    for (int c = 1; c < side; c += 2) {
      Stabilizer s;
      s.x_type = true;
      s.r = r;
      s.c = c;
      add_term(s, r, c - 1, 1);
      add_term(s, r, c + 1, -1);
      add_term(s, r - 1, c, 1);
      add_term(s, r + 1, c, -1);
      stabs_.push_back(std::move(s));
    }
  // Z plaquettes at (r odd, c even)
  for (int r = 1; r < side; r += 2)
    for (int c = 0; c < side; c += 2) {
      Stabilizer s;
      s.x_type = false;
      s.r = r;
      s.c = c;
      add_term(s, r, c - 1, 1);
      add_term(s, r, c + 1, -1);
      add_term(s, r - 1, c, -1);
      add_term(s, r + 1, c, 1);
      stabs_.push_back(std::move(s));
    }
}

size_t SurfaceLattice::site_index(int r, int c) const {
  auto it = index_.find({r, c});
  if (it == index_.end()) throw std::invalid_argument("SurfaceLattice: not a data site");
  return it->second;
}

PauliOperator SurfaceLattice::logical_z() const {
  PauliOperator e = PauliOperator::identity(p.value, n_sites());
  for (int c = 0; c < static_cast<int>(2 * L - 1); c += 2) e.z_exp[site_index(0, c)] = 1;
  return e;
}

PauliOperator SurfaceLattice::logical_x() const {
  PauliOperator e = PauliOperator::identity(p.value, n_sites());
  for (int r = 0; r < static_cast<int>(2 * L - 1); r += 2) e.x_exp[site_index(r, 0)] = 1;
  return e;
}

int stabilizer_charge(const SurfaceLattice& lat, const SurfaceLattice::Stabilizer& s,
                      const PauliOperator& e) {
  long long q = 0;
  for (auto [site, exp] : s.terms)
    q += static_cast<long long>(exp) * (s.x_type ? e.z_exp[site] : e.x_exp[site]);
  return mod_p(q, lat.p.value);
}

bool Syndrome::trivial() const {
  for (int c : charge)
    if (c != 0) return false;
  return true;
}

Syndrome syndrome(const SurfaceLattice& lat, const PauliOperator& e) {
  Syndrome s;
  s.charge.reserve(lat.stabilizers().size());
  for (const auto& st : lat.stabilizers()) s.charge.push_back(stabilizer_charge(lat, st, e));
  return s;
}

PauliOperator sample_local_stochastic(size_t n_sites, int p, const NoiseSpec& spec, Rng& rng) {
  if (spec.tau < 0.0 || spec.tau >= 1.0) throw std::invalid_argument("tau in [0,1)");
  PauliOperator e = PauliOperator::identity(p, n_sites);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> pick(1, p * p - 1);
  for (size_t i = 0; i < n_sites; ++i) {
    if (u(rng) >= spec.tau) continue;
    int v = pick(rng);  // nonzero (x, z) pair
    e.x_exp[i] = static_cast<uint8_t>(v % p);
    e.z_exp[i] = static_cast<uint8_t>(v / p);
  }
  return e;
}

PauliOperator conjugate_pauli_through_clifford(const std::vector<CliffordStep>& gates,
                                               const PauliOperator& e, int p, size_t n_sites) {
  PauliOperator r = e;
  if (r.x_exp.size() != n_sites) throw LengthMismatch("conjugate: size");
  for (const auto& g : gates) {
    if (g.name == "X") {
      r.phase = mod_p(r.phase - r.z_exp[g.a], p);
    } else if (g.name == "Z") {
      r.phase = mod_p(r.phase + r.x_exp[g.a], p);
    } else if (g.name == "F") {
      int x = r.x_exp[g.a], z = r.z_exp[g.a];
      // F Z^z X^x F^dag = X^{-z} Z^{x} = w^{zx} Z^{x} X^{-z}
      r.phase = mod_p(r.phase + static_cast<long long>(z) * x, p);
      r.z_exp[g.a] = static_cast<uint8_t>(mod_p(x, p));
      r.x_exp[g.a] = static_cast<uint8_t>(mod_p(-z, p));
    } else if (g.name == "INV") {
      r.x_exp[g.a] = static_cast<uint8_t>(mod_p(-r.x_exp[g.a], p));
      r.z_exp[g.a] = static_cast<uint8_t>(mod_p(-r.z_exp[g.a], p));
    } else if (g.name == "SUM") {
      // X_a -> X_a X_b, Z_b -> Z_a^{-1} Z_b
      r.x_exp[g.b] = static_cast<uint8_t>((r.x_exp[g.b] + r.x_exp[g.a]) % p);
      r.z_exp[g.a] = static_cast<uint8_t>(mod_p(r.z_exp[g.a] - r.z_exp[g.b], p));
    } else {
      throw NonCliffordGate("conjugate_pauli_through_clifford: " + g.name);
    }
  }
  return r;
}

namespace {

struct Defect {
  size_t stab = 0;
  int r = 0, c = 0;
  int charge = 0;
};

int mod_inverse(int a, int p) {
  long long r = 1, b = mod_p(a, p);
  for (int e = 0; e < p - 2; ++e) r = (r * b) % p;
  return static_cast<int>(r);
}

// Move charge q from stabilizer position (r1,c1) toward (r2,c2) on one CSS
// sublattice (steps of 2), accumulating data-site exponents so the built
// operator shows +q at the source and -q at the destination.
void route_charge(const SurfaceLattice& lat, bool x_sector, int q, int r1, int c1, int r2, int c2,
                  std::vector<int>& exps) {
  int p = lat.p.value;
  auto term_exp = [&](int sr, int sc, size_t site) -> int {
    for (const auto& st : lat.stabilizers()) {
      if (st.x_type == !x_sector && st.r == sr && st.c == sc) {
        for (auto [s, e] : st.terms)
          if (s == site) return e;
      }
    }
    return 0;
  };
  int r = r1, c = c1;
  auto step_to = [&](int nr, int nc) {
    size_t mid = lat.site_index((r + nr) / 2, (c + nc) / 2);
    int k = term_exp(r, c, mid);
    if (k == 0) throw std::logic_error("route_charge: missing stabilizer term");
    int a = mod_p(static_cast<long long>(q) * mod_inverse(k, p), p);
    exps[mid] = mod_p(exps[mid] + a, p);
    r = nr;
    c = nc;
  };
  while (r != r2) step_to(r + (r2 > r ? 2 : -2), c);
  while (c != c2) step_to(r, c + (c2 > c ? 2 : -2));
}

// Route charge q from (r,c) off the absorbing boundary of this sector.
void route_to_boundary(const SurfaceLattice& lat, bool x_sector, int q, int r, int c,
                       std::vector<int>& exps) {
  int side = static_cast<int>(2 * lat.L - 1);
  int p = lat.p.value;
  // plaquette defects terminate on the top/bottom rows; star defects on the
  // left/right columns
  if (x_sector) {
    int down = side - r;
    int up = r + 1;
    int target = (up <= down) ? -1 : side;
    int rr = r, cc = c;
    while (rr != target) {
      int nr = rr + (target > rr ? 2 : -2);
      int mid_r = (rr + nr) / 2;
      size_t mid = lat.site_index(mid_r, cc);
      int k = 0;
      for (const auto& st : lat.stabilizers())
        if (!st.x_type && st.r == rr && st.c == cc)
          for (auto [s, e] : st.terms)
            if (s == mid) k = e;
      if (k == 0) throw std::logic_error("route_to_boundary: missing term");
      int a = mod_p(static_cast<long long>(q) * mod_inverse(k, p), p);
      exps[mid] = mod_p(exps[mid] + a, p);
      rr = nr;
    }
  } else {
    int right = side - c;
    int left = c + 1;
    int target = (left <= right) ? -1 : side;
    int rr = r, cc = c;
    while (cc != target) {
      int nc = cc + (target > cc ? 2 : -2);
      size_t mid = lat.site_index(rr, (cc + nc) / 2);
      int k = 0;
      for (const auto& st : lat.stabilizers())
        if (st.x_type && st.r == rr && st.c == cc)
          for (auto [s, e] : st.terms)
            if (s == mid) k = e;
      if (k == 0) throw std::logic_error("route_to_boundary: missing term");
      int a = mod_p(static_cast<long long>(q) * mod_inverse(k, p), p);
      exps[mid] = mod_p(exps[mid] + a, p);
      cc = nc;
    }
  }
}

// One CSS sector of the decoder; returns the data-site exponents or nullopt.
std::optional<std::vector<int>> hdrg_sector(const SurfaceLattice& lat, bool x_sector,
                                            const Syndrome& syn) {
  int p = lat.p.value;
  int side = static_cast<int>(2 * lat.L - 1);
  std::vector<Defect> defects;
  const auto& stabs = lat.stabilizers();
  for (size_t i = 0; i < stabs.size(); ++i) {
    if (stabs[i].x_type != !x_sector) continue;
    if (syn.charge[i] == 0) continue;
    defects.push_back({i, stabs[i].r, stabs[i].c, syn.charge[i]});
  }
  std::vector<int> exps(lat.n_sites(), 0);
  if (defects.empty()) return exps;

  size_t lmax = 0;
  while ((size_t(1) << (lmax + 1)) <= 2 * lat.L) ++lmax;

  std::vector<bool> alive(defects.size(), true);
  for (size_t l = 0; l <= lmax; ++l) {
    long long D = 1ll << l;
    // union-find over alive defects at Chebyshev distance <= D
    std::vector<int> parent(defects.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (size_t a = 0; a < defects.size(); ++a) {
      if (!alive[a]) continue;
      for (size_t b = a + 1; b < defects.size(); ++b) {
        if (!alive[b]) continue;
        long long d = std::max(std::abs(defects[a].r - defects[b].r),
                               std::abs(defects[a].c - defects[b].c));
        if (d <= D) parent[find(static_cast<int>(b))] = find(static_cast<int>(a));
      }
    }
    std::map<int, std::vector<size_t>> clusters;
    for (size_t a = 0; a < defects.size(); ++a)
      if (alive[a]) clusters[find(static_cast<int>(a))].push_back(a);

    for (auto& [root, members] : clusters) {
      long long total = 0;
      long long bdist = side + 1;
      for (size_t m : members) {
        total += defects[m].charge;
        long long d = x_sector
                          ? std::min<long long>(defects[m].r + 1, side - defects[m].r)
                          : std::min<long long>(defects[m].c + 1, side - defects[m].c);
        bdist = std::min(bdist, d);
      }
      bool neutral = (mod_p(total, p) == 0);
      bool boundary = bdist <= D;
      if (!neutral && !boundary) continue;
      // annihilate: transport every charge to the lowest-index member, then
      // push any remainder into the boundary
      size_t rep = members.front();
      for (size_t m : members) {
        if (m == rep) continue;
        route_charge(lat, x_sector, defects[m].charge, defects[m].r, defects[m].c,
                     defects[rep].r, defects[rep].c, exps);
      }
      int rem = mod_p(total, p);
      if (rem != 0)
        route_to_boundary(lat, x_sector, rem, defects[rep].r, defects[rep].c, exps);
      else {
        // the representative absorbs the transported charges; its own charge
        // closes the loop
      }
      for (size_t m : members) alive[m] = false;
    }
  }
  for (bool a : alive)
    if (a) return std::nullopt;
  return exps;
}

}  // namespace

HdrgResult hdrg_decode(const SurfaceLattice& lat, const Syndrome& syn) {
  HdrgResult res;
  res.correction = PauliOperator::identity(lat.p.value, lat.n_sites());
  auto xs = hdrg_sector(lat, true, syn);
  auto zs = hdrg_sector(lat, false, syn);
  if (!xs || !zs) {
    res.aborted = true;
    return res;
  }
  for (size_t i = 0; i < lat.n_sites(); ++i) {
    res.correction.x_exp[i] = static_cast<uint8_t>((*xs)[i]);
    res.correction.z_exp[i] = static_cast<uint8_t>((*zs)[i]);
  }
  return res;
}

bool is_logical_failure(const SurfaceLattice& lat, const PauliOperator& residual) {
  if (!syndrome(lat, residual).trivial())
    throw NontrivialSyndrome("is_logical_failure: residual has nontrivial syndrome");
  int side = static_cast<int>(2 * lat.L - 1);
  long long zpair = 0, xpair = 0;
  for (int c = 0; c < side; c += 2) zpair += residual.x_exp[lat.site_index(0, c)];
  for (int r = 0; r < side; r += 2) xpair += residual.z_exp[lat.site_index(r, 0)];
  return mod_p(zpair, lat.p.value) != 0 || mod_p(xpair, lat.p.value) != 0;
}

std::optional<int> logical_z_measure_decoded(const SurfaceLattice& lat,
                                             const std::vector<uint8_t>& noisy_outcomes) {
  if (noisy_outcomes.size() != lat.n_sites())
    throw LengthMismatch("logical_z_measure_decoded: outcomes size");
  int p = lat.p.value;
  // plaquette charges straight from the measured string
  PauliOperator as_error = PauliOperator::identity(p, lat.n_sites());
  for (size_t i = 0; i < lat.n_sites(); ++i) as_error.x_exp[i] = noisy_outcomes[i] % p;
  Syndrome syn = syndrome(lat, as_error);
  // star charges are invisible to Z measurements; decode the X sector only
  for (size_t i = 0; i < lat.stabilizers().size(); ++i)
    if (lat.stabilizers()[i].x_type) syn.charge[i] = 0;
  auto res = hdrg_decode(lat, syn);
  if (res.aborted) return std::nullopt;
  int side = static_cast<int>(2 * lat.L - 1);
  long long total = 0;
  for (int c = 0; c < side; c += 2) {
    size_t i = lat.site_index(0, c);
    total += mod_p(static_cast<long long>(noisy_outcomes[i]) - res.correction.x_exp[i], p);
  }
  return mod_p(total, p);
}

MonteCarloResult monte_carlo_failure(const SurfaceLattice& lat, double tau, long long trials,
                                     Rng& rng) {
  MonteCarloResult out;
  out.trials = trials;
  for (long long t = 0; t < trials; ++t) {
    PauliOperator e = sample_local_stochastic(lat.n_sites(), lat.p.value, {tau}, rng);
    auto res = hdrg_decode(lat, syndrome(lat, e));
    if (res.aborted) {
      out.failures += 1;
      continue;
    }
    PauliOperator residual = e;
    PauliOperator inv = res.correction;
    for (size_t i = 0; i < lat.n_sites(); ++i) {
      inv.x_exp[i] = static_cast<uint8_t>(mod_p(-inv.x_exp[i], lat.p.value));
      inv.z_exp[i] = static_cast<uint8_t>(mod_p(-inv.z_exp[i], lat.p.value));
    }
    residual.mul(inv);
    if (is_logical_failure(lat, residual)) out.failures += 1;
  }
  out.rate = static_cast<double>(out.failures) / trials;
  out.ci = wilson_interval(out.failures, trials);
  return out;
}

}  // namespace qadv::qec
