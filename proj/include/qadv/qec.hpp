#pragma once

#include "qadv/core.hpp"

#include <map>
#include <optional>

namespace qadv::qec {

struct NonCliffordGate : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NontrivialSyndrome : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Generalized Pauli over the lattice sites: omega^phase Z(z_exp) X(x_exp).
struct PauliOperator {
  int p = 2;
  int phase = 0;
  std::vector<uint8_t> x_exp;
  std::vector<uint8_t> z_exp;

  static PauliOperator identity(int p, size_t n_sites);
  void mul(const PauliOperator& o);  // *this = *this followed by o, phases tracked mod p
  size_t support_size() const;
  bool is_identity_up_to_phase() const;
};

// Distance-L planar code on the (2L-1)x(2L-1) diagonal grid. Data qupits sit
// at cells with r,c both even (L^2 of them) or both odd ((L-1)^2), giving
// 2L^2-2L+1 sites. X-type stars live at (r even, c odd), Z-type plaquettes at
// (r odd, c even); exponent patterns alternate so everything commutes for all
// p. Logical Z is the top row of Z's, logical X the left column of X's.
struct SurfaceLattice {
  Prime p;
  size_t L = 0;

  explicit SurfaceLattice(Prime p_, size_t L_);

  size_t n_sites() const { return sites_.size(); }
  size_t site_index(int r, int c) const;      // throws for non-data cells
  std::pair<int, int> site_coords(size_t i) const { return sites_[i]; }

  struct Stabilizer {
    bool x_type = false;
    int r = 0, c = 0;                          // grid position
    std::vector<std::pair<size_t, int>> terms; // (site, exponent +-1)
  };
  const std::vector<Stabilizer>& stabilizers() const { return stabs_; }

  PauliOperator logical_z() const;
  PauliOperator logical_x() const;

 private:
  std::vector<std::pair<int, int>> sites_;
  std::map<std::pair<int, int>, size_t> index_;
  std::vector<Stabilizer> stabs_;
};

// Symplectic commutation charge of an error against one stabilizer.
int stabilizer_charge(const SurfaceLattice& lat, const SurfaceLattice::Stabilizer& s,
                      const PauliOperator& e);

// Per-stabilizer charges; keyed by stabilizer index.
struct Syndrome {
  std::vector<int> charge;  // length = stabilizers().size()
  bool trivial() const;
};
Syndrome syndrome(const SurfaceLattice& lat, const PauliOperator& e);

struct NoiseSpec {
  double tau = 0.0;  // per-qupit error probability
};

// i.i.d. single-site noise: each site nontrivial with probability tau,
// uniform over the p^2 - 1 nontrivial single-site Paulis. Satisfies the
// tau-local-stochastic bound with equality on single-site events.
PauliOperator sample_local_stochastic(size_t n_sites, int p, const NoiseSpec& spec, Rng& rng);

// Conjugation E -> U E U^dag through a sequence of Clifford gates given as
// (name, sites): "X","Z","F","SUM","INV". Verified against dense matrices.
struct CliffordStep {
  std::string name;
  size_t a = 0, b = 0;  // b used by SUM (a control, b target)
};
PauliOperator conjugate_pauli_through_clifford(const std::vector<CliffordStep>& gates,
                                               const PauliOperator& e, int p, size_t n_sites);

// HDRG decoding of one CSS sector. Defects carry F_p charges; levels grow the
// Chebyshev search distance D(l) = 2^l; neutral clusters (including clusters
// within reach of an absorbing boundary) are annihilated by a recorded
// correction. nullopt = Abort.
struct HdrgResult {
  bool aborted = false;
  PauliOperator correction;  // x-type for plaquette defects, z-type for stars
};
HdrgResult hdrg_decode(const SurfaceLattice& lat, const Syndrome& syn);

// True iff a syndrome-free residual acts as a logical operator (nonzero
// symplectic pairing with logical Z or logical X).
bool is_logical_failure(const SurfaceLattice& lat, const PauliOperator& residual);

// Cor.-style decoded logical-Z measurement: modular sum along the logical row
// after applying the HDRG-guessed X-sector correction to the outcomes.
std::optional<int> logical_z_measure_decoded(const SurfaceLattice& lat,
                                             const std::vector<uint8_t>& noisy_outcomes);

struct MonteCarloResult {
  long long trials = 0;
  long long failures = 0;
  double rate = 0.0;
  WilsonCI ci;
};
MonteCarloResult monte_carlo_failure(const SurfaceLattice& lat, double tau, long long trials,
                                     Rng& rng);

}  // namespace qadv::qec
