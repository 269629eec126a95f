#pragma once

#include "qadv/core.hpp"

#include <cstddef>
#include <functional>

namespace qadv::qsim {

struct TargetOutOfRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dense statevector over n qupits of prime dimension p, amplitude index
// little-endian in the qupit digits: index = sum_i d_i * p^i.
struct QupitState {
  Prime p;
  size_t n = 0;
  std::vector<cplx> amp;

  QupitState(Prime p_, size_t n_);               // |0...0>
  static QupitState basis(Prime p, const DitString& digits);

  size_t dim() const { return amp.size(); }
  double norm() const;
  void renormalize();
  uint8_t digit_of(size_t index, size_t site) const;
};

enum class GateKind {
  PauliX,      // |j> -> |j+a>
  PauliZ,      // |j> -> w^{aj}|j>
  Fourier,     // F
  FourierDag,  // F^dagger
  Sum,         // SUM control,target: |x,y> -> |x, y+x>
  Inv,         // |j> -> |-j>
  CZ,          // |x,y> -> w^{a x y}|x,y>
  Rz,          // diag e^{2 pi i a j / p^2}
  GRz,         // global diagonal phase e^{i theta}
  GRzSet,      // e^{i theta} on basis values in S, identity elsewhere
};

struct GateSpec {
  GateKind kind = GateKind::PauliX;
  size_t target = 0;
  size_t control = 0;      // Sum/CZ only
  int exponent = 1;        // PauliX/PauliZ/CZ/Rz: a, reduced mod p (Rz: mod p^2)
  double theta = 0.0;      // GRz/GRzSet
  std::vector<int> set;    // GRzSet values
};

void apply_gate(QupitState& state, const GateSpec& g);

// Convenience constructors.
GateSpec gate_x(size_t t, int a = 1);
GateSpec gate_z(size_t t, int a = 1);
GateSpec gate_fourier(size_t t);
GateSpec gate_fourier_dag(size_t t);
GateSpec gate_sum(size_t control, size_t target);
GateSpec gate_inv(size_t t);
GateSpec gate_cz(size_t control, size_t target, int a = 1);
GateSpec gate_rz(size_t t, int a);  // Rz(2 pi a / p^2)
GateSpec gate_grz(size_t t, double theta);
GateSpec gate_grz_set(size_t t, double theta, std::vector<int> set);

// Z-basis measurement of one site. Collapses the state; returns the digit.
uint8_t measure_site(QupitState& state, size_t site, Rng& rng);

// Probability of each digit at one site (no collapse).
std::vector<double> site_distribution(const QupitState& state, size_t site);

// Collapse a site to a chosen digit (post-selection); returns the branch
// probability. State is renormalized if the probability is nonzero.
double project_site(QupitState& state, size_t site, uint8_t digit);

// Full computational-basis law: probability of every basis index (exact-law
// mode used by the acceptance oracles).
std::vector<double> full_distribution(const QupitState& state);

// Dense p x p single-site matrix of a gate; unitary oracle helper.
std::vector<std::vector<cplx>> gate_matrix(Prime p, const GateSpec& g);
std::vector<std::vector<cplx>> mat_mul(const std::vector<std::vector<cplx>>& a,
                                       const std::vector<std::vector<cplx>>& b);
double mat_dist(const std::vector<std::vector<cplx>>& a,
                const std::vector<std::vector<cplx>>& b);

}  // namespace qadv::qsim
