#pragma once

#include "qadv/core.hpp"
#include "qadv/gpm.hpp"
#include "qadv/qsim.hpp"

namespace qadv::qsim {

struct OddInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- qubit PHP circuit (p = 2, exact) --------------------------------------

// Sampled run: vertex measurement outcomes concatenated with the AND
// correction bits AND(x_i, e_l) for every input i and edge l on path(i, root).
DitString run_qubit_php_circuit(const DitString& x, const GraphSpec& g, Rng& rng);

// The correction bits alone, given measured edge outcomes.
DitString php_correction_bits(const DitString& x, const GraphSpec& g, const DitString& edges);

// Exact-law oracle: total probability mass the circuit places on invalid
// outputs, from the full joint statevector (vertices + edge ancillas).
double php_invalid_mass_exact(const DitString& x, const GraphSpec& g);

// ---- qupit ISMR circuit (correlation (p-1)/p^2 claimed) --------------------

struct QupitRunResult {
  DitString raw;         // measured vertex dits
  DitString correction;  // appended monomial dits
};

// Sampled run via statevector: Rz(2 pi x_i / p^2) on each vertex of a GPM
// state, Fourier layer, measurement, plus the NC0 correction string.
QupitRunResult run_qupit_ismr_circuit(Prime p, const DitString& x, const GraphSpec& g, Rng& rng);

// Correction dits: for each vertex i, every (p-1)-fold ordered product over
// the addend list [signed path edges..., z_root, 1], multiplied by x_i.
// Weight mod p equals <x, (z^{+1})^{p-1}>. teleport_shift, when present,
// inserts the per-vertex measured gadget outcome c_i as an extra addend so
// the weight tracks the shifted reference z + c*x instead.
DitString qupit_correction_dits(Prime p, const DitString& x, const GraphSpec& g,
                                const DitString& edges,
                                const DitString* teleport_shift = nullptr);

// <x, (z^{+1})^{p-1}> mod p.
int correction_weight(Prime p, const DitString& x, const DitString& z);

// Closed-form law of the shift s = |raw| - (-|x|/p) mod p for one reference
// string z (one edge-outcome branch).
std::vector<double> shift_law_from_reference(Prime p, const DitString& x, const DitString& z);

// Law of the total deviation d = |raw| + |correction| - (-|x|/p) for one
// branch (shift law advanced by the correction weight).
std::vector<double> deviation_law_from_reference(Prime p, const DitString& x, const DitString& z);

// Exact deviation law averaged over every edge-outcome branch (closed form).
std::vector<double> qupit_exact_deviation_law(Prime p, const DitString& x, const GraphSpec& g);

// Same quantity from the full joint statevector with real correction strings;
// the independent oracle for the closed form. Subject to the p^n cap.
std::vector<double> qupit_exact_deviation_law_sv(Prime p, const DitString& x, const GraphSpec& g);

double correlation_of_law(Prime p, const std::vector<double>& dev_law);

// Correlation/success of the circuit against the relation, averaged over the
// input distribution (uniform residue-zero binary strings) and all branches.
struct QupitAverages {
  double correlation = 0.0;
  double success = 0.0;
  size_t inputs = 0;
};
QupitAverages qupit_input_averaged(Prime p, size_t n, GraphKind kind);

// Shift distribution given the inner products a_i = <x,(z^{+i})^{p-1}>:
// Pr[shift s] = |sum_i w^{i s + u_i}|^2 / p^2 with u_i the prefix sums.
std::vector<double> analytic_shift_distribution(Prime p, const std::vector<int>& inner_products);

}  // namespace qadv::qsim
