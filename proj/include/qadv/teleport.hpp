#pragma once

#include "qadv/core.hpp"
#include "qadv/gpm.hpp"
#include "qadv/ismr_circuit.hpp"
#include "qadv/qsim.hpp"

namespace qadv::qsim {

// |T^{1/p}> = Rz(2 pi/p^2) F |0> = (1/sqrt p) sum_j e^{2 pi i j/p^2} |j>.
QupitState t_magic_state(Prime p);

// One use of the non-adaptive gadget on `target`: consumes a fresh |T^{1/p}>
// ancilla, returns the measured dit c. The register ends up carrying
// Rz(2 pi/p^2) X^c |psi> (global phase aside); no correction is applied.
uint8_t nonadaptive_teleport_rz(QupitState& state, size_t target, Rng& rng);

// Residual identity behind the gadget:
//   X^c GRz(theta1) GRzSet(theta2, S_c) = Rz(phi)^dag X^c Rz(phi),
// with theta1 = -2 pi c/p^2, theta2 = 2 pi/p, S_c = {p-c,...,p-1}, phi = 2 pi/p^2.
// Returns the max elementwise deviation between the two sides.
double gadget_residual_identity_error(Prime p, int c);

// Left-hand side of the identity as a dense matrix.
std::vector<std::vector<cplx>> gadget_residual_matrix(Prime p, int c);

// bit i = 1 iff a_i = b, by the field formula ((a + (-b)^n)^{p-1} - 1)^{p-1}.
DitString delta_vector(const DitString& a, uint8_t b);

// Qupit ISMR circuit with every input-controlled rotation realized through the
// gadget. force_c, when given, rigs every gadget outcome (testing hook).
QupitRunResult run_clifford_plus_T_circuit(Prime p, const DitString& x, const GraphSpec& g,
                                           Rng& rng, const DitString* force_c = nullptr);

// Deviation law with exhaustive averaging over edge branches and gadget
// outcomes c (uniform per rotated site).
std::vector<double> clifford_t_exact_deviation_law(Prime p, const DitString& x,
                                                   const GraphSpec& g);

// Statevector oracle for one (edge branch, c) assignment, running the actual
// gadget unitaries; used to validate the closed-form law.
std::vector<double> clifford_t_branch_law_sv(Prime p, const DitString& x, const GraphSpec& g,
                                             const DitString& edges, const DitString& c);

}  // namespace qadv::qsim
