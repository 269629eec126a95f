#pragma once

#include "qadv/anf.hpp"
#include "qadv/core.hpp"
#include "qadv/dtree.hpp"

namespace qadv::classical {

struct WidthMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class BptfKind { OrType, AndType };

// Unbounded fan-in gate: OR-type computes P(x) on weight <= k, 1 above;
// AND-type computes P(x) on weight >= fan_in - k, 0 below.
struct BptfGate {
  BptfKind kind = BptfKind::OrType;
  int k = 0;
  size_t fan_in = 0;
  Anf poly;  // over the gate's local wires, degree <= k effective

  BptfGate() = default;
  BptfGate(BptfKind kind_, int k_, size_t fan_in_, Anf p);
};

uint8_t eval_bptf_gate(const BptfGate& g, uint64_t wires, size_t width);

// Layered circuit. Wires are numbered: inputs 0..n-1, then one wire per gate
// in layer order. Gate inputs reference earlier wires only.
struct BptfCircuit {
  size_t n_inputs = 0;
  struct PlacedGate {
    BptfGate gate;
    std::vector<size_t> inputs;  // wire ids
    size_t layer = 0;
  };
  std::vector<PlacedGate> gates;
  std::vector<size_t> outputs;  // wire ids of the output bits

  size_t depth() const;
  void validate() const;
};

std::vector<uint8_t> eval_circuit(const BptfCircuit& c, uint64_t x);

// Substitutes fixed inputs; gates whose remaining support is forced constant
// are folded away.
BptfCircuit restrict_circuit(const BptfCircuit& c, const Restriction& rho);

// True iff the XOR of the output-bit truth tables matches the required PHP
// output parity floor(|x|/2) mod 2 (the even-mapping polynomial
// XOR_{i<j} x_i x_j) on every even-weight input.
bool valid_parity_check(const BptfCircuit& c, size_t n);

// Truth table of one output wire over all 2^n inputs.
std::vector<uint8_t> output_truth_table(const BptfCircuit& c, size_t out_idx);

// Exact PHP solver used as the constructed witness: outputs all n choose 2
// products x_i x_j, so the output parity is the even mapping.
BptfCircuit exact_php_parity_circuit(size_t n);

// Greedy maximum-degree-removal independent set in the output-block
// intersection graph (blocks share an edge when they read a common input
// block). Returns one representative input block per chosen output block.
struct BlockIndependence {
  std::vector<size_t> output_blocks;  // independent set, vertex ids
  std::vector<size_t> input_blocks;   // representatives, deduplicated
  size_t turan_lower_bound = 0;       // ceil(V^2 / (V + 2E))
};
BlockIndependence block_independent_set(const BptfCircuit& c, size_t block_size);

// Random depth-2 bPTF[k] over AND clauses, for the switching experiments:
// the top gate polynomial is a random ANF of degree <= k over the first
// min(fan_in, 16) wires.
BptfGate random_bptf_gate(BptfKind kind, int k, size_t fan_in, Rng& rng);

}  // namespace qadv::classical
