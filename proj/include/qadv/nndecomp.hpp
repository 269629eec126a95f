#pragma once

#include "qadv/bptf.hpp"
#include "qadv/core.hpp"

#include <functional>

namespace qadv::nn {

// Weight-symmetric activation discretized in steps of w, realized as one
// parallel layer of OR-type bPTF[k] gates with the always-1 tail above k.
struct ActivationSpec {
  std::function<double(int)> f;  // Hamming weight -> nonnegative real
  int k = 0;                     // degree bound / activation region
  double w = 1.0;                // discretization step
  size_t n = 0;                  // input width
};

ActivationSpec relu_spec(double centre, double w, int k, size_t n);

struct KReluGate {
  // fires on weights in [0,k] whose discretized value reaches step i, and on
  // every weight above k (the tail)
  std::vector<uint8_t> fires_at_weight;  // indexed 0..k
};

struct Decomposition {
  size_t l = 0;  // gate count, floor(max f / w)
  std::vector<KReluGate> gates;
};

Decomposition decompose_activation(const ActivationSpec& spec);

// Sum of w over firing gates.
double eval_krelu(const Decomposition& d, const ActivationSpec& spec, uint64_t x);

// The same gate layer materialized as OR-type bPTF gates whose polynomial is
// the symmetric weight-threshold indicator (for small n).
classical::BptfCircuit krelu_as_bptf(const Decomposition& d, const ActivationSpec& spec);

}  // namespace qadv::nn
