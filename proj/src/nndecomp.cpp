#include "qadv/nndecomp.hpp"

#include <bit>
#include <cmath>

namespace qadv::nn {

ActivationSpec relu_spec(double centre, double w, int k, size_t n) {
  ActivationSpec s;
  s.f = [centre](int weight) { return std::max(0.0, weight - centre); };
  s.k = k;
  s.w = w;
  s.n = n;
  return s;
}

Decomposition decompose_activation(const ActivationSpec& spec) {
  if (spec.w <= 0.0) throw std::invalid_argument("decompose_activation: w > 0");
  if (spec.k > static_cast<int>(spec.n)) throw std::invalid_argument("k <= n required");
  double fmax = 0.0;
  for (int t = 0; t <= spec.k; ++t) {
    double v = spec.f(t);
    if (v < 0.0) throw std::invalid_argument("activation must be nonnegative");
    fmax = std::max(fmax, v);
  }
  Decomposition d;
  d.l = static_cast<size_t>(std::floor(fmax / spec.w));
  for (size_t i = 1; i <= d.l; ++i) {
    KReluGate g;
    g.fires_at_weight.resize(spec.k + 1);
    for (int t = 0; t <= spec.k; ++t)
      g.fires_at_weight[t] = spec.f(t) >= static_cast<double>(i) * spec.w ? 1 : 0;
    d.gates.push_back(std::move(g));
  }
  return d;
}

double eval_krelu(const Decomposition& d, const ActivationSpec& spec, uint64_t x) {
  int weight = std::popcount(x);
  size_t firing = 0;
  for (const auto& g : d.gates) {
    if (weight > spec.k)
      firing += 1;  // tail: always 1
    else
      firing += g.fires_at_weight[weight];
  }
  return spec.w * static_cast<double>(firing);
}

classical::BptfCircuit krelu_as_bptf(const Decomposition& d, const ActivationSpec& spec) {
  if (spec.n > 16) throw TooLarge("krelu_as_bptf: n <= 16 for the ANF expansion");
  classical::BptfCircuit c;
  c.n_inputs = spec.n;
  std::vector<size_t> all(spec.n);
  for (size_t i = 0; i < spec.n; ++i) all[i] = i;
  for (const auto& g : d.gates) {
    // truth table of the symmetric indicator on weights <= k; tail handled by
    // the OR-type branch
    std::vector<uint8_t> tt(size_t(1) << spec.n);
    for (uint64_t x = 0; x < tt.size(); ++x) {
      int w = std::popcount(x);
      tt[x] = (w <= spec.k) ? g.fires_at_weight[w] : 1;
    }
    classical::BptfCircuit::PlacedGate pg;
    pg.gate = classical::BptfGate(classical::BptfKind::OrType, spec.k, spec.n,
                                  classical::anf_from_truth_table(tt, static_cast<int>(spec.n)));
    pg.inputs = all;
    pg.layer = 0;
    c.gates.push_back(std::move(pg));
    c.outputs.push_back(c.n_inputs + c.gates.size() - 1);
  }
  return c;
}

}  // namespace qadv::nn
