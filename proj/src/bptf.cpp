#include "qadv/bptf.hpp"

#include <algorithm>
#include <bit>

namespace qadv::classical {

BptfGate::BptfGate(BptfKind kind_, int k_, size_t fan_in_, Anf p)
    : kind(kind_), k(k_), fan_in(fan_in_), poly(std::move(p)) {
  if (k < 0) throw std::invalid_argument("BptfGate: k >= 0");
}

uint8_t eval_bptf_gate(const BptfGate& g, uint64_t wires, size_t width) {
  if (width != g.fan_in) throw WidthMismatch("eval_bptf_gate: width != fan_in");
  int w = std::popcount(wires);
  if (g.kind == BptfKind::OrType) {
    if (w > g.k) return 1;
    return g.poly.evaluate(wires);
  }
  if (w < static_cast<int>(g.fan_in) - g.k) return 0;
  return g.poly.evaluate(wires);
}

size_t BptfCircuit::depth() const {
  size_t d = 0;
  for (const auto& g : gates) d = std::max(d, g.layer + 1);
  return d;
}

void BptfCircuit::validate() const {
  size_t wire = n_inputs;
  for (const auto& g : gates) {
    for (size_t in : g.inputs)
      if (in >= wire) throw std::invalid_argument("BptfCircuit: forward wire reference");
    if (g.inputs.size() != g.gate.fan_in)
      throw WidthMismatch("BptfCircuit: gate fan-in mismatch");
    wire += 1;
  }
  for (size_t o : outputs)
    if (o >= wire) throw std::invalid_argument("BptfCircuit: bad output wire");
}

std::vector<uint8_t> eval_circuit(const BptfCircuit& c, uint64_t x) {
  std::vector<uint8_t> wires(c.n_inputs + c.gates.size());
  for (size_t i = 0; i < c.n_inputs; ++i) wires[i] = (x >> i) & 1;
  for (size_t gi = 0; gi < c.gates.size(); ++gi) {
    const auto& g = c.gates[gi];
    uint64_t in = 0;
    for (size_t j = 0; j < g.inputs.size(); ++j)
      in |= static_cast<uint64_t>(wires[g.inputs[j]]) << j;
    wires[c.n_inputs + gi] = eval_bptf_gate(g.gate, in, g.inputs.size());
  }
  std::vector<uint8_t> out(c.outputs.size());
  for (size_t i = 0; i < c.outputs.size(); ++i) out[i] = wires[c.outputs[i]];
  return out;
}

BptfCircuit restrict_circuit(const BptfCircuit& c, const Restriction& rho) {
  if (rho.marks.size() != c.n_inputs)
    throw LengthMismatch("restrict_circuit: restriction size");
  // alive inputs keep their relative order and get new indices
  BptfCircuit out;
  std::vector<int> new_input(c.n_inputs, -1);
  for (size_t i = 0; i < c.n_inputs; ++i)
    if (!rho.fixed(i)) new_input[i] = static_cast<int>(out.n_inputs++);

  // wire id -> (constant or new wire). constants fold through gates whose
  // output no longer depends on anything alive.
  struct WireVal {
    bool is_const = false;
    uint8_t value = 0;
    size_t wire = 0;
  };
  std::vector<WireVal> map(c.n_inputs + c.gates.size());
  for (size_t i = 0; i < c.n_inputs; ++i) {
    if (rho.fixed(i))
      map[i] = {true, static_cast<uint8_t>(rho.marks[i]), 0};
    else
      map[i] = {false, 0, static_cast<size_t>(new_input[i])};
  }
  size_t next_wire = out.n_inputs;
  for (size_t gi = 0; gi < c.gates.size(); ++gi) {
    const auto& g = c.gates[gi];
    std::vector<size_t> alive;
    uint64_t fixed_mask = 0, fixed_val = 0;
    for (size_t j = 0; j < g.inputs.size(); ++j) {
      const WireVal& wv = map[g.inputs[j]];
      if (wv.is_const) {
        fixed_mask |= uint64_t(1) << j;
        fixed_val |= uint64_t(wv.value) << j;
      } else {
        alive.push_back(j);
      }
    }
    if (alive.empty()) {
      uint8_t v = eval_bptf_gate(g.gate, fixed_val, g.inputs.size());
      map[c.n_inputs + gi] = {true, v, 0};
      continue;
    }
    // keep the gate; wire in the constants by shrinking the polynomial
    BptfGate ng = g.gate;
    ng.fan_in = alive.size();
    // weight branch depends on the live weight plus the fixed weight
    int fixed_w = std::popcount(fixed_val);
    if (g.gate.kind == BptfKind::OrType)
      ng.k = g.gate.k - fixed_w;  // may go negative: gate fires on any live weight > k
    else
      ng.k = g.gate.k - (static_cast<int>(g.inputs.size() - alive.size()) - fixed_w);
    // restrict the polynomial over the local wires
    Restriction local(g.inputs.size());
    for (size_t j = 0; j < g.inputs.size(); ++j)
      if (fixed_mask & (uint64_t(1) << j))
        local.marks[j] = (fixed_val >> j) & 1 ? Restriction::One : Restriction::Zero;
    Anf np;
    for (uint64_t m : g.gate.poly.monomials) {
      uint64_t fm = m & fixed_mask;
      if ((fm & fixed_val) != fm) continue;  // a fixed-zero variable kills it
      uint64_t live = 0;
      for (size_t a = 0; a < alive.size(); ++a)
        if (m & (uint64_t(1) << alive[a])) live |= uint64_t(1) << a;
      np.toggle(live);
    }
    ng.poly = np;
    BptfCircuit::PlacedGate pg;
    pg.gate = std::move(ng);
    pg.layer = g.layer;
    for (size_t j : alive) pg.inputs.push_back(map[g.inputs[j]].wire);
    out.gates.push_back(std::move(pg));
    map[c.n_inputs + gi] = {false, 0, next_wire++};
  }
  for (size_t o : c.outputs) {
    const WireVal& wv = map[o];
    if (wv.is_const) {
      // keep the arity: emit a constant gate
      BptfCircuit::PlacedGate pg;
      pg.gate = BptfGate(BptfKind::OrType, 0, 0, Anf::constant(wv.value));
      pg.layer = 0;
      out.gates.push_back(std::move(pg));
      out.outputs.push_back(next_wire++);
    } else {
      out.outputs.push_back(wv.wire);
    }
  }
  return out;
}

std::vector<uint8_t> output_truth_table(const BptfCircuit& c, size_t out_idx) {
  if (c.n_inputs > 20) throw TooLarge("output_truth_table: n <= 20");
  std::vector<uint8_t> t(size_t(1) << c.n_inputs);
  for (uint64_t x = 0; x < t.size(); ++x) t[x] = eval_circuit(c, x)[out_idx];
  return t;
}

bool valid_parity_check(const BptfCircuit& c, size_t n) {
  if (c.n_inputs != n) throw LengthMismatch("valid_parity_check: input count");
  if (n > 20) throw TooLarge("valid_parity_check: n <= 20");
  for (uint64_t x = 0; x < (uint64_t(1) << n); ++x) {
    int w = std::popcount(x);
    if (w % 2 != 0) continue;
    auto out = eval_circuit(c, x);
    uint8_t parity = 0;
    for (uint8_t b : out) parity ^= b;
    uint8_t need = static_cast<uint8_t>((w / 2) % 2);  // floor(|x|/2) mod 2
    if (parity != need) return false;
  }
  return true;
}

BptfCircuit exact_php_parity_circuit(size_t n) {
  BptfCircuit c;
  c.n_inputs = n;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      Anf prod = Anf::variable(0) & Anf::variable(1);
      BptfCircuit::PlacedGate pg;
      pg.gate = BptfGate(BptfKind::OrType, 2, 2, prod);
      pg.inputs = {i, j};
      pg.layer = 0;
      c.gates.push_back(std::move(pg));
      c.outputs.push_back(c.n_inputs + c.gates.size() - 1);
    }
  return c;
}

BlockIndependence block_independent_set(const BptfCircuit& c, size_t block_size) {
  c.validate();
  size_t nblocks_in = (c.n_inputs + block_size - 1) / block_size;
  size_t m = c.outputs.size() / block_size + ((c.outputs.size() % block_size) ? 1 : 0);

  // input-block support of every wire
  std::vector<std::vector<bool>> support(c.n_inputs + c.gates.size(),
                                         std::vector<bool>(nblocks_in, false));
  for (size_t i = 0; i < c.n_inputs; ++i) support[i][i / block_size] = true;
  for (size_t gi = 0; gi < c.gates.size(); ++gi)
    for (size_t in : c.gates[gi].inputs)
      for (size_t b = 0; b < nblocks_in; ++b)
        if (support[in][b]) support[c.n_inputs + gi][b] = true;

  std::vector<std::vector<bool>> block_support(m, std::vector<bool>(nblocks_in, false));
  for (size_t o = 0; o < c.outputs.size(); ++o)
    for (size_t b = 0; b < nblocks_in; ++b)
      if (support[c.outputs[o]][b]) block_support[o / block_size][b] = true;

  // intersection graph on output blocks
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
  size_t edges = 0;
  for (size_t a = 0; a < m; ++a)
    for (size_t b = a + 1; b < m; ++b) {
      bool share = false;
      for (size_t k = 0; k < nblocks_in && !share; ++k)
        share = block_support[a][k] && block_support[b][k];
      if (share) {
        adj[a][b] = adj[b][a] = true;
        ++edges;
      }
    }

  // greedy: repeatedly delete a maximum-degree vertex; lowest index first
  std::vector<bool> removed(m, false);
  while (true) {
    size_t best = m, best_deg = 0;
    for (size_t v = 0; v < m; ++v) {
      if (removed[v]) continue;
      size_t deg = 0;
      for (size_t w = 0; w < m; ++w)
        if (!removed[w] && adj[v][w]) ++deg;
      if (deg > best_deg) {
        best_deg = deg;
        best = v;
      }
    }
    if (best == m || best_deg == 0) break;
    removed[best] = true;
  }

  BlockIndependence out;
  for (size_t v = 0; v < m; ++v)
    if (!removed[v]) out.output_blocks.push_back(v);
  std::vector<bool> seen(nblocks_in, false);
  for (size_t v : out.output_blocks)
    for (size_t k = 0; k < nblocks_in; ++k)
      if (block_support[v][k]) {
        if (!seen[k]) {
          seen[k] = true;
          out.input_blocks.push_back(k);
        }
        break;  // one representative per output block
      }
  out.turan_lower_bound =
      static_cast<size_t>((m * m + (m + 2 * edges) - 1) / (m + 2 * edges));
  return out;
}

BptfGate random_bptf_gate(BptfKind kind, int k, size_t fan_in, Rng& rng) {
  size_t poly_vars = std::min<size_t>(fan_in, 16);
  Anf poly;
  // random ANF of degree <= k: include each monomial of degree <= k w.p. 1/2
  std::vector<uint64_t> candidates;
  for (uint64_t m = 0; m < (uint64_t(1) << poly_vars); ++m)
    if (std::popcount(m) <= k) candidates.push_back(m);
  for (uint64_t m : candidates)
    if (rng() & 1) poly.toggle(m);
  return BptfGate(kind, k, fan_in, std::move(poly));
}

}  // namespace qadv::classical
