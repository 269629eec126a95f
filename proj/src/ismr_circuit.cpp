#include "qadv/ismr_circuit.hpp"

#include <bit>
#include <cmath>
#include <map>

namespace qadv::qsim {

// ---- PHP -------------------------------------------------------------------

DitString php_correction_bits(const DitString& x, const GraphSpec& g, const DitString& edges) {
  std::vector<uint8_t> bits;
  for (size_t i = 0; i < g.n_vertices; ++i) {
    for (size_t e : g.path_edge_indices(i)) bits.push_back(x[i] & edges[e]);
  }
  return DitString(Prime(2), std::move(bits));
}

static void apply_php_rotations(QupitState& joint, const DitString& x) {
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i]) apply_gate(joint, gate_rz(i, 1));  // S gate: diag(1, i)
}

DitString run_qubit_php_circuit(const DitString& x, const GraphSpec& g, Rng& rng) {
  if (x.weight() % 2 != 0) throw OddInput("run_qubit_php_circuit: |x| must be even");
  if (x.size() != g.n_vertices) throw LengthMismatch("run_qubit_php_circuit: |x| vs graph");
  GpmRecord rec = build_gpm_state(Prime(2), g, rng);
  QupitState s = std::move(rec.state);
  apply_php_rotations(s, x);
  for (size_t i = 0; i < g.n_vertices; ++i) apply_gate(s, gate_fourier(i));
  std::vector<uint8_t> raw(g.n_vertices);
  for (size_t i = 0; i < g.n_vertices; ++i) raw[i] = measure_site(s, i, rng);
  DitString y(Prime(2), raw);
  DitString corr = php_correction_bits(x, g, rec.edge_outcomes);
  std::vector<uint8_t> out = y.digits;
  out.insert(out.end(), corr.digits.begin(), corr.digits.end());
  return DitString(Prime(2), std::move(out));
}

double php_invalid_mass_exact(const DitString& x, const GraphSpec& g) {
  if (x.weight() % 2 != 0) throw OddInput("php_invalid_mass_exact: |x| must be even");
  Prime p2(2);
  size_t n = g.n_vertices, ne = g.edges.size();
  g.validate();
  QupitState joint(p2, n + ne);
  for (size_t v = 0; v < n; ++v) apply_gate(joint, gate_fourier(v));
  for (size_t e = 0; e < ne; ++e) {
    apply_gate(joint, gate_sum(g.edges[e].first, n + e));
    apply_gate(joint, gate_sum(g.edges[e].second, n + e));
  }
  // Deferring the edge measurement commutes with everything that follows:
  // the INV layer and the rotations act on vertex sites only.
  for (size_t v = 0; v < n; ++v)
    if (g.depth_of(v) % 2 == 1) apply_gate(joint, gate_inv(v));
  apply_php_rotations(joint, x);
  for (size_t v = 0; v < n; ++v) apply_gate(joint, gate_fourier(v));

  int target = ismr_residue(IsmrInstance(p2, x.size(), 1), x);
  double invalid = 0.0;
  std::vector<uint8_t> edges(ne);
  for (size_t idx = 0; idx < joint.dim(); ++idx) {
    double pr = std::norm(joint.amp[idx]);
    if (pr == 0.0) continue;
    long long wraw = 0;
    for (size_t v = 0; v < n; ++v) wraw += joint.digit_of(idx, v);
    for (size_t e = 0; e < ne; ++e) edges[e] = joint.digit_of(idx, n + e);
    long long wcorr = php_correction_bits(x, g, DitString(p2, edges)).weight();
    if (mod_p(wraw + wcorr, 2) != target) invalid += pr;
  }
  return invalid;
}

// ---- qupit circuit ----------------------------------------------------------

int correction_weight(Prime p, const DitString& x, const DitString& z) {
  long long acc = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    if (!x[i]) continue;
    int v = (z[i] + 1) % p.value;
    long long t = 1;
    for (int e = 0; e < p.value - 1; ++e) t = (t * v) % p.value;
    acc += t;
  }
  return mod_p(acc, p.value);
}

DitString qupit_correction_dits(Prime p, const DitString& x, const GraphSpec& g,
                                const DitString& edges, const DitString* teleport_shift) {
  std::vector<uint8_t> out;
  for (size_t i = 0; i < g.n_vertices; ++i) {
    auto path = g.path_edge_indices(i);
    size_t len = path.size();
    std::vector<int> addends;
    for (size_t t = 0; t < len; ++t) {
      int sign = ((t + len) % 2 == 0) ? 1 : -1;
      addends.push_back(mod_p(sign * static_cast<long long>(edges[path[t]]), p.value));
    }
    addends.push_back(0);  // z at the root
    if (teleport_shift) addends.push_back((*teleport_shift)[i]);
    addends.push_back(1);
    // all (p-1)-fold ordered products, appended without simplification
    size_t k = static_cast<size_t>(p.value - 1);
    std::vector<size_t> tuple(k, 0);
    while (true) {
      long long prod = x[i];
      for (size_t t = 0; t < k; ++t) prod = (prod * addends[tuple[t]]) % p.value;
      out.push_back(static_cast<uint8_t>(mod_p(prod, p.value)));
      size_t pos = 0;
      while (pos < k && ++tuple[pos] == addends.size()) tuple[pos++] = 0;
      if (pos == k) break;
    }
  }
  return DitString(p, std::move(out));
}

QupitRunResult run_qupit_ismr_circuit(Prime p, const DitString& x, const GraphSpec& g, Rng& rng) {
  if (x.weight() % p.value != 0)
    throw ResidueViolation("run_qupit_ismr_circuit: |x| mod p != 0");
  if (x.size() != g.n_vertices) throw LengthMismatch("run_qupit_ismr_circuit: |x| vs graph");
  GpmRecord rec = build_gpm_state(p, g, rng);
  QupitState s = std::move(rec.state);
  for (size_t i = 0; i < g.n_vertices; ++i)
    if (x[i]) apply_gate(s, gate_rz(i, 1));
  for (size_t i = 0; i < g.n_vertices; ++i) apply_gate(s, gate_fourier(i));
  std::vector<uint8_t> raw(g.n_vertices);
  for (size_t i = 0; i < g.n_vertices; ++i) raw[i] = measure_site(s, i, rng);
  return {DitString(p, std::move(raw)), qupit_correction_dits(p, x, g, rec.edge_outcomes)};
}

std::vector<double> analytic_shift_distribution(Prime p, const std::vector<int>& a) {
  int pp = p.value;
  if (a.size() != static_cast<size_t>(pp - 1))
    throw LengthMismatch("analytic_shift_distribution: need p-1 inner products");
  std::vector<long long> u(pp, 0);
  for (int i = 1; i < pp; ++i) u[i] = u[i - 1] + a[i - 1];
  std::vector<double> pr(pp, 0.0);
  for (int s = 0; s < pp; ++s) {
    cplx amp = 0.0;
    for (int i = 0; i < pp; ++i) amp += root_of_unity(static_cast<long long>(i) * s + u[i], pp);
    pr[s] = std::norm(amp) / (pp * pp);
  }
  return pr;
}

std::vector<double> shift_law_from_reference(Prime p, const DitString& x, const DitString& z) {
  int pp = p.value;
  // a_i = <x, (z^{+i})^{p-1}> mod p; prefix sums follow the count identity
  std::vector<int> a(pp - 1, 0);
  for (int i = 1; i < pp; ++i) {
    long long s = 0;
    for (size_t k = 0; k < x.size(); ++k) {
      if (!x[k]) continue;
      int v = (z[k] + i) % pp;
      long long t = 1;
      for (int e = 0; e < pp - 1; ++e) t = (t * v) % pp;
      s += t;
    }
    a[i - 1] = mod_p(s, pp);
  }
  return analytic_shift_distribution(p, a);
}

std::vector<double> deviation_law_from_reference(Prime p, const DitString& x, const DitString& z) {
  auto shift = shift_law_from_reference(p, x, z);
  int w = correction_weight(p, x, z);
  std::vector<double> dev(p.value, 0.0);
  for (int s = 0; s < p.value; ++s) dev[(s + w) % p.value] += shift[s];
  return dev;
}

std::vector<double> qupit_exact_deviation_law(Prime p, const DitString& x, const GraphSpec& g) {
  g.validate();
  int pp = p.value;
  size_t n = g.n_vertices, ne = g.edges.size();
  double total = std::pow(static_cast<double>(pp), static_cast<double>(ne));
  if (total > 4e6) throw TooLarge("qupit_exact_deviation_law: too many edge branches");

  // per-vertex signed path table, so each branch is O(n * depth + p^2)
  std::vector<std::vector<std::pair<size_t, int>>> paths(n);
  for (size_t v = 0; v < n; ++v) {
    auto pe = g.path_edge_indices(v);
    size_t len = pe.size();
    for (size_t t = 0; t < len; ++t)
      paths[v].push_back({pe[t], ((t + len) % 2 == 0) ? 1 : -1});
  }
  // Fermat powers table: v^{p-1} mod p
  std::vector<int> pow_tab(pp);
  for (int v = 0; v < pp; ++v) {
    long long t = 1;
    for (int e = 0; e < pp - 1; ++e) t = (t * v) % pp;
    pow_tab[v] = static_cast<int>(t);
  }
  std::vector<cplx> omega(pp);
  for (int k = 0; k < pp; ++k) omega[k] = root_of_unity(k, pp);

  std::vector<double> law(pp, 0.0);
  std::vector<uint8_t> e(ne, 0);
  std::vector<int> z(n, 0);
  uint64_t count = static_cast<uint64_t>(total);
  double w = 1.0 / total;
  for (uint64_t idx = 0; idx < count; ++idx) {
    uint64_t vv = idx;
    for (size_t i = 0; i < ne; ++i) {
      e[i] = static_cast<uint8_t>(vv % pp);
      vv /= pp;
    }
    for (size_t v = 0; v < n; ++v) {
      long long acc = 0;
      for (auto [ei, sg] : paths[v]) acc += sg * static_cast<long long>(e[ei]);
      z[v] = mod_p(acc, pp);
    }
    // a_i = <x,(z^{+i})^{p-1}>, u_i prefix sums, correction weight a_1
    std::vector<int> u(pp, 0);
    for (int i = 1; i < pp; ++i) {
      long long s = 0;
      for (size_t k = 0; k < n; ++k)
        if (x[k]) s += pow_tab[(z[k] + i) % pp];
      u[i] = mod_p(u[i - 1] + s, pp);
    }
    int cw = 0;
    {
      long long s = 0;
      for (size_t k = 0; k < n; ++k)
        if (x[k]) s += pow_tab[(z[k] + 1) % pp];
      cw = mod_p(s, pp);
    }
    for (int s = 0; s < pp; ++s) {
      cplx amp = 0.0;
      for (int i = 0; i < pp; ++i) amp += omega[(i * s + u[i]) % pp];
      law[(s + cw) % pp] += w * std::norm(amp) / (pp * pp);
    }
  }
  return law;
}

std::vector<double> qupit_exact_deviation_law_sv(Prime p, const DitString& x, const GraphSpec& g) {
  if (x.weight() % p.value != 0)
    throw ResidueViolation("qupit_exact_deviation_law_sv: |x| mod p != 0");
  g.validate();
  size_t n = g.n_vertices, ne = g.edges.size();
  QupitState joint(p, n + ne);
  for (size_t v = 0; v < n; ++v) apply_gate(joint, gate_fourier(v));
  for (size_t e = 0; e < ne; ++e) {
    apply_gate(joint, gate_sum(g.edges[e].first, n + e));
    apply_gate(joint, gate_sum(g.edges[e].second, n + e));
  }
  for (size_t v = 0; v < n; ++v)
    if (g.depth_of(v) % 2 == 1) apply_gate(joint, gate_inv(v));
  for (size_t i = 0; i < n; ++i)
    if (x[i]) apply_gate(joint, gate_rz(i, 1));
  for (size_t v = 0; v < n; ++v) apply_gate(joint, gate_fourier(v));

  int target = mod_p(-(x.weight() / p.value), p.value);
  std::vector<double> law(p.value, 0.0);
  std::vector<uint8_t> edges(ne);
  std::vector<int> corr_cache;  // correction weight per edge-branch index
  corr_cache.assign(static_cast<size_t>(std::pow(p.value, static_cast<double>(ne))), -1);
  for (size_t idx = 0; idx < joint.dim(); ++idx) {
    double pr = std::norm(joint.amp[idx]);
    if (pr < 1e-300) continue;
    long long wraw = 0;
    for (size_t v = 0; v < n; ++v) wraw += joint.digit_of(idx, v);
    size_t ebranch = 0, stride = 1;
    for (size_t e = 0; e < ne; ++e) {
      edges[e] = joint.digit_of(idx, n + e);
      ebranch += edges[e] * stride;
      stride *= static_cast<size_t>(p.value);
    }
    if (corr_cache[ebranch] < 0) {
      DitString estr(p, edges);
      corr_cache[ebranch] =
          mod_p(qupit_correction_dits(p, x, g, estr).weight(), p.value);
    }
    int d = mod_p(wraw + corr_cache[ebranch] - target, p.value);
    law[d] += pr;
  }
  return law;
}

double correlation_of_law(Prime p, const std::vector<double>& dev_law) {
  double c = 0.0;
  for (int d = 0; d < p.value; ++d) c += dev_law[d] * root_of_unity(d, p.value).real();
  return c;
}

QupitAverages qupit_input_averaged(Prime p, size_t n, GraphKind kind) {
  if (n > 24) throw TooLarge("qupit_input_averaged: n too large for input enumeration");
  GraphSpec g = GraphSpec::make(kind, n);
  QupitAverages out;
  double corr = 0.0, succ = 0.0;
  size_t count = 0;
  // With z_root pinned to 0 and the other z entries exchangeable, the branch
  // average depends on x only through (|x|, root in supp(x)); memoize per class.
  std::map<std::pair<long long, int>, std::vector<double>> memo;
  for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
    if (static_cast<int>(std::popcount(mask)) % p.value != 0) continue;
    std::vector<uint8_t> bits(n);
    for (size_t i = 0; i < n; ++i) bits[i] = (mask >> i) & 1;
    DitString x(Prime(2), bits);
    auto key = std::make_pair(x.weight(), static_cast<int>(bits[g.root]));
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, qupit_exact_deviation_law(p, x, g)).first;
    corr += correlation_of_law(p, it->second);
    succ += it->second[0];
    count += 1;
  }
  out.correlation = corr / count;
  out.success = succ / count;
  out.inputs = count;
  return out;
}

}  // namespace qadv::qsim
