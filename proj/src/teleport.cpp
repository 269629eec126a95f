#include "qadv/teleport.hpp"

#include <cmath>
#include <numbers>

namespace qadv::qsim {

QupitState t_magic_state(Prime p) {
  QupitState s(p, 1);
  apply_gate(s, gate_fourier(0));
  apply_gate(s, gate_rz(0, 1));
  return s;
}

uint8_t nonadaptive_teleport_rz(QupitState& state, size_t target, Rng& rng) {
  size_t p = static_cast<size_t>(state.p.value);
  size_t n = state.n;
  if (target >= n) throw TargetOutOfRange("nonadaptive_teleport_rz: target");
  // attach the advice qupit as site n
  QupitState advice = t_magic_state(state.p);
  QupitState joint(state.p, n + 1);
  for (size_t idx = 0; idx < state.dim(); ++idx)
    for (size_t t = 0; t < p; ++t)
      joint.amp[idx + t * state.dim()] = state.amp[idx] * advice.amp[t];
  // F^2 = INV on the data register, SUM from the advice, measure the data site
  apply_gate(joint, gate_inv(target));
  apply_gate(joint, gate_sum(n, target));
  uint8_t c = measure_site(joint, target, rng);
  // the output now lives on site n; move it back into `target`
  QupitState out(state.p, n);
  size_t tstride = 1;
  for (size_t i = 0; i < target; ++i) tstride *= p;
  size_t astride = state.dim();
  for (size_t idx = 0; idx < joint.dim(); ++idx) {
    if (joint.digit_of(idx, target) != c) continue;
    size_t a = joint.digit_of(idx, n);
    size_t rest = idx % astride;
    rest -= c * tstride;           // clear the measured digit
    out.amp[rest + a * tstride] = joint.amp[idx];
  }
  out.renormalize();
  state = std::move(out);
  return c;
}

std::vector<std::vector<cplx>> gadget_residual_matrix(Prime p, int c) {
  int pp = p.value;
  double phi = 2.0 * std::numbers::pi / (pp * pp);
  std::vector<int> sc;
  for (int v = pp - mod_p(c, pp); v < pp; ++v) sc.push_back(v);
  auto m = gate_matrix(p, gate_grz_set(0, 2.0 * std::numbers::pi / pp, sc));
  m = mat_mul(gate_matrix(p, gate_grz(0, -mod_p(c, pp) * phi)), m);
  m = mat_mul(gate_matrix(p, gate_x(0, c)), m);
  return m;
}

double gadget_residual_identity_error(Prime p, int c) {
  int pp = p.value;
  auto lhs = gadget_residual_matrix(p, c);
  // Rz(phi)^dag X^c Rz(phi)
  auto rz = gate_matrix(p, gate_rz(0, 1));
  std::vector<std::vector<cplx>> rzd(pp, std::vector<cplx>(pp, 0.0));
  for (int j = 0; j < pp; ++j) rzd[j][j] = std::conj(rz[j][j]);
  auto rhs = mat_mul(rzd, mat_mul(gate_matrix(p, gate_x(0, c)), rz));
  return mat_dist(lhs, rhs);
}

DitString delta_vector(const DitString& a, uint8_t b) {
  int p = a.p.value;
  std::vector<uint8_t> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    long long t = mod_p(static_cast<long long>(a[i]) - b, p);
    long long s = 1;
    for (int e = 0; e < p - 1; ++e) s = (s * t) % p;   // (a-b)^{p-1}
    s = mod_p(s - 1, p);
    long long r = 1;
    for (int e = 0; e < p - 1; ++e) r = (r * s) % p;   // (...)^{p-1}
    out[i] = static_cast<uint8_t>(r);
    if (out[i] != (a[i] == b ? 1 : 0))
      throw std::logic_error("delta_vector: field formula disagrees with comparison");
  }
  return DitString(Prime(2), std::move(out));
}

QupitRunResult run_clifford_plus_T_circuit(Prime p, const DitString& x, const GraphSpec& g,
                                           Rng& rng, const DitString* force_c) {
  if (x.weight() % p.value != 0)
    throw ResidueViolation("run_clifford_plus_T_circuit: |x| mod p != 0");
  GpmRecord rec = build_gpm_state(p, g, rng);
  QupitState s = std::move(rec.state);
  std::vector<uint8_t> c(g.n_vertices, 0);
  for (size_t i = 0; i < g.n_vertices; ++i) {
    if (!x[i]) continue;
    if (force_c) {
      // rigged outcome: postselect the gadget branch
      QupitState advice = t_magic_state(p);
      QupitState joint(p, s.n + 1);
      for (size_t idx = 0; idx < s.dim(); ++idx)
        for (size_t t = 0; t < static_cast<size_t>(p.value); ++t)
          joint.amp[idx + t * s.dim()] = s.amp[idx] * advice.amp[t];
      apply_gate(joint, gate_inv(i));
      apply_gate(joint, gate_sum(s.n, i));
      project_site(joint, i, (*force_c)[i]);
      c[i] = (*force_c)[i];
      QupitState out(p, s.n);
      size_t tstride = 1;
      for (size_t k = 0; k < i; ++k) tstride *= static_cast<size_t>(p.value);
      for (size_t idx = 0; idx < joint.dim(); ++idx) {
        if (joint.digit_of(idx, i) != c[i]) continue;
        size_t a = joint.digit_of(idx, s.n);
        size_t rest = idx % s.dim();
        rest -= c[i] * tstride;
        out.amp[rest + a * tstride] = joint.amp[idx];
      }
      out.renormalize();
      s = std::move(out);
    } else {
      c[i] = nonadaptive_teleport_rz(s, i, rng);
    }
  }
  for (size_t i = 0; i < g.n_vertices; ++i) apply_gate(s, gate_fourier(i));
  std::vector<uint8_t> raw(g.n_vertices);
  for (size_t i = 0; i < g.n_vertices; ++i) raw[i] = measure_site(s, i, rng);
  DitString cd(p, c);
  return {DitString(p, std::move(raw)), qupit_correction_dits(p, x, g, rec.edge_outcomes, &cd)};
}

std::vector<double> clifford_t_exact_deviation_law(Prime p, const DitString& x,
                                                   const GraphSpec& g) {
  g.validate();
  int pp = p.value;
  size_t ne = g.edges.size();
  size_t nx = static_cast<size_t>(x.weight());
  double branches = std::pow(static_cast<double>(pp), static_cast<double>(ne + nx));
  if (branches > 4e6) throw TooLarge("clifford_t_exact_deviation_law: too many branches");

  std::vector<size_t> supp;
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i]) supp.push_back(i);

  std::vector<double> law(pp, 0.0);
  std::vector<uint8_t> e(ne, 0), cfull(x.size(), 0);
  uint64_t ecount = 1, ccount = 1;
  for (size_t i = 0; i < ne; ++i) ecount *= pp;
  for (size_t i = 0; i < nx; ++i) ccount *= pp;
  double w = 1.0 / (static_cast<double>(ecount) * static_cast<double>(ccount));
  for (uint64_t ei = 0; ei < ecount; ++ei) {
    uint64_t v = ei;
    for (size_t i = 0; i < ne; ++i) {
      e[i] = static_cast<uint8_t>(v % pp);
      v /= pp;
    }
    DitString z = gpm_reference_string(p, g, DitString(p, e), 0);
    for (uint64_t ci = 0; ci < ccount; ++ci) {
      uint64_t u = ci;
      std::fill(cfull.begin(), cfull.end(), 0);
      for (size_t i = 0; i < nx; ++i) {
        cfull[supp[i]] = static_cast<uint8_t>(u % pp);
        u /= pp;
      }
      // the uncorrected gadgets shift the reference to z + c on the support
      DitString zshift = z;
      for (size_t i = 0; i < x.size(); ++i)
        zshift[i] = static_cast<uint8_t>((zshift[i] + (x[i] ? cfull[i] : 0)) % pp);
      auto shift = shift_law_from_reference(p, x, zshift);
      DitString cd(p, cfull);
      int cw = mod_p(qupit_correction_dits(p, x, g, DitString(p, e), &cd).weight(), pp);
      for (int s = 0; s < pp; ++s) law[(s + cw) % pp] += w * shift[s];
    }
  }
  return law;
}

std::vector<double> clifford_t_branch_law_sv(Prime p, const DitString& x, const GraphSpec& g,
                                             const DitString& edges, const DitString& c) {
  int pp = p.value;
  // prepare the GPM branch directly from the reference string
  DitString z = gpm_reference_string(p, g, edges, 0);
  QupitState s = gpm_state_from_reference(p, z);
  Rng dummy = make_rng(0);
  for (size_t i = 0; i < g.n_vertices; ++i) {
    if (!x[i]) continue;
    // run the physical gadget postselected on c_i
    QupitState advice = t_magic_state(p);
    QupitState joint(p, s.n + 1);
    for (size_t idx = 0; idx < s.dim(); ++idx)
      for (size_t t = 0; t < static_cast<size_t>(pp); ++t)
        joint.amp[idx + t * s.dim()] = s.amp[idx] * advice.amp[t];
    apply_gate(joint, gate_inv(i));
    apply_gate(joint, gate_sum(s.n, i));
    double pr = project_site(joint, i, c[i]);
    if (pr <= 0.0) throw std::runtime_error("clifford_t_branch_law_sv: zero branch");
    QupitState out(p, s.n);
    size_t tstride = 1;
    for (size_t k = 0; k < i; ++k) tstride *= static_cast<size_t>(pp);
    for (size_t idx = 0; idx < joint.dim(); ++idx) {
      if (joint.digit_of(idx, i) != c[i]) continue;
      size_t a = joint.digit_of(idx, s.n);
      size_t rest = idx % s.dim();
      rest -= c[i] * tstride;
      out.amp[rest + a * tstride] = joint.amp[idx];
    }
    out.renormalize();
    s = std::move(out);
  }
  for (size_t i = 0; i < g.n_vertices; ++i) apply_gate(s, gate_fourier(i));

  int target = mod_p(-(x.weight() / pp), pp);
  int cw = mod_p(qupit_correction_dits(p, x, g, edges, &c).weight(), pp);
  std::vector<double> law(pp, 0.0);
  for (size_t idx = 0; idx < s.dim(); ++idx) {
    double pr = std::norm(s.amp[idx]);
    if (pr == 0.0) continue;
    long long wraw = 0;
    for (size_t v = 0; v < s.n; ++v) wraw += s.digit_of(idx, v);
    law[mod_p(wraw + cw - target, pp)] += pr;
  }
  (void)dummy;
  return law;
}

}  // namespace qadv::qsim
