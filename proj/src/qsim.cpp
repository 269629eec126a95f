#include "qadv/qsim.hpp"

#include <cmath>

namespace qadv::qsim {

static size_t pow_size(int p, size_t n) {
  double d = std::pow(static_cast<double>(p), static_cast<double>(n));
  if (d > (1 << 24)) throw TooLarge("QupitState: p^n exceeds 2^24");
  size_t r = 1;
  for (size_t i = 0; i < n; ++i) r *= static_cast<size_t>(p);
  return r;
}

QupitState::QupitState(Prime p_, size_t n_) : p(p_), n(n_), amp(pow_size(p_.value, n_), 0.0) {
  amp[0] = 1.0;
}

QupitState QupitState::basis(Prime p, const DitString& digits) {
  QupitState s(p, digits.size());
  size_t idx = 0, stride = 1;
  for (size_t i = 0; i < digits.size(); ++i) {
    idx += digits[i] * stride;
    stride *= static_cast<size_t>(p.value);
  }
  s.amp[0] = 0.0;
  s.amp[idx] = 1.0;
  return s;
}

double QupitState::norm() const {
  double s = 0.0;
  for (const cplx& a : amp) s += std::norm(a);
  return std::sqrt(s);
}

void QupitState::renormalize() {
  double nm = norm();
  if (nm == 0.0) throw std::runtime_error("QupitState: zero norm");
  for (cplx& a : amp) a /= nm;
}

uint8_t QupitState::digit_of(size_t index, size_t site) const {
  size_t stride = 1;
  for (size_t i = 0; i < site; ++i) stride *= static_cast<size_t>(p.value);
  return static_cast<uint8_t>((index / stride) % static_cast<size_t>(p.value));
}

GateSpec gate_x(size_t t, int a) { return {GateKind::PauliX, t, 0, a, 0.0, {}}; }
GateSpec gate_z(size_t t, int a) { return {GateKind::PauliZ, t, 0, a, 0.0, {}}; }
GateSpec gate_fourier(size_t t) { return {GateKind::Fourier, t, 0, 1, 0.0, {}}; }
GateSpec gate_fourier_dag(size_t t) { return {GateKind::FourierDag, t, 0, 1, 0.0, {}}; }
GateSpec gate_sum(size_t c, size_t t) { return {GateKind::Sum, t, c, 1, 0.0, {}}; }
GateSpec gate_inv(size_t t) { return {GateKind::Inv, t, 0, 1, 0.0, {}}; }
GateSpec gate_cz(size_t c, size_t t, int a) { return {GateKind::CZ, t, c, a, 0.0, {}}; }
GateSpec gate_rz(size_t t, int a) { return {GateKind::Rz, t, 0, a, 0.0, {}}; }
GateSpec gate_grz(size_t t, double th) { return {GateKind::GRz, t, 0, 1, th, {}}; }
GateSpec gate_grz_set(size_t t, double th, std::vector<int> set) {
  return {GateKind::GRzSet, t, 0, 1, th, std::move(set)};
}

// Apply a p x p matrix to one site.
static void apply_single(QupitState& s, size_t site, const std::vector<std::vector<cplx>>& m) {
  size_t p = static_cast<size_t>(s.p.value);
  size_t stride = 1;
  for (size_t i = 0; i < site; ++i) stride *= p;
  size_t block = stride * p;
  std::vector<cplx> tmp(p);
  for (size_t base = 0; base < s.dim(); base += block) {
    for (size_t off = 0; off < stride; ++off) {
      size_t i0 = base + off;
      for (size_t j = 0; j < p; ++j) tmp[j] = s.amp[i0 + j * stride];
      for (size_t r = 0; r < p; ++r) {
        cplx acc = 0.0;
        for (size_t c = 0; c < p; ++c) acc += m[r][c] * tmp[c];
        s.amp[i0 + r * stride] = acc;
      }
    }
  }
}

// Diagonal phase depending on one site's digit.
static void apply_site_phase(QupitState& s, size_t site, const std::vector<cplx>& ph) {
  size_t p = static_cast<size_t>(s.p.value);
  size_t stride = 1;
  for (size_t i = 0; i < site; ++i) stride *= p;
  size_t block = stride * p;
  for (size_t base = 0; base < s.dim(); base += block)
    for (size_t d = 0; d < p; ++d) {
      cplx f = ph[d];
      if (f == cplx(1.0, 0.0)) continue;
      for (size_t off = 0; off < stride; ++off) s.amp[base + d * stride + off] *= f;
    }
}

std::vector<std::vector<cplx>> gate_matrix(Prime pr, const GateSpec& g) {
  int p = pr.value;
  std::vector<std::vector<cplx>> m(p, std::vector<cplx>(p, 0.0));
  switch (g.kind) {
    case GateKind::PauliX: {
      int a = mod_p(g.exponent, p);
      for (int j = 0; j < p; ++j) m[(j + a) % p][j] = 1.0;
      break;
    }
    case GateKind::PauliZ: {
      int a = mod_p(g.exponent, p);
      for (int j = 0; j < p; ++j) m[j][j] = root_of_unity(static_cast<long long>(a) * j, p);
      break;
    }
    case GateKind::Fourier: {
      double s = 1.0 / std::sqrt(static_cast<double>(p));
      for (int x = 0; x < p; ++x)
        for (int y = 0; y < p; ++y)
          m[x][y] = s * root_of_unity(static_cast<long long>(x) * y, p);
      break;
    }
    case GateKind::FourierDag: {
      double s = 1.0 / std::sqrt(static_cast<double>(p));
      for (int x = 0; x < p; ++x)
        for (int y = 0; y < p; ++y)
          m[x][y] = s * root_of_unity(-static_cast<long long>(x) * y, p);
      break;
    }
    case GateKind::Inv: {
      for (int j = 0; j < p; ++j) m[mod_p(-j, p)][j] = 1.0;
      break;
    }
    case GateKind::Rz: {
      long long a = g.exponent;
      for (int j = 0; j < p; ++j)
        m[j][j] = root_of_unity(a * j, static_cast<long long>(p) * p);
      break;
    }
    case GateKind::GRz: {
      cplx f(std::cos(g.theta), std::sin(g.theta));
      for (int j = 0; j < p; ++j) m[j][j] = f;
      break;
    }
    case GateKind::GRzSet: {
      cplx f(std::cos(g.theta), std::sin(g.theta));
      for (int j = 0; j < p; ++j) m[j][j] = 1.0;
      for (int v : g.set) m[mod_p(v, p)][mod_p(v, p)] = f;
      break;
    }
    default:
      throw std::invalid_argument("gate_matrix: two-site gate");
  }
  return m;
}

void apply_gate(QupitState& s, const GateSpec& g) {
  size_t p = static_cast<size_t>(s.p.value);
  if (g.target >= s.n) throw TargetOutOfRange("apply_gate: target out of range");
  switch (g.kind) {
    case GateKind::PauliX:
    case GateKind::Fourier:
    case GateKind::FourierDag:
    case GateKind::Inv:
      apply_single(s, g.target, gate_matrix(s.p, g));
      return;
    case GateKind::PauliZ:
    case GateKind::Rz:
    case GateKind::GRz:
    case GateKind::GRzSet: {
      auto m = gate_matrix(s.p, g);
      std::vector<cplx> ph(p);
      for (size_t j = 0; j < p; ++j) ph[j] = m[j][j];
      apply_site_phase(s, g.target, ph);
      return;
    }
    case GateKind::Sum: {
      if (g.control >= s.n || g.control == g.target)
        throw TargetOutOfRange("apply_gate: SUM needs distinct control/target");
      // |x, y> -> |x, y + x>: permute target digit by the control digit.
      std::vector<cplx> out(s.dim());
      for (size_t idx = 0; idx < s.dim(); ++idx) {
        uint8_t x = s.digit_of(idx, g.control);
        uint8_t y = s.digit_of(idx, g.target);
        size_t stride = 1;
        for (size_t i = 0; i < g.target; ++i) stride *= p;
        size_t ny = (y + x) % p;
        size_t nidx = idx + (ny - y) * stride;
        out[nidx] = s.amp[idx];
      }
      s.amp = std::move(out);
      return;
    }
    case GateKind::CZ: {
      if (g.control >= s.n || g.control == g.target)
        throw TargetOutOfRange("apply_gate: CZ needs distinct control/target");
      int a = mod_p(g.exponent, s.p.value);
      for (size_t idx = 0; idx < s.dim(); ++idx) {
        long long x = s.digit_of(idx, g.control);
        long long y = s.digit_of(idx, g.target);
        s.amp[idx] *= root_of_unity(a * x * y, s.p.value);
      }
      return;
    }
  }
}

std::vector<double> site_distribution(const QupitState& s, size_t site) {
  if (site >= s.n) throw TargetOutOfRange("site_distribution: site out of range");
  std::vector<double> pr(s.p.value, 0.0);
  for (size_t idx = 0; idx < s.dim(); ++idx) pr[s.digit_of(idx, site)] += std::norm(s.amp[idx]);
  return pr;
}

double project_site(QupitState& s, size_t site, uint8_t digit) {
  double prob = 0.0;
  for (size_t idx = 0; idx < s.dim(); ++idx) {
    if (s.digit_of(idx, site) == digit)
      prob += std::norm(s.amp[idx]);
    else
      s.amp[idx] = 0.0;
  }
  if (prob > 0.0) {
    double scale = 1.0 / std::sqrt(prob);
    for (cplx& a : s.amp) a *= scale;
  }
  return prob;
}

uint8_t measure_site(QupitState& s, size_t site, Rng& rng) {
  auto pr = site_distribution(s, site);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double x = u(rng), acc = 0.0;
  uint8_t outcome = static_cast<uint8_t>(s.p.value - 1);
  for (int d = 0; d < s.p.value; ++d) {
    acc += pr[d];
    if (x < acc) {
      outcome = static_cast<uint8_t>(d);
      break;
    }
  }
  project_site(s, site, outcome);
  return outcome;
}

std::vector<double> full_distribution(const QupitState& s) {
  std::vector<double> pr(s.dim());
  for (size_t i = 0; i < s.dim(); ++i) pr[i] = std::norm(s.amp[i]);
  return pr;
}

std::vector<std::vector<cplx>> mat_mul(const std::vector<std::vector<cplx>>& a,
                                       const std::vector<std::vector<cplx>>& b) {
  size_t n = a.size();
  std::vector<std::vector<cplx>> c(n, std::vector<cplx>(n, 0.0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

double mat_dist(const std::vector<std::vector<cplx>>& a,
                const std::vector<std::vector<cplx>>& b) {
  double d = 0.0;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
  return d;
}

}  // namespace qadv::qsim
