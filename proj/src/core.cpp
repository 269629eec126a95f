#include "qadv/core.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace qadv {

Prime::Prime(int p) : value(p) {
  static const int supported[] = {2, 3, 5, 7, 11, 13};
  for (int q : supported)
    if (p == q) return;
  throw std::invalid_argument("Prime: unsupported dimension " + std::to_string(p));
}

cplx root_of_unity(long long k, long long m) {
  long long r = k % m;
  if (r < 0) r += m;
  double theta = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(m);
  return {std::cos(theta), std::sin(theta)};
}

DitString::DitString(Prime p_, std::vector<uint8_t> d) : p(p_), digits(std::move(d)) {
  for (uint8_t v : digits)
    if (v >= p.value) throw DigitOutOfRange("DitString: digit out of range");
}

DitString DitString::filled(Prime p, size_t n, uint8_t fill) {
  if (fill >= p.value) throw DigitOutOfRange("DitString: fill out of range");
  DitString s;
  s.p = p;
  s.digits.assign(n, fill);
  return s;
}

long long DitString::weight() const {
  long long w = 0;
  for (uint8_t v : digits) w += v;
  return w;
}

size_t DitString::nonzero_count() const {
  size_t c = 0;
  for (uint8_t v : digits) c += (v != 0);
  return c;
}

static char digit_char(uint8_t v) { return v < 10 ? char('0' + v) : char('a' + v - 10); }

std::string DitString::to_ascii() const {
  std::string s;
  s.reserve(digits.size());
  for (uint8_t v : digits) s.push_back(digit_char(v));
  return s;
}

DitString DitString::from_ascii(Prime p, const std::string& s) {
  std::vector<uint8_t> d;
  d.reserve(s.size());
  for (char c : s) {
    int v;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'a' && c <= 'z') v = c - 'a' + 10;
    else throw DigitOutOfRange("DitString::from_ascii: bad character");
    if (v >= p.value) throw DigitOutOfRange("DitString::from_ascii: digit out of range");
    d.push_back(static_cast<uint8_t>(v));
  }
  return DitString(p, std::move(d));
}

IsmrInstance::IsmrInstance(Prime p_, size_t n_, size_t m_) : p(p_), n(n_), m(m_) {
  if (m < 1) throw std::invalid_argument("IsmrInstance: m >= 1 required");
}

int ismr_residue(const IsmrInstance& inst, const DitString& x) {
  long long w = x.weight();
  if (w % inst.p.value != 0)
    throw ResidueViolation("ismr_residue: |x| mod p != 0");
  return mod_p(-(w / inst.p.value), inst.p.value);
}

bool ismr_verify(const IsmrInstance& inst, const DitString& x, const DitString& y) {
  if (y.size() != inst.m) throw LengthMismatch("ismr_verify: |y| != m");
  return mod_p(y.weight(), inst.p.value) == ismr_residue(inst, x);
}

int lsb(const DitString& bits) {
  int r = static_cast<int>(bits.weight() % 4);
  return (r == 0 || r == 1) ? 1 : 0;
}

DitString hamming_encode(const DitString& bits, Prime p) {
  size_t block = static_cast<size_t>(p.value - 1);
  if (bits.size() % block != 0)
    throw LengthMismatch("hamming_encode: length not divisible by p-1");
  std::vector<uint8_t> out(bits.size() / block, 0);
  for (size_t j = 0; j < out.size(); ++j) {
    int s = 0;
    for (size_t i = 0; i < block; ++i) s += bits[j * block + i];
    out[j] = static_cast<uint8_t>(s);
  }
  return DitString(p, std::move(out));
}

DitString hamming_decode_canonical(const DitString& dits) {
  size_t block = static_cast<size_t>(dits.p.value - 1);
  std::vector<uint8_t> out;
  out.reserve(dits.size() * block);
  for (size_t j = 0; j < dits.size(); ++j) {
    for (size_t i = 0; i < block; ++i) out.push_back(i < dits[j] ? 1 : 0);
  }
  return DitString(Prime(2), std::move(out));
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

double encoding_bias(Prime p, int v) {
  if (v < 0 || v >= p.value) throw DigitOutOfRange("encoding_bias: v out of range");
  return binomial(p.value - 1, v) / std::pow(2.0, p.value - 1);
}

double correlation(Prime p, const std::vector<ResiduePair>& pairs) {
  if (pairs.empty()) throw EmptyDistribution("correlation: empty distribution");
  double total = 0.0, corr = 0.0;
  for (const auto& pr : pairs) {
    total += pr.weight;
    corr += pr.weight * root_of_unity(pr.f - pr.g, p.value).real();
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument("correlation: weights must sum to 1");
  return corr;
}

double success_from_correlation_p3(double c) {
  if (c < -0.5 - 1e-12 || c > 1.0 + 1e-12)
    throw std::out_of_range("success_from_correlation_p3: c outside [-1/2, 1]");
  return (1.0 + 2.0 * c) / 3.0;
}

std::string dist_kind_name(DistKind k) {
  switch (k) {
    case DistKind::UniformBinaryResidueZero: return "uniform-binary-residue-zero";
    case DistKind::UniformDitResidueZero: return "uniform-dit-residue-zero";
    case DistKind::HammingEncodedUniformBinary: return "hamming-encoded-uniform-binary";
  }
  return "?";
}

std::string dist_to_json(const InputDistribution& d) {
  std::ostringstream os;
  os << "{\"kind\":\"" << dist_kind_name(d.kind) << "\",\"n\":" << d.n
     << ",\"p\":" << d.p.value << "}";
  return os.str();
}

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

DitString sample_valid_input(const InputDistribution& dist, Rng& rng) {
  int p = dist.p.value;
  int base = (dist.kind == DistKind::UniformDitResidueZero) ? p : 2;
  std::uniform_int_distribution<int> pick(0, base - 1);
  while (true) {
    std::vector<uint8_t> d(dist.n);
    long long w = 0;
    for (auto& v : d) {
      v = static_cast<uint8_t>(pick(rng));
      w += v;
    }
    if (w % p != 0) continue;
    DitString raw(Prime(base == 2 ? 2 : p), std::move(d));
    if (dist.kind == DistKind::HammingEncodedUniformBinary)
      return hamming_encode(raw, dist.p);
    return raw;
  }
}

WilsonCI wilson_interval(long long successes, long long trials, double z) {
  if (trials <= 0) return {0.0, 1.0};
  double n = static_cast<double>(trials);
  double phat = static_cast<double>(successes) / n;
  double z2 = z * z;
  double denom = 1.0 + z2 / n;
  double centre = phat + z2 / (2.0 * n);
  double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
  return {(centre - half) / denom, (centre + half) / denom};
}

}  // namespace qadv
