#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace qadv {

using cplx = std::complex<double>;

struct ResidueViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct LengthMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DigitOutOfRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmptyDistribution : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Prime dimension, 2 <= p <= 13. Primality checked at construction.
struct Prime {
  int value = 2;
  Prime() = default;
  explicit Prime(int p);
  operator int() const { return value; }
};

inline int mod_p(long long a, int p) {
  long long r = a % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

// e^{2*pi*i*k/m} via exact angle reduction; never trig on large arguments.
cplx root_of_unity(long long k, long long m);

// String over F_p. digits[i] in [0,p). For bits (p=2) this is a bit string.
// The Hamming weight |x| is the integer sum of digits (equal to the number
// of nonzero digits in the binary case).
struct DitString {
  Prime p;
  std::vector<uint8_t> digits;

  DitString() = default;
  DitString(Prime p_, std::vector<uint8_t> d);
  static DitString filled(Prime p, size_t n, uint8_t fill = 0);

  size_t size() const { return digits.size(); }
  long long weight() const;        // sum of digits
  size_t nonzero_count() const;    // number of nonzero digits
  uint8_t operator[](size_t i) const { return digits[i]; }
  uint8_t& operator[](size_t i) { return digits[i]; }
  bool operator==(const DitString& o) const = default;

  std::string to_ascii() const;                       // "0213..."
  static DitString from_ascii(Prime p, const std::string& s);
};

// Relation demanding |y| mod p = -(|x|/p) mod p on inputs with |x| mod p = 0.
struct IsmrInstance {
  Prime p;
  size_t n = 0;  // input length (bits)
  size_t m = 0;  // output length (bits)
  IsmrInstance(Prime p_, size_t n_, size_t m_);
};

int ismr_residue(const IsmrInstance& inst, const DitString& x);
bool ismr_verify(const IsmrInstance& inst, const DitString& x, const DitString& y);

// 1 iff |x| mod 4 in {0,1}.
int lsb(const DitString& bits);

// Blockwise bit->dit map: digit j = sum of its block of p-1 bits.
DitString hamming_encode(const DitString& bits, Prime p);
// Canonical inverse: block = ones-then-zeros.
DitString hamming_decode_canonical(const DitString& dits);

// Pr[digit = v] under hamming_encode of uniform bits: C(p-1,v)/2^{p-1}.
double encoding_bias(Prime p, int v);

double binomial(int n, int k);

// Corr = sum_i w_i * Re(omega_p^{f_i - g_i}), weights sum to 1.
struct ResiduePair {
  int f = 0;
  int g = 0;
  double weight = 0.0;
};
double correlation(Prime p, const std::vector<ResiduePair>& pairs);

// p=3 only: Pr[win] = (1 + 2c)/3 for c in [-1/2, 1].
double success_from_correlation_p3(double c);

enum class DistKind {
  UniformBinaryResidueZero,   // bits, |x| mod p = 0
  UniformDitResidueZero,      // dits over F_p, sum mod p = 0
  HammingEncodedUniformBinary // uniform bits with bit-sum mod p = 0, encoded to dits
};

struct InputDistribution {
  DistKind kind = DistKind::UniformBinaryResidueZero;
  size_t n = 0;  // bits for binary kinds; dits for the dit kind
  Prime p;
};

std::string dist_kind_name(DistKind k);
std::string dist_to_json(const InputDistribution& d);

using Rng = std::mt19937_64;

// Stream splitting: derive an independent seed for (seed, taskIndex).
uint64_t splitmix64(uint64_t x);
inline Rng make_rng(uint64_t seed, uint64_t task_index = 0) {
  return Rng(splitmix64(seed + 0x9e3779b97f4a7c15ULL * (task_index + 1)));
}

// Uniform over the residue-zero slice, by rejection.
DitString sample_valid_input(const InputDistribution& dist, Rng& rng);

// Wilson score interval for a binomial proportion.
struct WilsonCI {
  double lo = 0.0;
  double hi = 0.0;
};
WilsonCI wilson_interval(long long successes, long long trials, double z = 1.96);

}  // namespace qadv
