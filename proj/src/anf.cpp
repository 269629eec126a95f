#include "qadv/anf.hpp"

#include <bit>

namespace qadv::classical {

bool Anf::evaluate(uint64_t assignment) const {
  bool v = false;
  for (uint64_t m : monomials)
    if ((m & assignment) == m) v = !v;
  return v;
}

void Anf::toggle(uint64_t monomial) {
  auto it = monomials.find(monomial);
  if (it == monomials.end())
    monomials.insert(monomial);
  else
    monomials.erase(it);
}

Anf Anf::operator^(const Anf& o) const {
  Anf r = *this;
  for (uint64_t m : o.monomials) r.toggle(m);
  return r;
}

Anf Anf::operator&(const Anf& o) const {
  Anf r;
  for (uint64_t a : monomials)
    for (uint64_t b : o.monomials) r.toggle(a | b);
  return r;
}

int Anf::degree() const {
  int d = 0;
  for (uint64_t m : monomials) d = std::max(d, std::popcount(m));
  return d;
}

Anf Anf::constant(bool b) {
  Anf r;
  if (b) r.monomials.insert(0);
  return r;
}

Anf Anf::variable(int i) {
  Anf r;
  r.monomials.insert(uint64_t(1) << i);
  return r;
}

Anf anf_from_truth_table(const std::vector<uint8_t>& truth, int n) {
  if (n > 20) throw TooLarge("anf_from_truth_table: n <= 20");
  if (truth.size() != (size_t(1) << n))
    throw LengthMismatch("anf_from_truth_table: table size != 2^n");
  std::vector<uint8_t> c = truth;  // Moebius/zeta transform in place
  for (int i = 0; i < n; ++i) {
    size_t bit = size_t(1) << i;
    for (size_t x = 0; x < c.size(); ++x)
      if (x & bit) c[x] ^= c[x ^ bit];
  }
  Anf f;
  for (size_t m = 0; m < c.size(); ++m)
    if (c[m]) f.monomials.insert(m);
  return f;
}

std::vector<uint8_t> truth_table_of(const Anf& f, int n) {
  if (n > 20) throw TooLarge("truth_table_of: n <= 20");
  std::vector<uint8_t> t(size_t(1) << n);
  for (size_t x = 0; x < t.size(); ++x) t[x] = f.evaluate(x);
  return t;
}

size_t count_degree_terms(const Anf& f, int deg) {
  size_t c = 0;
  for (uint64_t m : f.monomials) c += (std::popcount(m) == deg);
  return c;
}

}  // namespace qadv::classical
