#pragma once

#include "qadv/core.hpp"

#include <set>

namespace qadv::classical {

// XOR of monomials over F_2; a monomial is a bitmask of variable indices.
// Mask 0 is the constant-1 term. Canonical: the set holds each monomial once.
struct Anf {
  std::set<uint64_t> monomials;

  bool evaluate(uint64_t assignment) const;
  void toggle(uint64_t monomial);
  Anf operator^(const Anf& o) const;
  Anf operator&(const Anf& o) const;  // product, reduced
  bool operator==(const Anf& o) const = default;
  int degree() const;
  bool is_zero() const { return monomials.empty(); }
  static Anf constant(bool b);
  static Anf variable(int i);
};

// Unique ANF of a truth table (bit f[x] for x in [0, 2^n)), via the Moebius
// transform. Independent oracle for the tree converter.
Anf anf_from_truth_table(const std::vector<uint8_t>& truth, int n);

std::vector<uint8_t> truth_table_of(const Anf& f, int n);

size_t count_degree_terms(const Anf& f, int deg);

}  // namespace qadv::classical
