#include "doctest.h"
#include "qadv/anf.hpp"

using namespace qadv;
using namespace qadv::classical;

TEST_CASE("anf_from_truth_table basics") {
  // constant 0 -> empty
  CHECK(anf_from_truth_table({0, 0, 0, 0}, 2).is_zero());
  // AND -> single monomial x0x1
  Anf a = anf_from_truth_table({0, 0, 0, 1}, 2);
  CHECK(a.monomials == std::set<uint64_t>{0b11});
  // XOR -> x0 ^ x1
  Anf x = anf_from_truth_table({0, 1, 1, 0}, 2);
  CHECK(x.monomials == std::set<uint64_t>{0b01, 0b10});
}

TEST_CASE("anf round trips through its truth table") {
  Rng rng = make_rng(2);
  for (int t = 0; t < 50; ++t) {
    int n = 1 + static_cast<int>(rng() % 8);
    std::vector<uint8_t> tt(size_t(1) << n);
    for (auto& b : tt) b = rng() & 1;
    Anf f = anf_from_truth_table(tt, n);
    CHECK(truth_table_of(f, n) == tt);
  }
}

TEST_CASE("lsb complement has all degree-2 monomials") {
  // floor(|x|/2) mod 2 equals XOR_{i<j} x_i x_j; the paper's second least
  // significant bit function is its complement
  int n = 6;
  std::vector<uint8_t> tt(size_t(1) << n);
  for (uint64_t x = 0; x < tt.size(); ++x) {
    int w = std::popcount(x);
    tt[x] = static_cast<uint8_t>((w % 4 <= 1) ? 1 : 0);  // LSB per definition
  }
  Anf f = anf_from_truth_table(tt, n);
  CHECK(count_degree_terms(f, 2) == 15);  // all C(6,2) pairs
  CHECK(f.monomials.count(0) == 1);       // plus the constant term
  CHECK(f.degree() == 2);
}

TEST_CASE("anf algebra") {
  Anf x0 = Anf::variable(0), x1 = Anf::variable(1);
  Anf s = x0 ^ x1;
  Anf prod = s & s;  // squaring is the identity over F_2... of the function
  // (x0 ^ x1)^2 = x0 ^ x1 (idempotent variables, cross terms cancel pairwise)
  // check by truth table
  CHECK(truth_table_of(prod, 2) == truth_table_of(s, 2));
  CHECK(count_degree_terms(s, 1) == 2);
}
