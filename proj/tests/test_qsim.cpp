#include "doctest.h"
#include "qadv/qsim.hpp"

#include <cmath>

using namespace qadv;
using namespace qadv::qsim;

TEST_CASE("fourier column on |0>") {
  for (int p : {2, 3, 5}) {
    QupitState s(Prime(p), 1);
    apply_gate(s, gate_fourier(0));
    for (int j = 0; j < p; ++j)
      CHECK(std::abs(s.amp[j] - cplx(1.0 / std::sqrt(double(p)), 0.0)) < 1e-12);
  }
}

TEST_CASE("ZX = omega XZ") {
  for (int p : {2, 3, 5}) {
    Prime pr(p);
    auto X = gate_matrix(pr, gate_x(0));
    auto Z = gate_matrix(pr, gate_z(0));
    auto zx = mat_mul(Z, X);
    auto xz = mat_mul(X, Z);
    cplx w = root_of_unity(1, p);
    for (auto& row : xz)
      for (auto& v : row) v *= w;
    CHECK(mat_dist(zx, xz) < 1e-12);
  }
}

TEST_CASE("INV is an involution and F^4 = I") {
  for (int p : {2, 3, 5, 7}) {
    Prime pr(p);
    QupitState s(pr, 2);
    apply_gate(s, gate_fourier(0));
    apply_gate(s, gate_sum(0, 1));
    QupitState before = s;
    apply_gate(s, gate_inv(1));
    apply_gate(s, gate_inv(1));
    for (size_t i = 0; i < s.dim(); ++i) CHECK(std::abs(s.amp[i] - before.amp[i]) < 1e-12);
    for (int k = 0; k < 4; ++k) apply_gate(s, gate_fourier(0));
    for (size_t i = 0; i < s.dim(); ++i) CHECK(std::abs(s.amp[i] - before.amp[i]) < 1e-12);
  }
}

TEST_CASE("norm preserved by all gates") {
  Prime p5(5);
  Rng rng = make_rng(5);
  QupitState s(p5, 3);
  apply_gate(s, gate_fourier(0));
  apply_gate(s, gate_sum(0, 1));
  apply_gate(s, gate_cz(1, 2, 2));
  apply_gate(s, gate_rz(2, 3));
  apply_gate(s, gate_x(1, 4));
  apply_gate(s, gate_z(0, 2));
  apply_gate(s, gate_inv(2));
  apply_gate(s, gate_grz_set(1, 0.7, {1, 3}));
  CHECK(std::abs(s.norm() - 1.0) < 1e-9);
}

TEST_CASE("SUM arithmetic on basis states") {
  Prime p3(3);
  QupitState s = QupitState::basis(p3, DitString(p3, {2, 2}));
  apply_gate(s, gate_sum(0, 1));  // |2,2> -> |2,1>
  QupitState expect = QupitState::basis(p3, DitString(p3, {2, 1}));
  for (size_t i = 0; i < s.dim(); ++i) CHECK(std::abs(s.amp[i] - expect.amp[i]) < 1e-12);
}

TEST_CASE("measurement collapses and matches site distribution") {
  Prime p3(3);
  QupitState s(p3, 2);
  apply_gate(s, gate_fourier(0));
  apply_gate(s, gate_sum(0, 1));  // (1/sqrt3) sum_j |j,j>
  auto dist = site_distribution(s, 1);
  for (int d = 0; d < 3; ++d) CHECK(dist[d] == doctest::Approx(1.0 / 3.0));
  Rng rng = make_rng(42);
  uint8_t m0 = measure_site(s, 0, rng);
  auto dist1 = site_distribution(s, 1);
  CHECK(dist1[m0] == doctest::Approx(1.0));
}

TEST_CASE("target validation") {
  QupitState s(Prime(3), 2);
  CHECK_THROWS_AS(apply_gate(s, gate_fourier(2)), TargetOutOfRange);
  CHECK_THROWS_AS(apply_gate(s, gate_sum(1, 1)), TargetOutOfRange);
}

TEST_CASE("state size cap") {
  CHECK_THROWS_AS(QupitState(Prime(2), 25), TooLarge);
}
