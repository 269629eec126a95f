#include "doctest.h"
#include "qadv/nndecomp.hpp"

#include <bit>
#include <cmath>

using namespace qadv;
using namespace qadv::nn;

TEST_CASE("zero activation gives zero gates") {
  ActivationSpec s;
  s.f = [](int) { return 0.0; };
  s.k = 3;
  s.w = 1.0;
  s.n = 8;
  auto d = decompose_activation(s);
  CHECK(d.l == 0);
  CHECK(d.gates.empty());
}

TEST_CASE("relu c=1 w=1 k=3 firing sets") {
  ActivationSpec s = relu_spec(1.0, 1.0, 3, 8);
  auto d = decompose_activation(s);
  CHECK(d.l == 2);  // floor(max(0, 3-1)/1)
  // step 1 fires on weights >= 2, step 2 on weight 3
  CHECK(d.gates[0].fires_at_weight == std::vector<uint8_t>{0, 0, 1, 1});
  CHECK(d.gates[1].fires_at_weight == std::vector<uint8_t>{0, 0, 0, 1});
}

TEST_CASE("composite equals w * floor(f/w) on the bounded region, exhaustive") {
  struct Setting {
    double c, w;
    int k;
  };
  for (Setting st : {Setting{1.0, 1.0, 3}, Setting{2.0, 0.5, 5}, Setting{0.0, 2.0, 7}}) {
    size_t n = 16;
    ActivationSpec s = relu_spec(st.c, st.w, st.k, n);
    auto d = decompose_activation(s);
    CHECK(d.l == static_cast<size_t>(std::floor(std::max(0.0, st.k - st.c) / st.w)));
    for (uint64_t x = 0; x < (uint64_t(1) << n); ++x) {
      int w = std::popcount(x);
      if (w > st.k) continue;
      double expect = st.w * std::floor(s.f(w) / st.w);
      CHECK(eval_krelu(d, s, x) == doctest::Approx(expect));
    }
  }
}

TEST_CASE("tail fires every gate above k") {
  ActivationSpec s = relu_spec(1.0, 1.0, 3, 10);
  auto d = decompose_activation(s);
  for (uint64_t x : {0b1111ull, 0b111110ull, 0b1111111111ull}) {
    CHECK(eval_krelu(d, s, x) == doctest::Approx(s.w * d.l));
  }
  // flat region below the centre gives 0
  CHECK(eval_krelu(d, s, 0) == doctest::Approx(0.0));
  CHECK(eval_krelu(d, s, 0b1) == doctest::Approx(0.0));
}

TEST_CASE("monotone activation gives nested firing sets") {
  ActivationSpec s = relu_spec(0.5, 0.25, 6, 12);
  auto d = decompose_activation(s);
  for (size_t i = 1; i < d.gates.size(); ++i)
    for (int t = 0; t <= s.k; ++t)
      CHECK(d.gates[i].fires_at_weight[t] <= d.gates[i - 1].fires_at_weight[t]);
}

TEST_CASE("bptf realization matches the weight-branch evaluation") {
  ActivationSpec s = relu_spec(1.0, 1.0, 3, 8);
  auto d = decompose_activation(s);
  auto circ = krelu_as_bptf(d, s);
  circ.validate();
  for (uint64_t x = 0; x < 256; ++x) {
    auto out = eval_circuit(circ, x);
    size_t firing = 0;
    for (uint8_t b : out) firing += b;
    CHECK(s.w * firing == doctest::Approx(eval_krelu(d, s, x)));
  }
}
