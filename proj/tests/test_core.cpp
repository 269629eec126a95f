#include "doctest.h"
#include "qadv/core.hpp"

#include <map>
#include <set>

using namespace qadv;

static DitString bits(const std::string& s) { return DitString::from_ascii(Prime(2), s); }

TEST_CASE("ismr_residue definition") {
  CHECK(ismr_residue(IsmrInstance(Prime(2), 4, 2), bits("1111")) == 0);
  CHECK(ismr_residue(IsmrInstance(Prime(3), 6, 3), bits("111000")) == 2);
  // |x| = 10, p = 5: -(10/5) mod 5 = 3
  CHECK(ismr_residue(IsmrInstance(Prime(5), 12, 4), bits("111111111100")) == 3);
  CHECK_THROWS_AS(ismr_residue(IsmrInstance(Prime(3), 4, 2), bits("1100")), ResidueViolation);
}

TEST_CASE("ismr_verify") {
  IsmrInstance r2(Prime(2), 4, 2);
  // |x| = 4: -(4/2) mod 2 = 0, so |y| must be even
  CHECK(ismr_verify(r2, bits("1111"), bits("00")));
  CHECK_FALSE(ismr_verify(r2, bits("1111"), bits("10")));
  // |x| = 2: -(2/2) mod 2 = 1, so |y| must be odd
  CHECK(ismr_verify(r2, bits("1100"), bits("10")));
  CHECK_FALSE(ismr_verify(r2, bits("1100"), bits("00")));

  IsmrInstance r3(Prime(3), 6, 4);
  CHECK(ismr_verify(r3, bits("111000"), bits("1100")));   // |y| mod 3 = 2
  CHECK_FALSE(ismr_verify(r3, bits("111000"), bits("1000")));

  // PHP: |x| mod 4 = 2 requires |y| odd
  IsmrInstance php(Prime(2), 6, 3);
  CHECK(ismr_verify(php, bits("110000"), bits("100")));
  CHECK_FALSE(ismr_verify(php, bits("110000"), bits("110")));

  CHECK_THROWS_AS(ismr_verify(r2, bits("1100"), bits("000")), LengthMismatch);
}

TEST_CASE("lsb definition and truth-table oracle") {
  CHECK(lsb(bits("0000")) == 1);
  CHECK(lsb(bits("110")) == 0);
  CHECK(lsb(bits("11111")) == 1);  // |x| = 5, 5 mod 4 = 1
  // oracle: recompute from |x| mod 4 over all 6-bit strings
  for (int m = 0; m < 64; ++m) {
    std::vector<uint8_t> d(6);
    for (int i = 0; i < 6; ++i) d[i] = (m >> i) & 1;
    DitString x(Prime(2), d);
    int expect = (x.weight() % 4 <= 1) ? 1 : 0;
    CHECK(lsb(x) == expect);
  }
}

TEST_CASE("hamming encoding") {
  Prime p3(3);
  CHECK(hamming_encode(bits("00"), p3)[0] == 0);
  CHECK(hamming_encode(bits("01"), p3)[0] == 1);
  CHECK(hamming_encode(bits("10"), p3)[0] == 1);
  CHECK(hamming_encode(bits("11"), p3)[0] == 2);
  Prime p5(5);
  CHECK(hamming_encode(bits("0000"), p5)[0] == 0);
  CHECK(hamming_encode(bits("1011"), p5)[0] == 3);
  CHECK_THROWS_AS(hamming_encode(bits("011"), p3), LengthMismatch);
}

TEST_CASE("hamming decode canonical and round trip") {
  Prime p3(3);
  CHECK(hamming_decode_canonical(DitString(p3, {2})).to_ascii() == "11");
  CHECK(hamming_decode_canonical(DitString(p3, {1})).to_ascii() == "10");
  for (int p : {2, 3, 5, 7}) {
    Prime pr(p);
    Rng rng = make_rng(7, p);
    for (int t = 0; t < 50; ++t) {
      std::vector<uint8_t> d(6);
      for (auto& v : d) v = static_cast<uint8_t>(rng() % p);
      DitString dits(pr, d);
      CHECK(hamming_encode(hamming_decode_canonical(dits), pr) == dits);
    }
  }
}

TEST_CASE("encoding_bias matches block enumeration") {
  CHECK(encoding_bias(Prime(3), 0) == doctest::Approx(0.25));
  CHECK(encoding_bias(Prime(3), 1) == doctest::Approx(0.5));
  CHECK(encoding_bias(Prime(3), 2) == doctest::Approx(0.25));
  CHECK(encoding_bias(Prime(2), 0) == doctest::Approx(0.5));
  CHECK(encoding_bias(Prime(5), 2) == doctest::Approx(6.0 / 16.0));
  // exact enumeration over 2^{p-1} blocks
  for (int p : {2, 3, 5, 7}) {
    std::vector<double> freq(p, 0.0);
    int blk = p - 1;
    for (int m = 0; m < (1 << blk); ++m) {
      int s = 0;
      for (int i = 0; i < blk; ++i) s += (m >> i) & 1;
      freq[s] += 1.0 / (1 << blk);
    }
    for (int v = 0; v < p; ++v)
      CHECK(encoding_bias(Prime(p), v) == doctest::Approx(freq[v]).epsilon(1e-12));
  }
}

TEST_CASE("correlation measure") {
  Prime p3(3);
  CHECK(correlation(p3, {{1, 1, 0.4}, {2, 2, 0.6}}) == doctest::Approx(1.0));
  CHECK(correlation(p3, {{1, 0, 1.0}}) == doctest::Approx(-0.5));
  // mixture: q at deviation 0, uniform over residues otherwise -> q
  double q = 0.37;
  std::vector<ResiduePair> pairs{{0, 0, q + (1 - q) / 3}, {1, 0, (1 - q) / 3}, {2, 0, (1 - q) / 3}};
  CHECK(correlation(p3, pairs) == doctest::Approx(q).epsilon(1e-12));
  // invariance under adding a global constant to both
  CHECK(correlation(p3, {{2, 1, 1.0}}) == doctest::Approx(correlation(p3, {{0, 2, 1.0}})));
  CHECK_THROWS_AS(correlation(p3, {}), EmptyDistribution);
  // p=2: Corr = 2*Pr[f=g] - 1
  Prime p2(2);
  double pr_eq = 0.7;
  CHECK(correlation(p2, {{0, 0, pr_eq}, {1, 0, 1 - pr_eq}}) == doctest::Approx(2 * pr_eq - 1));
}

TEST_CASE("success_from_correlation_p3") {
  CHECK(success_from_correlation_p3(1.0) == doctest::Approx(1.0));
  CHECK(success_from_correlation_p3(-0.5) == doctest::Approx(0.0));
  CHECK(success_from_correlation_p3(2.0 / 9.0) == doctest::Approx(13.0 / 27.0));
  CHECK_THROWS_AS(success_from_correlation_p3(-0.9), std::out_of_range);
}

TEST_CASE("sample_valid_input residue and uniformity") {
  InputDistribution d{DistKind::UniformBinaryResidueZero, 4, Prime(2)};
  Rng rng = make_rng(11);
  std::map<std::string, long long> counts;
  const int N = 40000;
  for (int t = 0; t < N; ++t) {
    DitString x = sample_valid_input(d, rng);
    CHECK(x.weight() % 2 == 0);
    counts[x.to_ascii()]++;
  }
  // chi-square against uniform over the 8 even 4-bit strings
  CHECK(counts.size() == 8);
  double chi2 = 0.0, expect = N / 8.0;
  for (auto& [s, c] : counts) chi2 += (c - expect) * (c - expect) / expect;
  CHECK(chi2 < 40.0);  // ~5 sigma for 7 dof

  InputDistribution d3{DistKind::UniformDitResidueZero, 5, Prime(3)};
  for (int t = 0; t < 500; ++t) CHECK(sample_valid_input(d3, rng).weight() % 3 == 0);

  InputDistribution h3{DistKind::HammingEncodedUniformBinary, 6, Prime(3)};
  for (int t = 0; t < 500; ++t) {
    DitString x = sample_valid_input(h3, rng);
    CHECK(x.p.value == 3);
    CHECK(x.size() == 3);
    CHECK(x.weight() % 3 == 0);
  }
}

TEST_CASE("serialization round trips") {
  DitString x = DitString::from_ascii(Prime(13), "0c5a");
  CHECK(x.to_ascii() == "0c5a");
  CHECK(x[1] == 12);
  InputDistribution d{DistKind::UniformDitResidueZero, 5, Prime(3)};
  CHECK(dist_to_json(d) == "{\"kind\":\"uniform-dit-residue-zero\",\"n\":5,\"p\":3}");
}

TEST_CASE("prime validation") {
  CHECK_THROWS(Prime(4));
  CHECK_THROWS(Prime(1));
  CHECK_THROWS(Prime(17)); // cap at 13
  CHECK(Prime(13).value == 13);
}

TEST_CASE("wilson interval basics") {
  auto ci = wilson_interval(0, 1000);
  CHECK(ci.lo == doctest::Approx(0.0));
  CHECK(ci.hi < 0.01);
  auto ci2 = wilson_interval(500, 1000);
  CHECK(ci2.lo < 0.5);
  CHECK(ci2.hi > 0.5);
}
