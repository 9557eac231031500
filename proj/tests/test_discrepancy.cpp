#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "vnet/discrepancy.hpp"

using namespace vnet;

namespace {

AlphaVector alphas(const FieldTower& t, const std::vector<std::uint64_t>& codes) {
  AlphaVector a;
  for (auto c : codes) a.alphas.push_back(t.decode(c));
  return a;
}

bool close(long double a, long double b, long double rel = 1e-12L) {
  return std::fabs(a - b) <= rel * std::max(1.0L, std::fabs(b));
}

// sup over anchored boxes for s = 2 with coordinates on the 1/den grid:
// closed corners maximise count - vol, open corners maximise vol - count.
Rational brute_dstar_2d(const NetPointSet& p) {
  const std::uint64_t den = p.den, n = p.size();
  Rational best = 0;
  for (std::uint64_t a = 0; a <= den; ++a) {
    for (std::uint64_t b = 0; b <= den; ++b) {
      std::uint64_t open = 0, closed = 0;
      for (std::uint64_t k = 0; k < n; ++k) {
        open += p.at(k, 0) < a && p.at(k, 1) < b;
        closed += p.at(k, 0) <= a && p.at(k, 1) <= b;
      }
      const Rational vol(BigInt(a * b), BigInt(den * den));
      best = std::max(best, vol - Rational(BigInt(open), BigInt(n)));
      if (a < den && b < den) best = std::max(best, Rational(BigInt(closed), BigInt(n)) - vol);
    }
  }
  return best;
}

}  // namespace

TEST(RhoWeight, SpecExamples) {
  EXPECT_EQ(rho_weight(BasePoly(), 2), 1.0L);
  const auto f2 = BaseField::prime(2);
  const auto f3 = BaseField::prime(3);
  EXPECT_TRUE(close(rho_weight(BasePoly::x(), 2), 0.5L));
  EXPECT_TRUE(close(rho_weight(parse_poly(*f3, "0,0,2"), 3), 2.0L / (9.0L * std::sqrt(3.0L))));
  // the first component is weighted as x * h_1
  EXPECT_TRUE(close(rho_weight_first(parse_poly(*f2, "1"), 2), 0.5L));
  EXPECT_EQ(rho_weight_first(BasePoly(), 2), 1.0L);
  EXPECT_THROW(rho_weight(parse_poly(*f2, "1,1"), 2), Error);
  try {
    rho_weight(BasePoly::x(), 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPrime);
  }
}

TEST(RhoWeight, TableAgreesWithDirectFormula) {
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    const WeightTable table(q, 3);
    for (std::uint64_t code = 0; code < oracle::ipow(q, 3); ++code) {
      std::vector<BaseElement> slots(3);
      oracle::Vec h(4, 0);
      std::uint64_t r = code;
      for (int j = 0; j < 3; ++j, r /= q) {
        slots[j] = {static_cast<std::uint32_t>(r % q)};
        h[j + 1] = static_cast<int>(slots[j].code);
      }
      EXPECT_TRUE(close(table.component(slots), oracle::rho_weight(h, static_cast<int>(q))));
    }
  }
}

TEST(KernelBasis, Examples) {
  const FieldTower t = FieldTower::standard(2, 3);
  EXPECT_EQ(kernel_basis(t, AlphaVector{{t.generator()}}).dimension(), 0u);

  const FieldTower f3 = FieldTower::standard(3, 2);
  const auto& b = f3.base();
  const AlphaVector xx{{f3.generator(), f3.generator()}};
  // (x, -x) annihilates (alpha, alpha)
  HTuple h{{BasePoly::x(), parse_poly(b, "0,2")}};
  EXPECT_TRUE(annihilator_value(f3, xx, h).is_zero());
  const KernelBasis kb = kernel_basis(f3, xx);
  EXPECT_EQ(kb.dimension(), 2u);
  for (const auto& v : kb.basis) {
    EXPECT_TRUE(annihilator_value(f3, xx, to_htuple(v, 2, 2)).is_zero());
  }
}

TEST(KernelBasis, DimensionIsRankNullity) {
  std::mt19937_64 rng(8);
  const FieldTower t = FieldTower::standard(2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    const AlphaVector a = alphas(t, {rng() % 4, rng() % 4, rng() % 4});
    const KernelBasis kb = kernel_basis(t, a);
    // image of the evaluation map spanned by the component powers
    std::vector<oracle::Vec> images;
    for (std::size_t i = 0; i < 3; ++i) {
      for (unsigned j = 0; j < 2; ++j) {
        const ExtElement v = t.pow(a[i], i == 0 ? j : j + 1);
        images.push_back({static_cast<int>(v.coeffs[0].code), static_cast<int>(v.coeffs[1].code)});
      }
    }
    EXPECT_EQ(kb.dimension(), 6u - oracle::rank_by_span(images, 2));
    EXPECT_GE(kb.dimension(), 4u);
  }
}

TEST(RQ, SingleGeneratorIsZero) {
  for (auto [q, m] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 4}, {3, 3}, {5, 2}}) {
    const FieldTower t = FieldTower::standard(q, m);
    const WeightedSum w = r_q(t, AlphaVector{{t.generator()}});
    EXPECT_EQ(w.value, 0.0L);
    EXPECT_EQ(w.term_count, 0u);
    const auto f = BaseField::prime(q);
    GeneratingMatrices id{f, m, {Matrix::identity(m)}};
    EXPECT_EQ(r_q_matrices(id).value, 0.0L);
  }
}

TEST(RQ, MatchesNaiveEnumerationAndMatrixForm) {
  std::mt19937_64 rng(12);
  for (auto [q, m, s, f] : std::vector<std::tuple<int, unsigned, unsigned, oracle::Vec>>{
           {2, 3, 2, {1, 1, 0, 1}}, {2, 2, 2, {1, 1, 1}}, {3, 2, 2, {1, 0, 1}}, {2, 2, 3, {1, 1, 1}}, {5, 1, 2, {0, 1}}}) {
    const FieldTower t = FieldTower::standard(static_cast<std::uint32_t>(q), m);
    const oracle::NaiveExt F{q, f};
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<std::uint64_t> codes;
      std::vector<oracle::Vec> naive;
      for (unsigned i = 0; i < s; ++i) {
        codes.push_back(rng() % t.order());
        naive.push_back(F.decode(codes.back()));
      }
      const AlphaVector a = alphas(t, codes);
      const WeightedSum w = r_q(t, a);
      const oracle::DualScan scan = oracle::scan_dual(F, naive);
      EXPECT_TRUE(close(w.value, scan.rq)) << w.value << " vs " << scan.rq;
      EXPECT_EQ(w.term_count, scan.count);
      EXPECT_FALSE(w.cap_hit);
      const WeightedSum mw = r_q_matrices(expand(t, vandermonde_gamma(t, a)));
      EXPECT_TRUE(close(mw.value, w.value));
      EXPECT_EQ(mw.term_count, w.term_count);
    }
  }
}

TEST(RQ, InvariantUnderPermutingLaterComponents) {
  const FieldTower t = FieldTower::standard(3, 2);
  const WeightedSum a = r_q(t, alphas(t, {3, 4, 7, 1}));
  const WeightedSum b = r_q(t, alphas(t, {3, 1, 4, 7}));
  const WeightedSum c = r_q(t, alphas(t, {3, 7, 1, 4}));
  EXPECT_TRUE(close(a.value, b.value));
  EXPECT_TRUE(close(a.value, c.value));
}

TEST(RQ, ThreadCountInvariant) {
  const FieldTower t = FieldTower::standard(2, 4);
  const AlphaVector a = alphas(t, {2, 9, 13, 6});
  const WeightedSum one = r_q(t, a, {}, 1);
  for (unsigned threads : {2u, 3u, 8u}) EXPECT_EQ(r_q(t, a, {}, threads).value, one.value);
}

TEST(RQ, Errors) {
  const FieldTower t4 = FieldTower::standard(4, 2);
  try {
    r_q(t4, AlphaVector{{t4.generator(), t4.one()}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPrime);
  }
  const FieldTower t = FieldTower::standard(2, 4);
  Caps tiny;
  tiny.kernel = 8;
  try {
    r_q(t, alphas(t, {2, 3}), tiny);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeCap);
  }
}

TEST(WeightSums, SpecExamples) {
  const WeightSumCheck q2m1 = weight_sum_bound(2, 1, 1);
  EXPECT_EQ(q2m1.single_sum, 1.5L);
  EXPECT_EQ(q2m1.single_bound, 1.5L);
  EXPECT_TRUE(q2m1.holds());

  // nine-term sum over H_{3,2}
  long double direct = 0;
  for (int c1 = 0; c1 < 3; ++c1)
    for (int c2 = 0; c2 < 3; ++c2) direct += oracle::rho_weight({0, c1, c2}, 3);
  const WeightSumCheck q3m2 = weight_sum_bound(3, 2, 1);
  EXPECT_TRUE(close(q3m2.single_sum, direct));
  EXPECT_TRUE(close(q3m2.single_bound, (2.0L / std::numbers::pi_v<long double> * std::log(3.0L) + 0.4L) * 2 + 1));
  EXPECT_LE(q3m2.single_sum, q3m2.single_bound);
}

TEST(WeightSums, TupleSumMatchesNaiveEnumeration) {
  for (int q : {2, 3}) {
    for (unsigned m = 1; m <= 2; ++m) {
      for (unsigned v = 1; v <= 3; ++v) {
        const std::uint64_t per = oracle::ipow(q, m);
        long double naive = 0;
        for (std::uint64_t code = 0; code < oracle::ipow(per, v); ++code) {
          std::uint64_t r = code;
          long double w = 1;
          for (unsigned i = 0; i < v; ++i) {
            oracle::Vec h(m + 1, 0);
            std::uint64_t c = r % per;
            r /= per;
            // slot layout: first component x*h_1, others h_i with h_i(0) = 0
            for (unsigned j = 0; j < m; ++j, c /= q) h[j + 1] = static_cast<int>(c % q);
            w *= oracle::rho_weight(h, q);
          }
          naive += w;
        }
        const WeightSumCheck check = weight_sum_bound(static_cast<std::uint32_t>(q), m, v);
        EXPECT_TRUE(close(check.tuple_sum, naive)) << q << " " << m << " " << v;
      }
    }
  }
}

TEST(WeightSums, HoldForSmallParameters) {
  for (std::uint32_t q : {2u, 3u, 5u})
    for (unsigned m = 1; m <= 4; ++m)
      for (unsigned v = 1; v <= 3; ++v) EXPECT_TRUE(weight_sum_bound(q, m, v).holds()) << q << " " << m << " " << v;
  for (unsigned m = 1; m <= 6; ++m) {
    const auto c = weight_sum_bound(2, m, 1);
    EXPECT_TRUE(close(c.single_sum, c.single_bound));
  }
}

TEST(Bounds, AverageAndDiscBound) {
  EXPECT_TRUE(close(average_bound(2, 1, 1), 1.25L));
  EXPECT_TRUE(close(average_bound(2, 4, 2), 1.0L - 225.0L / 256.0L + 0.25L * 9.0L));
  for (std::uint32_t q : {2u, 3u, 5u})
    for (unsigned m = 1; m <= 5; ++m)
      for (unsigned s = 1; s <= 4; ++s) EXPECT_GE(average_bound(q, m, s), 0.0L);
  EXPECT_TRUE(close(disc_bound(1, 2, 3, WeightedSum{}), 0.125L));
  EXPECT_TRUE(close(disc_bound(2, 3, 2, WeightedSum{}), 1.0L - 64.0L / 81.0L));
  EXPECT_LT(disc_bound(2, 2, 3, WeightedSum{0.1L}), disc_bound(2, 2, 3, WeightedSum{0.2L}));
}

TEST(StarDiscrepancy, OneDimensionalExamples) {
  NetPointSet origin{2, 1, 1, 2, {0}};
  EXPECT_EQ(star_discrepancy_exact(origin), Rational(1));
  NetPointSet ladder{2, 3, 1, 8, {0, 1, 2, 3, 4, 5, 6, 7}};
  EXPECT_EQ(star_discrepancy_exact(ladder), Rational(1, 8));
}

TEST(StarDiscrepancy, MatchesBruteForceAndBound) {
  const FieldTower t = FieldTower::standard(2, 3);
  for (std::uint64_t a1 = 0; a1 < 8; a1 += 3) {
    for (std::uint64_t a2 = 0; a2 < 8; ++a2) {
      const AlphaVector a = alphas(t, {a1, a2});
      const NetPointSet p = generate_points(vandermonde_matrices(t, a));
      const Rational d = star_discrepancy_exact(p);
      EXPECT_EQ(d, brute_dstar_2d(p));
      EXPECT_TRUE(within_bound(static_cast<long double>(d), disc_bound(2, 2, 3, r_q(t, a))));
    }
  }
}

TEST(StarDiscrepancy, ThreeDimensionsAgainstPermutation) {
  // D* is invariant under permuting coordinates
  const FieldTower t = FieldTower::standard(3, 2);
  const NetPointSet p = generate_points(vandermonde_matrices(t, alphas(t, {3, 5, 7})));
  NetPointSet swapped = p;
  for (std::uint64_t n = 0; n < p.size(); ++n) {
    swapped.numerators[n * 3] = p.at(n, 2);
    swapped.numerators[n * 3 + 2] = p.at(n, 0);
  }
  const Rational d = star_discrepancy_exact(p);
  EXPECT_EQ(d, star_discrepancy_exact(swapped));
  EXPECT_GT(d, Rational(0));
  EXPECT_LE(d, Rational(1));
}

TEST(StarDiscrepancy, Caps) {
  const FieldTower t = FieldTower::standard(2, 2);
  const NetPointSet p = generate_points(vandermonde_matrices(t, alphas(t, {2, 1, 3, 2})));
  try {
    star_discrepancy_exact(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionCap);
  }
  EXPECT_NO_THROW(star_discrepancy_exact(p, {4, 1u << 20}));
  const FieldTower big = FieldTower::standard(2, 6);
  const NetPointSet q = generate_points(vandermonde_matrices(big, alphas(big, {2, 5})));
  try {
    star_discrepancy_exact(q, {3, 100});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeCap);
  }
}
