#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "parsep/qseries.hpp"

using namespace parsep;

namespace {

GradedSeries from_dense(const oracle::Dense& d) {
  return GradedSeries::from_coefficients(Box::univariate(static_cast<int>(d.size()) - 1), d);
}

GradedSeries random_series(Box box, std::mt19937_64& rng, bool unit_constant) {
  GradedSeries s(box);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int q = 0; q <= box.order; ++q) {
    // |z| <= q, the support shape of every bivariate family series; it keeps
    // products exact under the symmetric z window.
    for (int z = -std::min(q, box.z_window); z <= std::min(q, box.z_window); ++z) {
      int c = coeff(rng);
      if (q == 0 && unit_constant) c = 1;
      if (c != 0) s += GradedSeries::monomial(box, Monomial{q, 0, 0, z}, c);
    }
  }
  return s;
}

TEST(Series, TwoColoredEvenPartitionsOfEight) {
  GradedSeries s = GradedSeries::one(Box::univariate(8));
  apply_pochhammer(s, q_base(2), 2, std::nullopt, -2);
  EXPECT_EQ(s.coefficient(8), 20);
  EXPECT_EQ(s.coefficient(8), oracle::count_colored(8, {2, 4, 6, 8}, 2));
  GradedSeries direct = expand_pochhammer(Box::univariate(8), q_base(2), 2, std::nullopt);
  EXPECT_EQ((direct * direct).inverse(), s);
}

TEST(Series, PentagonalProduct) {
  GradedSeries s = expand_pochhammer(Box::univariate(60), q_base(8), 8, std::nullopt);
  std::map<int, int> expected{{0, 1}, {8, -1}, {16, -1}, {40, 1}, {56, 1}};
  for (int n = 0; n <= 60; ++n) {
    int e = expected.count(n) ? expected[n] : 0;
    EXPECT_EQ(s.coefficient(n), e) << n;
  }
}

TEST(Series, PlusAndMinusProductsAgreeModTwo) {
  GradedSeries minus = expand_pochhammer(Box::univariate(100), q_base(8), 8, std::nullopt);
  GradedSeries plus = beo_self_conjugate(100);
  for (int n = 0; n <= 100; ++n) {
    Integer d = plus.coefficient(n) - minus.coefficient(n);
    EXPECT_TRUE(mpz_even_p(d.get_mpz_t())) << n;
  }
  EXPECT_EQ(plus.coefficient(0), 1);
}

TEST(Series, EulerIdentityForSelfConjugateBeo) {
  EXPECT_EQ(beo_self_conjugate(300), beo_self_conjugate_sum(300));
}

TEST(MockTheta, MatchTermwiseDenseExpansion) {
  const int order = 200;
  EXPECT_EQ(mock_theta(MockTheta::nu, order), from_dense(oracle::dense_nu(order)));
  EXPECT_EQ(mock_theta(MockTheta::omega, order), from_dense(oracle::dense_omega(order)));
  EXPECT_EQ(mock_theta(MockTheta::psi3, order), from_dense(oracle::dense_psi(order)));
}

TEST(MockTheta, SmallCoefficients) {
  GradedSeries nu_neg = mock_theta(MockTheta::nu, 10).negate_q();
  EXPECT_EQ(nu_neg.coefficient(6), 4);
  GradedSeries psi = mock_theta(MockTheta::psi3, 10);
  EXPECT_EQ(psi.coefficient(0), 0);
  EXPECT_EQ(psi.coefficient(1), 1);
  EXPECT_EQ(psi.coefficient(4), 2);
}

TEST(MockTheta, EtaIdentities) {
  const int order = 200;
  GradedSeries nu = mock_theta(MockTheta::nu, order);
  GradedSeries q_omega_q2 = mock_theta(MockTheta::omega, order).substitute_q(2).shifted(q_pow(1));
  GradedSeries eta = eta_product(order);
  EXPECT_EQ(nu + q_omega_q2, eta);
  EXPECT_EQ(nu.negate_q() - q_omega_q2, eta);
}

TEST(MockTheta, DegenerateOrders) {
  EXPECT_EQ(mock_theta(MockTheta::nu, 0).coefficient(0), 1);
  EXPECT_EQ(mock_theta(MockTheta::omega, 0).coefficient(0), 1);
  EXPECT_TRUE(mock_theta(MockTheta::psi3, 0).is_zero());
  EXPECT_THROW(mock_theta(MockTheta::nu, -1), series_error);
}

TEST(Bivariate, BeoAtZOneIsEtaProduct) {
  EXPECT_EQ(beo_bivariate(200).specialize_z_one(), eta_product(200));
}

TEST(Bivariate, BeoSupportCongruence) {
  GradedSeries s = beo_bivariate(80);
  for (const auto& [m, c] : s.terms()) {
    EXPECT_EQ(((m.z % 2) + 2) % 2, 0);
    EXPECT_EQ((((m.z - m.q) % 4) + 4) % 4, 0) << m.q << " " << m.z;
    EXPECT_LE(std::abs(m.z), m.q);
  }
}

TEST(Bivariate, BoeTotalAtNine) {
  GradedSeries s = boe_bivariate(30).specialize_z_one();
  EXPECT_EQ(s.coefficient(9), 8);
  for (int n = 0; n <= 30; n += 2) EXPECT_EQ(s.coefficient(n), 0) << n;
}

TEST(Bivariate, BoeSymmetricInZ) {
  GradedSeries s = boe_bivariate(60);
  for (const auto& [m, c] : s.terms()) {
    EXPECT_EQ(s.coefficient(Monomial{m.q, 0, 0, -m.z}), c);
  }
}

TEST(Builders, NamesRoundTrip) {
  for (auto f : {SeriesFamily::nu, SeriesFamily::omega, SeriesFamily::psi3, SeriesFamily::beo_bivariate,
                 SeriesFamily::boe_bivariate, SeriesFamily::beo_self_conjugate, SeriesFamily::boe_self_conjugate,
                 SeriesFamily::p0, SeriesFamily::p1, SeriesFamily::eta_product}) {
    EXPECT_EQ(parse_series_family(series_family_name(f)), f);
    EXPECT_NO_THROW(build_family(f, 12));
  }
  EXPECT_FALSE(parse_series_family("BOGUS").has_value());
  EXPECT_THROW(build_family(SeriesFamily::nu, -1), series_error);
}

TEST(Builders, P0AndP1AgainstDenseSums) {
  const int order = 120;
  oracle::Dense p0(order + 1), p1(order + 1);
  for (int n = 1; 2 * n * n <= order; ++n) {
    oracle::Dense den = oracle::dense_pochhammer(order, 1, 2, n);
    p0 = oracle::dense_add(p0, oracle::dense_shift(oracle::dense_inverse(oracle::dense_mul(den, den)), 2 * n * n));
  }
  for (int n = 1; 2 * n * n + 2 * n <= order; ++n) {
    oracle::Dense den =
        oracle::dense_mul(oracle::dense_pochhammer(order, 1, 2, n), oracle::dense_pochhammer(order, 1, 2, n + 1));
    p1 = oracle::dense_add(p1, oracle::dense_shift(oracle::dense_inverse(den), 2 * n * n + 2 * n));
  }
  EXPECT_EQ(p0_series(order), from_dense(p0));
  EXPECT_EQ(p1_series(order), from_dense(p1));
}

TEST(Builders, SelfConjugateBoeAgainstDenseSum) {
  const int order = 150;
  oracle::Dense d(order + 1);
  for (int n = 1; 4 * n * n - 1 <= order; ++n) {
    d = oracle::dense_add(d, oracle::dense_shift(oracle::dense_inverse(oracle::dense_pochhammer(order, 4, 8, n)),
                                                 4 * n * n - 1));
  }
  EXPECT_EQ(boe_self_conjugate(order), from_dense(d));
}

TEST(Engine, ErrorsAreReported) {
  GradedSeries two = GradedSeries::monomial(Box::univariate(5), Monomial{}, 2);
  EXPECT_THROW(two.inverse(), series_error);
  EXPECT_THROW(GradedSeries::one(Box::univariate(5)) + GradedSeries::one(Box::univariate(6)), series_error);
  EXPECT_THROW(two.divided_exactly(3), series_error);
  EXPECT_EQ(two.divided_exactly(2), GradedSeries::one(Box::univariate(5)));
  GradedSeries s = GradedSeries::one(Box::bivariate(5));
  EXPECT_THROW(s.divide_one_minus(1, Monomial{0, 0, 0, 2}), series_error);
  EXPECT_THROW(apply_pochhammer(s, PochhammerBase{Monomial{0, 0, 0, 2}, 1}, 0, std::nullopt), series_error);
  GradedSeries pure_z = s + GradedSeries::monomial(Box::bivariate(5), Monomial{0, 0, 0, 1}, 1);
  EXPECT_THROW(pure_z.inverse(), series_error);
  EXPECT_THROW(GradedSeries::one(Box::univariate(5)).substitute_q(0), series_error);
  EXPECT_THROW(GradedSeries::one(Box::univariate(5)).shifted(q_pow(-1)), series_error);
}

TEST(Engine, FinitePochhammerWithZeroStep) {
  // (q;1)_3 = (1-q)^3.
  GradedSeries s = expand_pochhammer(Box::univariate(5), q_base(1), 0, 3);
  std::vector<Integer> expected{1, -3, 3, -1, 0, 0};
  EXPECT_EQ(s.q_coefficients(), expected);
}

TEST(Property, RingLaws) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    Box box = trial % 2 ? Box::bivariate(10) : Box::univariate(30);
    GradedSeries x = random_series(box, rng, false);
    GradedSeries y = random_series(box, rng, false);
    GradedSeries w = random_series(box, rng, false);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ((x * y) * w, x * (y * w));
    EXPECT_EQ(x * (y + w), x * y + x * w);
    EXPECT_EQ(x - x, GradedSeries::zero(box));
    EXPECT_EQ(-(-x), x);
  }
}

TEST(Property, InverseAndFactorRoundTrips) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    Box box = trial % 2 ? Box::bivariate(9) : Box::univariate(40);
    GradedSeries x = random_series(box, rng, true);
    EXPECT_EQ(x * x.inverse(), GradedSeries::one(box));
    int qe = std::uniform_int_distribution<int>(1, 6)(rng);
    int ze = box.z_window ? std::uniform_int_distribution<int>(-qe, qe)(rng) : 0;
    int sign = trial % 3 == 0 ? -1 : 1;
    GradedSeries y = x;
    y.multiply_one_minus(sign, Monomial{qe, 0, 0, ze});
    GradedSeries factor = GradedSeries::one(box) - GradedSeries::monomial(box, Monomial{qe, 0, 0, ze}, sign);
    EXPECT_EQ(y, x * factor);
    y.divide_one_minus(sign, Monomial{qe, 0, 0, ze});
    EXPECT_EQ(y, x);
  }
}

TEST(Property, NegateAndSubstitute) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    Box box = Box::univariate(40);
    GradedSeries x = random_series(box, rng, false);
    GradedSeries y = random_series(box, rng, false);
    EXPECT_EQ((x * y).negate_q(), x.negate_q() * y.negate_q());
    EXPECT_EQ((x * y).substitute_q(2), x.substitute_q(2) * y.substitute_q(2));
    EXPECT_EQ(x.negate_q().negate_q(), x);
  }
}

}  // namespace
