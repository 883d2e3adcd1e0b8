#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "parsep/arithmetic.hpp"
#include "parsep/qseries.hpp"

using namespace parsep;

namespace {

TEST(Primality, SmallRangeAgainstTrialDivision) {
  for (std::uint64_t n = 0; n < 20000; ++n) {
    auto f = oracle::trial_factor(n);
    bool prime = n >= 2 && f.size() == 1 && f.begin()->second == 1;
    EXPECT_EQ(is_prime(n), prime) << n;
  }
}

TEST(Primality, KnownLargeValues) {
  EXPECT_TRUE(is_prime(18446744073709551557ULL));  // largest 64-bit prime
  EXPECT_FALSE(is_prime(3215031751ULL));           // strong pseudoprime to 2, 3, 5, 7
  EXPECT_FALSE(is_prime(3825123056546413051ULL));  // strong pseudoprime to bases up to 23
  EXPECT_TRUE(is_prime(1000000007ULL));
}

TEST(Factorize, Examples) {
  EXPECT_EQ(factorize(95).factors, (std::map<std::uint64_t, int>{{5, 1}, {19, 1}}));
  EXPECT_EQ(factorize(23).factors, (std::map<std::uint64_t, int>{{23, 1}}));
  EXPECT_EQ(factorize(1).factors.size(), 0u);
  EXPECT_THROW(factorize(0), std::invalid_argument);
  // Two primes above the trial-division bound.
  std::uint64_t p = 1000003, q = 1000033;
  EXPECT_EQ(factorize(p * q).factors, (std::map<std::uint64_t, int>{{p, 1}, {q, 1}}));
  EXPECT_EQ(factorize(p * p).factors, (std::map<std::uint64_t, int>{{p, 2}}));
}

TEST(Factorize, AgreesWithTrialDivisionBelowOneMillion) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    std::uint64_t n = std::uniform_int_distribution<std::uint64_t>(1, 1'000'000)(rng);
    EXPECT_EQ(factorize(n).factors, oracle::trial_factor(n)) << n;
  }
}

TEST(Factorize, RoundTripRandom60Bit) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10000; ++i) {
    std::uint64_t n = std::uniform_int_distribution<std::uint64_t>(1, (1ULL << 60) - 1)(rng);
    Factorization f = factorize(n);
    ASSERT_EQ(f.product(), n);
    for (const auto& [prime, e] : f.factors) ASSERT_TRUE(is_prime(prime)) << prime << " in " << n;
  }
}

TEST(Wang, Examples) {
  EXPECT_TRUE(wang_predicate(1));   // 23
  EXPECT_FALSE(wang_predicate(4));  // 95 = 5 * 19
  EXPECT_THROW(wang_predicate(0), std::invalid_argument);
}

TEST(Wang, MatchesTermwisePsiParity) {
  oracle::Dense psi = oracle::dense_psi(500);
  for (std::uint64_t m = 1; m <= 500; ++m) {
    bool odd = mpz_odd_p(psi[m].get_mpz_t()) != 0;
    EXPECT_EQ(wang_predicate(m), odd) << m;
  }
}

TEST(Pentagonal, Examples) {
  EXPECT_TRUE(pentagonal_4k_predicate(0));
  EXPECT_TRUE(pentagonal_4k_predicate(8));
  EXPECT_TRUE(pentagonal_4k_predicate(16));
  EXPECT_FALSE(pentagonal_4k_predicate(12));
  EXPECT_FALSE(pentagonal_4k_predicate(1));
}

TEST(Pentagonal, MatchesWindowScanAndProductParity) {
  std::set<std::int64_t> exponents;
  for (std::int64_t k = -30; k <= 30; ++k) exponents.insert(4 * k * (3 * k - 1));
  oracle::Dense prod = oracle::dense_pochhammer(500, 8, 8, -1);
  for (std::uint64_t n = 0; n <= 500; ++n) {
    bool expected = exponents.count(static_cast<std::int64_t>(n)) != 0;
    EXPECT_EQ(pentagonal_4k_predicate(n), expected) << n;
    EXPECT_EQ(mpz_odd_p(prod[n].get_mpz_t()) != 0, expected) << n;
  }
}

TEST(Delta, LinearScan) {
  for (std::uint64_t ell : {5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 101ULL}) {
    std::uint64_t d = 1;
    while ((24 * d) % ell != 1) ++d;
    EXPECT_EQ(delta_ell(ell), d) << ell;
  }
  EXPECT_EQ(delta_ell(5), 4u);
  EXPECT_EQ(delta_ell(7), 5u);
  EXPECT_EQ(delta_ell(23), 1u);
  EXPECT_THROW(delta_ell(3), std::invalid_argument);
  EXPECT_THROW(delta_ell(9), std::invalid_argument);
}

}  // namespace
