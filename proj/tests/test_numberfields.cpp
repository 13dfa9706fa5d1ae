#include <gtest/gtest.h>

#include <map>
#include <random>

#include "isospec/core/primes.hpp"
#include "isospec/numberfields/census.hpp"
#include "isospec/numberfields/discriminant.hpp"
#include "isospec/numberfields/io.hpp"
#include "isospec/numberfields/zp_poly.hpp"
#include "oracles.hpp"

using namespace isospec;
using namespace isospec::numberfields;

namespace {

template <class F>
Errc code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return Errc::InvalidArgument;
}

Integer sylvester_resultant(const IntPolynomial& a, const IntPolynomial& b) {
  const long m = a.degree(), n = b.degree();
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size, 0));
  for (long r = 0; r < n; ++r)
    for (long i = 0; i <= m; ++i) s[r][r + i] = a.coefficient(m - i);
  for (long r = 0; r < m; ++r)
    for (long i = 0; i <= n; ++i) s[n + r][r + i] = b.coefficient(n - i);
  return oracle::cofactor_det(s);
}

std::vector<unsigned> degrees_by_root_search(const IntPolynomial& f, long p) {
  // only valid for degree <= 3: no roots means irreducible, one root leaves a quadratic
  std::vector<long> roots;
  for (long x = 0; x < p; ++x) {
    Integer v = f(Integer(x)) % p;
    if (v == 0) roots.push_back(x);
  }
  const unsigned n = static_cast<unsigned>(f.degree());
  if (roots.empty()) return {n};
  if (roots.size() == 1 && n == 3) return {2, 1};
  return std::vector<unsigned>(n, 1);
}

IntPolynomial poly(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPolynomial(v);
}

const IntPolynomial kTrinks = poly({3, -7, 0, 0, 0, 0, 0, 1});
const IntPolynomial kPartner = poly({9, -21, -42, 0, 14, 0, 0, 1});

}  // namespace

TEST(Discriminant, Examples) {
  EXPECT_EQ(poly_discriminant(poly({1, 0, 1})), -4);
  EXPECT_EQ(poly_discriminant(poly({-2, 0, 1})), 8);
  EXPECT_EQ(poly_discriminant(poly({-1, 1})), 1);
  EXPECT_EQ(poly_discriminant(poly({1, 2, 3})), 4 - 12);
  EXPECT_EQ(code_of([] { poly_discriminant(poly({1, -2, 1})); }), Errc::ZeroDiscriminant);
  EXPECT_EQ(code_of([] { poly_discriminant(poly({5})); }), Errc::InvalidArgument);
  const Integer d = pow(Integer(3), 8) * pow(Integer(7), 8);
  EXPECT_EQ(poly_discriminant(kTrinks), d);
  EXPECT_EQ(poly_discriminant(kPartner), d);
}

TEST(Discriminant, ResultantMatchesSylvester) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long> c(-9, 9);
  for (int t = 0; t < 150; ++t) {
    const long m = 1 + t % 4, n = 1 + (t / 4) % 3;
    std::vector<Integer> a(m + 1), b(n + 1);
    for (auto& x : a) x = c(rng);
    for (auto& x : b) x = c(rng);
    if (a.back() == 0) a.back() = 1;
    if (b.back() == 0) b.back() = -2;
    const IntPolynomial A(a), B(b);
    EXPECT_EQ(resultant(A, B), sylvester_resultant(A, B)) << A.to_string() << " , " << B.to_string();
    const Integer res = sylvester_resultant(A, A.derivative());
    const Integer sign = (m * (m - 1) / 2) % 2 ? -1 : 1;
    if (res != 0 && m >= 2) {
      EXPECT_EQ(poly_discriminant(A) * A.leading(), sign * res);
    }
  }
}

TEST(FactorDegrees, MatchExhaustiveSearch) {
  std::mt19937_64 rng(123);
  for (long p : {2, 3, 5, 7, 11, 13}) {
    const auto irr = oracle::fp::irreducibles(p, 4);
    std::uniform_int_distribution<long> c(0, p - 1);
    for (int t = 0; t < 120; ++t) {
      const long deg = 1 + t % 4;
      oracle::fp::Poly f(deg + 1);
      for (auto& x : f) x = c(rng);
      if (f.back() == 0) f.back() = 1 + t % (p - 1);
      if (t % 5 == 0 && deg >= 2) {  // force a repeated factor
        oracle::fp::Poly g{c(rng), 1};
        oracle::fp::Poly h(deg - 1);
        for (auto& x : h) x = c(rng);
        h.back() = 1;
        f = oracle::fp::mul(oracle::fp::mul(g, g, p), h, p);
        f.resize(deg + 1, 0);
        oracle::fp::trim(f);
      }
      std::vector<std::uint64_t> coeffs(f.begin(), f.end());
      const auto got = factor_degrees(FpPoly(static_cast<std::uint64_t>(p), coeffs));
      EXPECT_EQ(got, oracle::fp::degrees_by_trial_division(f, p, irr)) << "p = " << p << " trial " << t;
    }
  }
}

TEST(FactorDegrees, BlocksReassemble) {
  std::mt19937_64 rng(321);
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 101ULL, 10007ULL, 1000000007ULL}) {
    std::uniform_int_distribution<std::uint64_t> c(0, p - 1);
    for (int t = 0; t < 30; ++t) {
      // random product with p-th powers and squares mixed in
      FpPoly f = FpPoly::one(p);
      const int parts = 1 + t % 4;
      for (int i = 0; i < parts; ++i) {
        std::vector<std::uint64_t> g(2 + (t + i) % 3);
        for (auto& x : g) x = c(rng);
        g.back() = 1;
        FpPoly gp(p, g);
        const unsigned power = p <= 3 && i == 0 ? static_cast<unsigned>(p) : 1 + i % 2;
        for (unsigned k = 0; k < power; ++k) f = f * gp;
      }
      FpPoly rebuilt = FpPoly::one(p);
      unsigned total = 0;
      for (const auto& b : factor_blocks(f)) {
        EXPECT_EQ(b.product.degree() % b.degree, 0);
        for (unsigned k = 0; k < b.multiplicity; ++k) rebuilt = rebuilt * b.product;
      }
      EXPECT_EQ(rebuilt, f.monic());
      for (unsigned d : factor_degrees(f)) total += d;
      EXPECT_EQ(static_cast<long>(total), f.degree());
    }
  }
}

TEST(FactorDegrees, LargePrimes) {
  const auto x2p1 = poly({1, 0, 1});
  EXPECT_EQ(factor_degrees_mod_p(x2p1, Integer(1000000007)), (SplittingType{2}));
  EXPECT_EQ(factor_degrees_mod_p(x2p1, Integer(1000000009)), (SplittingType{1, 1}));
  // largest prime below the 2^62 working limit; p = 3 mod 4
  EXPECT_EQ(factor_degrees_mod_p(x2p1, Integer("4611686018427387847")), (SplittingType{2}));
  EXPECT_EQ(code_of([&] { factor_degrees_mod_p(x2p1, Integer("18446744073709551557")); }), Errc::NotPrime);
  EXPECT_EQ(factor_degrees_mod_p(poly({-2, 0, 0, 1}), Integer(7)), degrees_by_root_search(poly({-2, 0, 0, 1}), 7));
  EXPECT_EQ(factor_degrees_mod_p(poly({-2, 0, 0, 1}), Integer(7)), (SplittingType{3}));
}

TEST(FactorDegrees, Errors) {
  const auto x2p1 = poly({1, 0, 1});
  EXPECT_EQ(code_of([&] { factor_degrees_mod_p(x2p1, Integer(9)); }), Errc::NotPrime);
  EXPECT_EQ(code_of([&] { factor_degrees_mod_p(x2p1, Integer(1)); }), Errc::NotPrime);
  EXPECT_EQ(code_of([&] { factor_degrees_mod_p(x2p1, Integer(2)); }), Errc::RamifiedPrime);
  EXPECT_EQ(code_of([&] { factor_degrees_mod_p(poly({1, 0, 3}), Integer(3)); }), Errc::RamifiedPrime);  // lc
  EXPECT_EQ(code_of([&] { factor_degrees_mod_p(kTrinks, Integer(7)); }), Errc::RamifiedPrime);
}

TEST(Census, SmallExamples) {
  const auto c = splitting_census(poly({1, 0, 1}), 10);
  EXPECT_EQ(c.entries, (std::map<std::uint64_t, SplittingType>{{3, {2}}, {5, {1, 1}}, {7, {2}}}));
  EXPECT_EQ(c.skipped, (std::vector<std::uint64_t>{2}));
  for (std::uint64_t p : {3, 5, 7}) EXPECT_EQ(c.entries.at(p), degrees_by_root_search(poly({1, 0, 1}), static_cast<long>(p)));

  const auto d = splitting_census(poly({-2, 0, 1}), 10);
  EXPECT_EQ(d.entries, (std::map<std::uint64_t, SplittingType>{{3, {2}}, {5, {2}}, {7, {1, 1}}}));
  EXPECT_EQ(d.skipped, (std::vector<std::uint64_t>{2}));

  const auto lin = splitting_census(poly({-1, 1}), 100);
  EXPECT_TRUE(lin.skipped.empty());
  EXPECT_EQ(lin.entries.size(), primes_up_to(100).size());
  for (const auto& [p, t] : lin.entries) EXPECT_EQ(t, SplittingType{1});

  EXPECT_EQ(code_of([] { splitting_census(poly({1, 0, 1}), 1); }), Errc::InvalidArgument);
  EXPECT_EQ(to_string(SplittingType{4, 2, 1}), "4+2+1");
}

TEST(Census, Comparisons) {
  const auto f = poly({1, 0, 1}), g = poly({-2, 0, 1});
  EXPECT_TRUE(census_equal(f, f, 50).equal);
  const auto fg = census_equal(f, g, 50);
  const auto gf = census_equal(g, f, 50);
  EXPECT_FALSE(fg.equal);
  EXPECT_EQ(fg.first_disagreement, gf.first_disagreement);
  EXPECT_FALSE(fg.caveat.empty());

  // first odd prime where x²+1 and x²-2 have different root counts
  std::optional<std::uint64_t> expected;
  for (std::uint64_t p : primes_up_to(50)) {
    if (p == 2) continue;
    if (degrees_by_root_search(f, static_cast<long>(p)) != degrees_by_root_search(g, static_cast<long>(p))) {
      expected = p;
      break;
    }
  }
  ASSERT_TRUE(expected.has_value());
  EXPECT_EQ(fg.first_disagreement, expected);
  EXPECT_EQ(*expected, 5u);

  EXPECT_FALSE(census_equal(f, poly({1, 0, 0, 1, 1}), 50).equal);
}

TEST(Census, DegreeSevenPair) {
  const auto a = splitting_census(kTrinks, 10000);
  const auto b = splitting_census(kPartner, 10000);
  EXPECT_EQ(a.skipped, (std::vector<std::uint64_t>{3, 7}));
  EXPECT_EQ(a.skipped, b.skipped);
  const auto cmp = compare_censuses(a, b);
  EXPECT_TRUE(cmp.equal);
  EXPECT_EQ(cmp.compared_count, primes_up_to(10000).size() - 2);
  EXPECT_EQ(a.entries, b.entries);

  // Frobenius classes should be spread like GL(3,2) cycle types on 7 points.
  const std::map<SplittingType, double> chebotarev{
      {{1, 1, 1, 1, 1, 1, 1}, 1.0 / 168}, {{2, 2, 1, 1, 1}, 21.0 / 168}, {{3, 3, 1}, 56.0 / 168},
      {{4, 2, 1}, 42.0 / 168},           {{7}, 48.0 / 168}};
  std::map<SplittingType, std::size_t> seen;
  for (const auto& [p, t] : a.entries) ++seen[t];
  for (const auto& [t, n] : seen) EXPECT_TRUE(chebotarev.count(t)) << to_string(t);
  for (const auto& [t, freq] : chebotarev) {
    const double observed = static_cast<double>(seen[t]) / static_cast<double>(a.entries.size());
    EXPECT_NEAR(observed, freq, 0.05) << to_string(t);
  }
  // a different cycle structure: x^7 - x - 1 has Galois group S7
  EXPECT_FALSE(census_equal(kTrinks, poly({-1, -1, 0, 0, 0, 0, 0, 1}), 200).equal);
}

TEST(Dirichlet, Coefficients) {
  const auto c = splitting_census(poly({1, 0, 1}), 10);
  const auto a = dirichlet_coefficients(c, 10);
  ASSERT_EQ(a.size(), 10u);
  EXPECT_EQ(a[0], 1u);  // a_1
  EXPECT_EQ(a[4], 2u);  // a_5
  EXPECT_EQ(a[2], 0u);  // a_3
  EXPECT_EQ(a[8], 1u);  // a_9
  EXPECT_EQ(a[1], 0u);  // a_2: the skipped prime contributes nothing
  EXPECT_EQ(a[6], 0u);  // a_7
  EXPECT_EQ(code_of([&] { dirichlet_coefficients(c, 11); }), Errc::InsufficientCensus);

  const auto lin = dirichlet_coefficients(splitting_census(poly({-1, 1}), 60), 60);
  for (auto x : lin) EXPECT_EQ(x, 1u);

  // multiplicativity against a direct count of ideal norms for x²-2 (split at 7)
  const auto b = dirichlet_coefficients(splitting_census(poly({-2, 0, 1}), 50), 50);
  EXPECT_EQ(b[48], 3u);  // a_49: 7 splits, so (e1, e2) with e1+e2 = 2
  EXPECT_EQ(b[14], b[2] * b[4]);
}

TEST(PolyIo, ParseAndErrors) {
  EXPECT_EQ(parse_polynomial_text("3 -7 0 0 0 0 0 1\n"), kTrinks);
  EXPECT_EQ(parse_polynomial_text("# comment\n1 0 1"), poly({1, 0, 1}));
  for (const char* bad : {"", "5", "1 x 1", "1 0 0\n"}) {
    try {
      parse_polynomial_text(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_TRUE(e.code() == Errc::ParseError || e.code() == Errc::InvalidArgument) << bad;
    }
  }
  const std::string dir = ISOSPEC_DATA_DIR;
  EXPECT_EQ(read_polynomial_file(dir + "/trinks7.poly"), kTrinks);
  EXPECT_EQ(read_polynomial_file(dir + "/trinks7_partner.poly"), kPartner);
  EXPECT_EQ(code_of([&] { read_polynomial_file(dir + "/nope.poly"); }), Errc::ParseError);

  const auto csv = census_csv(splitting_census(poly({1, 0, 1}), 7));
  EXPECT_EQ(csv, "prime,partition\n2,skipped\n3,2\n5,1+1\n7,2\n");
}
