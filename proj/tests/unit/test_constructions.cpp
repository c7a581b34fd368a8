#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <unordered_set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "slgen/constructions/frobenius.hpp"
#include "slgen/constructions/genpair.hpp"
#include "slgen/constructions/sets.hpp"
#include "slgen/constructions/sidon.hpp"
#include "slgen/poly/algorithms.hpp"
#include "slgen/poly/text.hpp"

using namespace slgen;
using namespace slgen::testing;

namespace {

std::vector<Fq::value_type> ints(const GaloisFieldPtr& f, std::initializer_list<std::int64_t> v) {
  std::vector<Fq::value_type> out;
  for (auto a : v) out.push_back(f->from_int(a));
  return out;
}

// Greedy over the integers, recomputing every sum from scratch.
std::vector<std::int64_t> greedy_oracle(unsigned n) {
  std::vector<std::int64_t> a{0};
  for (std::int64_t c = 1; a.size() < n + 1; ++c) {
    auto cand = a;
    cand.push_back(c);
    std::set<std::int64_t> sums;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < cand.size(); ++i)
      for (std::size_t j = i; j < cand.size(); ++j, ++pairs) sums.insert(cand[i] + cand[j]);
    if (sums.size() == pairs) a = cand;
  }
  return a;
}

}  // namespace

TEST(Consistent, Examples) {
  auto f101 = GaloisField::prime(101);
  auto d = check_consistent(f101, ints(f101, {1, 2, 4, -7}));
  EXPECT_TRUE(d.consistent);
  EXPECT_TRUE(d.sum_zero);
  EXPECT_TRUE(d.all_nonzero);

  auto f4 = GaloisField::create(2, 2);
  for (Fq::value_type a = 0; a < 4; ++a)
    for (Fq::value_type b = 0; b < 4; ++b) EXPECT_FALSE(check_consistent(f4, {a, b}).consistent);

  // A sharply traceless 3-set in characteristic 3 is an arithmetic progression.
  auto f9 = GaloisField::create(3, 2);
  const auto y = f9->generator();
  std::vector<Fq::value_type> st{f9->one(), y, f9->neg(f9->add(f9->one(), y))};
  EXPECT_TRUE(check_sharply_traceless_set(f9, st).sharply_traceless);
  EXPECT_FALSE(check_consistent(f9, st).consistent);
}

TEST(Consistent, ZeroEntryIsFlaggedSeparately) {
  auto f7 = GaloisField::prime(7);
  auto d = check_consistent(f7, ints(f7, {0, 1, 3}));
  EXPECT_FALSE(d.all_nonzero);
  EXPECT_TRUE(d.consistent);
  EXPECT_FALSE(d.sum_zero);
  EXPECT_FALSE(check_consistent(f7, ints(f7, {1, 1, 5})).consistent);
}

TEST(Consistent, MatchesFourIndexDefinition) {
  Rng rng(11);
  int agree_true = 0;
  for (const char* spec : {"5", "7", "11", "13", "9", "25", "4"}) {
    auto f = parse_field_spec(spec);
    for (int k = 0; k < 200; ++k) {
      const auto size = 1 + uniform_below(rng, 6);
      std::vector<Fq::value_type> v(size);
      for (auto& a : v) a = f->random(rng);
      const bool expected = oracle::consistent_four_index(*f, v);
      ASSERT_EQ(check_consistent(f, v).consistent, expected) << spec;
      agree_true += expected;
    }
  }
  EXPECT_GT(agree_true, 100);
}

TEST(SharplyTraceless, Examples) {
  auto f3 = GaloisField::prime(3);
  auto s = check_sharply_traceless_set(f3, ints(f3, {1, -1}));
  EXPECT_TRUE(s.sharply_traceless);
  EXPECT_TRUE(s.consistent);

  auto f5 = GaloisField::prime(5);
  EXPECT_FALSE(check_sharply_traceless_set(f5, ints(f5, {1, 1, -2})).sharply_traceless);

  for (auto [p, k] : {std::pair{5U, 3U}, {3U, 4U}, {7U, 2U}}) {
    auto f = GaloisField::create(p, k);
    for (unsigned n = 2; n <= k + 1; ++n) {
      std::vector<Fq::value_type> v;
      auto sum = f->zero();
      for (unsigned i = 0; i + 1 < n; ++i) {
        std::vector<std::uint32_t> digits(i + 1, 0);
        digits[i] = 1;
        v.push_back(f->from_digits(digits));
        sum = f->add(sum, v.back());
      }
      v.push_back(f->neg(sum));
      auto st = check_sharply_traceless_set(f, v);
      EXPECT_TRUE(st.sharply_traceless);
      EXPECT_EQ(st.rank, n - 1);
      // Consistent unless (n, p) = (3, 3).
      EXPECT_EQ(st.consistent, !(n == 3 && p == 3));
    }
  }
}

TEST(SharplyTraceless, ImpliesConsistentOutsideThreeThree) {
  Rng rng(5);
  for (const char* spec : {"5", "7", "25", "27", "9"}) {
    auto f = parse_field_spec(spec);
    for (int k = 0; k < 300; ++k) {
      const unsigned n = 2 + static_cast<unsigned>(uniform_below(rng, 4));
      std::vector<Fq::value_type> v(n);
      auto sum = f->zero();
      for (unsigned i = 0; i + 1 < n; ++i) sum = f->add(sum, v[i] = f->random(rng));
      v.back() = f->neg(sum);
      auto st = check_sharply_traceless_set(f, v);
      if (st.sharply_traceless && !(n == 3 && f->characteristic() == 3)) EXPECT_TRUE(st.consistent);
    }
  }
}

TEST(Sidon, GreedyAgreesWithOracle) {
  for (unsigned n = 1; n <= 30; ++n) EXPECT_EQ(sidon_greedy(n).elems, greedy_oracle(n)) << n;
  EXPECT_EQ(sidon_greedy(4).elems, (std::vector<std::int64_t>{0, 1, 3, 7, 12}));
}

TEST(Sidon, BuildersAreSidon) {
  for (unsigned n = 1; n <= 50; ++n) {
    const auto g = sidon_greedy(n), e = sidon_erdos_turan(n);
    ASSERT_EQ(g.elems.size(), n + 1);
    ASSERT_EQ(e.elems.size(), n + 1);
    EXPECT_TRUE(is_sidon(g));
    EXPECT_TRUE(is_sidon(e));
    EXPECT_TRUE(is_distinct_sum_set(e));
  }
  const auto et = sidon_erdos_turan(10);
  EXPECT_EQ(et.elems.size(), 11u);
  EXPECT_LT(et.elems.back(), 242);
  EXPECT_FALSE(is_sidon(SidonSet{{0, 1, 2}}));
  EXPECT_TRUE(is_distinct_sum_set(SidonSet{{0, 1, 2, 5, 11}}));
  EXPECT_FALSE(is_distinct_sum_set(SidonSet{{1, 2}}));
  EXPECT_THROW(sidon_greedy(0), PreconditionError);
}

TEST(Sidon, ConsistentFromSidon) {
  const SidonSet s{{0, 1, 2, 5}};
  EXPECT_EQ(sidon_diagonal(s), (std::vector<std::int64_t>{1, 2, 5, -8}));
  auto f101 = GaloisField::prime(101);
  auto d = consistent_from_sidon(s, f101);
  EXPECT_TRUE(d.consistent);
  EXPECT_TRUE(d.sum_zero);
  EXPECT_THROW(consistent_from_sidon(s, GaloisField::prime(3)), ConsistencyLost);
  EXPECT_THROW(consistent_from_sidon(s, GaloisField::prime(2)), PreconditionError);

  // Adjoining 0 to a consistent set gives distinct pairwise sums.
  for (unsigned n = 2; n <= 8; ++n) {
    auto set = sidon_greedy(n);
    std::int64_t bound = 0;
    for (auto a : sidon_diagonal(set)) bound = std::max(bound, std::abs(a));
    std::uint64_t p = 4 * static_cast<std::uint64_t>(bound) + 1;
    while (!is_prime(p)) ++p;
    auto f = GaloisField::prime(static_cast<std::uint32_t>(p));
    auto v = consistent_from_sidon(set, f).values;
    v.push_back(0);
    std::unordered_set<Fq::value_type> sums;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j) EXPECT_TRUE(sums.insert(f->add(v[i], v[j])).second);
  }
}

TEST(GenPair, FromConsistent) {
  auto f101 = GaloisField::prime(101);
  auto c = genpair_from_consistent(check_consistent(f101, ints(f101, {1, 2, 4, -7})));
  EXPECT_TRUE(c.verdict);
  EXPECT_EQ(c.closure_dim, 15u);

  auto f3 = GaloisField::prime(3);
  auto c2 = genpair_from_consistent(check_consistent(f3, ints(f3, {1, -1})));
  EXPECT_TRUE(c2.verdict);
  EXPECT_EQ(c2.closure_dim, 3u);

  EXPECT_THROW(genpair_from_consistent(check_consistent(f3, ints(f3, {0, 1, 2}))), PreconditionError);
  EXPECT_THROW(genpair_from_consistent(check_consistent(f101, ints(f101, {1, 2, 4}))), PreconditionError);
}

TEST(Normal, SmallExamples) {
  auto f2 = GaloisField::prime(2);
  auto t = TowerField::create(f2, 2);
  EXPECT_TRUE(is_normal(*t, t->generator()));
  EXPECT_FALSE(is_normal(*t, t->one()));
  EXPECT_FALSE(is_normal(*t, t->zero()));
}

TEST(Normal, BetaConjugatesAreSharplyTraceless) {
  for (auto [spec, n] : {std::pair{"3", 4U}, {"3", 5U}, {"5", 3U}, {"9", 2U}, {"7", 4U}, {"2", 5U}}) {
    auto f = parse_field_spec(spec);
    auto t = TowerField::create(f, n);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto r = find_normal_element(*t, seed);
      ASSERT_TRUE(r.is_normal);
      ASSERT_TRUE(r.beta.has_value());
      EXPECT_TRUE(f->is_zero(t->trace(*r.beta)));
      EXPECT_TRUE(check_sharply_traceless_set(t, t->conjugates(*r.beta)).sharply_traceless);
      EXPECT_TRUE(is_sharply_traceless_element(*t, *r.beta));
      ASSERT_EQ(r.min_poly_beta->degree(), static_cast<int>(n));
      EXPECT_TRUE(is_irreducible(*r.min_poly_beta));
      // beta is a root of its minimal polynomial.
      auto acc = t->zero();
      for (int i = r.min_poly_beta->degree(); i >= 0; --i)
        acc = t->add(t->mul(acc, *r.beta), t->embed(r.min_poly_beta->coeff(static_cast<std::size_t>(i))));
      EXPECT_TRUE(t->is_zero(acc));
    }
  }
}

TEST(Normal, NoBetaWhenCharacteristicDividesDegree) {
  auto t = TowerField::create(GaloisField::prime(3), 3);
  auto r = find_normal_element(*t, 1);
  EXPECT_TRUE(r.is_normal);
  EXPECT_FALSE(r.beta.has_value());
}

TEST(StElement, Examples) {
  auto f3 = GaloisField::prime(3), f2 = GaloisField::prime(2);
  auto t27 = TowerField::create(f3, 3);
  EXPECT_FALSE(is_sharply_traceless_element(*t27, t27->zero()));
  EXPECT_EQ(count_st_brute(*t27, 1000), std::optional<std::uint64_t>(6));

  auto t4 = TowerField::create(f2, 2);
  std::vector<std::uint64_t> hits;
  for (std::uint64_t i = 0; i < 4; ++i)
    if (is_sharply_traceless_element(*t4, t4->from_index(i))) hits.push_back(i);
  EXPECT_EQ(hits, std::vector<std::uint64_t>{1});
}

TEST(StElement, CriterionMatchesDefinition) {
  for (auto [spec, n] : {std::pair{"2", 4U}, {"3", 3U}, {"2", 6U}, {"3", 4U}, {"4", 3U}, {"5", 3U}, {"2", 8U}}) {
    auto t = TowerField::create(parse_field_spec(spec), n);
    const auto phi = phi_factorization(*t);
    for (std::uint64_t i = 0; i < t->order_or_zero(); ++i) {
      const auto a = t->from_index(i);
      ASSERT_EQ(is_sharply_traceless_element(*t, a, phi),
                check_sharply_traceless_set(t, t->conjugates(a)).sharply_traceless)
          << spec << " " << n << " " << i;
    }
  }
}

TEST(Counting, ClosedFormExamples) {
  for (const char* spec : {"2", "3", "4", "5", "7", "9", "27", "25"}) {
    auto f = parse_field_spec(spec);
    EXPECT_EQ(count_st_elements(f, 2), f->order() - 1);
  }
  EXPECT_EQ(count_st_elements(GaloisField::prime(3), 3), 6u);
  EXPECT_EQ(count_st_elements(GaloisField::prime(5), 5), 3125u / 5 - 3125u / 25);
  EXPECT_EQ(count_st_elements(GaloisField::prime(7), 7), 117649u - 16807u);
  EXPECT_EQ(count_st_elements(GaloisField::prime(2), 4), 4u);
  EXPECT_EQ(count_st_elements(GaloisField::prime(2), 1), 1u);
  EXPECT_THROW(count_st_elements(GaloisField::prime(3), 60), RepresentationError);
}

TEST(Counting, AgreesWithBruteForce) {
  const std::pair<const char*, unsigned> grid[] = {{"2", 2}, {"2", 3}, {"2", 4}, {"2", 6},  {"2", 8}, {"2", 12},
                                                   {"3", 2}, {"3", 3}, {"3", 4}, {"3", 6},  {"3", 8}, {"4", 2},
                                                   {"4", 3}, {"4", 4}, {"5", 2}, {"5", 3},  {"5", 5}, {"7", 2},
                                                   {"7", 3}, {"7", 4}, {"9", 2}, {"9", 3},  {"9", 4}, {"8", 4},
                                                   {"11", 3}, {"13", 3}, {"16", 3}, {"27", 2}};
  for (auto [spec, n] : grid) {
    auto f = parse_field_spec(spec);
    auto t = TowerField::create(f, n);
    const auto brute = count_st_brute(*t, 6561);
    ASSERT_TRUE(brute.has_value()) << spec << " " << n;
    EXPECT_EQ(*brute, count_st_elements(f, n)) << spec << " " << n;
  }
  EXPECT_FALSE(count_st_brute(*TowerField::create(GaloisField::prime(3), 9), 6561).has_value());
}

TEST(Counting, DefinitionOracleOnSmallTowers) {
  for (auto [spec, n] : {std::pair{"2", 4U}, {"3", 3U}, {"4", 3U}, {"3", 2U}, {"2", 6U}}) {
    auto f = parse_field_spec(spec);
    EXPECT_EQ(oracle::count_st_by_definition(TowerField::create(f, n)), count_st_elements(f, n)) << spec << n;
  }
}

TEST(Counting, FractionAmongTraceless) {
  // Sharply traceless elements among the nonzero traceless ones. The
  // fraction is not monotone in q (Phi may split or not) but stays above
  // 1 - (n - 1)/q.
  const std::pair<unsigned, std::vector<std::pair<std::uint64_t, std::uint64_t>>> expected[] = {
      {2, {{2, 2}, {4, 4}, {6, 6}, {8, 8}}},
      {3, {{6, 8}, {24, 24}, {36, 48}, {72, 80}}},
  };
  const char* specs[] = {"3", "5", "7", "9"};
  for (const auto& [n, fractions] : expected) {
    for (std::size_t i = 0; i < 4; ++i) {
      auto f = parse_field_spec(specs[i]);
      const std::uint64_t q = f->order();
      std::uint64_t traceless = 1;
      for (unsigned k = 1; k < n; ++k) traceless *= q;
      --traceless;
      const auto st = count_st_elements(f, n);
      EXPECT_EQ(st, fractions[i].first);
      EXPECT_EQ(traceless, fractions[i].second);
      EXPECT_GE(static_cast<double>(st) / static_cast<double>(traceless), 1.0 - static_cast<double>(n - 1) / q);
    }
  }
}

TEST(Decomposition, DimensionsAndKernels) {
  for (auto [spec, n] : {std::pair{"2", 4U}, {"3", 3U}, {"3", 6U}, {"2", 6U}, {"5", 4U}, {"4", 3U}, {"9", 3U},
                          {"3", 9U}, {"2", 12U}, {"7", 5U}}) {
    auto f = parse_field_spec(spec);
    auto t = TowerField::create(f, n);
    auto dec = build_decomposition(t);
    std::size_t total = dec.u.dim();
    for (const auto& part : dec.parts) {
      EXPECT_EQ(part.x.dim(), static_cast<std::size_t>(part.pi.degree()));
      EXPECT_EQ(part.w.dim(), (part.mult - 1) * static_cast<std::size_t>(part.pi.degree()));
      if (n % f->characteristic() != 0) EXPECT_EQ(part.w.dim(), 0u);
      total += part.w.dim() + part.x.dim();
    }
    EXPECT_EQ(total, n);
    const auto gamma = construct_st_element(dec);
    EXPECT_TRUE(is_sharply_traceless_element(*t, gamma));
    EXPECT_TRUE(check_sharply_traceless_set(t, t->conjugates(gamma)).sharply_traceless);
    for (const auto& d : divisors_of_xn_minus_1(f, n))
      EXPECT_EQ(frobenius_kernel_dim(*t, d), static_cast<std::size_t>(d.degree())) << spec << " " << n;
  }
}

TEST(Decomposition, ConstructedElementIsAmongBruteForceHits) {
  auto t = TowerField::create(GaloisField::prime(3), 3);
  const auto gamma = construct_st_element(build_decomposition(t));
  std::vector<TowerField::value_type> hits;
  for (std::uint64_t i = 0; i < 27; ++i)
    if (check_sharply_traceless_set(t, t->conjugates(t->from_index(i))).sharply_traceless)
      hits.push_back(t->from_index(i));
  EXPECT_EQ(hits.size(), 6u);
  EXPECT_NE(std::find(hits.begin(), hits.end(), gamma), hits.end());
}

TEST(StElement, SamplerAndFallback) {
  auto t = TowerField::create(GaloisField::prime(3), 6);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    EXPECT_TRUE(is_sharply_traceless_element(*t, find_st_element(t, seed)));
    EXPECT_TRUE(is_sharply_traceless_element(*t, find_st_element(t, seed, 0)));
  }
  EXPECT_EQ(find_st_element(t, 7), find_st_element(t, 7));
}

TEST(Companion, WorkedExampleOverF3) {
  auto f3 = GaloisField::prime(3);
  auto f = parse_polynomial(f3, "-1,-1,-1,1,0,-1,0,1");
  ASSERT_TRUE(is_irreducible(f));
  auto c = companion_genpair(f);
  EXPECT_TRUE(c.verdict);
  EXPECT_EQ(c.closure_dim, 48u);
  const auto& m = c.generators[1];
  // Power sums tr(a^k), k = 1..6, in the first row.
  std::vector<Fq::value_type> first_row;
  for (std::size_t j = 0; j < 7; ++j) first_row.push_back(m(0, j));
  EXPECT_EQ(first_row, (std::vector<Fq::value_type>{0, 0, 2, 0, 1, 2, 2}));
  for (std::size_t i = 1; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) EXPECT_EQ(m(i, j), i == j ? 2u : 0u);
}

TEST(Companion, TraceRowMatrixShape) {
  Rng rng(3);
  for (const char* spec : {"3", "5", "9"}) {
    auto f = parse_field_spec(spec);
    for (unsigned n = 2; n <= 6; ++n) {
      auto t = TowerField::create(f, n);
      auto a = t->random(rng);
      auto m = trace_row_matrix(*t, a);
      EXPECT_EQ(m.trace(), f->sub(t->trace(t->one()), f->from_int(n)));
      EXPECT_TRUE(f->is_zero(m.trace()));
      EXPECT_EQ(rank(m + FqMat::identity(f, n)), 1u);
    }
  }
}

TEST(Companion, ExplicitConjugationOracle) {
  Rng rng(17);
  int checked = 0;
  for (const char* spec : {"3", "5", "9"}) {
    auto f = parse_field_spec(spec);
    for (unsigned n = 2; n <= 6 && checked < 60; ++n) {
      for (int k = 0; k < 12; ++k) {
        auto g = random_monic(f, n, rng);
        auto coeffs = g.coeffs();
        coeffs[n - 1] = 0;
        FqPolyT h(f, coeffs);
        if (!is_irreducible(h)) continue;
        auto t = TowerField::create(f, h);
        auto alpha = t->generator();
        auto res = oracle::check_by_conjugation(t, alpha, companion(h), trace_row_matrix(*t, alpha));
        EXPECT_TRUE(res.diagonalizes) << h;
        EXPECT_TRUE(res.partner_matches) << h;
        ++checked;
      }
    }
  }
  EXPECT_GE(checked, 20);
}

TEST(Companion, Errors) {
  auto f3 = GaloisField::prime(3);
  // x^3 - x - 1: roots a, a+1, a+2 form a progression.
  EXPECT_THROW(companion_genpair(parse_polynomial(f3, "2,2,0,1")), RootsNotConsistent);
  EXPECT_THROW(companion_genpair(parse_polynomial(f3, "1,0,0,0,1")), NotIrreducible);
  EXPECT_THROW(companion_genpair(parse_polynomial(f3, "1,1,1")), PreconditionError);
  EXPECT_THROW(companion_genpair(parse_polynomial(f3, "1,1")), PreconditionError);
}

TEST(AutoGenPair, Dispatch) {
  auto f3 = GaloisField::prime(3);
  EXPECT_EQ(auto_strategy(5, f3), Strategy::normal);
  EXPECT_EQ(auto_strategy(6, f3), Strategy::sharply_traceless);
  EXPECT_EQ(auto_strategy(4, GaloisField::prime(101)), Strategy::sidon);
  EXPECT_EQ(auto_strategy(4, GaloisField::prime(43)), Strategy::normal);

  auto c5 = auto_genpair(5, f3, 1);
  EXPECT_TRUE(c5.verdict);
  EXPECT_EQ(c5.strategy, "normal");
  auto c6 = auto_genpair(6, f3, 1);
  EXPECT_TRUE(c6.verdict);
  EXPECT_EQ(c6.strategy, "sharply-traceless");
  EXPECT_TRUE(auto_genpair(2, parse_field_spec("9"), 0).verdict);
  EXPECT_THROW(auto_genpair(3, f3, 0), ExceptionalCase);
  EXPECT_THROW(auto_genpair(3, parse_field_spec("9"), 0), ExceptionalCase);
  EXPECT_THROW(auto_genpair(4, GaloisField::prime(2), 0), EvenCharacteristic);
  EXPECT_THROW(auto_genpair(1, f3, 0), PreconditionError);
}

TEST(AutoGenPair, EveryStrategyCertifies) {
  for (auto [spec, n] : {std::pair{"5", 4U}, {"7", 3U}, {"9", 4U}, {"3", 4U}, {"25", 5U}, {"5", 5U}, {"3", 2U}}) {
    auto f = parse_field_spec(spec);
    for (auto s : {Strategy::normal, Strategy::sharply_traceless, Strategy::consistent, Strategy::sidon}) {
      if (s == Strategy::normal && n % f->characteristic() == 0) continue;
      try {
        auto c = construct_genpair(s, n, f, 3);
        EXPECT_TRUE(c.verdict) << spec << " " << n << " " << to_string(s);
        EXPECT_EQ(c.strategy, to_string(s));
      } catch (const ConsistencyLost&) {
        // Sidon and power-of-two sets may collide mod small p.
        EXPECT_TRUE(s == Strategy::sidon || s == Strategy::consistent);
      }
    }
  }
}

TEST(AutoGenPair, DeterministicForSeed) {
  auto f = parse_field_spec("7");
  auto a = auto_genpair(5, f, 42), b = auto_genpair(5, f, 42);
  EXPECT_EQ(a.generators, b.generators);
  EXPECT_EQ(a.trial, b.trial);
  EXPECT_EQ(parse_strategy("sharply-traceless"), Strategy::sharply_traceless);
  EXPECT_THROW(parse_strategy("magic"), ParseError);
}

TEST(SharplyTraceless, ScalarsMatterOverNonPrimeBase) {
  // Over F_4 the F_2-span of conjugates can be larger than their F_4-span.
  auto t = TowerField::create(parse_field_spec("4"), 3);
  std::uint64_t over_base = 0, over_prime = 0;
  for (std::uint64_t i = 0; i < t->order_or_zero(); ++i) {
    const auto conj = t->conjugates(t->from_index(i));
    over_base += check_sharply_traceless_set(t, conj, Scalars::base).sharply_traceless;
    over_prime += check_sharply_traceless_set(t, conj, Scalars::prime).sharply_traceless;
  }
  EXPECT_EQ(over_base, count_st_elements(t->base_ptr(), 3));
  EXPECT_EQ(over_base, 9u);
  EXPECT_EQ(over_prime, 15u);
}
