#include <doctest.h>

#include <functional>
#include <random>

#include "symtutte/egf.hpp"
#include "symtutte/errors.hpp"
#include "symtutte/families.hpp"
#include "symtutte/symmetric.hpp"

using namespace symtutte;

namespace {

Poly poly(std::vector<long> c) { return Poly(std::vector<Integer>(c.begin(), c.end())); }

TruncatedSeries constant_terms(unsigned order, long v) {
  return TruncatedSeries::from(order, [&](unsigned) { return Poly(Integer(v)); });
}

TruncatedSeries random_series(std::mt19937& rng, unsigned order) {
  std::uniform_int_distribution<int> d(-3, 3);
  return TruncatedSeries::from(order, [&](unsigned) { return poly({d(rng), d(rng), d(rng)}); });
}

}  // namespace

TEST_CASE("series products") {
  const auto e = constant_terms(5, 1);
  const auto sq = series_mul(e, e);
  for (unsigned n = 0; n <= 5; ++n) CHECK(sq[n] == Poly(Integer(1) << n));
  std::mt19937 rng(3);
  const auto a = random_series(rng, 5);
  CHECK(series_mul(a, TruncatedSeries::one(5)) == a);
  auto x = TruncatedSeries::from(4, [](unsigned n) { return Poly(n == 1 ? 1 : 0); });
  CHECK(series_mul(x, x)[2] == Poly(2));
  CHECK(series_mul(x, x)[3] == Poly(0));
  CHECK_THROWS_AS(series_mul(a, TruncatedSeries::one(4)), InvalidParameter);
}

TEST_CASE("series powers") {
  std::mt19937 rng(4);
  const auto a = random_series(rng, 4);
  CHECK(series_pow(a, 0) == TruncatedSeries::one(4));
  CHECK(series_pow(a, 1) == a);
  CHECK(series_pow(a, 5) == series_mul(series_pow(a, 2), series_pow(a, 3)));
  const auto braid = TruncatedSeries::from(3, [](unsigned n) { return Poly::monomial(1, n * (n - 1) / 2); });
  CHECK(series_pow(braid, 5)[2] == poly({20, 5}));
}

TEST_CASE("series algebra on random triples") {
  std::mt19937 rng(9);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_series(rng, 4), b = random_series(rng, 4), c = random_series(rng, 4);
    CHECK(series_mul(a, b) == series_mul(b, a));
    CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
  }
}

TEST_CASE("product rule against the multi-composition sum") {
  std::mt19937 rng(12);
  const unsigned order = 5;
  for (int trial = 0; trial < 20; ++trial) {
    const unsigned k = 1 + trial % 4;
    std::vector<TruncatedSeries> blocks;
    for (unsigned j = 0; j < k; ++j) blocks.push_back(random_series(rng, order));
    TruncatedSeries prod = TruncatedSeries::one(order);
    for (const auto& b : blocks) prod = series_mul(prod, b);
    for (unsigned n = 0; n <= order; ++n) {
      Poly direct;
      std::vector<unsigned> parts(k);
      std::function<void(unsigned, unsigned)> rec = [&](unsigned j, unsigned left) {
        if (j + 1 == k) {
          parts[j] = left;
          Poly term(multinomial(parts));
          for (unsigned i = 0; i < k; ++i) term *= blocks[i][parts[i]];
          direct += term;
          return;
        }
        for (unsigned a = 0; a <= left; ++a) {
          parts[j] = a;
          rec(j + 1, left - a);
        }
      };
      rec(0, n);
      CHECK(direct == prod[n]);
    }
  }
}

TEST_CASE("named right-hand sides") {
  EgfParams p5{5};
  CHECK(build_named_rhs(Identity::A, p5, 3)[3] == poly({60, 60, 0, 5}));
  EgfParams p3{3};
  CHECK(build_named_rhs(Identity::B, p3, 2)[1] == poly({2, 1}));
  const EgfParams g{7, 3, 1};
  CHECK(build_named_rhs(Identity::Gmpn, g, 0)[0] == Poly(1));
  CHECK(build_named_rhs(Identity::In, p5, 0)[0] == Poly(1));
}

TEST_CASE("named right-hand side preconditions") {
  CHECK_THROWS_AS(build_named_rhs(Identity::B, EgfParams{4}, 2), InvalidParameter);
  CHECK_THROWS_AS(build_named_rhs(Identity::D, EgfParams{2}, 2), InvalidParameter);
  CHECK_THROWS_AS(build_named_rhs(Identity::Gmmn, EgfParams{5, 1, 1}, 2), InvalidParameter);
  CHECK_THROWS_AS(build_named_rhs(Identity::Gmpn, EgfParams{7, 3, 3}, 2), InvalidParameter);
  CHECK_THROWS_AS(build_named_rhs(Identity::Gmpn, EgfParams{7, 3, 2}, 2), InvalidParameter);
  CHECK_THROWS_AS(build_named_rhs(Identity::Gmpn, EgfParams{5, 3, 1}, 2), NoRootOfUnity);
  CHECK_THROWS_AS(identity_from_name("Z"), InvalidParameter);
  CHECK(identity_from_name("Gmmn") == Identity::Gmmn);
  CHECK(identity_name(Identity::In) == "In");
}

TEST_CASE("left-hand terms agree across sources") {
  for (auto id : {Identity::A, Identity::B, Identity::D, Identity::In})
    for (unsigned n = 0; n <= 3; ++n) {
      const EgfParams p{5};
      const auto def = egf_lhs_term(id, p, n, LhsSource::Definition);
      CHECK(egf_lhs_term(id, p, n, LhsSource::PointCount) == def);
      CHECK(egf_lhs_term(id, p, n, LhsSource::ClosedForm) == def);
    }
  const EgfParams g{7, 3, 1};
  for (unsigned n = 0; n <= 3; ++n)
    CHECK(egf_lhs_term(Identity::Gmpn, g, n, LhsSource::ClosedForm) ==
          egf_lhs_term(Identity::Gmpn, g, n, LhsSource::Definition));
}

TEST_CASE("identities hold") {
  for (unsigned q : {5u, 7u}) {
    for (auto id : {Identity::A, Identity::B, Identity::D}) {
      const auto r = egf_check(id, EgfParams{q}, 4, LhsSource::Definition);
      CAPTURE(r.to_string());
      CHECK(r.all_equal());
      CHECK(r.entries.size() == 5);
    }
    CHECK(egf_check(Identity::In, EgfParams{q}, 3, LhsSource::Definition).all_equal());
  }
  CHECK(egf_check(Identity::Gmmn, EgfParams{7, 3, 3}, 3, LhsSource::Definition).all_equal());
  CHECK(egf_check(Identity::Gmpn, EgfParams{7, 3, 1}, 3, LhsSource::Definition).all_equal());
  CHECK(egf_check(Identity::Gmpn, EgfParams{5, 4, 2}, 3, LhsSource::ClosedForm).all_equal());
  CHECK(egf_check(Identity::Gmmn, EgfParams{5, 2, 2}, 3, LhsSource::PointCount).all_equal());
}

TEST_CASE("report shows mismatches") {
  EgfReport r{Identity::A, EgfParams{5}, LhsSource::Definition, {{0, Poly(1), Poly(1), true}, {1, Poly(5), Poly(4), false}}};
  CHECK_FALSE(r.all_equal());
  CHECK(r.to_string().find("MISMATCH") != std::string::npos);
}

TEST_CASE("partition series reproduce point sums") {
  for (unsigned q : {5u, 7u}) {
    const auto spec = RingSpec::prime_field(1, q);
    for (const auto& fam : {family_a(2), family_b(2), family_d(2), family_i(2)}) {
      CAPTURE(fam.name);
      const auto s = series_from_partition(fam.reps, SymmetryKind::SH, spec, 4);
      for (unsigned n = 0; n <= 4; ++n) CHECK(s[n] == point_sum_sh(fam.reps, n, spec));
    }
  }
  const auto spec = RingSpec::prime_field(3, 7);
  for (unsigned p : {1u, 3u}) {
    const auto reps = family_g(3, p, 2).reps;
    const auto s = series_from_partition(reps, SymmetryKind::CSH, spec, 3);
    for (unsigned n = 0; n <= 3; ++n) CHECK(s[n] == point_sum_csh(reps, n, spec));
  }
}
