#include <map>

#include "bigwitt/error.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bigwitt;
using bigwitt::test::uni;

namespace {

using DenseSeries = std::map<std::vector<unsigned>, RingElement>;

DenseSeries to_map(const TruncatedSeries& s) {
  DenseSeries m;
  for (const auto& [rank, c] : s.terms()) m.emplace(s.basis().monomial(rank).exponents(), c);
  return m;
}

// Quadratic product over exponent maps, independent of the rank machinery.
DenseSeries naive_product(const TruncatedSeries& a, const TruncatedSeries& b) {
  DenseSeries out;
  const unsigned d = a.precision();
  for (const auto& [ea, ca] : to_map(a))
    for (const auto& [eb, cb] : to_map(b)) {
      std::vector<unsigned> e(ea.size());
      unsigned deg = 0;
      for (std::size_t i = 0; i < e.size(); ++i) deg += (e[i] = ea[i] + eb[i]);
      if (deg >= d) continue;
      auto it = out.find(e);
      if (it == out.end()) {
        out.emplace(e, ca * cb);
      } else {
        it->second += ca * cb;
      }
    }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

TruncatedSeries random_series(const Ring& r, unsigned n, unsigned d, Rng& rng, bool unit_constant) {
  TruncatedSeries s(r, n, d);
  const MonomialBasis& b = s.basis();
  for (std::uint32_t k = 0; k < b.size(); ++k) {
    if (rng.below(3) == 0) continue;
    s.set(b.monomial(k), random_element(r, rng));
  }
  if (unit_constant) s.set(MultiIndex::zero(n), random_unit(r, rng));
  return s;
}

}  // namespace

TEST_CASE("graded lex order and basis") {
  CHECK(grlex_less(MultiIndex{1, 0}, MultiIndex{0, 1}));
  CHECK(grlex_less(MultiIndex{0, 1}, MultiIndex{2, 0}));
  CHECK(grlex_less(MultiIndex{0, 0}, MultiIndex{0, 1}));
  const MonomialBasis& b = MonomialBasis::get(2, 3);
  REQUIRE(b.size() == 6);
  CHECK(b.monomial(0) == MultiIndex{0, 0});
  CHECK(b.monomial(1) == MultiIndex{1, 0});
  CHECK(b.monomial(2) == MultiIndex{0, 1});
  CHECK(b.monomial(3) == MultiIndex{2, 0});
  CHECK(b.monomial(4) == MultiIndex{1, 1});
  CHECK(b.monomial(5) == MultiIndex{0, 2});
  for (std::uint32_t r = 0; r < b.size(); ++r) CHECK(b.rank(b.monomial(r)) == r);
  CHECK(b.rank(MultiIndex{3, 0}) == -1);
  // number of monomials of degree < d in n variables is C(n + d - 1, n)
  CHECK(MonomialBasis::get(3, 6).size() == 56);
  CHECK(MonomialBasis::get(4, 5).size() == 70);
}

TEST_CASE("multi-index helpers") {
  const MultiIndex nu{2, 4};
  CHECK(nu.total_degree() == 6);
  CHECK(nu.content() == 2);
  CHECK(nu.primitive_part() == MultiIndex{1, 2});
  CHECK_FALSE(nu.is_primitive());
  CHECK(nu.divisible_by(2));
  CHECK(MultiIndex{1, 2}.is_primitive());
  CHECK(MultiIndex{0, 0}.content() == 0);
}

TEST_CASE("sparse product matches naive expansion") {
  Rng rng(3);
  for (std::uint64_t q : {2, 3, 4, 5}) {
    for (unsigned nil : {1u, 2u, 3u}) {
      const Ring& r = Ring::get(Field::of_order(q), nil);
      for (unsigned n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 15; ++trial) {
          const unsigned d = 1 + rng.below(7);
          const auto a = random_series(r, n, d, rng, false);
          const auto b = random_series(r, n, d, rng, false);
          CHECK(to_map(a * b) == naive_product(a, b));
        }
      }
    }
  }
}

TEST_CASE("inverse of a unit series") {
  Rng rng(5);
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const Ring& r = Ring::get(Field::of_order(q), 2);
    for (unsigned n = 1; n <= 3; ++n) {
      for (int trial = 0; trial < 20; ++trial) {
        const unsigned d = 1 + rng.below(6);
        const auto a = random_series(r, n, d, rng, true);
        const auto inv = a.inverse();
        CHECK((a * inv).is_one());
        CHECK((inv * a).is_one());
      }
    }
  }
  const Ring& r = Ring::get(Field::of_order(2), 2);
  CHECK_THROWS_AS(uni(r, 3, {0, 1}).inverse(), Error);
}

TEST_CASE("inverse of 1 + eps t is exact") {
  const Ring& r = Ring::get(Field::of_order(2), 2);
  const TruncatedSeries f = TruncatedSeries::polynomial(r, 1, {{MultiIndex{0}, r.one()}, {MultiIndex{1}, r.epsilon()}});
  const TruncatedSeries inv = f.inverse();
  CHECK(inv.exact());
  // (1 + eps t)(1 - eps t) = 1
  CHECK(inv.coefficient(MultiIndex{1}) == -r.epsilon());
  CHECK(inv.eval_all_ones() == r.one() - r.epsilon());
}

TEST_CASE("exactness tracking") {
  const Ring& r = Ring::get(Field::of_order(3), 1);
  const auto a = TruncatedSeries::polynomial(r, 1, {{MultiIndex{0}, r.one()}, {MultiIndex{2}, r.one()}});
  CHECK(a.exact());
  CHECK(a.precision() == 3);
  CHECK(a.eval_all_ones() == r.from_int(2));
  const auto grown = a.with_precision(10);
  const auto sq = grown * grown;
  CHECK(sq.exact());
  CHECK(sq.eval_all_ones() == r.from_int(4));
  const auto cut = a * a;  // t^4 falls outside degree 3
  CHECK_FALSE(cut.exact());
  CHECK_THROWS_AS(cut.eval_all_ones(), Error);
  CHECK_THROWS_AS(cut.with_precision(5), Error);
  CHECK(cut.truncated(2).is_one());
}

TEST_CASE("series ring identities") {
  Rng rng(9);
  const Ring& r = Ring::get(Field::of_order(5), 2);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_series(r, 2, 5, rng, false);
    const auto b = random_series(r, 2, 5, rng, false);
    const auto c = random_series(r, 2, 5, rng, false);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == TruncatedSeries(r, 2, 5));
    CHECK(a.pow(3) == a * a * a);
  }
}

TEST_CASE("shape mismatch") {
  const Ring& r = Ring::get(Field::of_order(2), 1);
  CHECK_THROWS_AS(uni(r, 3, {1}) * uni(r, 4, {1}), Error);
  CHECK_THROWS_AS(uni(r, 3, {1}) * TruncatedSeries::one(r, 2, 3), Error);
}
