#include <map>

#include "bigwitt/error.hpp"
#include "bigwitt/polynomial.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bigwitt;
using bigwitt::test::elem;

namespace {

// Schoolbook product of digit vectors reduced by the monic modulus.
Field::Elem naive_mul(const Field& f, Field::Elem a, Field::Elem b) {
  const unsigned p = f.characteristic();
  const unsigned e = f.degree();
  const auto da = f.digits(a);
  const auto db = f.digits(b);
  std::vector<unsigned> prod(2 * e, 0);
  for (unsigned i = 0; i < e; ++i)
    for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  const auto& m = f.desc().modulus;
  for (unsigned k = 2 * e - 1; k >= e; --k) {
    const unsigned c = prod[k];
    if (c == 0) continue;
    for (unsigned i = 0; i <= e; ++i) prod[k - e + i] = (prod[k - e + i] + p * p - c * m[i] % p) % p;
  }
  prod.resize(e);
  return f.from_digits(prod);
}

// Leibniz expansion; feasible for n <= 5.
RingElement leibniz(const RingMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  RingElement total = m[0][0].ring().zero();
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    RingElement term = m[0][0].ring().one();
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_CASE("field multiplication matches schoolbook reduction") {
  for (std::uint64_t q : {2, 3, 4, 5, 8, 9, 16, 25, 27, 49, 32}) {
    const Field& f = Field::of_order(q);
    CHECK(f.order() == q);
    for (Field::Elem a = 0; a < q; ++a)
      for (Field::Elem b = 0; b < q; ++b) REQUIRE(f.mul(a, b) == naive_mul(f, a, b));
  }
}

TEST_CASE("field inverse, frobenius and additive structure") {
  for (std::uint64_t q : {4, 9, 16, 25}) {
    const Field& f = Field::of_order(q);
    for (Field::Elem a = 1; a < q; ++a) {
      CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.pow(a, q - 1) == 1);
      CHECK(f.pow(a, q) == a);
    }
    for (Field::Elem a = 0; a < q; ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      for (Field::Elem b = 0; b < q; ++b)
        CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
    }
  }
}

TEST_CASE("F_4 generator satisfies x^2 + x + 1") {
  const Field& f = Field::of_order(4);
  const Field::Elem a = f.generator_x();
  CHECK(f.add(f.add(f.mul(a, a), a), 1) == 0);
}

TEST_CASE("irreducibility search") {
  CHECK(find_irreducible(2, 2) == std::vector<unsigned>{1, 1, 1});
  CHECK(find_irreducible(2, 3) == std::vector<unsigned>{1, 1, 0, 1});
  const std::vector<unsigned> reducible{1, 0, 1};  // x^2 + 1 = (x+1)^2 over F_2
  CHECK_FALSE(is_irreducible(2, reducible));
  for (std::uint64_t q : {4, 8, 9, 16, 25, 27}) {
    const auto desc = builtin_field(q);
    REQUIRE(desc);
    CHECK(is_irreducible(desc->p, desc->modulus));
  }
}

TEST_CASE("field embeddings are ring homomorphisms") {
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs{{2, 16}, {4, 16}, {3, 9}, {3, 27}, {2, 8}};
  for (auto [qs, qt] : pairs) {
    const Field& s = Field::of_order(qs);
    const Field& t = Field::of_order(qt);
    const FieldEmbedding emb(s, t);
    for (Field::Elem a = 0; a < qs; ++a) {
      CHECK(emb.preimage(emb(a)) == a);
      for (Field::Elem b = 0; b < qs; ++b) {
        CHECK(emb(s.mul(a, b)) == t.mul(emb(a), emb(b)));
        CHECK(emb(s.add(a, b)) == t.add(emb(a), emb(b)));
      }
    }
  }
}

TEST_CASE("unsupported field orders") {
  CHECK_THROWS_AS(Field::of_order(6), Error);
  CHECK_THROWS_AS(Field::of_order(2).extension(21), Error);
}

TEST_CASE("ring F_q[eps]/(eps^e) arithmetic") {
  const Ring& r = Ring::get(Field::of_order(3), 3);
  const RingElement eps = r.epsilon();
  CHECK(eps.pow(2).valuation() == 2);
  CHECK(eps.pow(3).is_zero());
  CHECK(eps.nilpotency_index() == 3);
  CHECK(r.one().nilpotency_index() == 0);
  const RingElement u = elem(r, {2, 1, 1});
  CHECK((u * u.inverse()).is_one());
  CHECK_THROWS_AS(eps.inverse(), Error);
  for (const RingElement& x : all_elements(r)) {
    for (const RingElement& y : all_elements(r)) {
      if (y.valuation() > x.valuation()) continue;
      CHECK(x.divide_exact(y) * y == x);
    }
    CHECK(x.frobenius(3) == x * x * x);
  }
  CHECK(all_elements(r).size() == 27);
  CHECK(r.order() == 27);
}

TEST_CASE("ring axioms exhaustively over F_2[eps]/(eps^2) and F_4[eps]/(eps^2)") {
  for (std::uint64_t q : {2, 4}) {
    const Ring& r = Ring::get(Field::of_order(q), 2);
    const auto all = all_elements(r);
    for (const auto& a : all)
      for (const auto& b : all) {
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        for (const auto& c : all) {
          CHECK((a * b) * c == a * (b * c));
          CHECK(a * (b + c) == a * b + a * c);
        }
      }
  }
}

TEST_CASE("determinant agrees with Leibniz expansion over nilpotent rings") {
  Rng rng(7);
  for (std::uint64_t q : {2, 3, 4, 5}) {
    for (unsigned nil : {1u, 2u, 3u}) {
      const Ring& r = Ring::get(Field::of_order(q), nil);
      for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng.below(5);
        RingMatrix m(n, std::vector<RingElement>(n, r.zero()));
        for (auto& row : m)
          for (auto& x : row) x = rng.coin() ? random_nilpotent(r, rng) : random_element(r, rng);
        CHECK(determinant(m) == leibniz(m));
      }
    }
  }
}

TEST_CASE("resultant against x - a gives evaluation") {
  Rng rng(11);
  const Ring& r = Ring::get(Field::of_order(5), 3);
  for (int trial = 0; trial < 100; ++trial) {
    const RingElement a = random_element(r, rng);
    std::vector<RingElement> c;
    const unsigned deg = 1 + rng.below(5);
    for (unsigned i = 0; i <= deg; ++i) c.push_back(random_element(r, rng));
    const UnivariatePolynomial f(r, c);
    if (f.degree() < 1) continue;
    CHECK(resultant(UnivariatePolynomial::linear_root(a), f) == f(a));
  }
}

TEST_CASE("resultant is multiplicative in the monic argument") {
  Rng rng(13);
  for (std::uint64_t q : {2, 3, 4}) {
    const Ring& r = Ring::get(Field::of_order(q), 3);
    for (int trial = 0; trial < 60; ++trial) {
      auto monic = [&](unsigned deg) {
        std::vector<RingElement> c;
        for (unsigned i = 0; i < deg; ++i) c.push_back(random_element(r, rng));
        c.push_back(r.one());
        return UnivariatePolynomial(r, c);
      };
      const auto a1 = monic(1 + rng.below(3));
      const auto a2 = monic(1 + rng.below(3));
      std::vector<RingElement> bc;
      for (unsigned i = 0; i < 4; ++i) bc.push_back(random_element(r, rng));
      const UnivariatePolynomial b(r, bc);
      if (b.is_zero()) continue;
      CHECK(resultant(a1 * a2, b) == resultant(a1, b) * resultant(a2, b));
    }
  }
}

TEST_CASE("resultant edge cases") {
  const Ring& r = Ring::get(Field::of_order(2), 2);
  const UnivariatePolynomial c1(r, {r.one()});
  CHECK_THROWS_AS(resultant(c1, c1), Error);
  const UnivariatePolynomial x(r, {r.zero(), r.one()});
  CHECK(resultant(x, UnivariatePolynomial(r)).is_zero());
  // Res(x, c) = c for a constant c
  const RingElement c = elem(r, {1, 1});
  CHECK(resultant(x, UnivariatePolynomial(r, {c})) == c);
}

TEST_CASE("roots with multiplicity match the resultant product") {
  Rng rng(17);
  for (std::uint64_t q : {2, 3, 4}) {
    const Ring& k = Ring::get(Field::of_order(q), 1);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<RingElement> c;
      const unsigned deg = 1 + rng.below(3);
      for (unsigned i = 0; i < deg; ++i) c.push_back(random_element(k, rng));
      c.push_back(k.one());
      const UnivariatePolynomial f(k, c);
      const RootSet roots = roots_with_multiplicity(f, 6);
      unsigned total = 0;
      for (auto [x, m] : roots.roots) total += m;
      CHECK(total == static_cast<unsigned>(f.degree()));
      // Res(f, b) = prod b(root)^mult for monic f, computed in the splitting field
      const Ring& ext = Ring::get(*roots.field, 1);
      const FieldEmbedding emb(k.field(), *roots.field);
      const UnivariatePolynomial b(k, {random_element(k, rng), random_element(k, rng), k.one()});
      RingElement prod = ext.one();
      const auto bext = b.mapped(ext, [&](const RingElement& y) { return map_field(y, emb, ext); });
      for (auto [x, m] : roots.roots) prod *= bext(ext.constant(x)).pow(m);
      CHECK(map_field(resultant(f, b), emb, ext) == prod);
    }
  }
}

TEST_CASE("root search bound") {
  const Ring& k = Ring::get(Field::of_order(2), 1);
  // x^2 + x + 1 is irreducible over F_2
  const UnivariatePolynomial f(k, {k.one(), k.one(), k.one()});
  CHECK_THROWS_AS(roots_with_multiplicity(f, 1), Error);
  CHECK(roots_with_multiplicity(f, 2).extension_degree == 2);
}

TEST_CASE("error kinds have names") {
  CHECK(to_string(ErrorKind::NotAUnit) == "NotAUnit");
  try {
    fail(ErrorKind::TooLarge, "x");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
    CHECK(e.detail() == "x");
  }
}
