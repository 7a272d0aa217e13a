#include <gmpxx.h>

#include "bigwitt/error.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bigwitt;
using bigwitt::test::all_witt_1var;
using bigwitt::test::uni;

namespace {

// Big-Witt ghost oracle over Z. For lambda = prod (1 - a_i t^i) the ghost
// components are w_n = sum_{i | n} i a_i^{n/i}; the ring product is
// componentwise on ghosts. Lifting F_p-coordinates to {0..p-1}, solving
// back over Z and reducing mod p gives the product coordinates.
std::vector<mpz_class> ghost_of(const std::vector<mpz_class>& a) {
  const std::size_t d = a.size();
  std::vector<mpz_class> w(d, 0);
  for (std::size_t n = 1; n < d; ++n)
    for (std::size_t i = 1; i <= n; ++i) {
      if (n % i) continue;
      mpz_class pw;
      mpz_pow_ui(pw.get_mpz_t(), a[i].get_mpz_t(), n / i);
      w[n] += mpz_class(static_cast<unsigned long>(i)) * pw;
    }
  return w;
}

std::vector<mpz_class> coords_from_ghost(const std::vector<mpz_class>& w) {
  const std::size_t d = w.size();
  std::vector<mpz_class> a(d, 0);
  for (std::size_t n = 1; n < d; ++n) {
    mpz_class rest = w[n];
    for (std::size_t i = 1; i < n; ++i) {
      if (n % i) continue;
      mpz_class pw;
      mpz_pow_ui(pw.get_mpz_t(), a[i].get_mpz_t(), n / i);
      rest -= mpz_class(static_cast<unsigned long>(i)) * pw;
    }
    REQUIRE(mpz_divisible_ui_p(rest.get_mpz_t(), n));
    a[n] = rest / static_cast<unsigned long>(n);
  }
  return a;
}

WittElement ghost_oracle_mul(const WittElement& x, const WittElement& y) {
  const Ring& r = x.ring();
  const unsigned d = x.precision();
  const unsigned p = r.characteristic();
  auto lift = [&](const WittElement& v) {
    std::vector<mpz_class> a(d, 0);
    for (const auto& [nu, c] : witt_coordinates(v).coords) a[nu[0]] = c.component(0);
    return a;
  };
  const auto wx = ghost_of(lift(x));
  const auto wy = ghost_of(lift(y));
  std::vector<mpz_class> w(d);
  for (unsigned n = 0; n < d; ++n) w[n] = wx[n] * wy[n];
  const auto a = coords_from_ghost(w);
  WittCoordinates c{&r, 1, d, {}};
  for (unsigned n = 1; n < d; ++n) {
    mpz_class m = a[n] % p;
    if (m < 0) m += p;
    c.set(MultiIndex{n}, r.from_int(m.get_si()));
  }
  return from_coordinates(c);
}

}  // namespace

TEST_CASE("witt_add examples") {
  const Ring& r = Ring::get(Field::of_order(5), 1);
  const RingElement a = r.from_int(2), b = r.from_int(4);
  const WittElement x = WittElement::factor(r, 4, MultiIndex{1}, a);
  const WittElement y = WittElement::factor(r, 4, MultiIndex{1}, b);
  CHECK((x + y).series() == uni(r, 4, {1, -6, 8}));
  CHECK(x + WittElement::zero(r, 1, 4) == x);
  CHECK((x + (-x)).is_zero());
  CHECK_THROWS_AS(x + WittElement::zero(r, 1, 5), Error);
  CHECK_THROWS_AS(WittElement(uni(r, 3, {2, 1})), Error);
}

TEST_CASE("witt coordinates examples") {
  const Ring& r = Ring::get(Field::of_order(5), 1);
  const WittCoordinates c = witt_coordinates(WittElement(uni(r, 4, {1, 1, 1, 1})));
  CHECK(c.at(MultiIndex{1}) == r.from_int(-1));
  CHECK(c.at(MultiIndex{2}) == r.from_int(-1));
  CHECK(c.at(MultiIndex{3}).is_zero());
  CHECK(from_coordinates(c).series() == uni(r, 4, {1, 1, 1, 1}));
  CHECK(witt_coordinates(WittElement::zero(r, 2, 5)).coords.empty());

  const RingElement rr = r.from_int(3);
  const WittElement l = WittElement::factor(r, 3, MultiIndex{1, 1}, rr);
  const WittCoordinates c2 = witt_coordinates(l);
  CHECK(c2.coords.size() == 1);
  CHECK(c2.at(MultiIndex{1, 1}) == rr);
}

TEST_CASE("coordinates round trip exhaustively at tiny scale") {
  for (auto [q, d] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {2, 4}, {3, 3}, {4, 3}, {2, 5}}) {
    const Ring& r = Ring::get(Field::of_order(q), 1);
    const auto all = all_witt_1var(r, d);
    CHECK(all.size() == static_cast<std::size_t>(std::pow(q, d - 1)));
    for (const auto& l : all) REQUIRE(from_coordinates(witt_coordinates(l)) == l);
  }
}

TEST_CASE("coordinates round trip on random elements with nilpotents") {
  Rng rng(21);
  for (std::uint64_t q : {2, 3, 4, 5}) {
    for (unsigned nil : {1u, 2u, 3u}) {
      const Ring& r = Ring::get(Field::of_order(q), nil);
      for (unsigned n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
          const WittElement l = random_witt(r, n, 2 + rng.below(5), rng);
          const WittCoordinates c = witt_coordinates(l);
          CHECK(from_coordinates(c) == l);
          CHECK(witt_coordinates(from_coordinates(c)) == c);
        }
      }
    }
  }
}

TEST_CASE("decompose example and recompose") {
  const Ring& r = Ring::get(Field::of_order(3), 1);
  const RingElement rr = r.from_int(2);
  const WittElement l = WittElement::factor(r, 5, MultiIndex{2, 2}, rr);
  const OneVarComponentFamily fam = decompose(l);
  const WittElement& comp = fam.components.at(MultiIndex{1, 1});
  CHECK(comp.precision() == 3);
  CHECK(comp == WittElement::factor(r, 3, MultiIndex{2}, rr));
  for (const auto& [nu, c] : fam.components) {
    CHECK(nu.is_primitive());
    if (!(nu == MultiIndex{1, 1})) CHECK(c.is_zero());
  }
  CHECK(recompose(fam) == l);
  // every primitive index below degree 5 in two variables is present
  CHECK(fam.components.size() == primitive_indices(2, 5).size());
}

TEST_CASE("decompose is a group isomorphism") {
  Rng rng(23);
  for (unsigned n : {2u, 3u}) {
    for (std::uint64_t q : {2, 3}) {
      const Ring& r = Ring::get(Field::of_order(q), n == 2 ? 2 : 1);
      for (int trial = 0; trial < 20; ++trial) {
        const unsigned d = 2 + rng.below(5);
        const WittElement a = random_witt(r, n, d, rng);
        const WittElement b = random_witt(r, n, d, rng);
        const auto fa = decompose(a), fb = decompose(b), fab = decompose(a + b);
        CHECK(recompose(fa) == a);
        for (const auto& [nu, c] : fab.components) CHECK(c == fa.components.at(nu) + fb.components.at(nu));
      }
    }
  }
}

TEST_CASE("one-variable multiplication: closed forms") {
  const Ring& r = Ring::get(Field::of_order(5), 1);
  const RingElement a = r.from_int(2), b = r.from_int(3);
  const unsigned d = 9;
  const WittElement x2 = WittElement::factor(r, d, MultiIndex{2}, a);
  const WittElement y3 = WittElement::factor(r, d, MultiIndex{3}, b);
  CHECK(witt_mul_1var(x2, y3) == WittElement::factor(r, d, MultiIndex{6}, a.pow(3) * b.pow(2)));
  const WittElement y2 = WittElement::factor(r, d, MultiIndex{2}, b);
  const WittElement ab2 = WittElement::factor(r, d, MultiIndex{2}, a * b);
  CHECK(witt_mul_1var(x2, y2) == ab2 + ab2);
}

TEST_CASE("(1 - t) is the identity and the ghost oracle agrees") {
  Rng rng(29);
  for (std::uint64_t q : {2, 3, 5, 7}) {
    const Ring& r = Ring::get(Field::of_order(q), 1);
    for (int trial = 0; trial < 40; ++trial) {
      const unsigned d = 2 + rng.below(9);
      const WittElement a = random_witt(r, 1, d, rng);
      const WittElement b = random_witt(r, 1, d, rng);
      const WittElement one = witt_one(r, 1, d);
      CHECK(one == WittElement::factor(r, d, MultiIndex{1}, r.one()));
      CHECK(a * one == a);
      CHECK(one * a == a);
      CHECK(witt_mul_1var(a, b) == ghost_oracle_mul(a, b));
    }
  }
}

TEST_CASE("one-variable ring axioms with nilpotent coefficients") {
  Rng rng(31);
  for (std::uint64_t q : {2, 3, 4}) {
    const Ring& r = Ring::get(Field::of_order(q), 3);
    for (int trial = 0; trial < 20; ++trial) {
      const unsigned d = 2 + rng.below(7);
      const WittElement a = random_witt(r, 1, d, rng), b = random_witt(r, 1, d, rng), c = random_witt(r, 1, d, rng);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
    }
  }
}

TEST_CASE("n-variable multiplication") {
  Rng rng(37);
  const Ring& r = Ring::get(Field::of_order(3), 1);
  // distinct primitive components do not interact
  const WittElement x = WittElement::factor(r, 4, MultiIndex{1, 0}, r.from_int(2));
  const WittElement y = WittElement::factor(r, 4, MultiIndex{0, 1}, r.one());
  CHECK((x * y).is_zero());
  for (unsigned n : {2u, 3u}) {
    for (int trial = 0; trial < 15; ++trial) {
      const unsigned d = 2 + rng.below(4);
      const WittElement a = random_witt(r, n, d, rng), b = random_witt(r, n, d, rng), c = random_witt(r, n, d, rng);
      CHECK(a * witt_one(r, n, d) == a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
    }
  }
}

TEST_CASE("unipotence in characteristic p") {
  Rng rng(41);
  for (std::uint64_t q : {2, 3, 4}) {
    const Ring& r = Ring::get(Field::of_order(q), 2);
    const unsigned p = r.characteristic();
    for (int trial = 0; trial < 10; ++trial) {
      const unsigned d = 2 + rng.below(7);
      std::uint64_t ps = 1;
      while (ps < d) ps *= p;
      const WittElement a = random_witt(r, 2, d, rng);
      CHECK(witt_multiple(a, static_cast<std::int64_t>(ps)).is_zero());
    }
  }
}

TEST_CASE("frobenius and the Lang map") {
  const Ring& f4 = Ring::get(Field::of_order(4), 1);
  const RingElement alpha = f4.constant(f4.field().generator_x());
  const WittElement l(uni(f4, 3, {f4.one(), alpha}));
  CHECK(lang_map(l, 2).series() == uni(f4, 3, {f4.one(), f4.one(), alpha}));

  // kernel of the Lang map on Lambda^1(F_4) mod 3
  std::size_t kernel = 0;
  for (const auto& x : all_witt_1var(f4, 3)) kernel += lang_map(x, 2).is_zero();
  CHECK(kernel == 4);

  const Ring& f2 = Ring::get(Field::of_order(2), 1);
  for (const auto& x : all_witt_1var(f2, 4)) CHECK(lang_map(x, 2).is_zero());

  const Ring& nil = Ring::get(Field::of_order(2), 2);
  CHECK_THROWS_AS(lang_map(WittElement::zero(nil, 1, 3), 2), Error);
}

TEST_CASE("Lucas binomials") {
  CHECK(binomial_mod_p(4, 2, 2) == 0);
  CHECK(binomial_mod_p(3, 1, 2) == 1);
  CHECK(binomial_mod_p(6, 3, 5) == 0);  // 20
  CHECK(binomial_mod_p(7, 3, 5) == 0);  // 35
  CHECK(binomial_mod_p(8, 3, 5) == 1);  // 56
  CHECK(binomial_mod_p(3, 5, 5) == 0);
}
