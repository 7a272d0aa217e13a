#include <gmpxx.h>

#include <map>

#include "bigwitt/error.hpp"
#include "bigwitt/ptypical.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bigwitt;
using bigwitt::test::elem;
using bigwitt::test::uni;

namespace {

// Multivariate polynomial over Q in X_0..X_{m-1}, Y_0..Y_{m-1}.
using Poly = std::map<std::vector<unsigned>, mpq_class>;

void add_to(Poly& a, const Poly& b, const mpq_class& scale) {
  for (const auto& [e, c] : b) {
    mpq_class& slot = a[e];
    slot += scale * c;
    if (slot == 0) a.erase(e);
  }
}

Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<unsigned> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      mpq_class& slot = out[e];
      slot += ca * cb;
      if (slot == 0) out.erase(e);
    }
  return out;
}

Poly pow(const Poly& a, unsigned k) {
  Poly acc{{std::vector<unsigned>(a.begin()->first.size(), 0), 1}};
  for (unsigned i = 0; i < k; ++i) acc = mul(acc, a);
  return acc;
}

Poly variable(unsigned nvars, unsigned i) {
  std::vector<unsigned> e(nvars, 0);
  e[i] = 1;
  return Poly{{e, 1}};
}

unsigned ipow(unsigned p, unsigned k) {
  unsigned r = 1;
  while (k--) r *= p;
  return r;
}

// Universal Witt sum / product polynomials by the defining recursion.
struct WittLaws {
  std::vector<Poly> sum, product;
};

WittLaws witt_laws(unsigned p, unsigned m) {
  const unsigned nv = 2 * m;
  auto ghost_poly = [&](unsigned offset, unsigned n) {
    Poly w;
    for (unsigned i = 0; i <= n; ++i) add_to(w, pow(variable(nv, offset + i), ipow(p, n - i)), ipow(p, i));
    return w;
  };
  WittLaws laws;
  for (unsigned n = 0; n < m; ++n) {
    for (int which = 0; which < 2; ++which) {
      auto& out = which == 0 ? laws.sum : laws.product;
      Poly target = which == 0 ? ghost_poly(0, n) : mul(ghost_poly(0, n), ghost_poly(m, n));
      if (which == 0) add_to(target, ghost_poly(m, n), 1);
      for (unsigned i = 0; i < n; ++i) add_to(target, pow(out[i], ipow(p, n - i)), -mpq_class(ipow(p, i)));
      Poly s;
      add_to(s, target, mpq_class(1, ipow(p, n)));
      for (const auto& [e, c] : s) REQUIRE(c.get_den() == 1);
      out.push_back(s);
    }
  }
  return laws;
}

RingElement evaluate(const Poly& poly, const PWittVector& v, const PWittVector& w) {
  const Ring& r = v.ring();
  const unsigned m = v.length();
  RingElement acc = r.zero();
  for (const auto& [e, c] : poly) {
    mpz_class cm = c.get_num() % static_cast<unsigned long>(r.characteristic());
    RingElement term = r.from_int(cm.get_si());
    for (unsigned i = 0; i < m; ++i) term *= v.entries[i].pow(e[i]) * w.entries[i].pow(e[m + i]);
    acc += term;
  }
  return acc;
}

PWittVector random_pwitt(const Ring& r, unsigned m, Rng& rng) {
  PWittVector v = PWittVector::zero(r, m);
  for (auto& x : v.entries) x = random_element(r, rng);
  return v;
}

// exp of a rational power series without constant term, mod t^count.
std::vector<mpq_class> exp_series(const std::vector<mpq_class>& s) {
  const std::size_t n = s.size();
  std::vector<mpq_class> out(n, 0), term(n, 0);
  out[0] = 1;
  term[0] = 1;
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<mpq_class> next(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 1; i + j < n; ++j) next[i + j] += term[i] * s[j];
    for (auto& x : next) x /= static_cast<unsigned long>(k);
    term = next;
    for (std::size_t i = 0; i < n; ++i) out[i] += term[i];
  }
  return out;
}

}  // namespace

TEST_CASE("ghost components") {
  const RationalWitt v{2, {mpq_class(3), mpq_class(5)}};
  const auto w = ghost(v);
  CHECK(w[0] == 3);
  CHECK(w[1] == 9 + 2 * 5);
  CHECK(ghost(RationalWitt{3, {0, 0, 0}}) == std::vector<mpq_class>{0, 0, 0});
}

TEST_CASE("from_ghost inverts ghost on random rationals") {
  Rng rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned p = trial % 2 ? 2 : 3;
    RationalWitt v{p, {}};
    for (unsigned i = 0; i < 4; ++i)
      v.entries.emplace_back(static_cast<long>(rng.below(41)) - 20, 1 + static_cast<long>(rng.below(9)));
    for (auto& x : v.entries) x.canonicalize();
    const auto back = from_ghost(p, ghost(v));
    CHECK(back.entries == v.entries);
  }
}

TEST_CASE("non-integral reduction is reported") {
  const Ring& f2 = Ring::get(Field::of_order(2), 1);
  CHECK_THROWS_AS(reduce_mod_p(RationalWitt{2, {mpq_class(1, 2)}}, f2), Error);
  CHECK(reduce_mod_p(RationalWitt{2, {mpq_class(1, 3)}}, f2).entries[0].is_one());
}

TEST_CASE("Witt sum example over F_2") {
  const Ring& f2 = Ring::get(Field::of_order(2), 1);
  const PWittVector one = PWittVector::one(f2, 2);
  const PWittVector two = pwitt_add(one, one);
  CHECK(two.entries[0].is_zero());
  CHECK(two.entries[1].is_one());
  CHECK(pwitt_add_rational(one, one) == two);
}

TEST_CASE("lift route agrees with the rational oracle over F_p") {
  Rng rng(47);
  for (unsigned p : {2u, 3u, 5u}) {
    const Ring& r = Ring::get(Field::of_order(p), 1);
    for (int trial = 0; trial < 60; ++trial) {
      const unsigned m = 1 + rng.below(4);
      const auto v = random_pwitt(r, m, rng), w = random_pwitt(r, m, rng);
      CHECK(pwitt_add(v, w) == pwitt_add_rational(v, w));
      CHECK(pwitt_mul(v, w) == pwitt_mul_rational(v, w));
    }
  }
}

TEST_CASE("lift route agrees with symbolic Witt polynomials over F_q[eps]") {
  Rng rng(53);
  for (unsigned p : {2u, 3u}) {
    for (unsigned m = 1; m <= 3; ++m) {
      const WittLaws laws = witt_laws(p, m);
      for (std::uint64_t q : {std::uint64_t{p}, std::uint64_t{p} * p}) {
        for (unsigned nil : {1u, 3u}) {
          const Ring& r = Ring::get(Field::of_order(q), nil);
          for (int trial = 0; trial < 15; ++trial) {
            const auto v = random_pwitt(r, m, rng), w = random_pwitt(r, m, rng);
            const auto s = pwitt_add(v, w), pr = pwitt_mul(v, w);
            for (unsigned n = 0; n < m; ++n) {
              CHECK(s.entries[n] == evaluate(laws.sum[n], v, w));
              CHECK(pr.entries[n] == evaluate(laws.product[n], v, w));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("Witt vector ring axioms") {
  Rng rng(59);
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const Ring& r = Ring::get(Field::of_order(q), 2);
    for (int trial = 0; trial < 25; ++trial) {
      const unsigned m = 1 + rng.below(4);
      const auto a = random_pwitt(r, m, rng), b = random_pwitt(r, m, rng), c = random_pwitt(r, m, rng);
      CHECK(pwitt_add(a, PWittVector::zero(r, m)) == a);
      CHECK(pwitt_mul(a, PWittVector::one(r, m)) == a);
      CHECK(pwitt_add(a, pwitt_neg(a)).is_zero());
      CHECK(pwitt_add(a, b) == pwitt_add(b, a));
      CHECK(pwitt_mul(a, b) == pwitt_mul(b, a));
      CHECK(pwitt_add(pwitt_add(a, b), c) == pwitt_add(a, pwitt_add(b, c)));
      CHECK(pwitt_mul(pwitt_mul(a, b), c) == pwitt_mul(a, pwitt_mul(b, c)));
      CHECK(pwitt_mul(a, pwitt_add(b, c)) == pwitt_add(pwitt_mul(a, b), pwitt_mul(a, c)));
      CHECK(pwitt_sub(a, b) == pwitt_add(a, pwitt_neg(b)));
    }
  }
}

TEST_CASE("Artin-Hasse coefficients") {
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    const auto a = artin_hasse_rational(p, 16);
    // independent expansion of exp(sum x^{p^i} t^{p^i} / p^i) at x = 1
    std::vector<mpq_class> s(16, 0);
    for (unsigned pi = 1; pi < 16; pi *= p) s[pi] = mpq_class(1, pi);
    CHECK(a == exp_series(s));
    for (const auto& c : a) CHECK(mpz_divisible_ui_p(c.get_den_mpz_t(), p) == 0);
  }
  // exp(t) itself is not p-integral
  std::vector<mpq_class> t(4, 0);
  t[1] = 1;
  CHECK(exp_series(t)[2] == mpq_class(1, 2));
}

TEST_CASE("Artin-Hasse examples") {
  const Ring& r = Ring::get(Field::of_order(2), 1);
  CHECK(artin_hasse_exp(r.zero(), 1, 8).is_zero());
  const Ring& r4 = Ring::get(Field::of_order(4), 2);
  const RingElement x = elem(r4, {2, 3});
  CHECK(artin_hasse_exp(x, 1, 2).series() == uni(r4, 2, {r4.one(), x}));
  CHECK(artin_hasse_exp(x, 1, 3).series() == uni(r4, 3, {r4.one(), x, x * x}));
  // E(x, t^2) only has even powers
  const WittElement even = artin_hasse_exp(x, 2, 9);
  for (const auto& [rank, c] : even.series().terms()) CHECK(rank % 2 == 0);
}

TEST_CASE("pi_epsilon elementary cases") {
  const Ring& r = Ring::get(Field::of_order(3), 1);
  CHECK(pi_epsilon({}, r, 7).is_zero());
  const RingElement x = r.from_int(2);
  PiFamily fam{{1, PWittVector::teichmuller(x, 2)}};
  // a single v_1 gives E(x, t)^{-1}
  CHECK(pi_epsilon(fam, r, 7) == -artin_hasse_exp(x, 1, 7));
  CHECK(pi_epsilon_length(2, 8, 1) == 3);
  CHECK(pi_epsilon_length(2, 9, 1) == 4);
  CHECK(pi_epsilon_length(3, 8, 2) == 2);
  CHECK(negative_inverse_exponent(1, 2, 8) == 7);
  CHECK(negative_inverse_exponent(2, 3, 9) * 2 % 9 == 8);
}

TEST_CASE("pi_epsilon round trips exhaustively for p = 2, d <= 8") {
  const Ring& r = Ring::get(Field::of_order(2), 1);
  for (unsigned d = 2; d <= 8; ++d) {
    for (const auto& l : test::all_witt_1var(r, d)) {
      const PiFamily fam = pi_epsilon_inverse(l);
      REQUIRE(pi_epsilon(fam, r, d) == l);
    }
  }
}

TEST_CASE("pi_epsilon is a ring isomorphism") {
  Rng rng(61);
  for (std::uint64_t q : {2, 3, 4, 9}) {
    for (unsigned nil : {1u, 2u}) {
      const Ring& r = Ring::get(Field::of_order(q), nil);
      const unsigned p = r.characteristic();
      for (int trial = 0; trial < 20; ++trial) {
        const unsigned d = 2 + rng.below(7);
        const WittElement a = random_witt(r, 1, d, rng), b = random_witt(r, 1, d, rng);
        const PiFamily fa = pi_epsilon_inverse(a), fb = pi_epsilon_inverse(b);
        CHECK(pi_epsilon(fa, r, d) == a);
        PiFamily sum, prod;
        for (const auto& [j, v] : fa) {
          sum.emplace(j, pwitt_add(v, fb.at(j)));
          prod.emplace(j, pwitt_mul(v, fb.at(j)));
          CHECK(v.length() == pi_epsilon_length(p, d, j));
        }
        CHECK(pi_epsilon(sum, r, d) == a + b);
        CHECK(pi_epsilon(prod, r, d) == witt_mul_1var(a, b));
      }
    }
  }
}

TEST_CASE("pwitt_pair") {
  const Ring& r = Ring::get(Field::of_order(2), 2);
  const PWittVector w = PWittVector::teichmuller(r.one(), 2);
  CHECK(pwitt_pair(PWittVector::zero(r, 2), w).is_one());
  const Ring& r4 = Ring::get(Field::of_order(4), 2);
  const RingElement b = r4.constant(r4.field().generator_x());
  const RingElement eps = r4.epsilon();
  CHECK(pwitt_pair(PWittVector::teichmuller(eps, 2), PWittVector::teichmuller(b, 2)) == r4.one() + eps * b);
  CHECK_THROWS_AS(pwitt_pair(w, w), Error);
}

TEST_CASE("pwitt_pair is bilinear") {
  Rng rng(67);
  for (std::uint64_t q : {2, 3, 4}) {
    for (unsigned nil : {2u, 3u}) {
      const Ring& r = Ring::get(Field::of_order(q), nil);
      for (int trial = 0; trial < 25; ++trial) {
        // nonzero entries of v stay below m0; the slots above absorb the
        // carries of nilpotent Witt sums, which die past log_p(nil) steps
        const unsigned m0 = 1 + rng.below(3);
        unsigned m = m0;
        for (unsigned pk = 1; pk < nil; pk *= r.characteristic()) ++m;
        PWittVector v = PWittVector::zero(r, m), v2 = v;
        for (unsigned i = 0; i < m0; ++i) v.entries[i] = random_nilpotent(r, rng);
        for (unsigned i = 0; i < m0; ++i) v2.entries[i] = random_nilpotent(r, rng);
        const auto w = random_pwitt(r, m, rng), w2 = random_pwitt(r, m, rng);
        const RingElement pv = pwitt_pair(v, w);
        CHECK(pv.is_unit());
        CHECK((pv - r.one()).is_nilpotent());
        CHECK(pwitt_pair(pwitt_add(v, v2), w) == pv * pwitt_pair(v2, w));
        CHECK(pwitt_pair(v, pwitt_add(w, w2)) == pv * pwitt_pair(v, w2));
      }
    }
  }
}
