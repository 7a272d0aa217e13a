#include "checks.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "bigwitt/cft.hpp"
#include "bigwitt/duality.hpp"
#include "bigwitt/error.hpp"
#include "bigwitt/field.hpp"
#include "bigwitt/polynomial.hpp"
#include "bigwitt/ptypical.hpp"
#include "bigwitt/random.hpp"
#include "bigwitt/witt.hpp"

namespace bigwitt::checks {

namespace {

std::uint64_t samples(const CheckOptions& opts, std::uint64_t n) {
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::llround(static_cast<double>(n) * opts.scale)));
}

// Counts checked properties and keeps the first failure.
struct Tally {
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first_failure = what;
  }
  template <typename F>
  void expect_lazy(bool ok, F describe) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first_failure = describe();
  }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream s;
    s << summary << "; " << checked << " properties checked";
    if (failed) s << ", " << failed << " failed, first: " << first_failure;
    return Outcome{failed == 0, s.str()};
  }
};

const Ring& field_ring(std::uint64_t q) { return Ring::get(Field::of_order(q), 1); }

std::string cfg(std::initializer_list<std::pair<const char*, std::uint64_t>> kv) {
  std::ostringstream s;
  bool first = true;
  for (const auto& [k, v] : kv) {
    s << (first ? "" : " ") << k << "=" << v;
    first = false;
  }
  return s.str();
}

bool is_prime_power(std::uint64_t q) { return q >= 2 && prime_power_parts(q).size() == 1; }

// ------------------------------------------------------------ algebra-core

Outcome field_axioms(const CheckOptions& opts) {
  Tally t;
  Rng rng(opts.seed);
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 8u, 9u, 16u, 25u, 27u, 49u, 64u}) {
    const Field& f = Field::of_order(q);
    for (std::uint64_t i = 0; i < samples(opts, 300); ++i) {
      const auto a = static_cast<Field::Elem>(rng.below(q)), b = static_cast<Field::Elem>(rng.below(q)),
                 c = static_cast<Field::Elem>(rng.below(q));
      const std::string where = cfg({{"q", q}, {"a", a}, {"b", b}, {"c", c}});
      t.expect(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)), "associativity " + where);
      t.expect(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)), "distributivity " + where);
      t.expect(f.add(a, f.neg(a)) == 0, "negation " + where);
      if (a) t.expect(f.mul(a, f.inv(a)) == 1, "inverse " + where);
      t.expect(f.pow(a, q) == a, "a^q = a " + where);
    }
  }
  return t.outcome("field axioms on random triples");
}

Outcome resultant_properties(const CheckOptions& opts) {
  Tally t;
  Rng rng(opts.seed);
  for (std::uint64_t q : {2u, 3u, 4u, 5u})
    for (unsigned nil : {1u, 2u, 3u}) {
      const Ring& r = Ring::get(Field::of_order(q), nil);
      for (std::uint64_t i = 0; i < samples(opts, 40); ++i) {
        auto poly = [&](unsigned deg, bool monic) {
          std::vector<RingElement> c;
          for (unsigned k = 0; k < deg; ++k) c.push_back(random_element(r, rng));
          c.push_back(monic ? r.one() : random_unit(r, rng));
          return UnivariatePolynomial(r, c);
        };
        const RingElement a = random_element(r, rng);
        const UnivariatePolynomial g = poly(1 + static_cast<unsigned>(rng.below(4)), false);
        t.expect(resultant(UnivariatePolynomial::linear_root(a), g) == g(a),
                 "Res(x - a, g) = g(a) " + cfg({{"q", q}, {"nil", nil}}));
        const UnivariatePolynomial f1 = poly(1 + static_cast<unsigned>(rng.below(3)), true);
        const UnivariatePolynomial f2 = poly(1 + static_cast<unsigned>(rng.below(3)), true);
        t.expect(resultant(f1 * f2, g) == resultant(f1, g) * resultant(f2, g),
                 "Res(f1 f2, g) multiplicative " + cfg({{"q", q}, {"nil", nil}}));
      }
    }
  return t.outcome("resultant against evaluation and multiplicativity");
}

// ----------------------------------------------------------------- mseries

Outcome series_identities(const CheckOptions& opts) {
  Tally t;
  Rng rng(opts.seed);
  for (std::uint64_t q : {2u, 3u, 4u})
    for (unsigned n : {1u, 2u, 3u}) {
      const Ring& r = Ring::get(Field::of_order(q), 2);
      for (std::uint64_t i = 0; i < samples(opts, 40); ++i) {
        const unsigned d = 2 + static_cast<unsigned>(rng.below(n == 1 ? 9 : 4));
        const TruncatedSeries a = random_witt(r, n, d, rng).series();
        const TruncatedSeries b = random_witt(r, n, d, rng).series();
        const TruncatedSeries c = random_witt(r, n, d, rng).series();
        const std::string where = cfg({{"q", q}, {"n", n}, {"d", d}});
        t.expect((a * b) * c == a * (b * c), "associativity " + where);
        t.expect(a * b == b * a, "commutativity " + where);
        t.expect(a * (b + c) == a * b + a * c, "distributivity " + where);
        t.expect((a * a.inverse()).is_one(), "inverse " + where);
      }
    }
  return t.outcome("truncated series ring identities");
}

// ------------------------------------------------------------- witt-lambda

Outcome ac1_witt_axioms(const CheckOptions& opts) {
  Tally t;
  Rng rng(opts.seed);
  const std::uint64_t triples = samples(opts, 1000);
  for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
    const Ring& k = field_ring(q);
    for (unsigned d = 1; d <= 10; ++d) {
      const WittElement one = witt_one(k, 1, d);
      t.expect(one == WittElement::factor(k, d, MultiIndex{1}, k.one()),
               "identity is 1 - t " + cfg({{"q", q}, {"d", d}}));
    }
    for (std::uint64_t i = 0; i < triples; ++i) {
      const unsigned d = 2 + static_cast<unsigned>(rng.below(9));
      const WittElement a = random_witt(k, 1, d, rng), b = random_witt(k, 1, d, rng), c = random_witt(k, 1, d, rng);
      const std::string where = cfg({{"q", q}, {"d", d}, {"triple", i}});
      const WittElement ab = witt_mul_1var(a, b);
      t.expect(witt_add(witt_add(a, b), c) == witt_add(a, witt_add(b, c)), "additive associativity " + where);
      t.expect(witt_add(a, b) == witt_add(b, a), "additive commutativity " + where);
      t.expect(witt_add(a, witt_neg(a)).is_zero(), "additive inverse " + where);
      t.expect(witt_mul_1var(ab, c) == witt_mul_1var(a, witt_mul_1var(b, c)), "multiplicative associativity " + where);
      t.expect(ab == witt_mul_1var(b, a), "multiplicative commutativity " + where);
      t.expect(witt_mul_1var(a, witt_add(b, c)) == witt_add(ab, witt_mul_1var(a, c)), "distributivity " + where);
      t.expect(witt_mul_1var(a, witt_one(k, 1, d)) == a, "1 - t is the identity " + where);
    }
  }
  return t.outcome(std::to_string(triples) + " random triples per q in {2,3,4,5}, d in [2,10], exact equality");
}

Outcome ac2_coordinates(const CheckOptions& opts) {
  Tally t;
  std::uint64_t exhaustive = 0;
  for (auto [q, d] : {std::pair<std::uint64_t, unsigned>{2, 3}, {2, 4}, {3, 3}}) {
    const Ring& k = field_ring(q);
    for (const WittElement& a : enumerate_lambda(k, 1, d)) {
      t.expect_lazy(from_coordinates(witt_coordinates(a)) == a, [&] { return "round trip at " + a.series().to_string(); });
      // The coefficients of a, read as a coordinate family, run over every family once.
      WittCoordinates c{&k, 1, d, {}};
      for (const auto& [rank, x] : a.series().terms())
        if (rank) c.set(MultiIndex{rank}, x);
      t.expect_lazy(witt_coordinates(from_coordinates(c)) == c, [&] { return "coordinate round trip at " + a.series().to_string(); });
      ++exhaustive;
    }
  }
  Rng rng(opts.seed);
  const std::uint64_t randoms = samples(opts, 1000);
  for (std::uint64_t q : {2u, 3u, 4u, 5u})
    for (unsigned n : {1u, 2u, 3u}) {
      const Ring& k = Ring::get(Field::of_order(q), n == 1 ? 1 : 2);
      for (std::uint64_t i = 0; i < randoms; ++i) {
        const unsigned d = 2 + static_cast<unsigned>(rng.below(n == 1 ? 9 : 5 - n + 2));
        const WittElement a = random_witt(k, n, d, rng);
        const WittCoordinates c = witt_coordinates(a);
        t.expect_lazy(from_coordinates(c) == a, [&] { return "round trip at " + a.series().to_string(); });
        for (const auto& [nu, r] : c.coords)
          t.expect_lazy(nu.total_degree() > 0 && nu.total_degree() < d && !r.is_zero(),
                        [&] { return "coordinate index " + nu.to_string() + " out of range"; });
      }
    }
  return t.outcome("exhaustive on (q,d) in {(2,3),(2,4),(3,3)} (" + std::to_string(exhaustive) + " elements); " +
                   std::to_string(randoms) + " random elements per q in {2,3,4,5} and n in {1,2,3}");
}

Outcome ac3_decomposition(const CheckOptions& opts) {
  Tally t;
  Rng rng(opts.seed);
  const std::uint64_t pairs = samples(opts, 500);
  const std::uint64_t qs[] = {2, 3, 4, 5};
  for (unsigned n : {2u, 3u}) {
    for (std::uint64_t i = 0; i < pairs; ++i) {
      const std::uint64_t q = qs[i % 4];
      const unsigned nil = 1 + static_cast<unsigned>(rng.below(2));
      const Ring& r = Ring::get(Field::of_order(q), nil);
      const unsigned d = 2 + static_cast<unsigned>(rng.below(5));
      const WittElement a = random_witt(r, n, d, rng), b = random_witt(r, n, d, rng);
      const std::string where = cfg({{"q", q}, {"nil", nil}, {"n", n}, {"d", d}, {"pair", i}});
      const OneVarComponentFamily da = decompose(a), db = decompose(b), ds = decompose(witt_add(a, b));
      t.expect(recompose(da) == a, "recompose o decompose " + where);
      bool hom = da.components.size() == ds.components.size();
      for (const auto& [nu, comp] : ds.components) hom = hom && comp == witt_add(da.components.at(nu), db.components.at(nu));
      t.expect(hom, "decompose is additive " + where);
    }
  }
  return t.outcome(std::to_string(pairs) + " random pairs per n in {2,3}, d in [2,6]");
}

// ---------------------------------------------------------------- ptypical

Outcome ac5_artin_hasse(const CheckOptions&) {
  Tally t;
  for (unsigned p : {2u, 3u, 5u}) {
    const auto coeffs = artin_hasse_rational(p, 16);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      t.expect(!mpz_divisible_ui_p(coeffs[i].get_den_mpz_t(), p),
               "coefficient " + std::to_string(i) + " of E(x,t) not p-integral for p=" + std::to_string(p));
    }
    t.expect(artin_hasse_mod_p(p, 16).size() == 16, "reduction mod p for p=" + std::to_string(p));
  }
  std::uint64_t elements = 0;
  const Ring& k = field_ring(2);
  for (unsigned d = 2; d <= 8; ++d) {
    const auto all = enumerate_lambda(k, 1, d);
    std::set<std::vector<std::vector<std::uint32_t>>> families;
    for (const WittElement& a : all) {
      const PiFamily fam = pi_epsilon_inverse(a);
      t.expect_lazy(pi_epsilon(fam, k, d) == a, [&] { return "pi_epsilon round trip at " + a.series().to_string(); });
      std::vector<std::vector<std::uint32_t>> key;
      for (const auto& [j, v] : fam) {
        std::vector<std::uint32_t> row;
        for (const auto& x : v.entries) row.push_back(x.component(0));
        key.push_back(row);
      }
      families.insert(key);
      ++elements;
    }
    t.expect(families.size() == all.size(), "pi_epsilon inverse injective at d=" + std::to_string(d));
  }
  return t.outcome("E(x,t) mod t^16 p-integral for p in {2,3,5}; pi_epsilon round trip on all " +
                   std::to_string(elements) + " elements of Lambda(F_2) mod t^d, d <= 8");
}

Outcome ptypical_laws(const CheckOptions& opts) {
  Tally t;
  Rng rng(opts.seed);
  auto random_pwitt = [&](const Ring& r, unsigned m) {
    PWittVector v{r.characteristic(), {}};
    for (unsigned i = 0; i < m; ++i) v.entries.push_back(random_element(r, rng));
    return v;
  };
  for (unsigned p : {2u, 3u, 5u}) {
    const Ring& r = field_ring(p);
    for (std::uint64_t i = 0; i < samples(opts, 60); ++i) {
      const unsigned m = 1 + static_cast<unsigned>(rng.below(4));
      const auto v = random_pwitt(r, m), w = random_pwitt(r, m);
      t.expect(pwitt_add(v, w) == pwitt_add_rational(v, w), "sum vs rational ghost route p=" + std::to_string(p));
      t.expect(pwitt_mul(v, w) == pwitt_mul_rational(v, w), "product vs rational ghost route p=" + std::to_string(p));
    }
  }
  for (std::uint64_t q : {2u, 3u, 4u, 9u})
    for (unsigned nil : {1u, 2u}) {
      const Ring& r = Ring::get(Field::of_order(q), nil);
      for (std::uint64_t i = 0; i < samples(opts, 20); ++i) {
        const unsigned d = 2 + static_cast<unsigned>(rng.below(7));
        const WittElement a = random_witt(r, 1, d, rng), b = random_witt(r, 1, d, rng);
        const PiFamily fa = pi_epsilon_inverse(a), fb = pi_epsilon_inverse(b);
        PiFamily sum, prod;
        for (const auto& [j, v] : fa) {
          sum.emplace(j, pwitt_add(v, fb.at(j)));
          prod.emplace(j, pwitt_mul(v, fb.at(j)));
        }
        const std::string where = cfg({{"q", q}, {"nil", nil}, {"d", d}});
        t.expect(pi_epsilon(fa, r, d) == a, "pi_epsilon round trip " + where);
        t.expect(pi_epsilon(sum, r, d) == witt_add(a, b), "pi_epsilon additive " + where);
        t.expect(pi_epsilon(prod, r, d) == witt_mul_1var(a, b), "pi_epsilon multiplicative " + where);
      }
    }
  return t.outcome("p-typical laws against the ghost route; pi_epsilon is a ring map");
}

// ----------------------------------------------------------------- duality

unsigned g_precision(const FormalWittElement& f) {
  return std::max({pairing_precision(f) + 1, geometric_precision(f) + 1, pi_epsilon_precision(f)});
}

Outcome ac4_duality(const CheckOptions& opts) {
  Tally t;
  Rng rng(opts.seed);
  const std::uint64_t pairs = samples(opts, 500);
  std::uint64_t pi_checked = 0;
  for (std::uint64_t q : {2u, 3u, 4u, 5u})
    for (unsigned e : {2u, 3u}) {
      const Ring& r = Ring::get(Field::of_order(q), e);
      const Ring& k = r.residue_field();
      const unsigned p = r.characteristic();
      for (std::uint64_t i = 0; i < pairs; ++i) {
        const FormalWittElement f(random_formal_polynomial(r, 1, 3, rng));
        const WittElement g = random_witt(k, 1, g_precision(f), rng);
        const RingElement a = cartier_pair(f, g);
        const std::string where = cfg({{"q", q}, {"e", e}, {"pair", i}});
        t.expect_lazy(geometric_pair(f, g) == a, [&] {
          return "algebraic vs geometric " + where + " f=" + f.polynomial().to_string() + " g=" + g.series().to_string();
        });
        if (p == 2 || p == 3) {
          t.expect_lazy(cartier_pair_via_pi_epsilon(f, g) == a, [&] {
            return "algebraic vs pi_epsilon " + where + " f=" + f.polynomial().to_string() + " g=" + g.series().to_string();
          });
          ++pi_checked;
        }
      }
    }
  return t.outcome(std::to_string(pairs) + " random (f,g) per q in {2,3,4,5}, e in {2,3}; " + std::to_string(pi_checked) +
                   " also through pi_epsilon; exact equality");
}

Outcome ac8_units(const CheckOptions&) {
  Tally t;
  const Ring& r = Ring::get(Field::of_order(2), 2);
  const std::vector<RingElement> elems = all_elements(r);
  std::uint64_t total = 0, accepted_count = 0;
  for (unsigned n : {1u, 2u}) {
    const MonomialBasis& basis = MonomialBasis::get(n, 3);
    const std::uint32_t m = basis.size();
    std::vector<TruncatedSeries> all;
    std::vector<std::size_t> idx(m, 0);
    for (;;) {
      std::vector<std::pair<MultiIndex, RingElement>> terms;
      for (std::uint32_t i = 0; i < m; ++i) terms.emplace_back(basis.monomial(i), elems[idx[i]]);
      all.push_back(TruncatedSeries::polynomial(r, n, terms));
      std::size_t j = 0;
      while (j < m && ++idx[j] == elems.size()) idx[j++] = 0;
      if (j == m) break;
    }
    auto is_inverse = [](const TruncatedSeries& a, const TruncatedSeries& b) {
      return (a.with_precision(6) * b.with_precision(6)).is_one();
    };
    for (const TruncatedSeries& u : all) {
      ++total;
      bool accepted = false;
      try {
        const UnitClass cls = unit_class(u);
        accepted = true;
        t.expect(cls.representative.polynomial().constant_term().is_one(), "representative normalized");
        t.expect_lazy(is_inverse(u, polynomial_inverse(u)), [&] { return "inverse of " + u.to_string(); });
      } catch (const Error& err) {
        t.expect(err.kind() == ErrorKind::NotAUnit, "rejection kind");
      }
      accepted_count += accepted;
      t.expect(accepted == is_polynomial_unit(u), "unit_class agrees with is_polynomial_unit");
      if (!accepted) {
        // A unit reduces mod eps to a unit of F_2[t], i.e. a nonzero constant.
        bool residue_unit = u.constant_term().component(0) != 0;
        for (const auto& [rank, c] : u.terms())
          if (rank != 0 && c.component(0) != 0) residue_unit = false;
        t.expect_lazy(!residue_unit, [&] { return "rejected " + u.to_string() + " but its residue is a unit"; });
      }
      if (n == 1) {
        const bool found = std::any_of(all.begin(), all.end(), [&](const TruncatedSeries& v) { return is_inverse(u, v); });
        t.expect_lazy(found == accepted, [&] { return "inverse search disagrees at " + u.to_string(); });
      }
    }
  }
  return t.outcome("all " + std::to_string(total) + " polynomials of degree <= 2 in n <= 2 variables over F_2[eps]/(eps^2), " +
                   std::to_string(accepted_count) + " units");
}

Outcome ac9_nondegeneracy(const CheckOptions&) {
  Tally t;
  std::ostringstream summary;
  for (unsigned d : {3u, 4u}) {
    const Ring& r = Ring::get(Field::of_order(2), d);
    const Ring& k = r.residue_field();
    std::vector<FormalWittElement> probes;
    for (const RingElement& a : all_elements(r)) {
      if (!a.is_nilpotent() || a.is_zero()) continue;
      probes.emplace_back(TruncatedSeries::univariate(r, 3, {r.one(), -a}, true));
    }
    unsigned precision = 2 * d + 1;
    for (const auto& f : probes) precision = std::max(precision, pairing_precision(f) + 1);
    std::vector<WittElement> reps;
    for (const WittElement& g : enumerate_lambda(k, 1, d)) {
      std::vector<RingElement> c(d, k.zero());
      for (const auto& [rank, x] : g.series().terms()) c[rank] = x;
      reps.emplace_back(TruncatedSeries::univariate(k, precision, c, true));
    }
    const auto matrix = pairing_matrix(probes, reps);
    std::set<std::vector<std::vector<std::vector<unsigned>>>> columns;
    for (std::size_t b = 0; b < reps.size(); ++b) {
      std::vector<std::vector<std::vector<unsigned>>> col;
      for (const auto& row : matrix) {
        std::vector<std::vector<unsigned>> entry;
        for (unsigned i = 0; i < d; ++i) entry.push_back(k.field().digits(row[b].component(i)));
        col.push_back(entry);
      }
      columns.insert(col);
    }
    t.expect(columns.size() == reps.size(), "pairing columns not distinct at d=" + std::to_string(d));
    // The probes factor through Lambda mod t^d: they kill 1 - t^j for j >= d.
    for (unsigned j = d; j + 1 < precision; ++j) {
      std::vector<RingElement> c(j + 1, k.zero());
      c[0] = k.one();
      c[j] = -k.one();
      const WittElement kernel(TruncatedSeries::univariate(k, precision, c, true));
      for (const auto& f : probes) t.expect(cartier_pair(f, kernel).is_one(), "probe does not kill 1 - t^" + std::to_string(j));
    }
    summary << (d == 3 ? "" : "; ") << reps.size() << " classes mod t^" << d << " separated by " << probes.size()
            << " probes 1 - a t, a in (eps) of F_2[eps]/(eps^" << d << ")";
  }
  return t.outcome(summary.str());
}

// --------------------------------------------------------------------- cft

struct GroupConfig {
  unsigned n;
  std::uint64_t q;
  unsigned d;
};

std::vector<GroupConfig> small_group_configs(std::uint64_t max_order) {
  std::vector<GroupConfig> out;
  for (unsigned n = 1; lambda_order(n, 2, 2) <= max_order; ++n)
    for (std::uint64_t q = 2; lambda_order(n, q, 2) <= max_order; ++q) {
      if (!is_prime_power(q)) continue;
      for (unsigned d = 2; lambda_order(n, q, d) <= max_order; ++d) out.push_back({n, q, d});
    }
  return out;
}

Outcome ac6_fundamental_group(const CheckOptions&) {
  const auto configs = small_group_configs(10000);
  struct Verdict {
    bool ok = true;
    std::string what;
  };
  std::vector<std::future<Verdict>> jobs;
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<Verdict> verdicts(configs.size());
  std::atomic<std::size_t> next{0};
  for (unsigned w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&] {
      for (std::size_t i = next++; i < configs.size(); i = next++) {
        const auto [n, q, d] = configs[i];
        Verdict v;
        const std::string where = cfg({{"n", n}, {"q", q}, {"d", d}});
        try {
          const AbelianGroupStructure formula = pi1_truncated(n, q, d);
          const auto oracle = brute_force_structure(enumerate_lambda(field_ring(q), n, d), witt_add);
          v.ok = formula.factors == oracle.factors && formula.order == lambda_order(n, q, d) && oracle.order == formula.order;
          if (!v.ok) v.what = "factors differ at " + where;
        } catch (const Error& e) {
          v = {false, std::string(e.what()) + " at " + where};
        }
        verdicts[i] = v;
      }
      return Verdict{};
    }));
  }
  for (auto& j : jobs) j.get();
  Tally t;
  for (const auto& v : verdicts) t.expect(v.ok, v.what);
  auto anchor = [&](unsigned n, std::uint64_t q, unsigned d, std::vector<std::uint64_t> want) {
    const auto oracle = brute_force_structure(enumerate_lambda(field_ring(q), n, d), witt_add);
    t.expect(pi1_truncated(n, q, d).factors == want && oracle.factors == want, "anchor " + cfg({{"n", n}, {"q", q}, {"d", d}}));
  };
  anchor(1, 2, 3, {4});
  anchor(1, 3, 3, {3, 3});
  anchor(2, 2, 2, {2, 2});
  return t.outcome("formula vs brute force on all " + std::to_string(configs.size()) +
                   " configurations (n, q, d) with order <= 10^4, anchors (1,2,3)->[4], (1,3,3)->[3,3], (2,2,2)->[2,2]");
}

Outcome ac7_lang(const CheckOptions& opts) {
  Tally t;
  std::uint64_t configs = 0, largest = 0;
  const LangCensus anchor = lang_kernel_census(1, 2, 2, 3, 200000, opts.seed);
  t.expect(anchor.group_order == 16 && anchor.kernel_size == 4 && anchor.pairs_exhaustive && anchor.ok(),
           "anchor (1,2,2,3) -> 4 of 16");
  for (unsigned n : {1u, 2u, 3u})
    for (std::uint64_t q : {2u, 3u, 4u, 5u})
      for (unsigned s : {1u, 2u, 3u})
        for (unsigned d = 2;; ++d) {
          mpz_class qs;
          mpz_ui_pow_ui(qs.get_mpz_t(), q, s);
          const mpz_class size = lambda_order(n, qs.get_ui(), d);
          if (size > 1000000) break;
          const LangCensus c = lang_kernel_census(n, q, s, d, samples(opts, 20000), opts.seed);
          const std::string where = cfg({{"n", n}, {"q", q}, {"s", s}, {"d", d}});
          t.expect(c.kernel_size == lambda_order(n, q, d) && c.ok(),
                   "census " + where + " kernel " + std::to_string(c.kernel_size) + " expected " +
                       std::to_string(c.expected_kernel));
          if (s == 1) t.expect(c.kernel_size == c.group_order, "s = 1 kernel is everything " + where);
          largest = std::max(largest, c.group_order);
          ++configs;
        }
  return t.outcome(std::to_string(configs) + " censuses over n <= 3, q in {2,3,4,5}, s <= 3 with census size <= 10^6 (largest " +
                   std::to_string(largest) + ")");
}

Outcome modulus_groups(const CheckOptions&) {
  Tally t;
  t.expect(modulus_group(2, 1).structure.order == 1, "m = 1 is trivial");
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u})
    for (unsigned m = 2; lambda_order(1, q, m) <= 5000; ++m) {
      const ModulusGroupDesc g = modulus_group(q, m);
      mpz_class expected;
      mpz_ui_pow_ui(expected.get_mpz_t(), q, m - 1);
      const auto oracle = brute_force_structure(enumerate_lambda(field_ring(q), 1, m), witt_add);
      t.expect(g.structure.order == expected && oracle.factors == g.structure.factors,
               "modulus group " + cfg({{"q", q}, {"m", m}}));
    }
  for (unsigned n : {1u, 2u})
    for (std::uint64_t q : {2u, 3u})
      for (unsigned d = 1; d <= 3; ++d)
        for (unsigned dd = d; dd <= d + 2 && lambda_order(n, q, dd) <= 20000; ++dd) {
          std::unordered_set<WittElement> image;
          for (const WittElement& a : enumerate_lambda(field_ring(q), n, dd, 20000)) image.insert(a.truncated(d));
          t.expect(image.size() == lambda_order(n, q, d), "truncation surjective " + cfg({{"n", n}, {"q", q}, {"d", d}, {"d'", dd}}));
        }
  return t.outcome("modulus groups against brute force; truncation maps surjective");
}

Check make(std::string id, std::string name, std::function<Outcome(const CheckOptions&)> fn) {
  return Check{std::move(id), std::move(name), std::move(fn)};
}

}  // namespace

std::vector<Check> acceptance_criteria() {
  return {
      make("AC1", "Witt ring axioms", ac1_witt_axioms),
      make("AC2", "unique decomposition into Witt coordinates", ac2_coordinates),
      make("AC3", "decomposition isomorphism", ac3_decomposition),
      make("AC4", "Cartier duality agreement", ac4_duality),
      make("AC5", "Artin-Hasse integrality and pi_epsilon round trip", ac5_artin_hasse),
      make("AC6", "truncated fundamental group", ac6_fundamental_group),
      make("AC7", "Lang kernel census", ac7_lang),
      make("AC8", "unit criterion", ac8_units),
      make("AC9", "nondegeneracy probe", ac9_nondegeneracy),
  };
}

std::vector<std::string> suite_names() { return {"algebra-core", "mseries", "witt-lambda", "ptypical", "duality", "cft", "all"}; }

std::vector<Check> suite(const std::string& name) {
  const auto ac = acceptance_criteria();
  std::map<std::string, std::vector<Check>> suites{
      {"algebra-core", {make("field-axioms", "field axioms", field_axioms),
                        make("resultant", "resultant properties", resultant_properties)}},
      {"mseries", {make("series-ring", "series ring identities", series_identities)}},
      {"witt-lambda", {ac[0], ac[1], ac[2]}},
      {"ptypical", {ac[4], make("ptypical-laws", "p-typical laws", ptypical_laws)}},
      {"duality", {ac[3], ac[7], ac[8]}},
      {"cft", {ac[5], ac[6], make("modulus", "modulus groups and truncation maps", modulus_groups)}},
  };
  if (name == "all") {
    std::vector<Check> out;
    for (const auto& s : suite_names())
      if (s != "all")
        for (const auto& c : suites.at(s)) out.push_back(c);
    return out;
  }
  auto it = suites.find(name);
  if (it == suites.end()) fail(ErrorKind::InvalidInput, "unknown suite \"" + name + "\"");
  return it->second;
}

CheckResult run_check(const Check& check, const CheckOptions& opts) {
  try {
    const Outcome o = check.run(opts);
    return CheckResult{check.id, check.name, o.pass, o.detail};
  } catch (const Error& e) {
    return CheckResult{check.id, check.name, false, e.what()};
  }
}

}  // namespace bigwitt::checks
