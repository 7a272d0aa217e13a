#include "bigwitt/cft.hpp"

#include <future>
#include <thread>

#include "bigwitt/field.hpp"
#include "bigwitt/random.hpp"

namespace bigwitt {

namespace {

struct PrimePower {
  unsigned p = 0;
  unsigned e = 0;
};

PrimePower split_prime_power(std::uint64_t q) {
  if (q < 2) fail(ErrorKind::InvalidInput, "q must be a prime power, got " + std::to_string(q));
  auto parts = prime_power_parts(q);
  if (parts.size() != 1) fail(ErrorKind::InvalidInput, "q must be a prime power, got " + std::to_string(q));
  unsigned p = 2;
  while (q % p) ++p;
  unsigned e = 0;
  for (std::uint64_t r = q; r > 1; r /= p) ++e;
  return {p, e};
}

// Element number `index` of Lambda^n(k) mod d: base-|k| digits are the
// coefficients of the nonconstant monomials in grlex order.
WittElement lambda_element(const Ring& k, const MonomialBasis& basis, std::uint64_t index) {
  const std::uint64_t q = k.field().order();
  TruncatedSeries s = TruncatedSeries::one(k, basis.variables(), basis.bound());
  for (std::uint32_t rank = 1; rank < basis.size() && index; ++rank, index /= q) {
    const auto c = static_cast<Field::Elem>(index % q);
    if (c) s.set(basis.monomial(rank), k.constant(c));
  }
  return WittElement(std::move(s));
}

std::uint64_t checked_count(const mpz_class& n, std::uint64_t limit) {
  if (n > mpz_class(std::to_string(limit))) {
    fail(ErrorKind::TooLarge, "enumeration of " + n.get_str() + " elements exceeds " + std::to_string(limit));
  }
  return n.get_ui();
}

unsigned worker_count(std::uint64_t jobs) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::uint64_t>(hw, std::max<std::uint64_t>(1, jobs / 256)));
}

// Runs body(begin, end) over disjoint ranges of [0, total) and sums the results.
template <typename Acc, typename Body>
Acc parallel_reduce(std::uint64_t total, Body body) {
  const unsigned workers = worker_count(total);
  std::vector<std::future<Acc>> parts;
  const std::uint64_t chunk = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = std::min(total, w * chunk);
    const std::uint64_t end = std::min(total, begin + chunk);
    parts.push_back(std::async(std::launch::async, body, begin, end));
  }
  Acc acc{};
  for (auto& f : parts) acc += f.get();
  return acc;
}

}  // namespace

std::vector<std::uint64_t> prime_power_parts(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    std::uint64_t pk = 1;
    while (n % p == 0) {
      n /= p;
      pk *= p;
    }
    out.push_back(pk);
  }
  if (n > 1) out.push_back(n);
  return out;
}

mpz_class lambda_order(unsigned n, std::uint64_t q, unsigned d) {
  const unsigned m = d == 0 ? 0 : MonomialBasis::get(n, d).size() - 1;
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), q, m);
  return out;
}

AbelianGroupStructure pi1_truncated(unsigned n, std::uint64_t q, unsigned d) {
  if (d < 2) fail(ErrorKind::InvalidTruncation, "truncation degree must be at least 2");
  if (n == 0) fail(ErrorKind::InvalidInput, "need at least one variable");
  const PrimePower pp = split_prime_power(q);
  const Ring& k = Ring::get(Field::of_order(q), 1);
  const MonomialBasis& basis = MonomialBasis::get(n, d);
  AbelianGroupStructure out;
  for (std::uint32_t rank = 1; rank < basis.size(); ++rank) {
    const MultiIndex& nu = basis.monomial(rank);
    if (nu.divisible_by(pp.p)) continue;
    std::uint64_t order = 1;
    for (std::uint64_t reach = nu.total_degree(); reach < d; reach *= pp.p) order *= pp.p;
    Field::Elem c = 1;
    for (unsigned i = 0; i < pp.e; ++i, c *= pp.p) {
      out.witnesses.push_back(WittElement::factor(k, d, nu, k.constant(c)));
      out.witness_orders.push_back(order);
      out.factors.push_back(order);
      out.order *= static_cast<unsigned long>(order);
    }
  }
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

ModulusGroupDesc modulus_group(std::uint64_t q, unsigned m) {
  if (m == 0) fail(ErrorKind::InvalidInput, "modulus multiplicity must be positive");
  split_prime_power(q);
  ModulusGroupDesc out{q, m, {}};
  if (m >= 2) out.structure = pi1_truncated(1, q, m);
  return out;
}

std::vector<WittElement> enumerate_lambda(const Ring& field, unsigned n, unsigned d, std::uint64_t limit) {
  if (field.nil() != 1) fail(ErrorKind::InvalidInput, "enumeration is over a field");
  if (d == 0) fail(ErrorKind::InvalidTruncation, "truncation degree must be positive");
  const std::uint64_t count = checked_count(lambda_order(n, field.field().order(), d), limit);
  const MonomialBasis& basis = MonomialBasis::get(n, d);
  std::vector<WittElement> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(lambda_element(field, basis, i));
  return out;
}

LangCensus lang_kernel_census(unsigned n, std::uint64_t q, unsigned s, unsigned d, std::uint64_t pair_budget,
                              std::uint64_t seed) {
  if (s == 0) fail(ErrorKind::InvalidInput, "extension degree must be positive");
  if (d < 1) fail(ErrorKind::InvalidTruncation, "truncation degree must be positive");
  split_prime_power(q);
  mpz_class qs;
  mpz_ui_pow_ui(qs.get_mpz_t(), q, s);
  if (qs > mpz_class(std::to_string(Field::kMaxOrder))) fail(ErrorKind::TooLarge, "field F_{q^s} is too large");
  const Ring& k = Ring::get(Field::of_order(qs.get_ui()), 1);
  const std::uint64_t total = checked_count(lambda_order(n, qs.get_ui(), d), 1000000);
  const MonomialBasis& basis = MonomialBasis::get(n, d);

  LangCensus out;
  out.group_order = total;
  out.expected_kernel = lambda_order(n, q, d).get_ui();

  struct KernelTally {
    std::uint64_t kernel = 0;
    std::uint64_t irrational = 0;
    KernelTally& operator+=(const KernelTally& o) {
      kernel += o.kernel;
      irrational += o.irrational;
      return *this;
    }
  };
  const KernelTally tally = parallel_reduce<KernelTally>(total, [&](std::uint64_t begin, std::uint64_t end) {
    KernelTally t;
    for (std::uint64_t i = begin; i < end; ++i) {
      const WittElement a = lambda_element(k, basis, i);
      if (!lang_map(a, q).is_zero()) continue;
      ++t.kernel;
      for (const auto& [rank, c] : a.series().terms())
        if (!(c.frobenius(q) == c)) {
          ++t.irrational;
          break;
        }
    }
    return t;
  });
  out.kernel_size = tally.kernel;
  out.kernel_rational = tally.irrational == 0;

  const bool exhaustive = total <= pair_budget / std::max<std::uint64_t>(total, 1);
  out.pairs_exhaustive = exhaustive;
  out.pairs_checked = exhaustive ? total * total : pair_budget;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> sample;
  if (!exhaustive) {
    Rng rng(seed);
    sample.reserve(pair_budget);
    for (std::uint64_t i = 0; i < pair_budget; ++i) sample.emplace_back(rng.below(total), rng.below(total));
  }
  const std::uint64_t jobs = exhaustive ? total * total : pair_budget;
  const std::uint64_t failures = parallel_reduce<std::uint64_t>(jobs, [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t bad = 0;
    for (std::uint64_t j = begin; j < end; ++j) {
      const auto [ia, ib] = exhaustive ? std::pair{j / total, j % total} : sample[j];
      const WittElement a = lambda_element(k, basis, ia);
      const WittElement b = lambda_element(k, basis, ib);
      if (!(lang_map(witt_add(a, b), q) == witt_add(lang_map(a, q), lang_map(b, q)))) ++bad;
    }
    return bad;
  });
  out.endomorphism = failures == 0;
  return out;
}

}  // namespace bigwitt
