#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "bigwitt/error.hpp"
#include "bigwitt/witt.hpp"

namespace bigwitt {

/// Finite abelian group as a sorted list of prime-power cyclic factors.
/// witnesses[i] has order witness_orders[i] modulo the subgroup spanned by
/// witnesses[0..i-1]; the witnesses of pi1_truncated are independent, so
/// there the order holds outright.
template <typename T>
struct FiniteAbelianGroup {
  std::vector<std::uint64_t> factors;         ///< prime powers, ascending
  mpz_class order = 1;                        ///< product of the factors
  std::vector<T> witnesses;                   ///< generators
  std::vector<std::uint64_t> witness_orders;
};

using AbelianGroupStructure = FiniteAbelianGroup<WittElement>;

/// Splits n into prime powers (trial division).
std::vector<std::uint64_t> prime_power_parts(std::uint64_t n);

/// Lambda^n(F_q) mod degree d from the generators 1 - c t^nu, with nu not
/// divisible by p and c running over the F_p-basis 1, x, ..., x^{e-1};
/// the order of each generator is p^s with p^s |nu| >= d minimal.
/// Throws InvalidTruncation for d < 2 and InvalidInput if q is not a prime power.
AbelianGroupStructure pi1_truncated(unsigned n, std::uint64_t q, unsigned d);

/// (1 + u F_q[[u]]) / (1 + u^m F_q[[u]]), elements stored as one-variable
/// series in u mod u^m.
struct ModulusGroupDesc {
  std::uint64_t q = 2;
  unsigned m = 1;
  AbelianGroupStructure structure;
};

/// Throws InvalidInput for m = 0.
ModulusGroupDesc modulus_group(std::uint64_t q, unsigned m);

/// Every element of Lambda^n(F_q) mod degree d. Throws TooLarge past `limit`.
std::vector<WittElement> enumerate_lambda(const Ring& field, unsigned n, unsigned d, std::uint64_t limit = 10000);

/// Number of elements of Lambda^n(F_q) mod d as q^M, M = #{nu : 0 < |nu| < d}.
mpz_class lambda_order(unsigned n, std::uint64_t q, unsigned d);

/// Group structure of an explicit finite abelian group. The identity is
/// located by search; then an element of largest order modulo the current
/// subgroup H is adjoined until H exhausts the group. Every product formed
/// must land in `elements` (NotClosed) and the chosen generators must
/// commute (NotAbelian). The result is certified by |H| = |G|.
template <typename T, typename Op, typename Hash = std::hash<T>>
FiniteAbelianGroup<T> brute_force_structure(const std::vector<T>& elements, Op op) {
  constexpr std::size_t kMaxElements = 10000;
  if (elements.empty()) fail(ErrorKind::InvalidInput, "empty group");
  if (elements.size() > kMaxElements) fail(ErrorKind::TooLarge, "brute force is limited to 10^4 elements");
  const std::unordered_set<T, Hash> all(elements.begin(), elements.end());
  if (all.size() != elements.size()) fail(ErrorKind::InvalidInput, "repeated group elements");
  auto product = [&](const T& a, const T& b) {
    T c = op(a, b);
    if (!all.count(c)) fail(ErrorKind::NotClosed, "product left the element list");
    return c;
  };

  const T* identity = nullptr;
  for (const T& e : elements) {
    if (!(op(e, elements.front()) == elements.front())) continue;
    bool ok = true;
    for (const T& x : elements) {
      if (!(op(e, x) == x) || !(op(x, e) == x)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      identity = &e;
      break;
    }
  }
  if (!identity) fail(ErrorKind::InvalidInput, "no identity element");

  // Order in G of every element met so far; powers of x are filled in
  // from ord(x^i) = ord(x) / gcd(i, ord(x)).
  std::unordered_map<T, std::uint64_t, Hash> g_order;
  auto order_of = [&](const T& x) {
    if (auto it = g_order.find(x); it != g_order.end()) return it->second;
    std::vector<T> powers{x};
    while (!(powers.back() == *identity)) {
      powers.push_back(product(powers.back(), x));
      if (powers.size() > elements.size()) fail(ErrorKind::NotClosed, "element of unbounded order");
    }
    const std::uint64_t ord = powers.size();
    for (std::uint64_t i = 1; i <= ord; ++i) g_order.emplace(powers[i - 1], ord / std::gcd(i, ord));
    return ord;
  };

  FiniteAbelianGroup<T> out;
  std::unordered_set<T, Hash> h{*identity};
  std::vector<std::uint64_t> invariants;
  while (h.size() < elements.size()) {
    const std::uint64_t index = elements.size() / h.size();
    const T* best = nullptr;
    std::uint64_t best_order = 0;
    for (const T& x : elements) {
      if (h.count(x) || order_of(x) <= best_order) continue;
      std::uint64_t k = 1;
      T y = x;
      while (!h.count(y)) {
        y = product(y, x);
        ++k;
      }
      if (k > best_order) {
        best_order = k;
        best = &x;
        if (best_order == index) break;
      }
    }
    for (const T& g : out.witnesses) {
      if (!(op(g, *best) == op(*best, g))) fail(ErrorKind::NotAbelian, "generators do not commute");
    }
    std::vector<T> grown(h.begin(), h.end());
    const std::size_t base = grown.size();
    T power = *best;
    for (std::uint64_t k = 1; k < best_order; ++k) {
      for (std::size_t i = 0; i < base; ++i) grown.push_back(product(grown[i], power));
      power = product(power, *best);
    }
    for (std::size_t i = base; i < grown.size(); ++i) h.insert(grown[i]);
    if (h.size() != base * best_order) fail(ErrorKind::NotAbelian, "cosets overlap");
    out.witnesses.push_back(*best);
    out.witness_orders.push_back(best_order);
    invariants.push_back(best_order);
  }
  for (std::uint64_t n : invariants) {
    for (std::uint64_t part : prime_power_parts(n)) out.factors.push_back(part);
    out.order *= static_cast<unsigned long>(n);
  }
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

/// Census of the Lang map on Lambda^n(F_{q^s}) mod degree d.
struct LangCensus {
  std::uint64_t group_order = 0;
  std::uint64_t kernel_size = 0;
  std::uint64_t expected_kernel = 0;  ///< q^M
  bool kernel_rational = true;        ///< every kernel element has coefficients in F_q
  std::uint64_t pairs_checked = 0;
  bool pairs_exhaustive = false;
  bool endomorphism = true;           ///< lang(a + b) = lang(a) + lang(b) on the checked pairs
  bool ok() const { return kernel_size == expected_kernel && kernel_rational && endomorphism; }
};

/// Throws TooLarge when (q^s)^M exceeds 10^6. All pairs are checked when
/// their number is at most `pair_budget`; otherwise `pair_budget` pairs are
/// drawn with the seeded generator.
LangCensus lang_kernel_census(unsigned n, std::uint64_t q, unsigned s, unsigned d, std::uint64_t pair_budget = 200000,
                              std::uint64_t seed = 1);

}  // namespace bigwitt
