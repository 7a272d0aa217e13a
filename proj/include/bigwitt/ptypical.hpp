#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "bigwitt/witt.hpp"

namespace bigwitt {

/// p-typical Witt vector (v_0, ..., v_{m-1}) with entries in
/// R = F_q[eps]/(eps^nil). The length is fixed per computation.
struct PWittVector {
  unsigned p = 2;
  std::vector<RingElement> entries;

  static PWittVector zero(const Ring& ring, unsigned length);
  /// (1, 0, ..., 0)
  static PWittVector one(const Ring& ring, unsigned length);
  /// Teichmueller representative (x, 0, ..., 0).
  static PWittVector teichmuller(const RingElement& x, unsigned length);

  const Ring& ring() const { return entries.at(0).ring(); }
  unsigned length() const { return static_cast<unsigned>(entries.size()); }
  bool is_zero() const;

  friend bool operator==(const PWittVector&, const PWittVector&) = default;
};

/// Witt vector with exact rational entries (oracle mode).
struct RationalWitt {
  unsigned p = 2;
  std::vector<mpq_class> entries;
};

/// w_n = sum_{i <= n} p^i x_i^{p^{n-i}}
std::vector<mpq_class> ghost(const RationalWitt& v);
/// Triangular solve of the ghost equations.
RationalWitt from_ghost(unsigned p, const std::vector<mpq_class>& w);
/// Reduce p-integral entries into the prime field of `ring`. Throws
/// NonIntegral when an entry has a denominator divisible by p.
PWittVector reduce_mod_p(const RationalWitt& v, const Ring& ring);
/// Representative lift F_p -> {0, ..., p-1}; entries must lie in F_p.
RationalWitt lift_to_rationals(const PWittVector& v);

/// Ring laws of W over F_q[eps]/(eps^nil). Entries are lifted to
/// (Z/p^m)[x, eps]/(M(x), eps^nil), where M lifts the field modulus with
/// digits in {0..p-1}; the ghost equations are solved there one index at
/// a time. The result does not depend on the lift because a = b mod p
/// implies a^{p^k} = b^{p^k} mod p^{k+1}.
PWittVector pwitt_add(const PWittVector& v, const PWittVector& w);
PWittVector pwitt_mul(const PWittVector& v, const PWittVector& w);
PWittVector pwitt_neg(const PWittVector& v);
PWittVector pwitt_sub(const PWittVector& v, const PWittVector& w);

/// Oracle route over F_p: lift to Q, combine ghost components, solve back.
PWittVector pwitt_add_rational(const PWittVector& v, const PWittVector& w);
PWittVector pwitt_mul_rational(const PWittVector& v, const PWittVector& w);

/// Exact coefficients a_0..a_{count-1} of E(x, t) = sum a_k x^k t^k,
/// from k a_k = sum_{p^i <= k} a_{k - p^i}.
std::vector<mpq_class> artin_hasse_rational(unsigned p, unsigned count);
/// The same coefficients reduced mod p. Computed once per p and cached;
/// throws NonIntegral if a coefficient is not p-integral.
std::vector<unsigned> artin_hasse_mod_p(unsigned p, unsigned count);

/// E(x, t^j) mod t^d as a one-variable Witt element.
WittElement artin_hasse_exp(const RingElement& x, unsigned j, unsigned d);
/// E(v, t^j) = prod_i E(v_i, t^{j p^i}) mod t^d.
WittElement artin_hasse_exp(const PWittVector& v, unsigned j, unsigned d);

/// Entries of component j visible below t^d: #{i : j p^i < d}.
unsigned pi_epsilon_length(unsigned p, unsigned d, unsigned j);

/// Family (v_j) indexed by j < d prime to p.
using PiFamily = std::map<unsigned, PWittVector>;

/// Ring isomorphism prod_{(j,p)=1} W -> Lambda:
///   (v_j)_j  |->  prod_j E(v_j, t^j)^{-1/j}   mod t^d.
/// The exponent -1/j is the p-adic integer realized as the residue of
/// -j^{-1} mod p^s with p^s >= d; every element is killed by p^s there.
WittElement pi_epsilon(const PiFamily& family, const Ring& ring, unsigned d);

/// Inverse of `pi_epsilon` on a one-variable element. Every j < d prime
/// to p is present with length pi_epsilon_length(p, d, j).
PiFamily pi_epsilon_inverse(const WittElement& a);

/// E(v * w, 1) = prod_i E((v * w)_i, 1) for v with nilpotent entries
/// (NotNilpotent otherwise). The product is finite; the value is 1 + nilpotent.
/// Bilinear on vectors whose nonzero entries sit below m - log_p(nil):
/// sums of nilpotent Witt vectors carry at most that far.
RingElement pwitt_pair(const PWittVector& v, const PWittVector& w);

/// k with k = -j^{-1} mod p^s, where p^s is the least power >= bound.
std::uint64_t negative_inverse_exponent(unsigned j, unsigned p, std::uint64_t bound);

}  // namespace bigwitt
