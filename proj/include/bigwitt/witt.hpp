#pragma once

#include <map>
#include <vector>

#include "bigwitt/series.hpp"

namespace bigwitt {

/// Element of Lambda^n(R) modulo total degree d: a truncated power series
/// with constant term exactly 1. The group law ("Witt addition") is the
/// product of power series; the additive zero is the series 1.
class WittElement {
 public:
  /// Throws InvalidInput unless the constant term is 1.
  explicit WittElement(TruncatedSeries series);

  /// The series 1.
  static WittElement zero(const Ring& ring, unsigned n, unsigned d);
  /// 1 - r t^nu
  static WittElement factor(const Ring& ring, unsigned d, const MultiIndex& nu, const RingElement& r);

  const TruncatedSeries& series() const { return series_; }
  const Ring& ring() const { return series_.ring(); }
  unsigned variables() const { return series_.variables(); }
  unsigned precision() const { return series_.precision(); }
  bool is_zero() const { return series_.is_one(); }

  WittElement truncated(unsigned d) const { return WittElement(series_.truncated(d)); }

  friend bool operator==(const WittElement& a, const WittElement& b) { return a.series_ == b.series_; }

 private:
  TruncatedSeries series_;
};

/// The family r_nu with lambda = prod_{0<|nu|<d} (1 - r_nu t^nu), factors
/// taken in ascending graded-lex order. Zero coordinates are not stored.
struct WittCoordinates {
  const Ring* ring = nullptr;
  unsigned n = 1;
  unsigned d = 1;
  std::map<MultiIndex, RingElement, GrlexLess> coords;

  RingElement at(const MultiIndex& nu) const;
  void set(const MultiIndex& nu, const RingElement& r);
  friend bool operator==(const WittCoordinates& a, const WittCoordinates& b);
};

/// Components of Lambda^n = prod_{nu primitive} Lambda(t^nu) at truncation d.
/// The component at nu is a one-variable element in s = t^nu truncated at
/// ceil(d / |nu|); every primitive nu with |nu| < d is present.
struct OneVarComponentFamily {
  const Ring* ring = nullptr;
  unsigned n = 1;
  unsigned d = 1;
  std::map<MultiIndex, WittElement, GrlexLess> components;

  friend bool operator==(const OneVarComponentFamily& a, const OneVarComponentFamily& b) {
    return a.ring == b.ring && a.n == b.n && a.d == b.d && a.components == b.components;
  }
};

/// ceil(d / |nu|): number of powers s^0..s^{k-1} of s = t^nu below degree d.
unsigned component_precision(unsigned d, unsigned nu_degree);

/// Primitive multi-indices with 0 < |nu| < d, graded-lex ascending.
std::vector<MultiIndex> primitive_indices(unsigned n, unsigned d);

WittElement witt_add(const WittElement& a, const WittElement& b);
WittElement witt_neg(const WittElement& a);
WittElement witt_sub(const WittElement& a, const WittElement& b);

WittCoordinates witt_coordinates(const WittElement& a);
WittElement from_coordinates(const WittCoordinates& c);

OneVarComponentFamily decompose(const WittElement& a);
WittElement recompose(const OneVarComponentFamily& family);

/// Ring product on Lambda (one variable):
///   prod (1 - a_i t^i) * prod (1 - b_j t^j)
///     = prod_{i,j} (1 - a_i^{j/g} b_j^{i/g} t^{ij/g})^g,   g = gcd(i, j).
WittElement witt_mul_1var(const WittElement& a, const WittElement& b);

/// Ring product on Lambda^n, transported componentwise through `decompose`.
WittElement witt_mul(const WittElement& a, const WittElement& b);

/// Multiplicative identity prod_{nu primitive, |nu|<d} (1 - t^nu).
WittElement witt_one(const Ring& ring, unsigned n, unsigned d);

/// Coefficientwise x -> x^q. Requires field coefficients (nil == 1).
WittElement frobenius_witt(const WittElement& a, std::uint64_t q);

/// Lang map: Frob_q(a) - a in the Witt group, i.e. Frob_q(a) * a^{-1}.
WittElement lang_map(const WittElement& a, std::uint64_t q);

/// Witt-group multiple k * a, i.e. the power series a^k (k may be negative).
WittElement witt_multiple(const WittElement& a, std::int64_t k);

inline WittElement operator+(const WittElement& a, const WittElement& b) { return witt_add(a, b); }
inline WittElement operator-(const WittElement& a) { return witt_neg(a); }
inline WittElement operator-(const WittElement& a, const WittElement& b) { return witt_sub(a, b); }
inline WittElement operator*(const WittElement& a, const WittElement& b) { return witt_mul(a, b); }

/// C(n, k) mod p via Lucas' theorem.
unsigned binomial_mod_p(std::uint64_t n, std::uint64_t k, unsigned p);

}  // namespace bigwitt

template <>
struct std::hash<bigwitt::WittElement> {
  std::size_t operator()(const bigwitt::WittElement& a) const noexcept { return a.series().hash(); }
};
