#pragma once

#include <vector>

#include "bigwitt/polynomial.hpp"
#include "bigwitt/witt.hpp"

namespace bigwitt {

/// Point of the completion at 1: an exact polynomial with constant term 1
/// whose other coefficients are all nilpotent.
class FormalWittElement {
 public:
  /// Throws InvalidInput (not exact, constant term != 1) or NotNilpotent.
  explicit FormalWittElement(TruncatedSeries poly);

  static FormalWittElement zero(const Ring& ring, unsigned n);

  const TruncatedSeries& polynomial() const { return poly_; }
  const Ring& ring() const { return poly_.ring(); }
  unsigned variables() const { return poly_.variables(); }
  /// Total degree of the polynomial (0 for the zero element).
  unsigned degree() const;
  bool is_zero() const { return poly_.is_one(); }

  /// Largest |nu| with a nonzero Witt coordinate; 0 for the zero element.
  /// The coordinates vanish beyond (nil - 1) * degree.
  unsigned coordinate_support() const;

  /// The element as a Witt element mod degree d.
  WittElement at_precision(unsigned d) const;

  friend bool operator==(const FormalWittElement& a, const FormalWittElement& b) { return a.poly_ == b.poly_; }

 private:
  TruncatedSeries poly_;
};

/// Group law of the completion (product of polynomials) and its inverse.
FormalWittElement formal_add(const FormalWittElement& a, const FormalWittElement& b);
FormalWittElement formal_neg(const FormalWittElement& a);

/// u is a unit of R[t_1..t_n] iff u(0) is a unit and the other
/// coefficients are nilpotent.
bool is_polynomial_unit(const TruncatedSeries& u);
/// Exact polynomial inverse of a unit; throws NotAUnit.
TruncatedSeries polynomial_inverse(const TruncatedSeries& u);

/// Coset of a polynomial unit modulo R^*, represented by u / u(0).
struct UnitClass {
  FormalWittElement representative;
};

/// Throws InvalidInput for a non-exact series and NotAUnit for a non-unit.
UnitClass unit_class(const TruncatedSeries& u);

/// Truncation at which the algebraic pairing of f is exact:
/// max(2, nil * I, (nil - 1)^2 * I + 1) with I = f.coordinate_support().
unsigned pairing_precision(const FormalWittElement& f);
/// Level m of the geometric pairing: max(1, nil * I).
unsigned geometric_precision(const FormalWittElement& f);
/// Truncation of the pi_epsilon route: nil * (nil - 1) * I + 1.
unsigned pi_epsilon_precision(const FormalWittElement& f);

/// <f, g> = (f * g)(1), computed componentwise over the primitive
/// decomposition with the one-variable ring product at truncation d and
/// again at d + 1. Throws UnstableTruncation if the two differ and
/// InsufficientPrecision if g is known below degree d + 1.
/// g may live over R or over its residue field.
RingElement cartier_pair(const FormalWittElement& f, const WittElement& g, unsigned d);
/// Same at d = pairing_precision(f).
RingElement cartier_pair(const FormalWittElement& f, const WittElement& g);

/// Resultant Res(reverse(g'), f) where g' = g mod u^m as a polynomial in
/// u = 1/t; equals prod f(alpha)^{mult} over the zeros alpha of g' in the
/// t-line. One variable. Recomputed at m + 1; UnstableTruncation on mismatch.
RingElement geometric_pair(const FormalWittElement& f, const WittElement& g, unsigned m);
/// Same at m = geometric_precision(f).
RingElement geometric_pair(const FormalWittElement& f, const WittElement& g);

/// Oracle: find the zeros of g' in F_{q^s} (s <= max_ext), evaluate f
/// there in F_{q^s}[eps] and pull the product back. g needs field
/// coefficients.
RingElement geometric_pair_by_roots(const FormalWittElement& f, const WittElement& g, unsigned m, unsigned max_ext = 12);

/// prod_j pwitt_pair(v_j, w_j)^{-1/j} with (v_j) = pi_epsilon^{-1}(f) and
/// (w_j) = pi_epsilon^{-1}(g) at truncation pi_epsilon_precision(f).
/// One variable. Throws UnstableTruncation if the support of the product
/// family reaches the upper half of the truncation window.
RingElement cartier_pair_via_pi_epsilon(const FormalWittElement& f, const WittElement& g);

/// Table of cartier_pair(fs[i], gs[j]).
std::vector<std::vector<RingElement>> pairing_matrix(const std::vector<FormalWittElement>& fs,
                                                     const std::vector<WittElement>& gs);

/// g with coefficients moved into R (identity if g is already over R).
WittElement lift_to_ring(const WittElement& g, const Ring& target);

}  // namespace bigwitt
