#pragma once

#include <utility>
#include <vector>

#include "bigwitt/ring.hpp"

namespace bigwitt {

/// Dense univariate polynomial over R, coefficients ascending. Trailing
/// zeros are trimmed, so the last stored coefficient is the leading one.
class UnivariatePolynomial {
 public:
  explicit UnivariatePolynomial(const Ring& ring) : ring_(&ring) {}
  UnivariatePolynomial(const Ring& ring, std::vector<RingElement> coeffs);

  /// x - a
  static UnivariatePolynomial linear_root(const RingElement& a);

  const Ring& ring() const { return *ring_; }
  const std::vector<RingElement>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  RingElement coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ring_->zero(); }
  RingElement leading_coefficient() const { return is_zero() ? ring_->zero() : coeffs_.back(); }

  RingElement operator()(const RingElement& x) const;

  friend UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend bool operator==(const UnivariatePolynomial& a, const UnivariatePolynomial& b) = default;

  /// x^deg * f(1/x) taken with respect to `formal_degree` (defaults to
  /// the actual degree).
  UnivariatePolynomial reversed(int formal_degree = -1) const;

  /// Synthetic division by (x - a): returns (quotient, remainder).
  std::pair<UnivariatePolynomial, RingElement> divide_by_linear(const RingElement& a) const;

  /// Apply a coefficient map into another ring.
  template <class F>
  UnivariatePolynomial mapped(const Ring& target, F&& f) const {
    std::vector<RingElement> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(f(x));
    return UnivariatePolynomial(target, std::move(c));
  }

 private:
  void trim();

  const Ring* ring_;
  std::vector<RingElement> coeffs_;
};

using RingMatrix = std::vector<std::vector<RingElement>>;

/// Determinant over F_q[eps]/(eps^e). Exact elimination: the pivot in each
/// column is an entry of minimal eps-valuation, which divides every other
/// entry of that column because R is a chain ring.
RingElement determinant(RingMatrix m);

/// Sylvester matrix of (a, b): deg b rows of a, then deg a rows of b,
/// coefficients in descending order.
RingMatrix sylvester_matrix(const UnivariatePolynomial& a, const UnivariatePolynomial& b);

/// Res(a, b) = det Sylvester(a, b) = lc(a)^{deg b} prod_{a(r)=0} b(r).
RingElement resultant(const UnivariatePolynomial& a, const UnivariatePolynomial& b);

struct RootSet {
  const Field* field = nullptr;  ///< F_{q^s} holding every root
  unsigned extension_degree = 1;
  std::vector<std::pair<Field::Elem, unsigned>> roots;  ///< (root, multiplicity)
};

/// All roots of f (coefficients in a field, nil == 1) with multiplicity,
/// found by scanning F_{q^s} for s = 1, 2, ... until the multiplicities
/// account for deg f. Throws ExtensionBoundExceeded past `max_ext`.
RootSet roots_with_multiplicity(const UnivariatePolynomial& f, unsigned max_ext);

}  // namespace bigwitt
