#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bigwitt/ring.hpp"

namespace bigwitt {

/// Exponent vector nu = (nu_1, ..., nu_n) of the monomial t^nu.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<unsigned> exps) : e_(std::move(exps)) {}
  MultiIndex(std::initializer_list<unsigned> exps) : e_(exps) {}
  static MultiIndex zero(unsigned n) { return MultiIndex(std::vector<unsigned>(n, 0)); }
  static MultiIndex unit(unsigned n, unsigned i);

  unsigned size() const { return static_cast<unsigned>(e_.size()); }
  unsigned operator[](unsigned i) const { return e_[i]; }
  const std::vector<unsigned>& exponents() const { return e_; }

  unsigned total_degree() const;
  /// gcd of the entries; 0 for the zero index.
  unsigned content() const;
  bool is_primitive() const { return content() == 1; }
  /// True when every entry is divisible by p.
  bool divisible_by(unsigned p) const;
  MultiIndex scaled(unsigned k) const;
  /// nu / content(nu)
  MultiIndex primitive_part() const;

  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

  std::string to_string() const;

 private:
  std::vector<unsigned> e_;
};

/// Graded lexicographic order: lower total degree first; within a degree
/// the lexicographically larger exponent vector first, so t_1 precedes t_2.
bool grlex_less(const MultiIndex& a, const MultiIndex& b);

struct GrlexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const { return grlex_less(a, b); }
};

/// Every monomial t^nu with |nu| < d in n variables, ranked in graded
/// lex order (rank 0 is the constant monomial). Interned per (n, d).
class MonomialBasis {
 public:
  static const MonomialBasis& get(unsigned n, unsigned d);

  unsigned variables() const { return n_; }
  unsigned bound() const { return d_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(monomials_.size()); }
  const MultiIndex& monomial(std::uint32_t rank) const { return monomials_[rank]; }
  unsigned degree(std::uint32_t rank) const { return degrees_[rank]; }
  /// Rank of nu, or -1 when |nu| >= d.
  std::int64_t rank(const MultiIndex& nu) const;
  /// Rank of monomial(a) + monomial(b), or -1 when truncated away.
  std::int64_t product_rank(std::uint32_t a, std::uint32_t b) const;

 private:
  MonomialBasis(unsigned n, unsigned d);
  std::uint64_t key(const MultiIndex& nu) const;

  unsigned n_;
  unsigned d_;
  std::vector<MultiIndex> monomials_;
  std::vector<unsigned> degrees_;
  std::vector<std::uint64_t> keys_;
  std::vector<std::int32_t> dense_;  // key -> rank, when small enough
  std::unordered_map<std::uint64_t, std::uint32_t> sparse_;
};

/// Sparse element of R[[t_1..t_n]] / (monomials of total degree >= d).
///
/// Terms are kept sorted by graded-lex rank with no zero coefficients.
/// `exact` marks a genuinely finite polynomial (nothing was lost to
/// truncation); only exact series may be evaluated.
class TruncatedSeries {
 public:
  using Term = std::pair<std::uint32_t, RingElement>;

  TruncatedSeries(const Ring& ring, unsigned n, unsigned d, bool exact = false);

  static TruncatedSeries one(const Ring& ring, unsigned n, unsigned d);
  /// c * t^nu (zero if |nu| >= d).
  static TruncatedSeries monomial(const Ring& ring, unsigned d, const MultiIndex& nu, const RingElement& c);
  static TruncatedSeries from_terms(const Ring& ring, unsigned n, unsigned d,
                                    const std::vector<std::pair<MultiIndex, RingElement>>& terms, bool exact = false);
  /// Exact polynomial; d is chosen as (total degree + 1).
  static TruncatedSeries polynomial(const Ring& ring, unsigned n,
                                    const std::vector<std::pair<MultiIndex, RingElement>>& terms);
  /// One variable, coefficients of t^0, t^1, ... (length < d).
  static TruncatedSeries univariate(const Ring& ring, unsigned d, const std::vector<RingElement>& coeffs,
                                    bool exact = false);

  const Ring& ring() const { return *ring_; }
  const MonomialBasis& basis() const { return *basis_; }
  unsigned variables() const { return basis_->variables(); }
  unsigned precision() const { return basis_->bound(); }
  bool exact() const { return exact_; }
  void set_exact(bool exact) { exact_ = exact; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  RingElement coefficient(const MultiIndex& nu) const;
  RingElement coefficient_at_rank(std::uint32_t rank) const;
  RingElement constant_term() const { return coefficient_at_rank(0); }
  /// Largest total degree among stored terms (-1 for zero).
  int degree() const;

  /// Overwrite one coefficient (dropped if |nu| >= d).
  void set(const MultiIndex& nu, const RingElement& c);

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries& operator*=(const TruncatedSeries& b) { return *this = *this * b; }
  /// Equal term maps on the same shape; the exact flag is not compared.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

  TruncatedSeries scaled(const RingElement& c) const;
  TruncatedSeries pow(std::uint64_t k) const;
  /// Two-sided inverse mod degree d by geometric series on the
  /// augmentation part. Throws NonUnitConstantTerm.
  TruncatedSeries inverse() const;

  /// Reduce to a smaller truncation bound.
  TruncatedSeries truncated(unsigned d) const;
  /// Re-home an exact polynomial (or any series, when d <= precision) at a
  /// new bound. Growing a non-exact series throws InsufficientPrecision.
  TruncatedSeries with_precision(unsigned d) const;

  /// Coefficientwise map into `target` (zero images are dropped).
  TruncatedSeries map_coefficients(const Ring& target, const std::function<RingElement(const RingElement&)>& f) const;

  /// Sum of all coefficients; requires an exact series (NotExact).
  RingElement eval_all_ones() const;

  std::size_t hash() const;
  std::string to_string() const;

 private:
  TruncatedSeries(const Ring& ring, const MonomialBasis& basis, bool exact, std::vector<Term> terms);
  static void check_same_shape(const TruncatedSeries& a, const TruncatedSeries& b);

  const Ring* ring_;
  const MonomialBasis* basis_;
  bool exact_;
  std::vector<Term> terms_;
};

/// Free-function forms.
inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }
inline TruncatedSeries series_inv(const TruncatedSeries& a) { return a.inverse(); }
inline RingElement eval_all_ones(const TruncatedSeries& a) { return a.eval_all_ones(); }

}  // namespace bigwitt

template <>
struct std::hash<bigwitt::TruncatedSeries> {
  std::size_t operator()(const bigwitt::TruncatedSeries& a) const noexcept { return a.hash(); }
};
