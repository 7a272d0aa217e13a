#include "bigwitt/series.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <memory>
#include <mutex>
#include <numeric>

#include "bigwitt/error.hpp"

namespace bigwitt {

// ---------------------------------------------------------------- MultiIndex

MultiIndex MultiIndex::unit(unsigned n, unsigned i) {
  std::vector<unsigned> e(n, 0);
  e.at(i) = 1;
  return MultiIndex(std::move(e));
}

unsigned MultiIndex::total_degree() const { return std::accumulate(e_.begin(), e_.end(), 0u); }

unsigned MultiIndex::content() const {
  unsigned g = 0;
  for (unsigned x : e_) g = std::gcd(g, x);
  return g;
}

bool MultiIndex::divisible_by(unsigned p) const {
  return std::all_of(e_.begin(), e_.end(), [p](unsigned x) { return x % p == 0; });
}

MultiIndex MultiIndex::scaled(unsigned k) const {
  std::vector<unsigned> e = e_;
  for (auto& x : e) x *= k;
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::primitive_part() const {
  const unsigned g = content();
  if (g == 0) return *this;
  std::vector<unsigned> e = e_;
  for (auto& x : e) x /= g;
  return MultiIndex(std::move(e));
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) fail(ErrorKind::ShapeMismatch, "multi-indices of different length");
  std::vector<unsigned> e(a.size());
  for (unsigned i = 0; i < a.size(); ++i) e[i] = a[i] + b[i];
  return MultiIndex(std::move(e));
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (unsigned i = 0; i < e_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e_[i]);
  }
  return s + ")";
}

bool grlex_less(const MultiIndex& a, const MultiIndex& b) {
  const unsigned da = a.total_degree();
  const unsigned db = b.total_degree();
  if (da != db) return da < db;
  return b.exponents() < a.exponents();
}

// ------------------------------------------------------------- MonomialBasis

namespace {

void compositions(unsigned n, unsigned k, std::vector<unsigned>& cur, unsigned pos, std::vector<MultiIndex>& out) {
  if (pos + 1 == n) {
    cur[pos] = k;
    out.emplace_back(cur);
    return;
  }
  for (unsigned x = k + 1; x-- > 0;) {
    cur[pos] = x;
    compositions(n, k - x, cur, pos + 1, out);
  }
}

constexpr std::uint64_t kMaxBasis = std::uint64_t{1} << 22;

}  // namespace

MonomialBasis::MonomialBasis(unsigned n, unsigned d) : n_(n), d_(d) {
  std::vector<unsigned> cur(n, 0);
  for (unsigned k = 0; k < d; ++k) {
    compositions(n, k, cur, 0, monomials_);
    if (monomials_.size() > kMaxBasis) fail(ErrorKind::TooLarge, "monomial basis too large");
  }
  std::uint64_t radix_pow = 1;
  for (unsigned i = 0; i < n; ++i) radix_pow *= 2 * d;
  degrees_.reserve(monomials_.size());
  keys_.reserve(monomials_.size());
  for (const auto& m : monomials_) {
    degrees_.push_back(m.total_degree());
    keys_.push_back(key(m));
  }
  if (radix_pow <= kMaxBasis) {
    dense_.assign(radix_pow, -1);
    for (std::uint32_t r = 0; r < monomials_.size(); ++r) dense_[keys_[r]] = static_cast<std::int32_t>(r);
  } else {
    for (std::uint32_t r = 0; r < monomials_.size(); ++r) sparse_.emplace(keys_[r], r);
  }
}

const MonomialBasis& MonomialBasis::get(unsigned n, unsigned d) {
  if (n == 0) fail(ErrorKind::InvalidInput, "series need at least one variable");
  if (d == 0) fail(ErrorKind::InvalidTruncation, "truncation bound must be positive");
  double bits = 0;
  for (unsigned i = 0; i < n; ++i) bits += std::log2(2.0 * d);
  if (bits > 62) fail(ErrorKind::TooLarge, "too many variables for this truncation bound");
  static std::mutex m;
  static std::deque<std::unique_ptr<MonomialBasis>> bases;
  std::lock_guard lock(m);
  for (const auto& b : bases) {
    if (b->n_ == n && b->d_ == d) return *b;
  }
  bases.push_back(std::unique_ptr<MonomialBasis>(new MonomialBasis(n, d)));
  return *bases.back();
}

std::uint64_t MonomialBasis::key(const MultiIndex& nu) const {
  std::uint64_t k = 0;
  for (unsigned i = n_; i-- > 0;) k = k * (2 * d_) + nu[i];
  return k;
}

std::int64_t MonomialBasis::rank(const MultiIndex& nu) const {
  if (nu.size() != n_) fail(ErrorKind::ShapeMismatch, "multi-index has " + std::to_string(nu.size()) + " entries, expected " + std::to_string(n_));
  if (nu.total_degree() >= d_) return -1;
  const std::uint64_t k = key(nu);
  if (!dense_.empty()) return dense_[k];
  auto it = sparse_.find(k);
  return it == sparse_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

std::int64_t MonomialBasis::product_rank(std::uint32_t a, std::uint32_t b) const {
  if (degrees_[a] + degrees_[b] >= d_) return -1;
  const std::uint64_t k = keys_[a] + keys_[b];
  if (!dense_.empty()) return dense_[k];
  auto it = sparse_.find(k);
  return it == sparse_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

// ----------------------------------------------------------- TruncatedSeries

TruncatedSeries::TruncatedSeries(const Ring& ring, unsigned n, unsigned d, bool exact)
    : ring_(&ring), basis_(&MonomialBasis::get(n, d)), exact_(exact) {}

TruncatedSeries::TruncatedSeries(const Ring& ring, const MonomialBasis& basis, bool exact, std::vector<Term> terms)
    : ring_(&ring), basis_(&basis), exact_(exact), terms_(std::move(terms)) {}

TruncatedSeries TruncatedSeries::one(const Ring& ring, unsigned n, unsigned d) {
  TruncatedSeries s(ring, n, d, true);
  s.terms_.emplace_back(0, ring.one());
  return s;
}

TruncatedSeries TruncatedSeries::monomial(const Ring& ring, unsigned d, const MultiIndex& nu, const RingElement& c) {
  TruncatedSeries s(ring, nu.size(), d, true);
  s.set(nu, c);
  return s;
}

TruncatedSeries TruncatedSeries::from_terms(const Ring& ring, unsigned n, unsigned d,
                                            const std::vector<std::pair<MultiIndex, RingElement>>& terms, bool exact) {
  TruncatedSeries s(ring, n, d, exact);
  for (const auto& [nu, c] : terms) {
    if (&c.ring() != &ring) fail(ErrorKind::ShapeMismatch, "coefficient from a different ring");
    if (nu.size() != n) fail(ErrorKind::ShapeMismatch, "multi-index length differs from n");
    if (nu.total_degree() >= d) {
      if (!c.is_zero()) s.exact_ = false;
      continue;
    }
    s.set(nu, s.coefficient(nu) + c);
  }
  return s;
}

TruncatedSeries TruncatedSeries::polynomial(const Ring& ring, unsigned n,
                                            const std::vector<std::pair<MultiIndex, RingElement>>& terms) {
  unsigned deg = 0;
  for (const auto& [nu, c] : terms) {
    if (!c.is_zero()) deg = std::max(deg, nu.total_degree());
  }
  return from_terms(ring, n, deg + 1, terms, true);
}

TruncatedSeries TruncatedSeries::univariate(const Ring& ring, unsigned d, const std::vector<RingElement>& coeffs,
                                            bool exact) {
  TruncatedSeries s(ring, 1, d, exact);
  for (unsigned i = 0; i < coeffs.size(); ++i) {
    if (i >= d) {
      if (!coeffs[i].is_zero()) s.exact_ = false;
      continue;
    }
    if (!coeffs[i].is_zero()) s.terms_.emplace_back(i, coeffs[i]);
  }
  return s;
}

bool TruncatedSeries::is_one() const { return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second.is_one(); }

RingElement TruncatedSeries::coefficient_at_rank(std::uint32_t rank) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), rank, [](const Term& t, std::uint32_t r) { return t.first < r; });
  if (it != terms_.end() && it->first == rank) return it->second;
  return ring_->zero();
}

RingElement TruncatedSeries::coefficient(const MultiIndex& nu) const {
  const std::int64_t r = basis_->rank(nu);
  if (r < 0) return ring_->zero();
  return coefficient_at_rank(static_cast<std::uint32_t>(r));
}

int TruncatedSeries::degree() const {
  int deg = -1;
  for (const auto& t : terms_) deg = std::max(deg, static_cast<int>(basis_->degree(t.first)));
  return deg;
}

void TruncatedSeries::set(const MultiIndex& nu, const RingElement& c) {
  const std::int64_t r = basis_->rank(nu);
  if (r < 0) {
    if (!c.is_zero()) exact_ = false;
    return;
  }
  const auto rank = static_cast<std::uint32_t>(r);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), rank, [](const Term& t, std::uint32_t x) { return t.first < x; });
  const bool present = it != terms_.end() && it->first == rank;
  if (c.is_zero()) {
    if (present) terms_.erase(it);
  } else if (present) {
    it->second = c;
  } else {
    terms_.insert(it, Term{rank, c});
  }
}

void TruncatedSeries::check_same_shape(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.ring_ != b.ring_) fail(ErrorKind::ShapeMismatch, "series over different rings");
  if (a.basis_ != b.basis_) {
    fail(ErrorKind::ShapeMismatch, "series shapes differ: (n=" + std::to_string(a.variables()) + ", d=" +
                                       std::to_string(a.precision()) + ") vs (n=" + std::to_string(b.variables()) +
                                       ", d=" + std::to_string(b.precision()) + ")");
  }
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

template <class Combine>
std::vector<TruncatedSeries::Term> merge_terms(const std::vector<TruncatedSeries::Term>& a,
                                               const std::vector<TruncatedSeries::Term>& b, Combine combine,
                                               const RingElement& zero) {
  std::vector<TruncatedSeries::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    std::uint32_t rank;
    RingElement x = zero, y = zero;
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      rank = a[i].first;
      x = a[i++].second;
    } else if (i == a.size() || b[j].first < a[i].first) {
      rank = b[j].first;
      y = b[j++].second;
    } else {
      rank = a[i].first;
      x = a[i++].second;
      y = b[j++].second;
    }
    RingElement z = combine(x, y);
    if (!z.is_zero()) out.emplace_back(rank, z);
  }
  return out;
}

}  // namespace

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries::check_same_shape(a, b);
  return TruncatedSeries(*a.ring_, *a.basis_, a.exact_ && b.exact_,
                         merge_terms(a.terms_, b.terms_, [](const RingElement& x, const RingElement& y) { return x + y; },
                                     a.ring_->zero()));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries::check_same_shape(a, b);
  return TruncatedSeries(*a.ring_, *a.basis_, a.exact_ && b.exact_,
                         merge_terms(a.terms_, b.terms_, [](const RingElement& x, const RingElement& y) { return x - y; },
                                     a.ring_->zero()));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries::check_same_shape(a, b);
  const MonomialBasis& basis = *a.basis_;
  const Ring& ring = *a.ring_;
  bool dropped = false;
  std::vector<TruncatedSeries::Term> out;
  const std::uint64_t pairs = std::uint64_t{a.terms_.size()} * b.terms_.size();
  if (pairs == 0) return TruncatedSeries(ring, basis, a.exact_ && b.exact_, {});
  if (std::uint64_t{basis.size()} <= 4 * pairs) {
    std::vector<RingElement> acc(basis.size(), ring.zero());
    std::vector<char> touched(basis.size(), 0);
    for (const auto& [ra, ca] : a.terms_) {
      for (const auto& [rb, cb] : b.terms_) {
        const std::int64_t r = basis.product_rank(ra, rb);
        const RingElement prod = ca * cb;
        if (r < 0) {
          if (!prod.is_zero()) dropped = true;
          continue;
        }
        acc[r] += prod;
        touched[r] = 1;
      }
    }
    for (std::uint32_t r = 0; r < basis.size(); ++r) {
      if (touched[r] && !acc[r].is_zero()) out.emplace_back(r, acc[r]);
    }
  } else {
    std::vector<TruncatedSeries::Term> raw;
    raw.reserve(pairs);
    for (const auto& [ra, ca] : a.terms_) {
      for (const auto& [rb, cb] : b.terms_) {
        const std::int64_t r = basis.product_rank(ra, rb);
        const RingElement prod = ca * cb;
        if (r < 0) {
          if (!prod.is_zero()) dropped = true;
          continue;
        }
        if (!prod.is_zero()) raw.emplace_back(static_cast<std::uint32_t>(r), prod);
      }
    }
    std::sort(raw.begin(), raw.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t i = 0; i < raw.size();) {
      RingElement sum = raw[i].second;
      std::size_t j = i + 1;
      while (j < raw.size() && raw[j].first == raw[i].first) sum += raw[j++].second;
      if (!sum.is_zero()) out.emplace_back(raw[i].first, sum);
      i = j;
    }
  }
  return TruncatedSeries(ring, basis, a.exact_ && b.exact_ && !dropped, std::move(out));
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.ring_ != b.ring_ || a.basis_ != b.basis_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].first != b.terms_[i].first || !(a.terms_[i].second == b.terms_[i].second)) return false;
  }
  return true;
}

TruncatedSeries TruncatedSeries::scaled(const RingElement& c) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [r, x] : terms_) {
    const RingElement y = x * c;
    if (!y.is_zero()) out.emplace_back(r, y);
  }
  return TruncatedSeries(*ring_, *basis_, exact_, std::move(out));
}

TruncatedSeries TruncatedSeries::pow(std::uint64_t k) const {
  TruncatedSeries result = one(*ring_, variables(), precision());
  TruncatedSeries base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

TruncatedSeries TruncatedSeries::inverse() const {
  const RingElement c = constant_term();
  if (!c.is_unit()) fail(ErrorKind::NonUnitConstantTerm, "constant term " + c.to_string() + " is not a unit");
  const RingElement cinv = c.inverse();
  // this = c (1 + m);  inverse = c^{-1} sum_k (-m)^k
  TruncatedSeries minus_m = scaled(cinv);
  minus_m.set(MultiIndex::zero(variables()), ring_->zero());
  minus_m = -minus_m;
  TruncatedSeries sum = one(*ring_, variables(), precision());
  TruncatedSeries power = sum;
  for (unsigned k = 1; k < precision(); ++k) {
    power *= minus_m;
    if (power.is_zero()) break;
    sum = sum + power;
  }
  TruncatedSeries result = sum.scaled(cinv);
  bool finite = exact_;
  for (const auto& [r, x] : terms_) {
    if (r != 0 && !x.is_nilpotent()) finite = false;
  }
  const int deg = degree();
  result.exact_ = finite && static_cast<std::int64_t>(ring_->nil() - 1) * std::max(deg, 0) < precision();
  return result;
}

TruncatedSeries TruncatedSeries::truncated(unsigned d) const {
  if (d > precision()) fail(ErrorKind::InsufficientPrecision, "cannot truncate to a larger bound");
  if (d == precision()) return *this;
  const MonomialBasis& target = MonomialBasis::get(variables(), d);
  std::vector<Term> out;
  bool dropped = false;
  for (const auto& [r, x] : terms_) {
    // ranks are degree-major, so lower-degree monomials keep their rank
    if (basis_->degree(r) < d) {
      out.emplace_back(r, x);
    } else {
      dropped = true;
    }
  }
  return TruncatedSeries(*ring_, target, exact_ && !dropped, std::move(out));
}

TruncatedSeries TruncatedSeries::with_precision(unsigned d) const {
  if (d <= precision()) return truncated(d);
  if (!exact_) fail(ErrorKind::InsufficientPrecision, "cannot extend a truncated series beyond its precision");
  const MonomialBasis& target = MonomialBasis::get(variables(), d);
  return TruncatedSeries(*ring_, target, true, terms_);
}

TruncatedSeries TruncatedSeries::map_coefficients(const Ring& target,
                                                  const std::function<RingElement(const RingElement&)>& f) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [r, x] : terms_) {
    const RingElement y = f(x);
    if (&y.ring() != &target) fail(ErrorKind::ShapeMismatch, "coefficient map landed in the wrong ring");
    if (!y.is_zero()) out.emplace_back(r, y);
  }
  return TruncatedSeries(target, *basis_, exact_, std::move(out));
}

RingElement TruncatedSeries::eval_all_ones() const {
  if (!exact_) fail(ErrorKind::NotExact, "evaluation at t = 1 needs an exact polynomial, not a truncation");
  RingElement sum = ring_->zero();
  for (const auto& t : terms_) sum += t.second;
  return sum;
}

std::size_t TruncatedSeries::hash() const {
  std::size_t h = std::hash<const void*>()(basis_);
  for (const auto& [r, x] : terms_) h = (h * 1000003u) ^ (x.hash() + 0x9e3779b97f4a7c15ull + r);
  return h;
}

std::string TruncatedSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [r, x] : terms_) {
    if (!s.empty()) s += " + ";
    s += x.to_string();
    const MultiIndex& nu = basis_->monomial(r);
    for (unsigned i = 0; i < nu.size(); ++i) {
      if (nu[i] == 0) continue;
      s += "*t" + std::to_string(i + 1);
      if (nu[i] > 1) s += "^" + std::to_string(nu[i]);
    }
  }
  return s + " + O(deg " + std::to_string(precision()) + ")";
}

}  // namespace bigwitt
