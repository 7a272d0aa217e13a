#include "bigwitt/polynomial.hpp"

#include <algorithm>
#include <string>

#include "bigwitt/error.hpp"

namespace bigwitt {

UnivariatePolynomial::UnivariatePolynomial(const Ring& ring, std::vector<RingElement> coeffs)
    : ring_(&ring), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (&c.ring() != ring_) fail(ErrorKind::ShapeMismatch, "coefficient from a different ring");
  }
  trim();
}

UnivariatePolynomial UnivariatePolynomial::linear_root(const RingElement& a) {
  return UnivariatePolynomial(a.ring(), {-a, a.ring().one()});
}

void UnivariatePolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RingElement UnivariatePolynomial::operator()(const RingElement& x) const {
  RingElement acc = ring_->zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  std::vector<RingElement> c(std::max(a.coeffs_.size(), b.coeffs_.size()), a.ring_->zero());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
  return UnivariatePolynomial(*a.ring_, std::move(c));
}

UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  std::vector<RingElement> c(std::max(a.coeffs_.size(), b.coeffs_.size()), a.ring_->zero());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) - b.coefficient(i);
  return UnivariatePolynomial(*a.ring_, std::move(c));
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return UnivariatePolynomial(*a.ring_);
  std::vector<RingElement> c(a.coeffs_.size() + b.coeffs_.size() - 1, a.ring_->zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UnivariatePolynomial(*a.ring_, std::move(c));
}

UnivariatePolynomial UnivariatePolynomial::reversed(int formal_degree) const {
  const int deg = formal_degree < 0 ? degree() : formal_degree;
  if (deg < degree()) fail(ErrorKind::InvalidInput, "formal degree below actual degree");
  std::vector<RingElement> c(deg + 1, ring_->zero());
  for (int i = 0; i <= degree(); ++i) c[deg - i] = coeffs_[i];
  return UnivariatePolynomial(*ring_, std::move(c));
}

std::pair<UnivariatePolynomial, RingElement> UnivariatePolynomial::divide_by_linear(const RingElement& a) const {
  if (is_zero()) return {UnivariatePolynomial(*ring_), ring_->zero()};
  std::vector<RingElement> q(coeffs_.size() - 1, ring_->zero());
  RingElement carry = ring_->zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const RingElement cur = coeffs_[i] + carry * a;
    if (i == 0) return {UnivariatePolynomial(*ring_, std::move(q)), cur};
    q[i - 1] = cur;
    carry = cur;
  }
  return {UnivariatePolynomial(*ring_), ring_->zero()};
}

RingElement determinant(RingMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) fail(ErrorKind::EmptyInput, "determinant of an empty matrix");
  const Ring& ring = m[0][0].ring();
  RingElement det = ring.one();
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t best = n;
    unsigned best_val = ring.nil();
    for (std::size_t r = k; r < n; ++r) {
      const unsigned v = m[r][k].valuation();
      if (v < best_val) {
        best_val = v;
        best = r;
      }
    }
    if (best == n) return ring.zero();
    if (best != k) {
      std::swap(m[best], m[k]);
      negate = !negate;
    }
    const RingElement& pivot = m[k][k];
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m[r][k].is_zero()) continue;
      const RingElement factor = m[r][k].divide_exact(pivot);
      for (std::size_t c = k; c < n; ++c) m[r][c] -= factor * m[k][c];
    }
    det *= pivot;
  }
  return negate ? -det : det;
}

RingMatrix sylvester_matrix(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  const int da = a.degree();
  const int db = b.degree();
  const std::size_t size = static_cast<std::size_t>(da + db);
  const Ring& ring = a.ring();
  RingMatrix m(size, std::vector<RingElement>(size, ring.zero()));
  for (int r = 0; r < db; ++r) {
    for (int i = 0; i <= da; ++i) m[r][r + i] = a.coefficient(da - i);
  }
  for (int r = 0; r < da; ++r) {
    for (int i = 0; i <= db; ++i) m[db + r][r + i] = b.coefficient(db - i);
  }
  return m;
}

RingElement resultant(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (&a.ring() != &b.ring()) fail(ErrorKind::ShapeMismatch, "resultant operands over different rings");
  const Ring& ring = a.ring();
  if (a.is_zero() || b.is_zero()) {
    if (a.degree() <= 0 && b.degree() <= 0) fail(ErrorKind::EmptyInput, "resultant of two constants");
    return ring.zero();
  }
  if (a.degree() + b.degree() < 1) fail(ErrorKind::EmptyInput, "resultant of two constants");
  return determinant(sylvester_matrix(a, b));
}

RootSet roots_with_multiplicity(const UnivariatePolynomial& f, unsigned max_ext) {
  const Ring& ring = f.ring();
  if (ring.nil() != 1) fail(ErrorKind::InvalidInput, "root search needs field coefficients (nil = 1)");
  if (f.is_zero()) fail(ErrorKind::InvalidInput, "zero polynomial has no finite root set");
  const Field& base = ring.field();
  const int deg = f.degree();
  if (deg == 0) return RootSet{&base, 1, {}};
  for (unsigned s = 1; s <= max_ext; ++s) {
    const Field* ext = nullptr;
    try {
      ext = &base.extension(s);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::TooLarge) break;
      throw;
    }
    const FieldEmbedding emb(base, *ext);
    const Ring& ext_ring = Ring::get(*ext, 1);
    UnivariatePolynomial g = f.mapped(ext_ring, [&](const RingElement& c) { return map_field(c, emb, ext_ring); });
    RootSet out{ext, s, {}};
    unsigned total = 0;
    for (Field::Elem a = 0; a < ext->order() && total < static_cast<unsigned>(deg); ++a) {
      const RingElement x = ext_ring.constant(a);
      unsigned mult = 0;
      UnivariatePolynomial h = g;
      for (;;) {
        auto [quot, rem] = h.divide_by_linear(x);
        if (!rem.is_zero()) break;
        ++mult;
        h = std::move(quot);
      }
      if (mult > 0) {
        out.roots.emplace_back(a, mult);
        total += mult;
      }
    }
    if (total == static_cast<unsigned>(deg)) return out;
  }
  fail(ErrorKind::ExtensionBoundExceeded,
       "polynomial of degree " + std::to_string(deg) + " does not split over F_{q^s} for s <= " + std::to_string(max_ext));
}

}  // namespace bigwitt
