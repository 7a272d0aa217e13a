#include "bigwitt/witt.hpp"

#include <numeric>

#include "bigwitt/error.hpp"

namespace bigwitt {

namespace {

void check_same_shape(const WittElement& a, const WittElement& b) {
  if (&a.ring() != &b.ring() || a.variables() != b.variables() || a.precision() != b.precision()) {
    fail(ErrorKind::ShapeMismatch, "Witt elements differ in ring, variable count or truncation");
  }
}

// sum_k r^k t^{k nu}, the inverse of (1 - r t^nu).
TruncatedSeries geometric_monomial(const Ring& ring, unsigned d, const MultiIndex& nu, const RingElement& r) {
  TruncatedSeries s = TruncatedSeries::one(ring, nu.size(), d);
  const unsigned deg = nu.total_degree();
  RingElement power = ring.one();
  for (unsigned k = 1; k * deg < d; ++k) {
    power *= r;
    if (power.is_zero()) break;
    s.set(nu.scaled(k), power);
  }
  s.set_exact(false);
  return s;
}

// (1 - c t^l)^g in one variable, by the binomial theorem mod p.
TruncatedSeries binomial_factor(const Ring& ring, unsigned d, unsigned l, const RingElement& c, unsigned g) {
  const unsigned p = ring.characteristic();
  std::vector<RingElement> coeffs(d, ring.zero());
  const RingElement minus_c = -c;
  RingElement power = ring.one();
  for (unsigned k = 0; k <= g && k * l < d; ++k) {
    if (k > 0) power *= minus_c;
    if (power.is_zero()) break;
    const unsigned b = binomial_mod_p(g, k, p);
    if (b != 0) coeffs[k * l] = power.scaled(b);
  }
  return TruncatedSeries::univariate(ring, d, coeffs);
}

}  // namespace

unsigned binomial_mod_p(std::uint64_t n, std::uint64_t k, unsigned p) {
  if (k > n) return 0;
  std::uint64_t result = 1;
  while (n > 0 || k > 0) {
    const unsigned ni = n % p;
    const unsigned ki = k % p;
    if (ki > ni) return 0;
    // C(ni, ki) mod p for single digits
    std::uint64_t num = 1, den = 1;
    for (unsigned i = 0; i < ki; ++i) {
      num = num * (ni - i) % p;
      den = den * (i + 1) % p;
    }
    // den^{-1} mod p by Fermat
    std::uint64_t inv = 1, base = den, e = p - 2;
    while (e > 0) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    result = result * (num * inv % p) % p;
    n /= p;
    k /= p;
  }
  return static_cast<unsigned>(result);
}

// -------------------------------------------------------------- WittElement

WittElement::WittElement(TruncatedSeries series) : series_(std::move(series)) {
  if (!series_.constant_term().is_one()) {
    fail(ErrorKind::InvalidInput, "a Witt element needs constant term 1, got " + series_.constant_term().to_string());
  }
}

WittElement WittElement::zero(const Ring& ring, unsigned n, unsigned d) {
  return WittElement(TruncatedSeries::one(ring, n, d));
}

WittElement WittElement::factor(const Ring& ring, unsigned d, const MultiIndex& nu, const RingElement& r) {
  TruncatedSeries s = TruncatedSeries::one(ring, nu.size(), d);
  if (nu.total_degree() == 0) fail(ErrorKind::InvalidInput, "factor index must be nonzero");
  s.set(nu, -r);
  return WittElement(std::move(s));
}

RingElement WittCoordinates::at(const MultiIndex& nu) const {
  auto it = coords.find(nu);
  return it == coords.end() ? ring->zero() : it->second;
}

void WittCoordinates::set(const MultiIndex& nu, const RingElement& r) {
  if (r.is_zero()) {
    coords.erase(nu);
  } else {
    coords.insert_or_assign(nu, r);
  }
}

bool operator==(const WittCoordinates& a, const WittCoordinates& b) {
  return a.ring == b.ring && a.n == b.n && a.d == b.d && a.coords == b.coords;
}

unsigned component_precision(unsigned d, unsigned nu_degree) { return (d + nu_degree - 1) / nu_degree; }

std::vector<MultiIndex> primitive_indices(unsigned n, unsigned d) {
  const MonomialBasis& basis = MonomialBasis::get(n, d);
  std::vector<MultiIndex> out;
  for (std::uint32_t r = 1; r < basis.size(); ++r) {
    if (basis.monomial(r).is_primitive()) out.push_back(basis.monomial(r));
  }
  return out;
}

WittElement witt_add(const WittElement& a, const WittElement& b) {
  check_same_shape(a, b);
  return WittElement(a.series() * b.series());
}

WittElement witt_neg(const WittElement& a) { return WittElement(a.series().inverse()); }

WittElement witt_sub(const WittElement& a, const WittElement& b) { return witt_add(a, witt_neg(b)); }

WittElement witt_multiple(const WittElement& a, std::int64_t k) {
  if (k >= 0) return WittElement(a.series().pow(static_cast<std::uint64_t>(k)));
  return WittElement(a.series().inverse().pow(static_cast<std::uint64_t>(-k)));
}

WittCoordinates witt_coordinates(const WittElement& a) {
  const TruncatedSeries& s = a.series();
  const MonomialBasis& basis = s.basis();
  WittCoordinates out{&a.ring(), a.variables(), a.precision(), {}};
  TruncatedSeries running = s;
  // Dividing out (1 - r t^nu) only touches monomials of higher degree than
  // nu (besides nu itself), so the lowest nonconstant term is always next.
  while (running.term_count() > 1) {
    const auto& [rank, c] = running.terms()[1];
    const MultiIndex nu = basis.monomial(rank);
    const RingElement r = -c;
    out.coords.emplace(nu, r);
    running *= geometric_monomial(a.ring(), a.precision(), nu, r);
  }
  return out;
}

WittElement from_coordinates(const WittCoordinates& c) {
  if (c.ring == nullptr) fail(ErrorKind::InvalidInput, "coordinates without a ring");
  TruncatedSeries acc = TruncatedSeries::one(*c.ring, c.n, c.d);
  for (const auto& [nu, r] : c.coords) {
    if (nu.size() != c.n) fail(ErrorKind::ShapeMismatch, "coordinate index has wrong length");
    if (nu.total_degree() == 0) fail(ErrorKind::InvalidInput, "coordinate at the zero index");
    if (nu.total_degree() >= c.d || r.is_zero()) continue;
    acc *= WittElement::factor(*c.ring, c.d, nu, r).series();
  }
  acc.set_exact(false);
  return WittElement(std::move(acc));
}

OneVarComponentFamily decompose(const WittElement& a) {
  const WittCoordinates coords = witt_coordinates(a);
  const unsigned n = a.variables();
  const unsigned d = a.precision();
  const Ring& ring = a.ring();
  OneVarComponentFamily out{&ring, n, d, {}};
  std::map<MultiIndex, WittCoordinates, GrlexLess> grouped;
  for (const MultiIndex& nu : primitive_indices(n, d)) {
    grouped.emplace(nu, WittCoordinates{&ring, 1, component_precision(d, nu.total_degree()), {}});
  }
  for (const auto& [nu, r] : coords.coords) {
    const unsigned i = nu.content();
    grouped.at(nu.primitive_part()).set(MultiIndex{i}, r);
  }
  for (auto& [nu, c] : grouped) out.components.emplace(nu, from_coordinates(c));
  return out;
}

WittElement recompose(const OneVarComponentFamily& family) {
  if (family.ring == nullptr) fail(ErrorKind::InvalidInput, "component family without a ring");
  const Ring& ring = *family.ring;
  TruncatedSeries acc = TruncatedSeries::one(ring, family.n, family.d);
  for (const auto& [nu, comp] : family.components) {
    if (nu.size() != family.n || !nu.is_primitive()) fail(ErrorKind::InvalidInput, "component index must be primitive");
    const unsigned expected = component_precision(family.d, nu.total_degree());
    if (comp.variables() != 1 || comp.precision() != expected || &comp.ring() != &ring) {
      fail(ErrorKind::ShapeMismatch, "component at " + nu.to_string() + " has the wrong shape");
    }
    if (comp.is_zero()) continue;
    // substitute s -> t^nu
    TruncatedSeries sub(ring, family.n, family.d);
    const MonomialBasis& b1 = comp.series().basis();
    for (const auto& [rank, c] : comp.series().terms()) sub.set(nu.scaled(b1.monomial(rank)[0]), c);
    acc *= sub;
  }
  acc.set_exact(false);
  return WittElement(std::move(acc));
}

WittElement witt_mul_1var(const WittElement& a, const WittElement& b) {
  check_same_shape(a, b);
  if (a.variables() != 1) fail(ErrorKind::ShapeMismatch, "witt_mul_1var needs one-variable elements");
  const Ring& ring = a.ring();
  const unsigned d = a.precision();
  std::vector<RingElement> ca(d, ring.zero()), cb(d, ring.zero());
  for (const auto& [nu, r] : witt_coordinates(a).coords) ca[nu[0]] = r;
  for (const auto& [nu, r] : witt_coordinates(b).coords) cb[nu[0]] = r;
  TruncatedSeries acc = TruncatedSeries::one(ring, 1, d);
  for (unsigned i = 1; i < d; ++i) {
    if (ca[i].is_zero()) continue;
    for (unsigned j = 1; j < d; ++j) {
      if (cb[j].is_zero()) continue;
      const unsigned g = std::gcd(i, j);
      const std::uint64_t l = std::uint64_t{i} / g * j;
      if (l >= d) continue;
      const RingElement c = ca[i].pow(j / g) * cb[j].pow(i / g);
      if (c.is_zero()) continue;
      acc *= binomial_factor(ring, d, static_cast<unsigned>(l), c, g);
    }
  }
  acc.set_exact(false);
  return WittElement(std::move(acc));
}

WittElement witt_mul(const WittElement& a, const WittElement& b) {
  check_same_shape(a, b);
  if (a.variables() == 1) return witt_mul_1var(a, b);
  OneVarComponentFamily fa = decompose(a);
  const OneVarComponentFamily fb = decompose(b);
  for (auto& [nu, comp] : fa.components) {
    const WittElement& other = fb.components.at(nu);
    if (comp.is_zero()) continue;
    if (other.is_zero()) {
      comp = other;
    } else {
      comp = witt_mul_1var(comp, other);
    }
  }
  return recompose(fa);
}

WittElement witt_one(const Ring& ring, unsigned n, unsigned d) {
  TruncatedSeries acc = TruncatedSeries::one(ring, n, d);
  for (const MultiIndex& nu : primitive_indices(n, d)) acc *= WittElement::factor(ring, d, nu, ring.one()).series();
  acc.set_exact(false);
  return WittElement(std::move(acc));
}

WittElement frobenius_witt(const WittElement& a, std::uint64_t q) {
  if (a.ring().nil() != 1) {
    fail(ErrorKind::NilpotentCoefficients, "Frobenius on Witt elements needs field coefficients (nil = 1)");
  }
  return WittElement(a.series().map_coefficients(a.ring(), [q](const RingElement& x) { return x.frobenius(q); }));
}

WittElement lang_map(const WittElement& a, std::uint64_t q) { return witt_sub(frobenius_witt(a, q), a); }

}  // namespace bigwitt
