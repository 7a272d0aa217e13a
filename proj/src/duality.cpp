#include "bigwitt/duality.hpp"

#include <algorithm>

#include "bigwitt/error.hpp"
#include "bigwitt/ptypical.hpp"

namespace bigwitt {

namespace {

RingElement coefficient_sum(const TruncatedSeries& s) {
  RingElement acc = s.ring().zero();
  for (const auto& [rank, c] : s.terms()) acc += c;
  return acc;
}

void check_pairable(const FormalWittElement& f, const WittElement& g) {
  if (f.variables() != g.variables()) fail(ErrorKind::ShapeMismatch, "pairing operands have different variable counts");
}

void require_precision(const WittElement& g, unsigned needed, const char* what) {
  if (g.precision() < needed) {
    fail(ErrorKind::InsufficientPrecision, std::string(what) + " needs g modulo degree " + std::to_string(needed) +
                                               ", got " + std::to_string(g.precision()));
  }
}

// (f * g)(1) with both sides reduced mod degree d.
RingElement pair_at(const FormalWittElement& f, const WittElement& g, unsigned d) {
  const Ring& ring = f.ring();
  const WittElement fd = f.at_precision(d);
  const WittElement gd = lift_to_ring(g.truncated(d), ring);
  if (f.variables() == 1) return coefficient_sum(witt_mul_1var(fd, gd).series());
  const OneVarComponentFamily ff = decompose(fd);
  const OneVarComponentFamily gg = decompose(gd);
  RingElement acc = ring.one();
  for (const auto& [nu, comp] : ff.components) {
    if (comp.is_zero()) continue;
    acc *= coefficient_sum(witt_mul_1var(comp, gg.components.at(nu)).series());
  }
  return acc;
}

RingElement geometric_at(const FormalWittElement& f, const WittElement& g, unsigned m) {
  const Ring& ring = f.ring();
  const WittElement gm = lift_to_ring(g.truncated(m), ring);
  std::vector<RingElement> gc(m, ring.zero());
  for (const auto& [rank, c] : gm.series().terms()) gc[rank] = c;
  const UnivariatePolynomial gprime(ring, gc);
  if (gprime.degree() <= 0) return ring.one();
  const UnivariatePolynomial rev = gprime.reversed();
  std::vector<RingElement> fc(f.degree() + 1, ring.zero());
  for (const auto& [rank, c] : f.polynomial().terms()) fc[rank] = c;
  const UnivariatePolynomial fpoly(ring, fc);
  if (fpoly.degree() <= 0) return ring.one();
  return resultant(rev, fpoly);
}

}  // namespace

// ------------------------------------------------------- FormalWittElement

FormalWittElement::FormalWittElement(TruncatedSeries poly) : poly_(std::move(poly)) {
  if (!poly_.exact()) fail(ErrorKind::InvalidInput, "formal Witt elements are exact polynomials");
  if (!poly_.constant_term().is_one()) fail(ErrorKind::InvalidInput, "formal Witt element needs constant term 1");
  for (const auto& [rank, c] : poly_.terms()) {
    if (rank != 0 && !c.is_nilpotent()) {
      fail(ErrorKind::NotNilpotent, "coefficient of " + poly_.basis().monomial(rank).to_string() + " is not nilpotent");
    }
  }
}

FormalWittElement FormalWittElement::zero(const Ring& ring, unsigned n) {
  return FormalWittElement(TruncatedSeries::one(ring, n, 1));
}

unsigned FormalWittElement::degree() const { return static_cast<unsigned>(std::max(poly_.degree(), 0)); }

unsigned FormalWittElement::coordinate_support() const {
  if (is_zero()) return 0;
  const unsigned bound = (ring().nil() - 1) * degree();
  const WittCoordinates c = witt_coordinates(at_precision(bound + 2));
  unsigned top = 0;
  for (const auto& [nu, r] : c.coords) top = std::max(top, nu.total_degree());
  if (top > bound) fail(ErrorKind::InsufficientPrecision, "coordinate support exceeds (nil - 1) * degree");
  return top;
}

WittElement FormalWittElement::at_precision(unsigned d) const { return WittElement(poly_.with_precision(d)); }

FormalWittElement formal_add(const FormalWittElement& a, const FormalWittElement& b) {
  if (&a.ring() != &b.ring() || a.variables() != b.variables()) fail(ErrorKind::ShapeMismatch, "formal elements differ in shape");
  const unsigned d = a.degree() + b.degree() + 1;
  return FormalWittElement(a.polynomial().with_precision(d) * b.polynomial().with_precision(d));
}

FormalWittElement formal_neg(const FormalWittElement& a) { return FormalWittElement(polynomial_inverse(a.polynomial())); }

bool is_polynomial_unit(const TruncatedSeries& u) {
  if (!u.constant_term().is_unit()) return false;
  for (const auto& [rank, c] : u.terms()) {
    if (rank != 0 && !c.is_nilpotent()) return false;
  }
  return true;
}

TruncatedSeries polynomial_inverse(const TruncatedSeries& u) {
  if (!u.exact()) fail(ErrorKind::InvalidInput, "polynomial inverse needs an exact polynomial");
  if (!is_polynomial_unit(u)) fail(ErrorKind::NotAUnit, u.to_string() + " is not a unit of R[t]");
  const unsigned deg = static_cast<unsigned>(std::max(u.degree(), 0));
  const TruncatedSeries inv = u.with_precision((u.ring().nil() - 1) * deg + 1).inverse();
  if (!inv.exact()) fail(ErrorKind::NotExact, "inverse of a polynomial unit lost terms");
  return inv;
}

UnitClass unit_class(const TruncatedSeries& u) {
  if (!u.exact()) fail(ErrorKind::InvalidInput, "unit_class needs an exact polynomial");
  if (!is_polynomial_unit(u)) fail(ErrorKind::NotAUnit, u.to_string() + " is not a unit of R[t]");
  return UnitClass{FormalWittElement(u.scaled(u.constant_term().inverse()))};
}

// ----------------------------------------------------------------- pairings

unsigned pairing_precision(const FormalWittElement& f) {
  const unsigned e = f.ring().nil();
  const unsigned i = f.coordinate_support();
  return std::max({2u, e * i, (e - 1) * (e - 1) * i + 1});
}

unsigned geometric_precision(const FormalWittElement& f) { return std::max(1u, f.ring().nil() * f.coordinate_support()); }

unsigned pi_epsilon_precision(const FormalWittElement& f) {
  const unsigned e = f.ring().nil();
  return e * (e - 1) * f.coordinate_support() + 1;
}

WittElement lift_to_ring(const WittElement& g, const Ring& target) {
  if (&g.ring() == &target) return g;
  if (&g.ring().field() != &target.field() || g.ring().nil() != 1) {
    fail(ErrorKind::ShapeMismatch, "g must live over the target ring or its residue field");
  }
  return WittElement(g.series().map_coefficients(target, [&](const RingElement& x) { return change_nil(x, target); }));
}

RingElement cartier_pair(const FormalWittElement& f, const WittElement& g, unsigned d) {
  check_pairable(f, g);
  if (d == 0) fail(ErrorKind::InvalidTruncation, "pairing truncation must be positive");
  require_precision(g, d + 1, "the pairing stability check");
  const RingElement a = pair_at(f, g, d);
  const RingElement b = pair_at(f, g, d + 1);
  if (!(a == b)) {
    fail(ErrorKind::UnstableTruncation, "pairing differs between truncations " + std::to_string(d) + " and " +
                                            std::to_string(d + 1) + ": " + a.to_string() + " vs " + b.to_string());
  }
  return a;
}

RingElement cartier_pair(const FormalWittElement& f, const WittElement& g) {
  return cartier_pair(f, g, pairing_precision(f));
}

RingElement geometric_pair(const FormalWittElement& f, const WittElement& g, unsigned m) {
  check_pairable(f, g);
  if (f.variables() != 1) fail(ErrorKind::ShapeMismatch, "the geometric pairing is one-variable");
  if (m == 0) fail(ErrorKind::InvalidTruncation, "modulus level must be positive");
  require_precision(g, m + 1, "the geometric stability check");
  const RingElement a = geometric_at(f, g, m);
  const RingElement b = geometric_at(f, g, m + 1);
  if (!(a == b)) {
    fail(ErrorKind::UnstableTruncation, "geometric pairing differs between levels " + std::to_string(m) + " and " +
                                            std::to_string(m + 1));
  }
  return a;
}

RingElement geometric_pair(const FormalWittElement& f, const WittElement& g) {
  return geometric_pair(f, g, geometric_precision(f));
}

RingElement geometric_pair_by_roots(const FormalWittElement& f, const WittElement& g, unsigned m, unsigned max_ext) {
  check_pairable(f, g);
  if (f.variables() != 1) fail(ErrorKind::ShapeMismatch, "the geometric pairing is one-variable");
  if (g.ring().nil() != 1 || &g.ring().field() != &f.ring().field()) {
    fail(ErrorKind::InvalidInput, "root route needs g over the residue field of f");
  }
  require_precision(g, m, "the root route");
  const Ring& ring = f.ring();
  const Ring& k = g.ring();
  std::vector<RingElement> gc(m, k.zero());
  const WittElement gm = g.truncated(m);
  for (const auto& [rank, c] : gm.series().terms()) gc[rank] = c;
  const UnivariatePolynomial gprime(k, gc);
  if (gprime.degree() <= 0 || f.is_zero()) return ring.one();
  const RootSet roots = roots_with_multiplicity(gprime.reversed(), max_ext);
  const FieldEmbedding emb(k.field(), *roots.field);
  const Ring& big = Ring::get(*roots.field, ring.nil());
  std::vector<RingElement> fc(f.degree() + 1, big.zero());
  for (const auto& [rank, c] : f.polynomial().terms()) fc[rank] = map_field(c, emb, big);
  const UnivariatePolynomial fbig(big, fc);
  RingElement acc = big.one();
  for (const auto& [alpha, mult] : roots.roots) acc *= fbig(big.constant(alpha)).pow(mult);
  RingElement out = ring.zero();
  for (unsigned i = 0; i < ring.nil(); ++i) {
    const auto pre = emb.preimage(acc.component(i));
    if (!pre) fail(ErrorKind::InvalidInput, "root product is not defined over the base field");
    out.set_component(i, *pre);
  }
  return out;
}

RingElement cartier_pair_via_pi_epsilon(const FormalWittElement& f, const WittElement& g) {
  check_pairable(f, g);
  if (f.variables() != 1) fail(ErrorKind::ShapeMismatch, "the pi_epsilon route is one-variable");
  const Ring& ring = f.ring();
  if (f.is_zero()) return ring.one();
  const unsigned p = ring.characteristic();
  const unsigned t = pi_epsilon_precision(f);
  require_precision(g, t, "the pi_epsilon route");
  const PiFamily fv = pi_epsilon_inverse(f.at_precision(t));
  const PiFamily gw = pi_epsilon_inverse(lift_to_ring(g.truncated(t), ring));
  RingElement acc = ring.one();
  for (const auto& [j, v] : fv) {
    if (v.is_zero()) continue;
    const PWittVector& w = gw.at(j);
    const PWittVector prod = pwitt_mul(v, w);
    std::uint64_t index = j;
    for (const auto& x : prod.entries) {
      if (!x.is_zero() && 2 * index >= t) {
        fail(ErrorKind::UnstableTruncation, "product family reaches t^" + std::to_string(index) + " in window " +
                                                std::to_string(t));
      }
      index *= p;
    }
    acc *= pwitt_pair(v, w).pow(negative_inverse_exponent(j, p, ring.nil()));
  }
  return acc;
}

std::vector<std::vector<RingElement>> pairing_matrix(const std::vector<FormalWittElement>& fs,
                                                     const std::vector<WittElement>& gs) {
  std::vector<std::vector<RingElement>> out;
  out.reserve(fs.size());
  for (const auto& f : fs) {
    std::vector<RingElement> row;
    row.reserve(gs.size());
    for (const auto& g : gs) row.push_back(cartier_pair(f, g));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace bigwitt
