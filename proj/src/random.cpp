#include "bigwitt/random.hpp"

namespace bigwitt {

RingElement random_element(const Ring& ring, Rng& rng) {
  RingElement x(ring);
  for (unsigned i = 0; i < ring.nil(); ++i) x.set_component(i, static_cast<Field::Elem>(rng.below(ring.field().order())));
  return x;
}

RingElement random_unit(const Ring& ring, Rng& rng) {
  RingElement x = random_element(ring, rng);
  x.set_component(0, static_cast<Field::Elem>(1 + rng.below(ring.field().order() - 1)));
  return x;
}

RingElement random_nilpotent(const Ring& ring, Rng& rng) {
  RingElement x = random_element(ring, rng);
  x.set_component(0, 0);
  return x;
}

WittElement random_witt(const Ring& ring, unsigned n, unsigned d, Rng& rng) {
  TruncatedSeries s = TruncatedSeries::one(ring, n, d);
  const MonomialBasis& basis = s.basis();
  for (std::uint32_t r = 1; r < basis.size(); ++r) s.set(basis.monomial(r), random_element(ring, rng));
  s.set_exact(false);
  return WittElement(std::move(s));
}

TruncatedSeries random_formal_polynomial(const Ring& ring, unsigned n, unsigned max_degree, Rng& rng) {
  std::vector<std::pair<MultiIndex, RingElement>> terms{{MultiIndex::zero(n), ring.one()}};
  const MonomialBasis& basis = MonomialBasis::get(n, max_degree + 1);
  for (std::uint32_t r = 1; r < basis.size(); ++r) {
    if (rng.coin()) terms.emplace_back(basis.monomial(r), random_nilpotent(ring, rng));
  }
  return TruncatedSeries::polynomial(ring, n, terms);
}

}  // namespace bigwitt
