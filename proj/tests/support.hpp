#pragma once

#include <initializer_list>
#include <vector>

#include "bigwitt/random.hpp"
#include "bigwitt/witt.hpp"

namespace bigwitt::test {

/// Ring element from its eps-components.
inline RingElement elem(const Ring& ring, std::initializer_list<Field::Elem> comps) {
  RingElement x(ring);
  unsigned i = 0;
  for (Field::Elem c : comps) x.set_component(i++, c);
  return x;
}

/// One-variable series with integer coefficients (mapped through Z -> F_p).
inline TruncatedSeries uni(const Ring& ring, unsigned d, std::initializer_list<std::int64_t> coeffs) {
  std::vector<RingElement> c;
  for (auto k : coeffs) c.push_back(ring.from_int(k));
  return TruncatedSeries::univariate(ring, d, c);
}

inline TruncatedSeries uni(const Ring& ring, unsigned d, const std::vector<RingElement>& coeffs) {
  return TruncatedSeries::univariate(ring, d, coeffs);
}

/// Every one-variable element of Lambda(F_q) mod degree d.
inline std::vector<WittElement> all_witt_1var(const Ring& ring, unsigned d) {
  const std::vector<RingElement> elems = all_elements(ring);
  std::vector<WittElement> out;
  std::vector<std::size_t> idx(d - 1, 0);
  for (;;) {
    std::vector<RingElement> c{ring.one()};
    for (std::size_t i : idx) c.push_back(elems[i]);
    out.emplace_back(TruncatedSeries::univariate(ring, d, c));
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == elems.size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return out;
}

}  // namespace bigwitt::test
