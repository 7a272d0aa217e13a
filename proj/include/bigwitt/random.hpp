#pragma once

#include <cstdint>
#include <random>

#include "bigwitt/witt.hpp"

namespace bigwitt {

/// Seeded generator. `below` reduces raw 64-bit output modulo n, so a seed
/// reproduces the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t next() { return gen_(); }
  std::uint64_t below(std::uint64_t n) { return gen_() % n; }
  bool coin() { return (gen_() & 1) != 0; }

 private:
  std::mt19937_64 gen_;
};

RingElement random_element(const Ring& ring, Rng& rng);
RingElement random_unit(const Ring& ring, Rng& rng);
/// Uniform over the maximal ideal (eps).
RingElement random_nilpotent(const Ring& ring, Rng& rng);

/// Uniform element of Lambda^n(R) mod degree d (random coefficients).
WittElement random_witt(const Ring& ring, unsigned n, unsigned d, Rng& rng);

/// Exact polynomial 1 + sum c_nu t^nu with nilpotent c_nu and
/// 0 < |nu| <= max_degree, each monomial present with probability 1/2.
TruncatedSeries random_formal_polynomial(const Ring& ring, unsigned n, unsigned max_degree, Rng& rng);

}  // namespace bigwitt
