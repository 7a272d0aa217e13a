#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bigwitt/field.hpp"

namespace bigwitt {

struct RingDesc {
  FieldDesc base;
  unsigned nil = 1;  ///< eps^nil = 0; nil == 1 means R = F_q

  bool operator==(const RingDesc&) const = default;
};

class RingElement;

/// R = F_q[eps]/(eps^nil). Interned like `Field`.
class Ring {
 public:
  static constexpr unsigned kMaxNil = 8;

  static const Ring& get(const Field& field, unsigned nil);
  static const Ring& get(const RingDesc& desc);

  const Field& field() const { return *field_; }
  unsigned nil() const { return nil_; }
  unsigned characteristic() const { return field_->characteristic(); }
  RingDesc desc() const { return {field_->desc(), nil_}; }
  /// Same field, no nilpotents.
  const Ring& residue_field() const { return get(*field_, 1); }
  std::uint64_t order() const;

  RingElement zero() const;
  RingElement one() const;
  RingElement epsilon() const;
  RingElement from_int(std::int64_t k) const;
  RingElement constant(Field::Elem a) const;

  bool operator==(const Ring& other) const { return this == &other; }

 private:
  Ring(const Field& field, unsigned nil) : field_(&field), nil_(nil) {}

  const Field* field_;
  unsigned nil_;
};

/// Element of F_q[eps]/(eps^nil), stored as the field components of
/// eps^0, ..., eps^{nil-1}. Trivially copyable.
class RingElement {
 public:
  using Coeffs = std::array<Field::Elem, Ring::kMaxNil>;

  RingElement() = default;
  explicit RingElement(const Ring& ring) : ring_(&ring), c_{} {}
  RingElement(const Ring& ring, const Coeffs& c);

  const Ring& ring() const { return *ring_; }
  Field::Elem operator[](unsigned i) const { return c_[i]; }
  /// Component of eps^i; a field element.
  Field::Elem component(unsigned i) const { return i < ring_->nil() ? c_[i] : 0; }
  void set_component(unsigned i, Field::Elem a) { c_[i] = a; }

  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const { return c_[0] != 0; }
  bool is_nilpotent() const { return c_[0] == 0; }
  /// Largest k with the element divisible by eps^k; nil for zero.
  unsigned valuation() const;
  /// Smallest k with x^k = 0, or 0 for non-nilpotent elements.
  unsigned nilpotency_index() const;

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const RingElement& o) { return *this = *this * o; }
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend bool operator==(const RingElement& a, const RingElement& b);

  RingElement inverse() const;
  RingElement pow(std::uint64_t k) const;
  /// k * x for an integer k.
  RingElement scaled(std::int64_t k) const;
  /// x / d for d with valuation(d) <= valuation(x). Any solution c of
  /// c * d = x is valid; this returns the one with zero high components.
  RingElement divide_exact(const RingElement& d) const;
  /// x^q for q a power of the characteristic, by repeated p-power maps.
  RingElement frobenius(std::uint64_t q) const;

  std::size_t hash() const;
  std::string to_string() const;

 private:
  const Ring* ring_ = nullptr;
  Coeffs c_{};
};

/// Free function forms.
inline RingElement frobenius(const RingElement& a, std::uint64_t q) { return a.frobenius(q); }

/// Image of `a` (coefficients in F_q) in the ring with the same field and
/// another nilpotency index; components beyond the target nil are dropped.
RingElement change_nil(const RingElement& a, const Ring& target);

/// Apply a field embedding componentwise.
RingElement map_field(const RingElement& a, const FieldEmbedding& emb, const Ring& target);

/// Every element of `ring` (q^nil of them) in index order.
std::vector<RingElement> all_elements(const Ring& ring);

}  // namespace bigwitt

template <>
struct std::hash<bigwitt::RingElement> {
  std::size_t operator()(const bigwitt::RingElement& a) const noexcept { return a.hash(); }
};
