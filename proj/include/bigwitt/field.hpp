#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace bigwitt {

/// F_q = F_p[x]/(modulus). The modulus is stored ascending and monic.
struct FieldDesc {
  unsigned p = 2;
  unsigned e = 1;
  std::vector<unsigned> modulus{0, 1};

  std::uint64_t order() const;
  bool operator==(const FieldDesc&) const = default;
};

/// Built-in moduli exist for q in {2,3,4,5,8,9,16,25,27}.
std::optional<FieldDesc> builtin_field(std::uint64_t q);

bool is_prime(std::uint64_t n);

/// Trial division by every monic polynomial of degree <= deg/2.
bool is_irreducible(unsigned p, std::span<const unsigned> monic);

/// First monic irreducible polynomial of degree `e` over F_p in
/// lexicographic order of its coefficient vector (low degree first).
std::vector<unsigned> find_irreducible(unsigned p, unsigned e);

/// Arithmetic in a finite field whose elements are encoded as integers
/// 0..q-1 (base-p digits are the coordinates on 1, x, ..., x^{e-1}).
///
/// Fields are interned: `Field::get` returns a reference with static
/// lifetime, so elements can refer to their field by pointer.
class Field {
 public:
  using Elem = std::uint32_t;

  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

  static const Field& get(const FieldDesc& desc);
  static const Field& of_order(std::uint64_t q);
  /// F_{q^s} containing this field's order as a subfield order.
  const Field& extension(unsigned s) const;

  const FieldDesc& desc() const { return desc_; }
  unsigned characteristic() const { return desc_.p; }
  unsigned degree() const { return desc_.e; }
  std::uint32_t order() const { return q_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  /// Image of the integer k under Z -> F_p -> F_q.
  Elem from_int(std::int64_t k) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t k) const;
  /// a^p
  Elem frobenius(Elem a) const { return pow(a, desc_.p); }

  std::vector<unsigned> digits(Elem a) const;
  Elem from_digits(std::span<const unsigned> digits) const;

  /// The class of x in F_p[x]/(modulus).
  Elem generator_x() const;
  Elem primitive_element() const { return exp_[q_ > 2 ? 1 : 0]; }

  bool operator==(const Field& other) const { return this == &other; }

 private:
  explicit Field(FieldDesc desc);

  Elem slow_mul(Elem a, Elem b) const;

  FieldDesc desc_;
  std::uint32_t q_;
  std::vector<std::uint32_t> pow_p_;  // p^i for i <= e
  std::vector<Elem> add_table_;       // empty when q*q is large
  std::vector<Elem> neg_table_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

/// Ring embedding F_q -> F_{q^s} sending the class of x to the first root
/// (in element order) of F_q's modulus inside the larger field.
class FieldEmbedding {
 public:
  FieldEmbedding(const Field& source, const Field& target);

  const Field& source() const { return *source_; }
  const Field& target() const { return *target_; }

  Field::Elem operator()(Field::Elem a) const { return image_[a]; }
  /// Preimage when `b` lies in the image.
  std::optional<Field::Elem> preimage(Field::Elem b) const;

 private:
  const Field* source_;
  const Field* target_;
  std::vector<Field::Elem> image_;
};

}  // namespace bigwitt
