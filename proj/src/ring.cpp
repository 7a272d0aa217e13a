#include "bigwitt/ring.hpp"

#include <deque>
#include <memory>
#include <mutex>

#include "bigwitt/error.hpp"

namespace bigwitt {

namespace {

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

const Ring& Ring::get(const Field& field, unsigned nil) {
  if (nil == 0 || nil > kMaxNil) {
    fail(ErrorKind::InvalidInput, "nilpotency index must lie in [1, " + std::to_string(kMaxNil) + "]");
  }
  static std::deque<std::unique_ptr<Ring>> rings;
  std::lock_guard lock(registry_mutex());
  for (const auto& r : rings) {
    if (r->field_ == &field && r->nil_ == nil) return *r;
  }
  rings.push_back(std::unique_ptr<Ring>(new Ring(field, nil)));
  return *rings.back();
}

const Ring& Ring::get(const RingDesc& desc) { return get(Field::get(desc.base), desc.nil); }

std::uint64_t Ring::order() const {
  std::uint64_t n = 1;
  for (unsigned i = 0; i < nil_; ++i) n *= field_->order();
  return n;
}

RingElement Ring::zero() const { return RingElement(*this); }

RingElement Ring::one() const {
  RingElement r(*this);
  r.set_component(0, 1);
  return r;
}

RingElement Ring::epsilon() const {
  RingElement r(*this);
  if (nil_ > 1) r.set_component(1, 1);
  return r;
}

RingElement Ring::from_int(std::int64_t k) const {
  RingElement r(*this);
  r.set_component(0, field_->from_int(k));
  return r;
}

RingElement Ring::constant(Field::Elem a) const {
  RingElement r(*this);
  r.set_component(0, a);
  return r;
}

RingElement::RingElement(const Ring& ring, const Coeffs& c) : ring_(&ring), c_(c) {
  for (unsigned i = ring.nil(); i < Ring::kMaxNil; ++i) c_[i] = 0;
}

bool RingElement::is_zero() const {
  for (unsigned i = 0; i < ring_->nil(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

bool RingElement::is_one() const {
  if (c_[0] != 1) return false;
  for (unsigned i = 1; i < ring_->nil(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

unsigned RingElement::valuation() const {
  for (unsigned i = 0; i < ring_->nil(); ++i) {
    if (c_[i] != 0) return i;
  }
  return ring_->nil();
}

unsigned RingElement::nilpotency_index() const {
  if (!is_nilpotent()) return 0;
  const unsigned v = valuation();
  if (v >= ring_->nil()) return 1;
  // (eps^v u)^k = eps^{kv} u^k vanishes iff kv >= nil.
  return (ring_->nil() + v - 1) / v;
}

RingElement RingElement::operator-() const {
  RingElement r(*ring_);
  const Field& f = ring_->field();
  for (unsigned i = 0; i < ring_->nil(); ++i) r.c_[i] = f.neg(c_[i]);
  return r;
}

RingElement& RingElement::operator+=(const RingElement& o) {
  const Field& f = ring_->field();
  for (unsigned i = 0; i < ring_->nil(); ++i) c_[i] = f.add(c_[i], o.c_[i]);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  const Field& f = ring_->field();
  for (unsigned i = 0; i < ring_->nil(); ++i) c_[i] = f.sub(c_[i], o.c_[i]);
  return *this;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  const Ring& ring = *a.ring_;
  const Field& f = ring.field();
  const unsigned nil = ring.nil();
  RingElement r(ring);
  if (nil == 1) {
    r.c_[0] = f.mul(a.c_[0], b.c_[0]);
    return r;
  }
  for (unsigned i = 0; i < nil; ++i) {
    if (a.c_[i] == 0) continue;
    for (unsigned j = 0; i + j < nil; ++j) {
      if (b.c_[j] != 0) r.c_[i + j] = f.add(r.c_[i + j], f.mul(a.c_[i], b.c_[j]));
    }
  }
  return r;
}

bool operator==(const RingElement& a, const RingElement& b) {
  if (a.ring_ != b.ring_) return false;
  for (unsigned i = 0; i < a.ring_->nil(); ++i) {
    if (a.c_[i] != b.c_[i]) return false;
  }
  return true;
}

RingElement RingElement::inverse() const {
  if (!is_unit()) fail(ErrorKind::NonUnit, "element " + to_string() + " is not a unit");
  const Field& f = ring_->field();
  const RingElement u0inv = ring_->constant(f.inv(c_[0]));
  // x = u0 (1 + m) with m nilpotent; x^{-1} = u0^{-1} sum_k (-m)^k.
  RingElement minus_m = -(*this * u0inv - ring_->one());
  RingElement sum = ring_->one();
  RingElement term = ring_->one();
  for (unsigned k = 1; k < ring_->nil(); ++k) {
    term *= minus_m;
    sum += term;
  }
  return sum * u0inv;
}

RingElement RingElement::pow(std::uint64_t k) const {
  RingElement result = ring_->one();
  RingElement base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

RingElement RingElement::scaled(std::int64_t k) const { return *this * ring_->from_int(k); }

RingElement RingElement::divide_exact(const RingElement& d) const {
  const unsigned vd = d.valuation();
  const unsigned vx = valuation();
  const unsigned nil = ring_->nil();
  if (vx >= nil) return ring_->zero();
  if (vd > vx) fail(ErrorKind::NonUnit, "divisor " + d.to_string() + " does not divide " + to_string());
  RingElement ud(*ring_);
  RingElement ux(*ring_);
  for (unsigned i = vd; i < nil; ++i) ud.c_[i - vd] = d.c_[i];
  for (unsigned i = vx; i < nil; ++i) ux.c_[i - vx] = c_[i];
  RingElement q = ux * ud.inverse();
  // multiply by eps^{vx - vd}
  RingElement shifted(*ring_);
  for (unsigned i = 0; i + (vx - vd) < nil; ++i) shifted.c_[i + (vx - vd)] = q.c_[i];
  return shifted;
}

RingElement RingElement::frobenius(std::uint64_t q) const {
  const unsigned p = ring_->characteristic();
  std::uint64_t t = q;
  unsigned k = 0;
  while (t > 1 && t % p == 0) {
    t /= p;
    ++k;
  }
  if (t != 1 || q == 0) fail(ErrorKind::InvalidInput, "Frobenius exponent must be a power of the characteristic");
  const Field& f = ring_->field();
  RingElement cur = *this;
  for (unsigned step = 0; step < k; ++step) {
    // (sum a_i eps^i)^p = sum a_i^p eps^{ip}
    RingElement next(*ring_);
    for (unsigned i = 0; i * p < ring_->nil(); ++i) next.c_[i * p] = f.frobenius(cur.c_[i]);
    cur = next;
  }
  return cur;
}

std::size_t RingElement::hash() const {
  std::size_t h = reinterpret_cast<std::uintptr_t>(ring_);
  for (unsigned i = 0; i < ring_->nil(); ++i) h = h * 1000003u ^ c_[i];
  return h;
}

std::string RingElement::to_string() const {
  std::string s = "[";
  const Field& f = ring_->field();
  for (unsigned i = 0; i < ring_->nil(); ++i) {
    if (i) s += ",";
    s += "[";
    const auto d = f.digits(c_[i]);
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (j) s += ",";
      s += std::to_string(d[j]);
    }
    s += "]";
  }
  return s + "]";
}

RingElement change_nil(const RingElement& a, const Ring& target) {
  if (&target.field() != &a.ring().field()) fail(ErrorKind::ShapeMismatch, "rings have different fields");
  RingElement r(target);
  for (unsigned i = 0; i < target.nil(); ++i) r.set_component(i, a.component(i));
  return r;
}

RingElement map_field(const RingElement& a, const FieldEmbedding& emb, const Ring& target) {
  if (&emb.source() != &a.ring().field() || &emb.target() != &target.field()) {
    fail(ErrorKind::ShapeMismatch, "embedding does not match rings");
  }
  RingElement r(target);
  for (unsigned i = 0; i < target.nil(); ++i) r.set_component(i, emb(a.component(i)));
  return r;
}

std::vector<RingElement> all_elements(const Ring& ring) {
  const std::uint64_t total = ring.order();
  if (total > (std::uint64_t{1} << 24)) fail(ErrorKind::TooLarge, "ring too large to enumerate");
  std::vector<RingElement> out;
  out.reserve(total);
  const std::uint32_t q = ring.field().order();
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    RingElement r(ring);
    std::uint64_t t = idx;
    for (unsigned i = 0; i < ring.nil(); ++i) {
      r.set_component(i, static_cast<Field::Elem>(t % q));
      t /= q;
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace bigwitt
