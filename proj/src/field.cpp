#include "bigwitt/field.hpp"

#include <deque>
#include <memory>
#include <mutex>
#include <string>

#include "bigwitt/error.hpp"

namespace bigwitt {

namespace {

using Poly = std::vector<unsigned>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic polynomial b over F_p.
Poly poly_rem(Poly a, const Poly& b, unsigned p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const unsigned c = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + (p - c) * b[i]) % p;
    }
    trim(a);
  }
  return a;
}

std::optional<std::pair<unsigned, unsigned>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  for (std::uint64_t p = 2; p * p <= q; ++p) {
    if (q % p != 0) continue;
    unsigned e = 0;
    while (q % p == 0) {
      q /= p;
      ++e;
    }
    if (q != 1) return std::nullopt;
    return std::pair{static_cast<unsigned>(p), e};
  }
  return std::pair{static_cast<unsigned>(q), 1u};
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::deque<std::unique_ptr<Field>>& registry() {
  static std::deque<std::unique_ptr<Field>> fields;
  return fields;
}

}  // namespace

std::uint64_t FieldDesc::order() const {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) q *= p;
  return q;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<FieldDesc> builtin_field(std::uint64_t q) {
  switch (q) {
    case 2: return FieldDesc{2, 1, {0, 1}};
    case 3: return FieldDesc{3, 1, {0, 1}};
    case 4: return FieldDesc{2, 2, {1, 1, 1}};
    case 5: return FieldDesc{5, 1, {0, 1}};
    case 8: return FieldDesc{2, 3, {1, 1, 0, 1}};
    case 9: return FieldDesc{3, 2, {1, 0, 1}};
    case 16: return FieldDesc{2, 4, {1, 1, 0, 0, 1}};
    case 25: return FieldDesc{5, 2, {2, 1, 1}};
    case 27: return FieldDesc{3, 3, {1, 2, 0, 1}};
    default: return std::nullopt;
  }
}

bool is_irreducible(unsigned p, std::span<const unsigned> monic) {
  Poly f(monic.begin(), monic.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  for (std::size_t k = 1; k <= deg / 2; ++k) {
    // Enumerate monic divisors of degree k by their low coefficients.
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    Poly g(k + 1, 0);
    g[k] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t t = idx;
      for (std::size_t i = 0; i < k; ++i) {
        g[i] = static_cast<unsigned>(t % p);
        t /= p;
      }
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<unsigned> find_irreducible(unsigned p, unsigned e) {
  if (e == 1) return {0, 1};
  std::uint64_t count = 1;
  for (unsigned i = 0; i < e; ++i) count *= p;
  Poly f(e + 1, 0);
  f[e] = 1;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t t = idx;
    for (unsigned i = 0; i < e; ++i) {
      f[i] = static_cast<unsigned>(t % p);
      t /= p;
    }
    if (f[0] != 0 && is_irreducible(p, f)) return f;
  }
  fail(ErrorKind::InvalidInput, "no irreducible polynomial found");
}

Field::Field(FieldDesc desc) : desc_(std::move(desc)) {
  const std::uint64_t q = desc_.order();
  q_ = static_cast<std::uint32_t>(q);
  pow_p_.resize(desc_.e + 1);
  pow_p_[0] = 1;
  for (unsigned i = 1; i <= desc_.e; ++i) pow_p_[i] = pow_p_[i - 1] * desc_.p;

  neg_table_.resize(q_);
  for (Elem a = 0; a < q_; ++a) {
    auto d = digits(a);
    for (auto& c : d) c = (desc_.p - c) % desc_.p;
    neg_table_[a] = from_digits(d);
  }
  if (desc_.p != 2 && q * q <= (std::uint64_t{1} << 20)) {
    add_table_.resize(q * q);
    for (Elem a = 0; a < q_; ++a) {
      auto da = digits(a);
      for (Elem b = 0; b < q_; ++b) {
        auto db = digits(b);
        for (unsigned i = 0; i < desc_.e; ++i) db[i] = (da[i] + db[i]) % desc_.p;
        add_table_[std::size_t{a} * q_ + b] = from_digits(db);
      }
    }
  }

  // Discrete log tables from the first primitive element.
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  for (Elem g = 1; g < q_; ++g) {
    Elem x = 1;
    std::uint32_t k = 0;
    bool primitive = true;
    for (; k < q_ - 1; ++k) {
      if (k > 0 && x == 1) {
        primitive = false;
        break;
      }
      exp_[k] = x;
      x = slow_mul(x, g);
    }
    if (primitive && x == 1) break;
    if (g + 1 == q_) fail(ErrorKind::InvalidInput, "modulus is not irreducible");
  }
  for (std::uint32_t k = 0; k < q_ - 1; ++k) log_[exp_[k]] = k;
}

const Field& Field::get(const FieldDesc& desc) {
  if (!is_prime(desc.p)) fail(ErrorKind::InvalidInput, "characteristic " + std::to_string(desc.p) + " is not prime");
  if (desc.e == 0 || desc.modulus.size() != desc.e + 1 || desc.modulus.back() != 1) {
    fail(ErrorKind::InvalidInput, "modulus must be monic of degree e (ascending coefficients)");
  }
  for (unsigned c : desc.modulus) {
    if (c >= desc.p) fail(ErrorKind::InvalidInput, "modulus coefficients must lie in [0, p)");
  }
  if (desc.order() > kMaxOrder) fail(ErrorKind::TooLarge, "field order exceeds 2^20");
  std::lock_guard lock(registry_mutex());
  for (const auto& f : registry()) {
    if (f->desc_ == desc) return *f;
  }
  if (!is_irreducible(desc.p, desc.modulus)) fail(ErrorKind::InvalidInput, "modulus is not irreducible over F_p");
  registry().push_back(std::unique_ptr<Field>(new Field(desc)));
  return *registry().back();
}

const Field& Field::of_order(std::uint64_t q) {
  if (auto b = builtin_field(q)) return get(*b);
  auto pe = prime_power(q);
  if (!pe) fail(ErrorKind::InvalidInput, "field order " + std::to_string(q) + " is not a prime power");
  if (q > kMaxOrder) fail(ErrorKind::TooLarge, "field order exceeds 2^20");
  return get(FieldDesc{pe->first, pe->second, find_irreducible(pe->first, pe->second)});
}

const Field& Field::extension(unsigned s) const {
  if (s == 0) fail(ErrorKind::InvalidInput, "extension degree must be positive");
  if (s == 1) return *this;
  std::uint64_t q = 1;
  for (unsigned i = 0; i < s; ++i) {
    q *= q_;
    if (q > kMaxOrder) fail(ErrorKind::TooLarge, "extension field order exceeds 2^20");
  }
  return of_order(q);
}

Field::Elem Field::from_int(std::int64_t k) const {
  const std::int64_t p = desc_.p;
  return static_cast<Elem>(((k % p) + p) % p);
}

Field::Elem Field::add(Elem a, Elem b) const {
  if (desc_.p == 2) return a ^ b;
  if (!add_table_.empty()) return add_table_[std::size_t{a} * q_ + b];
  Elem r = 0;
  for (unsigned i = 0; i < desc_.e; ++i) {
    const unsigned da = (a / pow_p_[i]) % desc_.p;
    const unsigned db = (b / pow_p_[i]) % desc_.p;
    r += ((da + db) % desc_.p) * pow_p_[i];
  }
  return r;
}

Field::Elem Field::neg(Elem a) const { return neg_table_[a]; }

Field::Elem Field::inv(Elem a) const {
  if (a == 0) fail(ErrorKind::NonUnit, "zero has no inverse in F_q");
  const std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : q_ - 1 - l];
}

Field::Elem Field::pow(Elem a, std::uint64_t k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t l = (std::uint64_t{log_[a]} * (k % (q_ - 1))) % (q_ - 1);
  return exp_[l];
}

std::vector<unsigned> Field::digits(Elem a) const {
  std::vector<unsigned> d(desc_.e);
  for (unsigned i = 0; i < desc_.e; ++i) {
    d[i] = a % desc_.p;
    a /= desc_.p;
  }
  return d;
}

Field::Elem Field::from_digits(std::span<const unsigned> digits) const {
  Elem r = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (i < desc_.e) r = r * desc_.p + digits[i] % desc_.p;
  }
  return r;
}

Field::Elem Field::generator_x() const {
  if (desc_.e == 1) return from_int(-static_cast<std::int64_t>(desc_.modulus[0]));
  return desc_.p;  // digits (0, 1, 0, ...)
}

Field::Elem Field::slow_mul(Elem a, Elem b) const {
  const auto da = digits(a);
  const auto db = digits(b);
  Poly prod(2 * desc_.e - 1, 0);
  for (unsigned i = 0; i < desc_.e; ++i) {
    for (unsigned j = 0; j < desc_.e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % desc_.p;
  }
  const Poly r = poly_rem(prod, desc_.modulus, desc_.p);
  return from_digits(r);
}

FieldEmbedding::FieldEmbedding(const Field& source, const Field& target) : source_(&source), target_(&target) {
  if (source.characteristic() != target.characteristic() || target.degree() % source.degree() != 0) {
    fail(ErrorKind::InvalidInput, "no embedding between fields of these orders");
  }
  const auto& modulus = source.desc().modulus;
  std::optional<Field::Elem> root;
  for (Field::Elem b = 0; b < target.order() && !root; ++b) {
    Field::Elem acc = 0;
    for (std::size_t i = modulus.size(); i-- > 0;) acc = target.add(target.mul(acc, b), target.from_int(modulus[i]));
    if (acc == 0) root = b;
  }
  if (!root) fail(ErrorKind::InvalidInput, "modulus has no root in target field");
  image_.resize(source.order());
  for (Field::Elem a = 0; a < source.order(); ++a) {
    const auto d = source.digits(a);
    Field::Elem acc = 0;
    for (std::size_t i = d.size(); i-- > 0;) acc = target.add(target.mul(acc, *root), target.from_int(d[i]));
    image_[a] = acc;
  }
}

std::optional<Field::Elem> FieldEmbedding::preimage(Field::Elem b) const {
  for (Field::Elem a = 0; a < image_.size(); ++a) {
    if (image_[a] == b) return a;
  }
  return std::nullopt;
}

}  // namespace bigwitt
