#include "bigwitt/ptypical.hpp"

#include <functional>
#include <mutex>

#include "bigwitt/error.hpp"

namespace bigwitt {

namespace {

// (Z/p^m)[x, eps]/(M(x), eps^nil), elements as coefficient arrays indexed
// by a * nil + b for x^a eps^b.
class LiftRing {
 public:
  using Elt = std::vector<std::uint64_t>;

  LiftRing(const Ring& ring, unsigned precision) : ring_(ring), p_(ring.characteristic()), e_(ring.field().degree()), nil_(ring.nil()) {
    P_ = 1;
    for (unsigned i = 0; i < precision; ++i) {
      if (P_ > (std::uint64_t{1} << 62) / p_) fail(ErrorKind::TooLarge, "Witt vector too long for the lift modulus");
      P_ *= p_;
    }
    const auto& m = ring.field().desc().modulus;
    modulus_.assign(m.begin(), m.end());
  }

  std::uint64_t modulus() const { return P_; }
  Elt zero() const { return Elt(std::size_t{e_} * nil_, 0); }

  Elt lift(const RingElement& x) const {
    Elt out = zero();
    for (unsigned b = 0; b < nil_; ++b) {
      const auto digits = ring_.field().digits(x.component(b));
      for (unsigned a = 0; a < e_; ++a) out[a * nil_ + b] = digits[a];
    }
    return out;
  }

  /// x / p^n reduced mod p; every coefficient must be divisible by p^n.
  RingElement descend(const Elt& x, std::uint64_t pn) const {
    RingElement out(ring_);
    std::vector<unsigned> digits(e_);
    for (unsigned b = 0; b < nil_; ++b) {
      for (unsigned a = 0; a < e_; ++a) {
        const std::uint64_t c = x[a * nil_ + b];
        if (c % pn != 0) fail(ErrorKind::NonIntegral, "ghost residue not divisible by p^n");
        digits[a] = static_cast<unsigned>((c / pn) % p_);
      }
      out.set_component(b, ring_.field().from_digits(digits));
    }
    return out;
  }

  Elt add(const Elt& x, const Elt& y) const {
    Elt out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = (x[i] + y[i]) % P_;
    return out;
  }
  Elt sub(const Elt& x, const Elt& y) const {
    Elt out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = (x[i] + P_ - y[i]) % P_;
    return out;
  }
  Elt neg(const Elt& x) const { return sub(zero(), x); }
  Elt scale(const Elt& x, std::uint64_t k) const {
    Elt out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = mulmod(x[i], k % P_);
    return out;
  }

  Elt mul(const Elt& x, const Elt& y) const {
    const unsigned width = 2 * e_ - 1;
    std::vector<std::uint64_t> tmp(std::size_t{width} * nil_, 0);
    for (unsigned a1 = 0; a1 < e_; ++a1)
      for (unsigned b1 = 0; b1 < nil_; ++b1) {
        const std::uint64_t c1 = x[a1 * nil_ + b1];
        if (c1 == 0) continue;
        for (unsigned a2 = 0; a2 < e_; ++a2)
          for (unsigned b2 = 0; b1 + b2 < nil_; ++b2) {
            const std::uint64_t c2 = y[a2 * nil_ + b2];
            if (c2 == 0) continue;
            std::uint64_t& slot = tmp[(a1 + a2) * nil_ + b1 + b2];
            slot = (slot + mulmod(c1, c2)) % P_;
          }
      }
    // x^e = -sum_{i<e} m_i x^i
    for (unsigned a = width; a-- > e_;) {
      for (unsigned b = 0; b < nil_; ++b) {
        const std::uint64_t c = tmp[a * nil_ + b];
        if (c == 0) continue;
        for (unsigned i = 0; i < e_; ++i) {
          std::uint64_t& slot = tmp[(a - e_ + i) * nil_ + b];
          slot = (slot + P_ - mulmod(c, modulus_[i])) % P_;
        }
        tmp[a * nil_ + b] = 0;
      }
    }
    tmp.resize(std::size_t{e_} * nil_);
    return tmp;
  }

  Elt pow(Elt base, std::uint64_t k) const {
    Elt acc = zero();
    acc[0] = 1 % P_;
    while (k > 0) {
      if (k & 1) acc = mul(acc, base);
      k >>= 1;
      if (k) base = mul(base, base);
    }
    return acc;
  }

 private:
  std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % P_);
  }

  const Ring& ring_;
  unsigned p_, e_, nil_;
  std::uint64_t P_;
  std::vector<std::uint64_t> modulus_;
};

void check_compatible(const PWittVector& v, const PWittVector& w) {
  if (v.p != w.p || v.length() != w.length() || v.entries.empty() || &v.ring() != &w.ring()) {
    fail(ErrorKind::ShapeMismatch, "Witt vectors differ in prime, length or ring");
  }
  if (v.ring().characteristic() != v.p) fail(ErrorKind::InvalidInput, "Witt vector prime differs from the characteristic");
}

// Solve the ghost equations for the vector whose n-th ghost component is
// combine(ghost_n of each input), over the lift ring.
PWittVector ghost_combine(const std::vector<const PWittVector*>& inputs,
                          const std::function<LiftRing::Elt(const LiftRing&, const std::vector<LiftRing::Elt>&)>& combine) {
  const PWittVector& first = *inputs.front();
  const Ring& ring = first.ring();
  const unsigned p = first.p;
  const unsigned m = first.length();
  const LiftRing lr(ring, m);

  // powers[k][i] = lift(entry i of input k)^{p^{n-i}} at step n
  std::vector<std::vector<LiftRing::Elt>> powers(inputs.size());
  std::vector<LiftRing::Elt> out_powers;
  PWittVector out{p, {}};
  std::vector<std::uint64_t> pi(m, 1);
  for (unsigned i = 1; i < m; ++i) pi[i] = pi[i - 1] * p;

  for (unsigned n = 0; n < m; ++n) {
    std::vector<LiftRing::Elt> ghosts;
    for (std::size_t k = 0; k < inputs.size(); ++k) {
      auto& pw = powers[k];
      for (auto& x : pw) x = lr.pow(x, p);
      pw.push_back(lr.lift(inputs[k]->entries[n]));
      LiftRing::Elt g = lr.zero();
      for (unsigned i = 0; i <= n; ++i) g = lr.add(g, lr.scale(pw[i], pi[i]));
      ghosts.push_back(std::move(g));
    }
    LiftRing::Elt x = combine(lr, ghosts);
    for (auto& s : out_powers) s = lr.pow(s, p);
    for (unsigned i = 0; i < n; ++i) x = lr.sub(x, lr.scale(out_powers[i], pi[i]));
    const RingElement s = lr.descend(x, pi[n]);
    out.entries.push_back(s);
    out_powers.push_back(lr.lift(s));
  }
  return out;
}

mpq_class power(const mpq_class& x, unsigned long k) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), k);
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

// Residue of a p-integral rational mod p.
unsigned residue_mod_p(const mpq_class& x, unsigned p) {
  const mpz_class pz(p);
  if (mpz_divisible_p(x.get_den_mpz_t(), pz.get_mpz_t())) fail(ErrorKind::NonIntegral, "denominator divisible by p");
  mpz_class den_inv;
  mpz_invert(den_inv.get_mpz_t(), x.get_den_mpz_t(), pz.get_mpz_t());
  mpz_class r = (x.get_num() * den_inv) % pz;
  if (r < 0) r += pz;
  return static_cast<unsigned>(r.get_ui());
}

std::uint64_t least_power_at_least(unsigned p, std::uint64_t bound) {
  std::uint64_t q = 1;
  while (q < bound) q *= p;
  return q;
}

}  // namespace

// ------------------------------------------------------------- PWittVector

PWittVector PWittVector::zero(const Ring& ring, unsigned length) {
  return PWittVector{ring.characteristic(), std::vector<RingElement>(length, ring.zero())};
}

PWittVector PWittVector::one(const Ring& ring, unsigned length) {
  PWittVector v = zero(ring, length);
  if (length > 0) v.entries[0] = ring.one();
  return v;
}

PWittVector PWittVector::teichmuller(const RingElement& x, unsigned length) {
  PWittVector v = zero(x.ring(), length);
  if (length > 0) v.entries[0] = x;
  return v;
}

bool PWittVector::is_zero() const {
  for (const auto& x : entries) {
    if (!x.is_zero()) return false;
  }
  return true;
}

// ------------------------------------------------------------ oracle mode

std::vector<mpq_class> ghost(const RationalWitt& v) {
  const std::size_t m = v.entries.size();
  std::vector<mpq_class> w(m, 0);
  mpz_class pi = 1;
  for (std::size_t i = 0; i < m; ++i, pi *= v.p) {
    for (std::size_t n = i; n < m; ++n) {
      mpz_class e;
      mpz_ui_pow_ui(e.get_mpz_t(), v.p, n - i);
      w[n] += pi * power(v.entries[i], e.get_ui());
    }
  }
  return w;
}

RationalWitt from_ghost(unsigned p, const std::vector<mpq_class>& w) {
  RationalWitt v{p, {}};
  for (std::size_t n = 0; n < w.size(); ++n) {
    mpq_class rest = w[n];
    mpz_class pi = 1;
    for (std::size_t i = 0; i < n; ++i, pi *= p) {
      mpz_class e;
      mpz_ui_pow_ui(e.get_mpz_t(), p, n - i);
      rest -= pi * power(v.entries[i], e.get_ui());
    }
    mpq_class x = rest / pi;
    x.canonicalize();
    v.entries.push_back(x);
  }
  return v;
}

PWittVector reduce_mod_p(const RationalWitt& v, const Ring& ring) {
  if (ring.characteristic() != v.p) fail(ErrorKind::InvalidInput, "ring characteristic differs from the Witt prime");
  PWittVector out{v.p, {}};
  for (const auto& x : v.entries) out.entries.push_back(ring.from_int(residue_mod_p(x, v.p)));
  return out;
}

RationalWitt lift_to_rationals(const PWittVector& v) {
  RationalWitt out{v.p, {}};
  for (const auto& x : v.entries) {
    for (unsigned b = 1; b < x.ring().nil(); ++b) {
      if (x.component(b) != 0) fail(ErrorKind::InvalidInput, "rational lift needs prime-field entries");
    }
    if (x.component(0) >= v.p) fail(ErrorKind::InvalidInput, "rational lift needs prime-field entries");
    out.entries.emplace_back(x.component(0));
  }
  return out;
}

namespace {

PWittVector rational_route(const PWittVector& v, const PWittVector& w, bool multiply) {
  check_compatible(v, w);
  const auto gv = ghost(lift_to_rationals(v));
  const auto gw = ghost(lift_to_rationals(w));
  std::vector<mpq_class> g(gv.size());
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = multiply ? mpq_class(gv[i] * gw[i]) : mpq_class(gv[i] + gw[i]);
  return reduce_mod_p(from_ghost(v.p, g), v.ring());
}

}  // namespace

PWittVector pwitt_add_rational(const PWittVector& v, const PWittVector& w) { return rational_route(v, w, false); }
PWittVector pwitt_mul_rational(const PWittVector& v, const PWittVector& w) { return rational_route(v, w, true); }

// ------------------------------------------------------------- lift route

PWittVector pwitt_add(const PWittVector& v, const PWittVector& w) {
  check_compatible(v, w);
  return ghost_combine({&v, &w}, [](const LiftRing& lr, const std::vector<LiftRing::Elt>& g) { return lr.add(g[0], g[1]); });
}

PWittVector pwitt_mul(const PWittVector& v, const PWittVector& w) {
  check_compatible(v, w);
  return ghost_combine({&v, &w}, [](const LiftRing& lr, const std::vector<LiftRing::Elt>& g) { return lr.mul(g[0], g[1]); });
}

PWittVector pwitt_neg(const PWittVector& v) {
  check_compatible(v, v);
  return ghost_combine({&v}, [](const LiftRing& lr, const std::vector<LiftRing::Elt>& g) { return lr.neg(g[0]); });
}

PWittVector pwitt_sub(const PWittVector& v, const PWittVector& w) {
  check_compatible(v, w);
  return ghost_combine({&v, &w}, [](const LiftRing& lr, const std::vector<LiftRing::Elt>& g) { return lr.sub(g[0], g[1]); });
}

// --------------------------------------------------------- Artin-Hasse

std::vector<mpq_class> artin_hasse_rational(unsigned p, unsigned count) {
  if (!is_prime(p)) fail(ErrorKind::InvalidInput, "Artin-Hasse needs a prime");
  std::vector<mpq_class> a;
  a.reserve(count);
  for (unsigned k = 0; k < count; ++k) {
    if (k == 0) {
      a.emplace_back(1);
      continue;
    }
    mpq_class s = 0;
    for (std::uint64_t pi = 1; pi <= k; pi *= p) s += a[k - pi];
    s /= k;
    s.canonicalize();
    a.push_back(s);
  }
  return a;
}

std::vector<unsigned> artin_hasse_mod_p(unsigned p, unsigned count) {
  struct Cache {
    std::vector<mpq_class> exact;
    std::vector<unsigned> reduced;
  };
  static std::mutex mutex;
  static std::map<unsigned, Cache> caches;
  std::lock_guard lock(mutex);
  Cache& c = caches[p];
  if (c.reduced.size() < count) {
    c.exact = artin_hasse_rational(p, count);
    c.reduced.clear();
    for (const auto& x : c.exact) c.reduced.push_back(residue_mod_p(x, p));
  }
  return {c.reduced.begin(), c.reduced.begin() + count};
}

WittElement artin_hasse_exp(const RingElement& x, unsigned j, unsigned d) {
  if (j == 0) fail(ErrorKind::InvalidInput, "Artin-Hasse substitution t^j needs j >= 1");
  const Ring& ring = x.ring();
  const unsigned count = (d + j - 1) / j;
  const auto a = artin_hasse_mod_p(ring.characteristic(), count);
  std::vector<RingElement> coeffs(d, ring.zero());
  RingElement xk = ring.one();
  for (unsigned k = 0; k < count; ++k) {
    if (k > 0) xk *= x;
    if (xk.is_zero()) break;
    coeffs[std::size_t{k} * j] = xk.scaled(a[k]);
  }
  TruncatedSeries s = TruncatedSeries::univariate(ring, d, coeffs);
  return WittElement(std::move(s));
}

WittElement artin_hasse_exp(const PWittVector& v, unsigned j, unsigned d) {
  if (v.entries.empty()) fail(ErrorKind::EmptyInput, "Witt vector of length 0");
  const Ring& ring = v.ring();
  TruncatedSeries acc = TruncatedSeries::one(ring, 1, d);
  std::uint64_t stride = j;
  for (const auto& x : v.entries) {
    if (stride >= d) break;
    if (!x.is_zero()) acc *= artin_hasse_exp(x, static_cast<unsigned>(stride), d).series();
    stride *= v.p;
  }
  return WittElement(std::move(acc));
}

unsigned pi_epsilon_length(unsigned p, unsigned d, unsigned j) {
  unsigned len = 0;
  for (std::uint64_t k = j; k < d; k *= p) ++len;
  return len;
}

std::uint64_t negative_inverse_exponent(unsigned j, unsigned p, std::uint64_t bound) {
  const std::uint64_t q = least_power_at_least(p, std::max<std::uint64_t>(bound, 1));
  if (j % p == 0) fail(ErrorKind::InvalidInput, "exponent index must be prime to p");
  mpz_class inv;
  const mpz_class jz(j), qz(static_cast<unsigned long>(q));
  if (q == 1) return 0;
  mpz_invert(inv.get_mpz_t(), jz.get_mpz_t(), qz.get_mpz_t());
  return (q - inv.get_ui()) % q;
}

WittElement pi_epsilon(const PiFamily& family, const Ring& ring, unsigned d) {
  const unsigned p = ring.characteristic();
  TruncatedSeries acc = TruncatedSeries::one(ring, 1, d);
  for (const auto& [j, v] : family) {
    if (j == 0 || j % p == 0) fail(ErrorKind::InvalidInput, "pi_epsilon index " + std::to_string(j) + " is not prime to p");
    if (v.entries.empty() || j >= d) continue;
    if (&v.ring() != &ring || v.p != p) fail(ErrorKind::ShapeMismatch, "family member over a different ring");
    if (v.is_zero()) continue;
    const std::uint64_t k = negative_inverse_exponent(j, p, d);
    acc *= artin_hasse_exp(v, j, d).series().pow(k);
  }
  return WittElement(std::move(acc));
}

PiFamily pi_epsilon_inverse(const WittElement& a) {
  if (a.variables() != 1) fail(ErrorKind::ShapeMismatch, "pi_epsilon_inverse needs a one-variable element");
  const Ring& ring = a.ring();
  const unsigned p = ring.characteristic();
  const unsigned d = a.precision();
  PiFamily family;
  for (unsigned j = 1; j < d; ++j) {
    if (j % p != 0) family.emplace(j, PWittVector::zero(ring, pi_epsilon_length(p, d, j)));
  }
  TruncatedSeries running = a.series();
  for (unsigned k = 1; k < d; ++k) {
    const RingElement c = running.coefficient(MultiIndex{k});
    if (c.is_zero()) continue;
    unsigned j = k, i = 0;
    while (j % p == 0) {
      j /= p;
      ++i;
    }
    // the factor E(u, t^k)^{-1/j} starts 1 - (u/j) t^k
    const RingElement u = c.scaled(-static_cast<std::int64_t>(j));
    family.at(j).entries.at(i) = u;
    const std::uint64_t neg_inv = negative_inverse_exponent(j, p, d);
    const std::uint64_t q = least_power_at_least(p, d);
    const std::uint64_t inv = (q - neg_inv) % q;  // j^{-1} mod p^s
    running *= artin_hasse_exp(u, k, d).series().pow(inv);
  }
  return family;
}

RingElement pwitt_pair(const PWittVector& v, const PWittVector& w) {
  check_compatible(v, w);
  for (const auto& x : v.entries) {
    if (!x.is_nilpotent()) fail(ErrorKind::NotNilpotent, "pairing needs nilpotent entries, got " + x.to_string());
  }
  const PWittVector prod = pwitt_mul(v, w);
  const Ring& ring = v.ring();
  const auto a = artin_hasse_mod_p(v.p, ring.nil());
  RingElement out = ring.one();
  for (const auto& x : prod.entries) {
    RingElement e = ring.zero(), xk = ring.one();
    for (unsigned k = 0; k < ring.nil(); ++k) {
      if (k > 0) xk *= x;
      if (xk.is_zero()) break;
      e += xk.scaled(a[k]);
    }
    out *= e;
  }
  return out;
}

}  // namespace bigwitt
