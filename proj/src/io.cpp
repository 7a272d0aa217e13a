#include "bigwitt/io.hpp"

namespace bigwitt::io {

namespace {

bool is_natural(const json& v) { return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0); }

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::InvalidInput, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

unsigned unsigned_member(const json& j, const char* key) {
  const json& v = member(j, key);
  if (!is_natural(v)) fail(ErrorKind::InvalidInput, std::string("field \"") + key + "\" must be a non-negative integer");
  return v.get<unsigned>();
}

MultiIndex index_from_json(const json& j, unsigned n) {
  if (!j.is_array() || j.size() != n) fail(ErrorKind::ShapeMismatch, "exponent must list " + std::to_string(n) + " entries");
  std::vector<unsigned> e;
  for (const auto& x : j) {
    if (!is_natural(x)) fail(ErrorKind::InvalidInput, "exponents are non-negative integers");
    e.push_back(x.get<unsigned>());
  }
  return MultiIndex(e);
}

Field::Elem component_from_json(const Field& f, const json& j) {
  if (is_natural(j)) {
    const auto v = j.get<std::uint64_t>();
    if (v >= f.order()) fail(ErrorKind::InvalidInput, "field element code " + std::to_string(v) + " out of range");
    return static_cast<Field::Elem>(v);
  }
  if (!j.is_array() || j.size() > f.degree()) fail(ErrorKind::InvalidInput, "field element must be a code or a digit list");
  std::vector<unsigned> digits(f.degree(), 0);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!is_natural(j[i]) || j[i].get<unsigned>() >= f.characteristic()) {
      fail(ErrorKind::InvalidInput, "digits must lie in [0, p)");
    }
    digits[i] = j[i].get<unsigned>();
  }
  return f.from_digits(digits);
}

}  // namespace

const Ring& ring_from_json(const json& j) {
  const unsigned p = unsigned_member(j, "p");
  const unsigned e = j.contains("e") ? unsigned_member(j, "e") : 1;
  const unsigned nil = j.contains("nil") ? unsigned_member(j, "nil") : 1;
  if (nil == 0 || nil > Ring::kMaxNil) fail(ErrorKind::InvalidInput, "nil must lie in [1, 8]");
  if (e == 0) fail(ErrorKind::InvalidInput, "e must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > Field::kMaxOrder) fail(ErrorKind::TooLarge, "field order exceeds 2^20");
  }
  if (j.contains("modulus")) {
    FieldDesc desc{p, e, {}};
    for (const auto& c : member(j, "modulus")) {
      if (!is_natural(c)) fail(ErrorKind::InvalidInput, "modulus coefficients are non-negative integers");
      desc.modulus.push_back(c.get<unsigned>());
    }
    return Ring::get(Field::get(desc), nil);
  }
  if (!is_prime(p)) fail(ErrorKind::InvalidInput, "p must be prime");
  return Ring::get(Field::of_order(q), nil);
}

json to_json(const Ring& ring) {
  const FieldDesc& d = ring.field().desc();
  return json{{"p", d.p}, {"e", d.e}, {"modulus", d.modulus}, {"nil", ring.nil()}};
}

RingElement element_from_json(const Ring& ring, const json& j) {
  if (!j.is_array()) fail(ErrorKind::InvalidInput, "ring element must be a list of eps-components");
  if (j.size() > ring.nil()) fail(ErrorKind::ShapeMismatch, "ring element has more than nil components");
  RingElement out = ring.zero();
  for (std::size_t i = 0; i < j.size(); ++i) out.set_component(static_cast<unsigned>(i), component_from_json(ring.field(), j[i]));
  return out;
}

json to_json(const RingElement& a) {
  json out = json::array();
  for (unsigned i = 0; i < a.ring().nil(); ++i) out.push_back(a.ring().field().digits(a.component(i)));
  return out;
}

TruncatedSeries series_from_json(const Ring& ring, const json& j) {
  const unsigned n = unsigned_member(j, "n");
  const unsigned d = unsigned_member(j, "d");
  if (n == 0 || d == 0) fail(ErrorKind::InvalidInput, "series need n >= 1 and d >= 1");
  if (j.contains("exact") && !member(j, "exact").is_boolean()) fail(ErrorKind::InvalidInput, "\"exact\" must be a boolean");
  const bool exact = j.contains("exact") && member(j, "exact").get<bool>();
  std::vector<std::pair<MultiIndex, RingElement>> terms;
  for (const auto& t : member(j, "terms")) {
    const MultiIndex nu = index_from_json(member(t, "exp"), n);
    if (nu.total_degree() >= d) fail(ErrorKind::InvalidInput, "term " + nu.to_string() + " lies beyond the truncation");
    terms.emplace_back(nu, element_from_json(ring, member(t, "c")));
  }
  return TruncatedSeries::from_terms(ring, n, d, terms, exact);
}

json to_json(const TruncatedSeries& s) {
  json terms = json::array();
  for (const auto& [rank, c] : s.terms()) {
    terms.push_back(json{{"exp", s.basis().monomial(rank).exponents()}, {"c", to_json(c)}});
  }
  return json{{"n", s.variables()}, {"d", s.precision()}, {"exact", s.exact()}, {"terms", terms}};
}

WittCoordinates coordinates_from_json(const Ring& ring, const json& j) {
  WittCoordinates c{&ring, unsigned_member(j, "n"), unsigned_member(j, "d"), {}};
  if (c.n == 0 || c.d == 0) fail(ErrorKind::InvalidInput, "coordinates need n >= 1 and d >= 1");
  for (const auto& t : member(j, "coords")) {
    const MultiIndex nu = index_from_json(member(t, "exp"), c.n);
    if (nu.total_degree() == 0 || nu.total_degree() >= c.d) fail(ErrorKind::InvalidInput, "coordinate index out of range");
    c.set(nu, element_from_json(ring, member(t, "r")));
  }
  return c;
}

json to_json(const WittCoordinates& c) {
  json coords = json::array();
  for (const auto& [nu, r] : c.coords) coords.push_back(json{{"exp", nu.exponents()}, {"r", to_json(r)}});
  return json{{"n", c.n}, {"d", c.d}, {"coords", coords}};
}

PWittVector pwitt_from_json(const Ring& ring, const json& j) {
  PWittVector v{ring.characteristic(), {}};
  if (j.contains("p") && unsigned_member(j, "p") != v.p) fail(ErrorKind::ShapeMismatch, "p differs from the ring characteristic");
  for (const auto& x : member(j, "entries")) v.entries.push_back(element_from_json(ring, x));
  if (v.entries.empty()) fail(ErrorKind::EmptyInput, "Witt vector needs at least one entry");
  return v;
}

json to_json(const PWittVector& v) {
  json entries = json::array();
  for (const auto& x : v.entries) entries.push_back(to_json(x));
  return json{{"p", v.p}, {"entries", entries}};
}

json to_json(const AbelianGroupStructure& g) {
  json order;
  if (g.order.fits_slong_p()) {
    order = g.order.get_si();
  } else {
    order = g.order.get_str();
  }
  return json{{"factors", g.factors}, {"order", order}};
}

json to_json(const LangCensus& c) {
  return json{{"group_order", c.group_order},
              {"kernel_size", c.kernel_size},
              {"expected_kernel", c.expected_kernel},
              {"kernel_rational", c.kernel_rational},
              {"pairs_checked", c.pairs_checked},
              {"pairs_exhaustive", c.pairs_exhaustive},
              {"endomorphism", c.endomorphism},
              {"ok", c.ok()}};
}

json error_json(ErrorKind kind, const std::string& detail) {
  return json{{"error", {{"kind", std::string(to_string(kind))}, {"detail", detail}}}};
}

}  // namespace bigwitt::io
