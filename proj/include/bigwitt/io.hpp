#pragma once

#include <json.hpp>

#include <string>

#include "bigwitt/cft.hpp"
#include "bigwitt/error.hpp"
#include "bigwitt/ptypical.hpp"
#include "bigwitt/ring.hpp"
#include "bigwitt/series.hpp"
#include "bigwitt/witt.hpp"

namespace bigwitt::io {

using json = nlohmann::json;

/// Version of the JSON schema documented in docs/schema.md.
inline constexpr const char* kSchemaVersion = "1.0";

/// {"p", "e", "modulus"?, "nil"?}. The modulus defaults to the built-in
/// (or first irreducible) polynomial; nil defaults to 1.
const Ring& ring_from_json(const json& j);
json to_json(const Ring& ring);

/// A ring element is the list of its eps-components; a component is an
/// integer code 0..q-1 or its list of base-p digits (low first). Missing
/// trailing components are zero. Output always uses digit lists.
RingElement element_from_json(const Ring& ring, const json& j);
json to_json(const RingElement& a);

/// {"n", "d", "exact"?, "terms": [{"exp": [..], "c": element}]}
TruncatedSeries series_from_json(const Ring& ring, const json& j);
json to_json(const TruncatedSeries& s);

/// {"n", "d", "coords": [{"exp": [..], "r": element}]}
WittCoordinates coordinates_from_json(const Ring& ring, const json& j);
json to_json(const WittCoordinates& c);

/// {"p", "entries": [element, ...]}
PWittVector pwitt_from_json(const Ring& ring, const json& j);
json to_json(const PWittVector& v);

/// {"factors": [..], "order": n}; the order is a string past 2^63.
json to_json(const AbelianGroupStructure& g);
json to_json(const LangCensus& c);

/// {"error": {"kind", "detail"}}
json error_json(ErrorKind kind, const std::string& detail);

}  // namespace bigwitt::io
