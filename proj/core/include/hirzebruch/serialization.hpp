#pragma once

#include <json.hpp>

#include "hirzebruch/arrangement.hpp"
#include "hirzebruch/galois.hpp"
#include "hirzebruch/regeneration.hpp"

namespace hirzebruch {

using Json = nlohmann::ordered_json;

// Integers are emitted as JSON numbers while they are exactly representable
// in a double (so every consumer parses them identically) and as decimal
// strings beyond that; readers accept both.
Json to_json(const BigInt& v);
BigInt big_from_json(const Json& j);

Json to_json(const Rational& v);  // {"num": ..., "den": ...}
Rational rational_from_json(const Json& j);

Json to_json(const BraidWord& w);
BraidWord braid_word_from_json(const Json& j);

Json to_json(const PuncturePath& p);
PuncturePath path_from_json(const Json& j);

Json to_json(const Factorization& f);
Factorization factorization_from_json(const Json& j);

Json to_json(const LineArrangement& arr);
LineArrangement arrangement_from_json(const Json& j);

Json to_json(const ChernPair& pair);
Json to_json(const ChernValue& value);

SixPointTable six_point_table_from_json(const Json& j);

}  // namespace hirzebruch
