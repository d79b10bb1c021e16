#pragma once

// JSON forms of complexes, derivations, certificates and charts. Integers
// that fit in 64 bits are JSON numbers, everything else a "p/q" string.
// Readers throw InvalidInput on schema violations.

#include <json.hpp>
#include <utility>
#include <vector>

#include "tropcong/complex.hpp"
#include "tropcong/line.hpp"
#include "tropcong/reduce.hpp"
#include "tropcong/witness.hpp"

namespace tropcong::io {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& a);
Json to_json(const Rational& a);
Json to_json(const IntVec& v);
Json to_json(const RatVec& v);
Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);
IntVec intvec_from_json(const Json& j);
RatVec ratvec_from_json(const Json& j);

Json complex_to_json(const PolyComplex& cx);
PolyComplex complex_from_json(const Json& j);

Json derivation_to_json(const line::Derivation& d);
line::Derivation derivation_from_json(const Json& j);

Json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

Json chart_to_json(const SubspaceChart& c);
// { "dim": n, "span": [[...], ...] } with rational entries.
SubspaceChart subspace_from_json(const Json& j);

// [ {"lhs": text, "rhs": text}, ... ] or [ [text, text], ... ]
std::vector<PolyPair> pairs_from_json(const Json& j, std::size_t n);
Json pairs_to_json(const std::vector<PolyPair>& pairs);

}  // namespace tropcong::io
