#pragma once

// JSON encodings shared by the CLI and golden tests. Key order is fixed, so
// equal values always serialize to identical bytes.

#include "sphpart/bipartite.hpp"
#include "sphpart/decomposition.hpp"
#include "sphpart/diagram.hpp"
#include "sphpart/polynomial.hpp"

#include <json.hpp>

namespace sphpart {

using Json = nlohmann::ordered_json;

/// A number when it fits in int64, otherwise its decimal string.
Json to_json(const BigInt& value);
/// "p/q" or "p".
Json to_json(const Rational& value);
/// Ascending coefficient strings.
Json to_json(const RationalPolynomial& p);
/// Array of parts.
Json to_json(const Partition& lambda);
Json to_json(const Permutation& sigma);
/// Array of [x, y] pairs in normal-form order.
Json to_json(const BiPartition& b);
Json to_json(const GGForm& gg);
/// Array of ascending blocks.
Json to_json(const SetPartition2k& d);
Json to_json(const LoewyLayers& layers);
Json to_json(const TiltingDescriptor& t);
Json to_json(const DecompositionReport& report);

}  // namespace sphpart
