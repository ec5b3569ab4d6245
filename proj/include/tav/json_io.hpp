#pragma once

// JSON encoding of every value the CLI exchanges. Integers are decimal
// strings so arbitrary precision survives JSON; rationals are "p" or
// "p/q" reduced with positive denominator; matrices are arrays of row
// arrays. Encoders emit keys in a fixed order so output is byte-stable.

#include <json.hpp>

#include <optional>
#include <vector>

#include "tav/decompose.hpp"
#include "tav/hodge.hpp"
#include "tav/kuga_satake.hpp"
#include "tav/witness.hpp"

namespace tav {

using json = nlohmann::ordered_json;

json encode(const Int& value);
json encode(const Rat& value);
json encode(const IntMatrix& value);
json encode(const RatMatrix& value);
json encode(const std::vector<Int>& value);
json encode(const FiniteAbelianGroup& value);
json encode(const SmithDecomposition& value);
json encode(const InvariantFactorChain& value);
json encode(const DecompositionCertificate& value);
json encode(const CertificateCheck& value);
json encode(const AntisymTwist& value);
json encode(const KSDegreeReport& value);
json encode(const FactorWitness& value);
json encode(const WitnessReport& value);

// Decoders accept JSON strings (canonical) and plain JSON integers.
Int decode_int(const json& j);
Rat decode_rat(const json& j);
IntMatrix decode_int_matrix(const json& j);
RatMatrix decode_rat_matrix(const json& j);
std::vector<Int> decode_int_list(const json& j);
InvariantFactorChain decode_chain(const json& j);

// Required-field accessor with a readable failure message.
const json& field(const json& j, const char* name);

}  // namespace tav
