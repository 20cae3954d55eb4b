#pragma once

#include <string>

#include <json.hpp>

#include "unifree/affine.hpp"
#include "unifree/collision.hpp"
#include "unifree/cutset.hpp"
#include "unifree/digit_system.hpp"
#include "unifree/int_math.hpp"

namespace unifree {

// Ordered keys keep document bytes stable across runs.
using Json = nlohmann::ordered_json;

// Big integers serialize as a plain number while they fit in int64,
// otherwise as a decimal string.
Json int_to_json(const Int& value);
Int int_from_json(const Json& value);

Json to_json(const DigitSystem& ds);
DigitSystem digit_system_from_json(const Json& j);

Json to_json(const TreeVertex& v);
Json to_json(const CutCertificate& cert);
CutCertificate cut_certificate_from_json(const Json& j);

Json to_json(const UncutPath& path);
UncutPath uncut_path_from_json(const Json& j);

Json to_json(const CollisionWitness& witness);
CollisionWitness collision_witness_from_json(const Json& j);

Json to_json(const FunctionSystem& fs);
FunctionSystem function_system_from_json(const Json& j);

Json to_json(const SemigroupWord& word);
Json to_json(const RelationCertificate& cert);
RelationCertificate relation_certificate_from_json(const Json& j);

Json to_json(const DensityReport& report);

}  // namespace unifree
