#pragma once

#include <json.hpp>

#include "wavesym/catalog.hpp"

namespace wavesym {

using json = nlohmann::ordered_json;

json to_json(const ZeroResult& z);
json to_json(const VectorField& q);
json to_json(const ClassMember& th);
json to_json(const PointMap& m);
json to_json(const SymmetryVerdict& v);
json to_json(const ConditionReport& r);
json to_json(const AlgebraInvariants& inv);
json to_json(const CheckRecord& r);
json to_json(const CatalogSummary& s);
json to_json(const Catalog& cat);

}  // namespace wavesym
