#ifndef VVJACK_JSON_IO_HPP
#define VVJACK_JSON_IO_HPP

#include <json.hpp>

#include "vvjack/cherednik.hpp"

namespace vvjack {

using Json = nlohmann::ordered_json;

Json partition_json(const Partition& tau);
Json composition_json(const Composition& a);
Json rsyt_json(const Rsyt& t);  // array of row arrays

// {tableau-id: scalar-string}, ids in canonical tableau order
Json module_vector_json(const ShapeData& sd, const ModuleVector& v);
ModuleVector module_vector_parse(const ShapeData& sd, const Json& j);

// [{"alpha": [...], "coeff": {...}}, ...] degree-sorted then lexicographic
Json vpoly_json(const ShapeData& sd, const VPoly& f);
VPoly vpoly_parse(const ShapeData& sd, const Json& j);

}  // namespace vvjack

#endif
