#pragma once

#include <json.hpp>

#include "lrcarton/carton.hpp"

namespace lrcarton {

// Partitions serialize as arrays of parts, tableaux as
// {"shape": {"outer": [...], "inner": [...]}, "entries": [[row,col,label], ...]},
// cartons as {"geometry": ..., "faces": [...]} with each face carrying its
// printed-orientation grid and corner names.
nlohmann::json partition_to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

nlohmann::json tableau_to_json(const StandardTableau& t);
StandardTableau tableau_from_json(const nlohmann::json& j);

nlohmann::json carton_to_json(const Carton& carton);
Carton carton_from_json(const nlohmann::json& j);

}  // namespace lrcarton
