#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcent/pcmap.hpp"

namespace pcent {

struct CatalogEntry {
    std::string name;
    std::string source;                  // map-definition text
    PcMap map;
    std::optional<double> known_entropy;
    std::optional<double> entropy_lower_bound;
    std::string provenance;
};

/// Names of the built-in maps, in listing order.
std::vector<std::string> catalog_names();

/// Throws std::out_of_range listing the available names.
CatalogEntry catalog_get(const std::string& name);

}  // namespace pcent
