#pragma once

#include "christoffel/edges.hpp"

#include "json.hpp"

#include <string>

namespace christoffel {

/// Serialized graphs carry the normal vector, the width, the edges (tails
/// plus 1-based directions) and the enumeration window.
nlohmann::json edge_set_to_json(const NormalData& nd, const EdgeSet& set);

struct GraphImport {
    NormalData nd;
    EdgeSet edges;
};

GraphImport edge_set_from_json(const nlohmann::json& j);

std::string edge_set_to_dot(const EdgeSet& set, const KernelLattice& legs_of,
                            const std::string& body_color = "blue",
                            const std::string& leg_color = "red");

}  // namespace christoffel
