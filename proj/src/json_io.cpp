#include "christoffel/json_io.hpp"

#include <sstream>

namespace christoffel {

namespace {

nlohmann::json vec_to_json(const IVec& v) {
    nlohmann::json a = nlohmann::json::array();
    for (Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
    return a;
}

IVec vec_from_json(const nlohmann::json& j) {
    IVec v(static_cast<Index>(j.size()));
    Index i = 0;
    for (const auto& x : j) v[i++] = x.get<Int>();
    return v;
}

std::string vertex_name(const IVec& v) {
    std::ostringstream os;
    for (Index i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    return os.str();
}

}  // namespace

nlohmann::json edge_set_to_json(const NormalData& nd, const EdgeSet& set) {
    nlohmann::json j;
    j["a"] = vec_to_json(nd.a());
    j["omega"] = nd.omega();
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : set.edges)
        edges.push_back({{"tail", vec_to_json(e.tail)}, {"dir", e.dir + 1}});
    j["edges"] = edges;
    if (set.window) j["window"] = {{"lo", vec_to_json(set.window->lo)},
                                   {"hi", vec_to_json(set.window->hi)}};
    return j;
}

GraphImport edge_set_from_json(const nlohmann::json& j) {
    NormalData nd(vec_from_json(j.at("a")), j.at("omega").get<Int>());
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        Index dir = e.at("dir").get<Index>() - 1;
        if (dir < 0 || dir >= nd.dim()) throw std::invalid_argument("edge direction out of range");
        edges.push_back(Edge{vec_from_json(e.at("tail")), dir});
    }
    std::optional<Box> window;
    if (j.contains("window"))
        window = Box{vec_from_json(j.at("window").at("lo")), vec_from_json(j.at("window").at("hi"))};
    return GraphImport{nd, EdgeSet::from_edges(std::move(edges), window, std::nullopt)};
}

std::string edge_set_to_dot(const EdgeSet& set, const KernelLattice& legs_of,
                            const std::string& body_color, const std::string& leg_color) {
    std::ostringstream os;
    os << "digraph christoffel {\n";
    os << "  node [shape=point];\n";
    for (const Edge& e : set.edges) {
        bool leg = legs_of.contains(e.tail) || legs_of.contains(e.head());
        os << "  \"" << vertex_name(e.tail) << "\" -> \"" << vertex_name(e.head()) << "\" [color="
           << (leg ? leg_color : body_color) << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace christoffel
