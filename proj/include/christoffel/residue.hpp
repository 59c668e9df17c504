#pragma once

#include "christoffel/arith.hpp"

#include <optional>
#include <vector>

namespace christoffel {

/// Normal vector data of a Christoffel graph: coprime positive entries a,
/// their sum s, and a width omega dividing s (omega == s is the standard
/// graph; otherwise s/omega must be a positive integer below the dimension
/// and every entry must stay below omega). The induced residue map sends
/// x to a.dot(x) mod omega.
class NormalData {
public:
    explicit NormalData(IVec a, std::optional<Int> omega = std::nullopt);

    Index dim() const { return a_.size(); }
    const IVec& a() const { return a_; }
    Int a(Index i) const { return a_[i]; }
    Int s() const { return s_; }
    Int omega() const { return omega_; }
    bool standard() const { return omega_ == s_; }

private:
    IVec a_;
    Int s_{0};
    Int omega_{0};
};

inline NormalData make_normal(IVec a, std::optional<Int> omega = std::nullopt) {
    return NormalData(std::move(a), omega);
}

/// Directed unit edge of the hypercubic lattice, stored as tail plus
/// direction so the head is always tail + e_dir.
struct Edge {
    IVec tail;
    Index dir{0};

    IVec head() const {
        IVec h = tail;
        h[dir] += 1;
        return h;
    }

    friend bool operator==(const Edge& a, const Edge& b) {
        return a.dir == b.dir && a.tail == b.tail;
    }
    friend bool operator<(const Edge& a, const Edge& b) {
        if (a.tail != b.tail) return lex_less(a.tail, b.tail);
        return a.dir < b.dir;
    }
};

/// Lattice path of d unit steps from start to start + (1,...,1), one step per
/// direction, in the order given by the permutation.
struct SigmaPath {
    IVec start;
    std::vector<Index> perm;  // permutation of 0..d-1
};

std::vector<Edge> sigma_path_edges(const SigmaPath& path);

/// a.dot(x) reduced into {0,...,omega-1}.
Int residue(const NormalData& nd, const IVec& x);

/// Membership of an edge in the graph: true iff the residue map increases
/// along it, equivalently residue(tail) <= omega - a_i - 1.
bool edge_in_graph(const NormalData& nd, const Edge& e);

/// Position (0-based) of the unique edge of a sigma-path that is not in the
/// graph. Requires the standard width omega == s.
Index missing_edge(const NormalData& nd, const SigmaPath& path);

/// Covering relations of the Boolean lattice over the directions in dirs,
/// based at the given vertex: |dirs| * 2^(|dirs|-1) edges.
std::vector<Edge> hypercube_edges(const IVec& base, const std::vector<Index>& dirs);

/// Canonical integer vector t with residue(t) == 1: Bezout coefficients of
/// the entries, coordinates reduced modulo omega to least absolute value
/// (ties resolved to the positive representative).
IVec solve_unit_translation(const NormalData& nd);

}  // namespace christoffel
