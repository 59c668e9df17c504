#include "christoffel/residue.hpp"

#include <algorithm>

namespace christoffel {

NormalData::NormalData(IVec a, std::optional<Int> omega) : a_(std::move(a)) {
    if (a_.size() < 2) throw std::invalid_argument("normal vector needs dimension >= 2");
    for (Index i = 0; i < a_.size(); ++i) {
        if (a_[i] <= 0) throw std::invalid_argument("normal vector entries must be positive");
        s_ = checked_add(s_, a_[i]);
    }
    if (gcd_all(a_) != 1) throw std::invalid_argument("normal vector entries must be coprime");
    omega_ = omega.value_or(s_);
    if (omega_ <= 0) throw std::invalid_argument("width must be positive");
    if (s_ % omega_ != 0) throw std::invalid_argument("width must divide the entry sum");
    Int ratio = s_ / omega_;
    if (ratio >= dim())
        throw std::invalid_argument("sum/width ratio must be smaller than the dimension");
    if (omega_ < s_) {
        for (Index i = 0; i < a_.size(); ++i)
            if (a_[i] >= omega_)
                throw std::invalid_argument("entries must stay below the width when width < sum");
    }
}

Int residue(const NormalData& nd, const IVec& x) {
    if (x.size() != nd.dim()) throw std::invalid_argument("dimension mismatch");
    Int w = nd.omega();
    Int acc = 0;
    for (Index i = 0; i < x.size(); ++i) {
        Int xi = floor_mod(x[i], w);
        acc = floor_mod(checked_add(acc, checked_mul(nd.a(i), xi)), w);
    }
    return acc;
}

bool edge_in_graph(const NormalData& nd, const Edge& e) {
    if (e.dir < 0 || e.dir >= nd.dim()) throw std::invalid_argument("edge direction out of range");
    return residue(nd, e.tail) <= nd.omega() - nd.a(e.dir) - 1;
}

std::vector<Edge> sigma_path_edges(const SigmaPath& path) {
    Index d = path.start.size();
    if (static_cast<Index>(path.perm.size()) != d)
        throw std::invalid_argument("permutation size must match the dimension");
    std::vector<bool> seen(d, false);
    for (Index p : path.perm) {
        if (p < 0 || p >= d || seen[p]) throw std::invalid_argument("invalid permutation");
        seen[p] = true;
    }
    std::vector<Edge> edges;
    edges.reserve(d);
    IVec u = path.start;
    for (Index k = 0; k < d; ++k) {
        edges.push_back(Edge{u, path.perm[k]});
        u[path.perm[k]] += 1;
    }
    return edges;
}

Index missing_edge(const NormalData& nd, const SigmaPath& path) {
    if (!nd.standard()) throw std::invalid_argument("sigma-path analysis needs width == sum");
    // The partial sums split [0, s) into d half-open arcs, exactly one of
    // which wraps past 0; that position is the missing edge.
    Int r = residue(nd, path.start);
    auto edges = sigma_path_edges(path);
    for (Index k = 0; k < nd.dim(); ++k) {
        Int ai = nd.a(edges[k].dir);
        if (r >= nd.s() - ai) return k;
        r += ai;
    }
    throw std::logic_error("sigma-path with no missing edge");
}

std::vector<Edge> hypercube_edges(const IVec& base, const std::vector<Index>& dirs) {
    if (dirs.empty()) throw std::invalid_argument("hypercube needs at least one direction");
    Index d = base.size();
    std::vector<bool> seen(d, false);
    for (Index p : dirs) {
        if (p < 0 || p >= d || seen[p]) throw std::invalid_argument("invalid direction set");
        seen[p] = true;
    }
    std::size_t n = dirs.size();
    std::vector<Edge> edges;
    edges.reserve(n << (n - 1));
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        IVec tail = base;
        for (std::size_t j = 0; j < n; ++j)
            if (mask & (std::size_t{1} << j)) tail[dirs[j]] += 1;
        for (std::size_t j = 0; j < n; ++j)
            if (!(mask & (std::size_t{1} << j))) edges.push_back(Edge{tail, dirs[j]});
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

IVec solve_unit_translation(const NormalData& nd) {
    Index d = nd.dim();
    IVec c = IVec::Zero(d);
    Int g = nd.a(0);
    c[0] = 1;
    for (Index k = 1; k < d && g != 1; ++k) {
        ExtGcd e = ext_gcd(g, nd.a(k));
        for (Index j = 0; j < k; ++j) c[j] = checked_mul(c[j], e.x);
        c[k] = e.y;
        g = e.g;
    }
    // g == 1 by coprimality; reduce coordinates to least absolute value mod
    // omega, ties to the positive representative.
    Int w = nd.omega();
    for (Index i = 0; i < d; ++i) {
        Int r = floor_mod(c[i], w);
        c[i] = (2 * r > w) ? r - w : r;
    }
    if (residue(nd, c) != 1) throw std::logic_error("unit translation solve failed");
    return c;
}

}  // namespace christoffel
