#include "christoffel/edges.hpp"

#include <algorithm>

namespace christoffel {

void for_each_point(const Box& box, const std::function<void(const IVec&)>& fn) {
    const Index d = box.lo.size();
    if (box.hi.size() != d) throw std::invalid_argument("box bounds dimension mismatch");
    for (Index i = 0; i < d; ++i)
        if (box.lo[i] > box.hi[i]) throw std::invalid_argument("empty box");
    IVec p = box.lo;
    while (true) {
        fn(p);
        Index i = d - 1;
        while (i >= 0 && p[i] == box.hi[i]) {
            p[i] = box.lo[i];
            --i;
        }
        if (i < 0) return;
        p[i] += 1;
    }
}

EdgeSet EdgeSet::from_edges(std::vector<Edge> edges, std::optional<Box> window,
                            std::optional<KernelLattice> kernel) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return EdgeSet{std::move(edges), std::move(window), std::move(kernel)};
}

bool EdgeSet::contains(const Edge& e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

Index EdgeSet::count_in_direction(Index dir) const {
    return static_cast<Index>(
        std::count_if(edges.begin(), edges.end(), [&](const Edge& e) { return e.dir == dir; }));
}

bool LegSet::is_leg(const Edge& e) const {
    return kernel.contains(e.tail) || kernel.contains(e.head());
}

std::vector<Edge> LegSet::materialize() const {
    std::vector<Edge> legs;
    for_each_point(window, [&](const IVec& u) {
        for (Index i = 0; i < kernel.dim(); ++i) {
            Edge e{u, i};
            if (is_leg(e)) legs.push_back(std::move(e));
        }
    });
    return legs;
}

EdgeSet window_edges(const NormalData& nd, const Box& box) {
    std::vector<Edge> edges;
    for_each_point(box, [&](const IVec& u) {
        for (Index i = 0; i < nd.dim(); ++i) {
            Edge e{u, i};
            if (edge_in_graph(nd, e)) edges.push_back(std::move(e));
        }
    });
    return EdgeSet::from_edges(std::move(edges), box, kernel_basis(nd));
}

EdgeSet flip(const EdgeSet& x, const LegSet& q) {
    if (!x.window || !(*x.window == q.window))
        throw std::invalid_argument("flip needs matching windows");
    std::vector<Edge> out;
    for (const Edge& e : x.edges)
        if (!q.is_leg(e)) out.push_back(e);
    for (Edge& e : q.materialize())
        if (!x.contains(e)) out.push_back(std::move(e));
    return EdgeSet::from_edges(std::move(out), x.window, x.kernel);
}

EdgeSet reverse(const EdgeSet& x) {
    std::vector<Edge> out;
    out.reserve(x.edges.size());
    for (const Edge& e : x.edges) out.push_back(Edge{-e.head(), e.dir});
    std::optional<Box> window;
    if (x.window) window = Box{-x.window->hi - IVec::Ones(x.window->hi.size()), -x.window->lo};
    return EdgeSet::from_edges(std::move(out), std::move(window), x.kernel);
}

EdgeSet translate(const EdgeSet& x, const IVec& t) {
    std::vector<Edge> out;
    out.reserve(x.edges.size());
    for (const Edge& e : x.edges) out.push_back(Edge{e.tail + t, e.dir});
    std::optional<Box> window;
    if (x.window) window = Box{x.window->lo + t, x.window->hi + t};
    return EdgeSet::from_edges(std::move(out), std::move(window), x.kernel);
}

PeriodicPattern::PeriodicPattern(KernelLattice kernel, Index dim)
    : kernel_(std::move(kernel)), dim_(dim) {
    tab_.assign(static_cast<std::size_t>(kernel_.index()) * dim_, false);
}

bool PeriodicPattern::member(const IVec& u, Index dir) const {
    Int ord = kernel_.rep_ordinal(kernel_.reduce(u));
    return tab_[static_cast<std::size_t>(ord) * dim_ + dir];
}

void PeriodicPattern::set(const IVec& u, Index dir, bool value) {
    Int ord = kernel_.rep_ordinal(kernel_.reduce(u));
    tab_[static_cast<std::size_t>(ord) * dim_ + dir] = value;
}

bool PeriodicPattern::leg(const IVec& u, Index dir) const {
    IVec head = u;
    head[dir] += 1;
    return kernel_.contains(u) || kernel_.contains(head);
}

PeriodicPattern PeriodicPattern::flipped() const {
    PeriodicPattern out(kernel_, dim_);
    for (const IVec& u : kernel_.coset_representatives())
        for (Index i = 0; i < dim_; ++i) out.set(u, i, member(u, i) != leg(u, i));
    return out;
}

PeriodicPattern PeriodicPattern::translated(const IVec& t) const {
    PeriodicPattern out(kernel_, dim_);
    for (const IVec& u : kernel_.coset_representatives())
        for (Index i = 0; i < dim_; ++i) out.set(u, i, member(u - t, i));
    return out;
}

PeriodicPattern PeriodicPattern::reversed() const {
    PeriodicPattern out(kernel_, dim_);
    for (const IVec& u : kernel_.coset_representatives()) {
        for (Index i = 0; i < dim_; ++i) {
            IVec v = -u;
            v[i] -= 1;
            out.set(u, i, member(v, i));
        }
    }
    return out;
}

EdgeSet PeriodicPattern::to_edge_set() const {
    std::vector<Edge> edges;
    for (const IVec& u : kernel_.coset_representatives())
        for (Index i = 0; i < dim_; ++i)
            if (member(u, i)) edges.push_back(Edge{u, i});
    return EdgeSet::from_edges(std::move(edges), std::nullopt, kernel_);
}

PeriodicPattern graph_pattern(const NormalData& nd) {
    PeriodicPattern pat(kernel_basis(nd), nd.dim());
    for (const IVec& u : pat.kernel().coset_representatives())
        for (Index i = 0; i < nd.dim(); ++i) pat.set(u, i, edge_in_graph(nd, Edge{u, i}));
    return pat;
}

EdgeSet fundamental_domain_edges(const NormalData& nd) { return graph_pattern(nd).to_edge_set(); }

FlipTranslateCheck verify_flip_translate(const NormalData& nd) {
    return verify_flip_translate(nd, solve_unit_translation(nd));
}

FlipTranslateCheck verify_flip_translate(const NormalData& nd, const IVec& t) {
    PeriodicPattern h = graph_pattern(nd);
    return FlipTranslateCheck{t, h.flipped() == h.translated(t)};
}

bool verify_reversal_translate(const NormalData& nd) {
    PeriodicPattern h = graph_pattern(nd);
    return h.reversed() == h.translated(solve_unit_translation(nd));
}

bool verify_body_symmetric(const NormalData& nd) {
    PeriodicPattern h = graph_pattern(nd);
    const KernelLattice& k = h.kernel();
    for (const IVec& u : k.coset_representatives()) {
        for (Index i = 0; i < nd.dim(); ++i) {
            IVec head = u;
            head[i] += 1;
            bool is_leg = k.contains(u) || k.contains(head);
            bool body = h.member(u, i) && !is_leg;
            IVec rev_tail = -head;
            bool rev_body = h.member(rev_tail, i) && !is_leg;  // legs are reversal-stable
            if (body != rev_body) return false;
        }
    }
    return true;
}

}  // namespace christoffel
