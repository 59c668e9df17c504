#pragma once

#include "christoffel/lattice.hpp"
#include "christoffel/residue.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace christoffel {

/// Inclusive coordinate box.
struct Box {
    IVec lo;
    IVec hi;

    friend bool operator==(const Box& a, const Box& b) { return a.lo == b.lo && a.hi == b.hi; }
};

/// Runs fn for every lattice point of the box, in lexicographic order.
void for_each_point(const Box& box, const std::function<void(const IVec&)>& fn);

/// Finite set of directed unit edges, kept sorted and duplicate-free, with
/// the window it was enumerated over and an optional periodicity tag.
struct EdgeSet {
    std::vector<Edge> edges;
    std::optional<Box> window;
    std::optional<KernelLattice> kernel;

    static EdgeSet from_edges(std::vector<Edge> edges, std::optional<Box> window = std::nullopt,
                              std::optional<KernelLattice> kernel = std::nullopt);

    bool contains(const Edge& e) const;
    Index count_in_direction(Index dir) const;

    friend bool operator==(const EdgeSet& a, const EdgeSet& b) { return a.edges == b.edges; }
};

/// The edges incident to zero mod K, restricted to a window: tails u with
/// u in K or u + e_i in K.
struct LegSet {
    KernelLattice kernel;
    Box window;

    std::vector<Edge> materialize() const;
    bool is_leg(const Edge& e) const;
};

/// All graph edges with tail inside the box; tagged with the kernel lattice.
EdgeSet window_edges(const NormalData& nd, const Box& box);

/// Symmetric difference with the legs: present legs are removed, absent ones
/// inserted, the body is untouched. The windows must agree.
EdgeSet flip(const EdgeSet& x, const LegSet& q);

/// Reversal -X: edge (u, u+e_i) becomes (-u-e_i, -u).
EdgeSet reverse(const EdgeSet& x);

EdgeSet translate(const EdgeSet& x, const IVec& t);

/// K-periodic edge set stored as one membership bit per (coset, direction).
class PeriodicPattern {
public:
    PeriodicPattern(KernelLattice kernel, Index dim);

    const KernelLattice& kernel() const { return kernel_; }
    Index dim() const { return dim_; }

    bool member(const IVec& u, Index dir) const;
    void set(const IVec& u, Index dir, bool value);

    PeriodicPattern flipped() const;
    PeriodicPattern translated(const IVec& t) const;
    PeriodicPattern reversed() const;

    /// Materializes the pattern over the coset-representative domain.
    EdgeSet to_edge_set() const;

    friend bool operator==(const PeriodicPattern& a, const PeriodicPattern& b) {
        return lattices_equal(a.kernel_, b.kernel_) && a.tab_ == b.tab_;
    }

private:
    bool leg(const IVec& u, Index dir) const;

    KernelLattice kernel_;
    Index dim_;
    std::vector<bool> tab_;
};

/// The graph of nd as a K-periodic pattern over its kernel.
PeriodicPattern graph_pattern(const NormalData& nd);

/// The graph restricted to one full coset-representative domain.
EdgeSet fundamental_domain_edges(const NormalData& nd);

struct FlipTranslateCheck {
    IVec t;
    bool ok{false};
};

/// Checks flip(H) == H + t exhaustively over a fundamental domain; t defaults
/// to the canonical unit-residue translation.
FlipTranslateCheck verify_flip_translate(const NormalData& nd);
FlipTranslateCheck verify_flip_translate(const NormalData& nd, const IVec& t);

/// Checks -H == H + t exhaustively over a fundamental domain, with t the
/// canonical unit-residue translation.
bool verify_reversal_translate(const NormalData& nd);

/// Checks -(H minus legs) == H minus legs over a fundamental domain.
bool verify_body_symmetric(const NormalData& nd);

}  // namespace christoffel
