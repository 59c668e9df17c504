#pragma once

#include "christoffel/residue.hpp"

#include <vector>

namespace christoffel {

/// Row-style Hermite normal form: pivots positive, entries above each pivot
/// reduced into [0, pivot). Zero rows are dropped; rank is the row count of
/// the returned matrix.
IMat hermite_normal_form(IMat rows);

/// Exact determinant (Bareiss fraction-free elimination).
Int determinant(IMat m);

/// Finite-index subgroup of Z^d in canonical HNF basis form, with coset
/// reduction and enumeration of the fundamental-domain representatives.
class KernelLattice {
public:
    /// Builds the lattice spanned by the given rows; they must have full
    /// column rank (finite index).
    static KernelLattice from_rows(const IMat& rows);

    Index dim() const { return basis_.cols(); }
    const IMat& basis() const { return basis_; }
    Int index() const { return index_; }

    /// Canonical representative of x modulo the lattice: each coordinate i
    /// lands in [0, basis(i,i)).
    IVec reduce(IVec x) const;

    bool contains(const IVec& x) const { return reduce(x).isZero(); }

    /// Position of a reduced representative in the deterministic coset order
    /// (mixed-radix counter over the HNF diagonal, last coordinate fastest).
    Int rep_ordinal(const IVec& reduced) const;

    std::vector<IVec> coset_representatives() const;

private:
    IMat basis_;
    Int index_{0};
};

inline bool lattices_equal(const KernelLattice& k1, const KernelLattice& k2) {
    return k1.dim() == k2.dim() && k1.basis() == k2.basis();
}

/// Kernel of the residue map of nd: all x with a.dot(x) == 0 mod omega.
/// Index equals omega.
KernelLattice kernel_basis(const NormalData& nd);

/// Closed-form generators of the standard-width kernel in dimension 3:
/// (a3,0,-a1), (0,a3,-a2), (a2,-a1,0), (1,1,1).
IMat kernel_basis_d3(const IVec& a);

/// Index of the subgroup spanned by the rows: gcd of all maximal minors.
/// Throws on rank-deficient input.
Int subgroup_index(const IMat& rows);

/// Generators of the projected kernel in the rank-2 lattice spanned by the
/// projections h1, h2 of the first two unit vectors (d == 3, standard width):
/// coefficient rows on (h1, h2) after substituting h3 = -h1 - h2.
IMat kernel_basis_projected(const IVec& a);

}  // namespace christoffel
