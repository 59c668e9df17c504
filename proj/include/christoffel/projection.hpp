#pragma once

#include "christoffel/lattice.hpp"
#include "christoffel/rational.hpp"
#include "christoffel/residue.hpp"

#include <vector>

namespace christoffel {

/// Orthogonal projection onto the diagonal hyperplane of equation
/// sum(x) == 0, in exact rational arithmetic.
RVec project_pi(const RVec& x);

/// Directed edge of the quotient graph over Z/omega: from residue k to
/// k + a_i, labeled by the direction.
struct QuotientEdge {
    Int from;
    Int to;
    Index dir;

    friend bool operator==(const QuotientEdge& a, const QuotientEdge& b) {
        return a.from == b.from && a.to == b.to && a.dir == b.dir;
    }
};

/// The residue image of the graph: edges (k, k+a_i) for k + a_i < omega.
/// Exactly sum(omega - a_i) edges.
std::vector<QuotientEdge> quotient_graph(const NormalData& nd);

/// Projected (d-1)-parallelotope of the tiling: based at the projection of
/// base, spanned by the unit directions other than the omitted one.
struct Tile {
    IVec base;
    Index omitted;

    friend bool operator==(const Tile& a, const Tile& b) {
        return a.omitted == b.omitted && a.base == b.base;
    }
};

/// Exact coordinates of a point against a tile: x - base decomposes as the
/// diagonal offset mu plus span coefficients lambda_j on the directions
/// j != omitted (lambda[omitted] is fixed to 0).
struct TileCoordinates {
    Rational mu;
    RVec lambda;
};

TileCoordinates tile_coordinates(const Tile& tile, const RVec& x);

/// Closed containment of the projection of x in the tile: every spanning
/// coefficient lies in [0, 1].
bool tile_contains(const Tile& tile, const RVec& x);

/// Locates the tile of the projection of x (standard width only). The
/// fractional parts of x must be pairwise distinct; a tie means the point
/// sits on a tile boundary and is reported as an error.
Tile locate_tile(const NormalData& nd, const RVec& x);

/// Edge of the projected graph inside a parallelogram, in (h1,h2)-coordinates
/// of the rank-2 projected lattice. Directions 0,1,2 step by (1,0), (0,1)
/// and (-1,-1).
struct ParallelogramEdge {
    Eigen::Matrix<Int, 2, 1> tail;
    Index dir;
};

/// Fundamental domain of the projected kernel with vertex at the origin
/// (d == 3, standard width): sides are the canonical HNF basis of the
/// projected kernel, the s lattice points of the half-open domain carry
/// their residues, and the edges whose endpoints both lie in the domain are
/// split into body and legs (label-0 incident).
struct ChristoffelParallelogram {
    IVec a;
    Int s{0};
    Eigen::Matrix<Int, 2, 2> sides;  // rows: the two side vectors on (h1, h2)
    std::vector<std::pair<Eigen::Matrix<Int, 2, 1>, Int>> points;  // (coords, label)
    std::vector<ParallelogramEdge> body;
    std::vector<ParallelogramEdge> legs;
};

ChristoffelParallelogram christoffel_parallelogram(const NormalData& nd);

/// Central symmetry of the body: reflection at the parallelogram center maps
/// body edge classes onto body edge classes.
bool parallelogram_body_symmetric(const ChristoffelParallelogram& p);

/// The flip of the parallelogram reappears as its translate by the canonical
/// unit-residue translation, compared class-wise on the torus.
bool parallelogram_flip_is_translate(const ChristoffelParallelogram& p);

}  // namespace christoffel
