#pragma once

#include "christoffel/rational.hpp"
#include "christoffel/residue.hpp"

namespace christoffel {

/// Facet of a unit hypercube: the corner point plus the unit square spanned
/// by every direction except the normal one.
struct Facet {
    IVec corner;
    Index normal_dir;
};

/// Membership of a real point in the stepped surface of the standard-width
/// graph: some coordinate is an integer, the floor sum a.dot(floor(x)) is
/// nonnegative, and the ceiling sum a.dot(ceil(x)) stays below s.
bool in_surface(const NormalData& nd, const RVec& x);

/// Integer specialization: 0 <= a.dot(x) < s.
bool integer_in_surface(const NormalData& nd, const IVec& x);

struct SurfaceProjection {
    RVec y;     // the unique surface point on the diagonal line through x
    Rational t; // x == y + t * (1,...,1)
};

/// Projects x onto the stepped surface parallel to (1,...,1) by exact
/// rational descent: an integral diagonal shift puts the floor sum into
/// [0, s), then fractional shifts decrease the ceiling sum until the point
/// lands on the surface.
SurfaceProjection project_f(const NormalData& nd, const RVec& x);

/// The facet lies on the surface iff a.dot(corner) >= 0 and the ceiling sum
/// over its far corner stays below s.
bool facet_in_surface(const NormalData& nd, const Facet& f);

/// For a surface point M, whether the whole unit segment from M in the given
/// direction stays on the surface (otherwise only M itself lies on it).
/// Agrees with edge membership in the graph.
bool segment_in_surface(const NormalData& nd, const IVec& m, Index dir);

}  // namespace christoffel
