#include "christoffel/projection.hpp"

#include <algorithm>
#include <numeric>

namespace christoffel {

RVec project_pi(const RVec& x) {
    Rational mean = Rational(0);
    for (Index i = 0; i < x.size(); ++i) mean += x[i];
    mean = mean / Rational(static_cast<Int>(x.size()));
    RVec out(x.size());
    for (Index i = 0; i < x.size(); ++i) out[i] = x[i] - mean;
    return out;
}

std::vector<QuotientEdge> quotient_graph(const NormalData& nd) {
    std::vector<QuotientEdge> edges;
    for (Int k = 0; k < nd.omega(); ++k)
        for (Index i = 0; i < nd.dim(); ++i)
            if (k + nd.a(i) < nd.omega()) edges.push_back(QuotientEdge{k, k + nd.a(i), i});
    return edges;
}

TileCoordinates tile_coordinates(const Tile& tile, const RVec& x) {
    const Index d = tile.base.size();
    if (x.size() != d) throw std::invalid_argument("dimension mismatch");
    TileCoordinates tc;
    tc.mu = x[tile.omitted] - Rational(tile.base[tile.omitted]);
    tc.lambda = RVec(d);
    for (Index j = 0; j < d; ++j)
        tc.lambda[j] = (j == tile.omitted) ? Rational(0) : x[j] - Rational(tile.base[j]) - tc.mu;
    return tc;
}

bool tile_contains(const Tile& tile, const RVec& x) {
    TileCoordinates tc = tile_coordinates(tile, x);
    for (Index j = 0; j < tc.lambda.size(); ++j) {
        if (j == tile.omitted) continue;
        if (tc.lambda[j] < Rational(0) || tc.lambda[j] > Rational(1)) return false;
    }
    return true;
}

Tile locate_tile(const NormalData& nd, const RVec& x) {
    if (!nd.standard()) throw std::invalid_argument("tiling needs width == sum");
    const Index d = nd.dim();
    if (x.size() != d) throw std::invalid_argument("dimension mismatch");
    IVec u(d);
    RVec f(d);
    for (Index i = 0; i < d; ++i) {
        u[i] = floor(x[i]);
        f[i] = frac(x[i]);
    }
    for (Index i = 0; i < d; ++i)
        for (Index j = i + 1; j < d; ++j)
            if (f[i] == f[j])
                throw std::invalid_argument(
                    "tie in fractional parts: point lies on a tile boundary");
    std::vector<Index> sigma(d);
    std::iota(sigma.begin(), sigma.end(), Index{0});
    std::sort(sigma.begin(), sigma.end(), [&](Index i, Index j) { return f[j] < f[i]; });
    Index k = missing_edge(nd, SigmaPath{u, sigma});
    IVec base = u;
    for (Index j = 0; j <= k; ++j) base[sigma[j]] += 1;
    return Tile{base, sigma[k]};
}

namespace {

using Vec2 = Eigen::Matrix<Int, 2, 1>;

// Spanning coefficients of c on the side pair, exact.
std::pair<Rational, Rational> side_coordinates(const Eigen::Matrix<Int, 2, 2>& sides,
                                               const Vec2& c) {
    Int det = checked_sub(checked_mul(sides(0, 0), sides(1, 1)), checked_mul(sides(0, 1), sides(1, 0)));
    Rational alpha(checked_sub(checked_mul(c[0], sides(1, 1)), checked_mul(c[1], sides(1, 0))), det);
    Rational beta(checked_sub(checked_mul(sides(0, 0), c[1]), checked_mul(sides(0, 1), c[0])), det);
    return {alpha, beta};
}

bool in_half_open_domain(const Eigen::Matrix<Int, 2, 2>& sides, const Vec2& c) {
    auto [alpha, beta] = side_coordinates(sides, c);
    return Rational(0) <= alpha && alpha < Rational(1) && Rational(0) <= beta &&
           beta < Rational(1);
}

}  // namespace

ChristoffelParallelogram christoffel_parallelogram(const NormalData& nd) {
    if (nd.dim() != 3) throw std::invalid_argument("parallelogram needs d == 3");
    if (!nd.standard()) throw std::invalid_argument("parallelogram needs width == sum");
    ChristoffelParallelogram p;
    p.a = nd.a();
    p.s = nd.s();
    IMat h = hermite_normal_form(kernel_basis_projected(nd.a()));
    if (h.rows() != 2) throw std::logic_error("projected kernel must have rank 2");
    p.sides = h;

    Vec2 corners[4] = {Vec2::Zero(), h.row(0).transpose(), h.row(1).transpose(),
                       (h.row(0) + h.row(1)).transpose()};
    Vec2 lo = corners[0], hi = corners[0];
    for (const Vec2& c : corners) {
        lo = lo.cwiseMin(c);
        hi = hi.cwiseMax(c);
    }
    for (Int c0 = lo[0]; c0 <= hi[0]; ++c0) {
        for (Int c1 = lo[1]; c1 <= hi[1]; ++c1) {
            Vec2 c(c0, c1);
            if (!in_half_open_domain(p.sides, c)) continue;
            Int label = floor_mod(checked_add(checked_mul(c0, nd.a(0)), checked_mul(c1, nd.a(1))),
                                  nd.s());
            p.points.emplace_back(c, label);
        }
    }
    std::sort(p.points.begin(), p.points.end(), [](const auto& x, const auto& y) {
        return std::pair(x.first[0], x.first[1]) < std::pair(y.first[0], y.first[1]);
    });

    const Vec2 steps[3] = {Vec2(1, 0), Vec2(0, 1), Vec2(-1, -1)};
    for (const auto& [c, label] : p.points) {
        for (Index i = 0; i < 3; ++i) {
            if (label > nd.s() - nd.a(i) - 1) continue;  // not an edge of the graph
            Vec2 head = c + steps[i];
            if (!in_half_open_domain(p.sides, head)) continue;
            ParallelogramEdge e{c, i};
            if (label == 0)
                p.legs.push_back(e);
            else
                p.body.push_back(e);
        }
    }
    return p;
}

bool parallelogram_body_symmetric(const ChristoffelParallelogram& p) {
    // Reflection at the center is the reversal modulo the side lattice: the
    // tail label lambda of a direction-i body edge maps to s - lambda - a_i.
    for (const auto& [c, label] : p.points) {
        for (Index i = 0; i < 3; ++i) {
            bool body = label >= 1 && label <= p.s - p.a[i] - 1;
            Int reflected = floor_mod(p.s - label - p.a[i], p.s);
            bool reflected_body = reflected >= 1 && reflected <= p.s - p.a[i] - 1;
            if (body != reflected_body) return false;
        }
    }
    return true;
}

bool parallelogram_flip_is_translate(const ChristoffelParallelogram& p) {
    for (const auto& [c, label] : p.points) {
        for (Index i = 0; i < 3; ++i) {
            bool member = label <= p.s - p.a[i] - 1;
            bool leg = (label == 0) || (label == p.s - p.a[i]);
            bool translated = floor_mod(label - 1, p.s) <= p.s - p.a[i] - 1;
            if ((member != leg) != translated) return false;
        }
    }
    return true;
}

}  // namespace christoffel
