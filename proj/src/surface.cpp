#include "christoffel/surface.hpp"

#include <algorithm>

namespace christoffel {

namespace {

void require_standard(const NormalData& nd) {
    if (!nd.standard()) throw std::invalid_argument("surface geometry needs width == sum");
}

Int checked_dot(const IVec& a, const IVec& x) {
    Int acc = 0;
    for (Index i = 0; i < a.size(); ++i) acc = checked_add(acc, checked_mul(a[i], x[i]));
    return acc;
}

Int floor_sum(const NormalData& nd, const RVec& x) {
    Int acc = 0;
    for (Index i = 0; i < x.size(); ++i) acc = checked_add(acc, checked_mul(nd.a(i), floor(x[i])));
    return acc;
}

Int ceil_sum(const NormalData& nd, const RVec& x) {
    Int acc = 0;
    for (Index i = 0; i < x.size(); ++i) acc = checked_add(acc, checked_mul(nd.a(i), ceil(x[i])));
    return acc;
}

}  // namespace

bool in_surface(const NormalData& nd, const RVec& x) {
    require_standard(nd);
    if (x.size() != nd.dim()) throw std::invalid_argument("dimension mismatch");
    bool integral_coord = false;
    for (Index i = 0; i < x.size(); ++i) integral_coord = integral_coord || x[i].is_integer();
    return integral_coord && floor_sum(nd, x) >= 0 && ceil_sum(nd, x) < nd.s();
}

bool integer_in_surface(const NormalData& nd, const IVec& x) {
    require_standard(nd);
    if (x.size() != nd.dim()) throw std::invalid_argument("dimension mismatch");
    Int v = checked_dot(nd.a(), x);
    return 0 <= v && v < nd.s();
}

SurfaceProjection project_f(const NormalData& nd, const RVec& x) {
    require_standard(nd);
    if (x.size() != nd.dim()) throw std::invalid_argument("dimension mismatch");
    const Index d = nd.dim();
    RVec y = x;
    Rational shift(0);
    auto slide = [&](const Rational& amount) {
        for (Index i = 0; i < d; ++i) y[i] -= amount;
        shift += amount;
    };
    // Integral diagonal shift placing the floor sum into [0, s).
    slide(Rational(floor_div(floor_sum(nd, y), nd.s())));
    while (true) {
        Rational eps = frac(y[0]);
        for (Index i = 1; i < d; ++i) eps = std::min(eps, frac(y[i]));
        if (Rational(0) < eps) slide(eps);  // some coordinate becomes integral
        if (ceil_sum(nd, y) < nd.s()) return SurfaceProjection{y, shift};
        bool all_integral = true;
        Rational next(0);
        for (Index i = 0; i < d; ++i) {
            Rational f = frac(y[i]);
            if (f == Rational(0)) continue;
            if (all_integral || f < next) next = f;
            all_integral = false;
        }
        slide(all_integral ? Rational(1) : next);
    }
}

bool facet_in_surface(const NormalData& nd, const Facet& f) {
    require_standard(nd);
    if (f.corner.size() != nd.dim()) throw std::invalid_argument("dimension mismatch");
    if (f.normal_dir < 0 || f.normal_dir >= nd.dim())
        throw std::invalid_argument("facet direction out of range");
    if (checked_dot(nd.a(), f.corner) < 0) return false;
    Int far = 0;
    for (Index j = 0; j < nd.dim(); ++j) {
        Int coord = (j == f.normal_dir) ? f.corner[j] : checked_add(f.corner[j], 1);
        far = checked_add(far, checked_mul(nd.a(j), coord));
    }
    return far < nd.s();
}

bool segment_in_surface(const NormalData& nd, const IVec& m, Index dir) {
    require_standard(nd);
    if (dir < 0 || dir >= nd.dim()) throw std::invalid_argument("direction out of range");
    if (!integer_in_surface(nd, m))
        throw std::invalid_argument("segment start must lie on the surface");
    return checked_add(checked_dot(nd.a(), m), nd.a(dir)) < nd.s();
}

}  // namespace christoffel
