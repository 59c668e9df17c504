#include "christoffel/pirillo.hpp"

namespace christoffel {

ConverseAnalysis discover_b(const KernelLattice& k, const IVec& t) {
    const Index d = k.dim();
    if (t.size() != d) throw std::invalid_argument("dimension mismatch");
    if (!k.contains(IVec::Ones(d)))
        throw std::invalid_argument("lattice must contain the all-ones vector");
    if (k.contains(t)) throw std::invalid_argument("translation lies in the lattice");

    ConverseAnalysis out;
    out.kernel = k;
    out.t = t;

    // Order of t in Z^d/K.
    IVec acc = k.reduce(t);
    Int omega = 1;
    while (!acc.isZero()) {
        acc = k.reduce(acc + t);
        ++omega;
    }
    out.omega = omega;

    out.b = IVec::Zero(d);
    for (Index i = 0; i < d; ++i) {
        IVec orbit = k.reduce(IVec::Unit(d, i));
        Int b = 0;
        for (Int step = 1; step < omega; ++step) {
            orbit = k.reduce(orbit + t);
            if (orbit.isZero()) {
                b = step;
                break;
            }
        }
        if (b == 0) {
            out.consistent = false;
            out.reason = "no exponent for e_" + std::to_string(i + 1) +
                         ": the translation does not generate the quotient";
            return out;
        }
        out.b[i] = b;
    }
    if (omega != k.index()) {
        out.consistent = false;
        out.reason = "order of the translation is below the lattice index";
        return out;
    }

    out.a = IVec::Constant(d, omega) - out.b;
    Int sa = out.a.sum();
    Int sb = out.b.sum();
    if (sa % omega != 0 || sb % omega != 0)
        throw std::logic_error("exponent sums are not multiples of the order");
    out.q = sa / omega;
    out.l = sb / omega;
    out.consistent = true;
    return out;
}

PeriodicPattern pattern_from_b(const ConverseAnalysis& analysis) {
    if (!analysis.consistent) throw std::invalid_argument("inconsistent analysis");
    const Index d = analysis.kernel.dim();
    PeriodicPattern m(analysis.kernel, d);
    for (Index i = 0; i < d; ++i) {
        IVec u = IVec::Zero(d);
        for (Int step = 0; step < analysis.b[i]; ++step) {
            m.set(u, i, true);
            u += analysis.t;
        }
    }
    return m;
}

Classification classify_pattern(const ConverseAnalysis& analysis) {
    Classification c;
    if (!analysis.consistent) {
        c.kind = PatternKind::Inconsistent;
        c.reason = analysis.reason;
        return c;
    }
    c.a = analysis.a;
    c.b = analysis.b;
    c.omega = analysis.omega;
    c.q = analysis.q;
    c.l = analysis.l;
    if (analysis.q == 1)
        c.kind = PatternKind::ChristoffelGraph;
    else if (analysis.l == 1)
        c.kind = PatternKind::ComplementOfReversal;
    else
        c.kind = PatternKind::WidthGraph;
    return c;
}

std::vector<PirilloSolution> pirillo_search(const KernelLattice& k) {
    if (!k.contains(IVec::Ones(k.dim())))
        throw std::invalid_argument("lattice must contain the all-ones vector");
    std::vector<PirilloSolution> out;
    for (const IVec& t : k.coset_representatives()) {
        if (t.isZero()) continue;
        ConverseAnalysis analysis = discover_b(k, t);
        if (!analysis.consistent) continue;
        PeriodicPattern m = pattern_from_b(analysis);
        if (!(m == m.translated(t).flipped())) continue;
        Classification c = classify_pattern(analysis);
        out.push_back(PirilloSolution{t, std::move(analysis), std::move(m), std::move(c)});
    }
    return out;
}

}  // namespace christoffel
