#pragma once

#include "christoffel/edges.hpp"

#include <string>
#include <vector>

namespace christoffel {

/// Data recovered from a periodicity lattice K and a translation t: the order
/// omega of t in Z^d/K, the unique exponents b_i with e_i + b_i t in K, the
/// complementary vector a = omega - b, and the divisor pair (q, l) with
/// omega*q == sum(a), omega*l == sum(b), q + l == d.
struct ConverseAnalysis {
    KernelLattice kernel;
    IVec t;
    Int omega{0};
    IVec b;
    IVec a;
    Int q{0};
    Int l{0};
    bool consistent{false};
    std::string reason;  // set when inconsistent
};

enum class PatternKind { ChristoffelGraph, ComplementOfReversal, WidthGraph, Inconsistent };

/// Outcome of classifying a flip/translate pattern. The pattern is always the
/// width graph of vector a; when q == 1 it is the standard Christoffel graph
/// of a, and when l == 1 its edge-complement is the reversal of the graph
/// of b.
struct Classification {
    PatternKind kind{PatternKind::Inconsistent};
    IVec a;
    IVec b;
    Int omega{0};
    Int q{0};
    Int l{0};
    std::string reason;
};

/// Recovers the exponents b_i by walking the orbit of each e_i under t,
/// reducing mod K at every step. Reports an inconsistent analysis when some
/// b_i does not exist (t does not generate the quotient). Throws when t lies
/// in K (the order of t is undefined as used).
ConverseAnalysis discover_b(const KernelLattice& k, const IVec& t);

/// The unique K-periodic pattern with legs at the K-cosets satisfying
/// M == flip(M + t): direction-i edges at the cosets of k*t for 0 <= k < b_i.
PeriodicPattern pattern_from_b(const ConverseAnalysis& analysis);

Classification classify_pattern(const ConverseAnalysis& analysis);

struct PirilloSolution {
    IVec t;  // canonical coset representative
    ConverseAnalysis analysis;
    PeriodicPattern pattern;
    Classification classification;
};

/// Tries every nonzero coset representative t of Z^d/K, keeps those whose
/// analysis succeeds and whose reconstructed pattern satisfies
/// M == flip(M + t) exhaustively over the fundamental domain. K must contain
/// (1,...,1).
std::vector<PirilloSolution> pirillo_search(const KernelLattice& k);

}  // namespace christoffel
