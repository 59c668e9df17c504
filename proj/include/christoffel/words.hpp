#pragma once

#include "christoffel/residue.hpp"

#include <string>

namespace christoffel {

/// Words are strings over {a, b}: 'a' codes an edge, 'b' a nonedge.
using Word = std::string;

/// Lower Christoffel word of the segment (0,0) -> (p,q): length p+q with p
/// letters 'a', generated by stepping k -> k+q mod (p+q) from 0, letter 'a'
/// on ascents. Requires coprime positive p, q.
Word christoffel_word(Int p, Int q);

/// Letters of the line through x parallel to e_i: letter k is 'a' iff the
/// edge with tail x + k*e_i in direction i lies in the graph.
Word line_word(const NormalData& nd, const IVec& x, Index dir, Int length);

struct CentralFactorization {
    char first;
    Word central;
    char last;
};

/// Splits a word of Christoffel form a..b into its first letter, central
/// part and last letter.
CentralFactorization central_factorize(const Word& w);

bool is_palindrome(const Word& w);

/// Classical period: w[k] == w[k+p] wherever both sides exist.
bool has_period(const Word& w, Int p);

/// True when b is a rotation (conjugate) of a.
bool is_rotation(const Word& a, const Word& b);

}  // namespace christoffel
