#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace christoffel {

using Int = std::int64_t;
using Index = Eigen::Index;
using IVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

// All lattice arithmetic is exact: 64-bit with an explicit error on overflow.
inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

// Floor division/modulo (remainder has the sign of the divisor; b > 0 gives r in [0, b)).
inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int floor_mod(Int a, Int b) { return checked_sub(a, checked_mul(floor_div(a, b), b)); }

struct ExtGcd {
    Int g;  // gcd, nonnegative
    Int x;  // a*x + b*y == g
    Int y;
};

inline ExtGcd ext_gcd(Int a, Int b) {
    Int old_r = a, r = b;
    Int old_x = 1, x = 0;
    Int old_y = 0, y = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = checked_sub(old_r, checked_mul(q, r));
        old_r = r;
        r = tmp;
        tmp = checked_sub(old_x, checked_mul(q, x));
        old_x = x;
        x = tmp;
        tmp = checked_sub(old_y, checked_mul(q, y));
        old_y = y;
        y = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_x = -old_x;
        old_y = -old_y;
    }
    return {old_r, old_x, old_y};
}

inline Int gcd_all(const IVec& v) {
    Int g = 0;
    for (Index i = 0; i < v.size(); ++i) g = std::gcd(g, v[i]);
    return g;
}

inline bool lex_less(const IVec& a, const IVec& b) {
    for (Index i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

}  // namespace christoffel
