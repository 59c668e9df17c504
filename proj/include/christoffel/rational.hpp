#pragma once

#include "christoffel/arith.hpp"

#include <compare>
#include <numeric>
#include <ostream>
#include <string>

namespace christoffel {

/// Exact rational number over checked 64-bit integers, always normalized
/// (positive denominator, reduced by the gcd).
class Rational {
public:
    Rational() = default;
    Rational(Int n) : num_(n) {}  // NOLINT: implicit from integers is intended
    Rational(Int n, Int d) : num_(n), den_(d) { normalize(); }

    Int num() const { return num_; }
    Int den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                        checked_mul(a.den_, b.den_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(checked_sub(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                        checked_mul(a.den_, b.den_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return Rational(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return checked_mul(a.num_, b.den_) <=> checked_mul(b.num_, a.den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Int num_{0};
    Int den_{1};
};

inline Int floor(const Rational& r) { return floor_div(r.num(), r.den()); }
inline Int ceil(const Rational& r) { return -floor_div(-r.num(), r.den()); }
inline Rational frac(const Rational& r) { return r - Rational(floor(r)); }
inline Rational abs(const Rational& r) { return r.num() < 0 ? -r : r; }

}  // namespace christoffel

namespace Eigen {

template <>
struct NumTraits<christoffel::Rational> : GenericNumTraits<christoffel::Rational> {
    using Real = christoffel::Rational;
    using NonInteger = christoffel::Rational;
    using Nested = christoffel::Rational;
    using Literal = christoffel::Int;

    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }

    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 6,
        MulCost = 8,
    };
};

}  // namespace Eigen

namespace christoffel {

using RVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

inline RVec to_rational(const IVec& v) {
    RVec r(v.size());
    for (Index i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
    return r;
}

}  // namespace christoffel
