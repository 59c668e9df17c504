#include "christoffel/words.hpp"

#include <algorithm>
#include <numeric>

namespace christoffel {

Word christoffel_word(Int p, Int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("word vector entries must be positive");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("word vector entries must be coprime");
    Int n = checked_add(p, q);
    Word w;
    w.reserve(static_cast<std::size_t>(n));
    Int k = 0;
    for (Int step = 0; step < n; ++step) {
        Int next = (k + q) % n;
        w.push_back(next > k ? 'a' : 'b');
        k = next;
    }
    return w;
}

Word line_word(const NormalData& nd, const IVec& x, Index dir, Int length) {
    if (dir < 0 || dir >= nd.dim()) throw std::invalid_argument("direction out of range");
    if (length < 1) throw std::invalid_argument("word length must be positive");
    Int r = residue(nd, x);
    Int bound = nd.omega() - nd.a(dir) - 1;
    Word w;
    w.reserve(static_cast<std::size_t>(length));
    for (Int k = 0; k < length; ++k) {
        w.push_back(r <= bound ? 'a' : 'b');
        r = (r + nd.a(dir)) % nd.omega();
    }
    return w;
}

CentralFactorization central_factorize(const Word& w) {
    if (w.size() < 2) throw std::invalid_argument("word too short to factorize");
    if (w.front() != 'a' || w.back() != 'b')
        throw std::invalid_argument("word must start with 'a' and end with 'b'");
    return CentralFactorization{w.front(), w.substr(1, w.size() - 2), w.back()};
}

bool is_palindrome(const Word& w) { return std::equal(w.begin(), w.end(), w.rbegin()); }

bool has_period(const Word& w, Int p) {
    if (p < 1) throw std::invalid_argument("period must be positive");
    for (std::size_t k = 0; k + static_cast<std::size_t>(p) < w.size(); ++k)
        if (w[k] != w[k + static_cast<std::size_t>(p)]) return false;
    return true;
}

bool is_rotation(const Word& a, const Word& b) {
    return a.size() == b.size() && (a + a).find(b) != Word::npos;
}

}  // namespace christoffel
