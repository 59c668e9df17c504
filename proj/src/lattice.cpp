#include "christoffel/lattice.hpp"

#include <algorithm>
#include <cstdlib>

namespace christoffel {

namespace {

void checked_row_axpy(IMat& m, Index target, Index source, Int q) {
    for (Index c = 0; c < m.cols(); ++c)
        m(target, c) = checked_sub(m(target, c), checked_mul(q, m(source, c)));
}

}  // namespace

IMat hermite_normal_form(IMat rows) {
    const Index m = rows.rows();
    const Index n = rows.cols();
    Index r = 0;
    for (Index c = 0; c < n && r < m; ++c) {
        // Euclid on the column entries at rows r..m-1 until one pivot remains.
        while (true) {
            Index best = -1;
            for (Index i = r; i < m; ++i) {
                if (rows(i, c) == 0) continue;
                if (best < 0 || std::abs(rows(i, c)) < std::abs(rows(best, c))) best = i;
            }
            if (best < 0) break;
            if (best != r) rows.row(r).swap(rows.row(best));
            bool clean = true;
            for (Index i = r + 1; i < m; ++i) {
                if (rows(i, c) == 0) continue;
                checked_row_axpy(rows, i, r, rows(i, c) / rows(r, c));
                if (rows(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (rows(r, c) == 0) continue;
        if (rows(r, c) < 0) rows.row(r) = -rows.row(r);
        for (Index i = 0; i < r; ++i)
            checked_row_axpy(rows, i, r, floor_div(rows(i, c), rows(r, c)));
        ++r;
    }
    return rows.topRows(r);
}

Int determinant(IMat m) {
    const Index n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("determinant needs a square matrix");
    if (n == 0) return 1;
    // Bareiss fraction-free elimination; all divisions are exact.
    Int sign = 1;
    Int prev = 1;
    for (Index k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            Index piv = -1;
            for (Index i = k + 1; i < n; ++i)
                if (m(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            m.row(k).swap(m.row(piv));
            sign = -sign;
        }
        for (Index i = k + 1; i < n; ++i) {
            for (Index j = k + 1; j < n; ++j) {
                Int num = checked_sub(checked_mul(m(i, j), m(k, k)), checked_mul(m(i, k), m(k, j)));
                m(i, j) = num / prev;
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return checked_mul(sign, m(n - 1, n - 1));
}

KernelLattice KernelLattice::from_rows(const IMat& rows) {
    IMat h = hermite_normal_form(rows);
    if (h.rows() != rows.cols())
        throw std::invalid_argument("generators are rank-deficient, index would be infinite");
    KernelLattice k;
    k.basis_ = std::move(h);
    k.index_ = 1;
    for (Index i = 0; i < k.basis_.rows(); ++i) k.index_ = checked_mul(k.index_, k.basis_(i, i));
    return k;
}

IVec KernelLattice::reduce(IVec x) const {
    if (x.size() != dim()) throw std::invalid_argument("dimension mismatch");
    for (Index i = 0; i < dim(); ++i) {
        Int q = floor_div(x[i], basis_(i, i));
        if (q != 0)
            for (Index c = i; c < dim(); ++c) x[c] = checked_sub(x[c], checked_mul(q, basis_(i, c)));
    }
    return x;
}

Int KernelLattice::rep_ordinal(const IVec& reduced) const {
    Int ord = 0;
    for (Index i = 0; i < dim(); ++i) ord = ord * basis_(i, i) + reduced[i];
    return ord;
}

std::vector<IVec> KernelLattice::coset_representatives() const {
    std::vector<IVec> reps;
    reps.reserve(static_cast<std::size_t>(index_));
    for (Int m = 0; m < index_; ++m) {
        IVec r = IVec::Zero(dim());
        Int t = m;
        for (Index i = dim() - 1; i >= 0; --i) {
            r[i] = t % basis_(i, i);
            t /= basis_(i, i);
        }
        reps.push_back(std::move(r));
    }
    return reps;
}

KernelLattice kernel_basis(const NormalData& nd) {
    const Index d = nd.dim();
    // Unimodular column reduction of the normal vector: track U with
    // a * U = (1, 0, ..., 0), then the kernel is spanned by omega * col(0)
    // and the remaining columns of U.
    IMat u = IMat::Identity(d, d);
    IVec r = nd.a();
    for (Index k = 1; k < d; ++k) {
        ExtGcd e = ext_gcd(r[0], r[k]);
        Int p = r[0] / e.g;
        Int q = r[k] / e.g;
        for (Index i = 0; i < d; ++i) {
            Int c0 = u(i, 0), ck = u(i, k);
            u(i, 0) = checked_add(checked_mul(e.x, c0), checked_mul(e.y, ck));
            u(i, k) = checked_sub(checked_mul(p, ck), checked_mul(q, c0));
        }
        r[0] = e.g;
        r[k] = 0;
    }
    IMat gens(d, d);
    gens.row(0) = u.col(0).transpose() * nd.omega();
    for (Index k = 1; k < d; ++k) gens.row(k) = u.col(k).transpose();
    return KernelLattice::from_rows(gens);
}

IMat kernel_basis_d3(const IVec& a) {
    NormalData nd(a);  // validates coprime positive entries
    if (nd.dim() != 3) throw std::invalid_argument("closed-form kernel generators need d == 3");
    IMat g(4, 3);
    g << a[2], 0, -a[0],
         0, a[2], -a[1],
         a[1], -a[0], 0,
         1, 1, 1;
    return g;
}

Int subgroup_index(const IMat& rows) {
    const Index m = rows.rows();
    const Index n = rows.cols();
    if (m < n) throw std::invalid_argument("generators are rank-deficient, index would be infinite");
    std::vector<Index> pick(n);
    for (Index i = 0; i < n; ++i) pick[i] = i;
    Int g = 0;
    while (true) {
        IMat minor(n, n);
        for (Index i = 0; i < n; ++i) minor.row(i) = rows.row(pick[i]);
        g = std::gcd(g, determinant(minor));
        // next combination of n row indices out of m
        Index i = n - 1;
        while (i >= 0 && pick[i] == m - n + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (Index j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (g == 0)
        throw std::invalid_argument("generators are rank-deficient, index would be infinite");
    return g;
}

IMat kernel_basis_projected(const IVec& a) {
    NormalData nd(a);
    if (nd.dim() != 3) throw std::invalid_argument("projected kernel generators need d == 3");
    // a3*h1 - a1*h3, a3*h2 - a2*h3, a2*h1 - a1*h2 with h3 = -h1 - h2.
    IMat g(3, 2);
    g << checked_add(a[0], a[2]), a[0],
         a[1], checked_add(a[1], a[2]),
         a[1], -a[0];
    return g;
}

}  // namespace christoffel
