// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include "christoffel/cli.hpp"
#include "christoffel/edges.hpp"
#include "christoffel/pirillo.hpp"
#include "christoffel/projection.hpp"
#include "christoffel/surface.hpp"
#include "christoffel/svg_render.hpp"
#include "christoffel/words.hpp"

#include "test_util.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

using namespace christoffel;
using christoffel::testing::random_coprime_vector;
using christoffel::testing::random_normals;
using christoffel::testing::random_point;
using christoffel::testing::vec;

namespace {

struct Criterion {
    std::string name;
    double limit_ms;  // 0 means no runtime bound
    std::function<void()> body;
};

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    require(f.good(), "cannot read " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

std::string golden(const std::string& name) {
    return read_file(std::string(GOLDEN_DIR) + "/" + name);
}

std::string run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli_run(args, out, err);
    require(code == 0, "cli exited with " + std::to_string(code) + ": " + err.str());
    return out.str();
}

RVec random_rational_point(std::mt19937_64& rng, Index d, Int num_radius, Int den_max) {
    RVec x(d);
    for (Index i = 0; i < d; ++i) {
        Int den = std::uniform_int_distribution<Int>(1, den_max)(rng);
        Int num = std::uniform_int_distribution<Int>(-num_radius * den, num_radius * den)(rng);
        x[i] = Rational(num, den);
    }
    return x;
}

bool generic(const RVec& x) {
    for (Index i = 0; i < x.size(); ++i)
        for (Index j = i + 1; j < x.size(); ++j)
            if (frac(x[i]) == frac(x[j])) return false;
    return true;
}

// The shared batch for criteria 3 and 4: 50 sampled vectors with every valid
// width of each, so every width < sum case of the sample is covered.
std::vector<NormalData> pirillo_batch() {
    std::mt19937_64 rng(1003);
    auto batch = random_normals(rng, 50, 4, 30);
    int wide = 0;
    for (const auto& nd : batch) wide += nd.standard() ? 0 : 1;
    require(wide >= 3, "batch lacks width < sum cases");
    return batch;
}

void criterion_word_anchors() {
    require(run_cli({"word", "-p", "8", "-q", "5"}) == "aabaababaabab\n",
            "word output mismatch");
    double best_ms = 1e9;
    for (int rep = 0; rep < 3; ++rep) {
        auto start = std::chrono::steady_clock::now();
        Word w = christoffel_word(8, 5);
        CentralFactorization f = central_factorize(w);
        bool ok = w == "aabaababaabab" && f.central == "abaababaaba" &&
                  is_palindrome(f.central) && has_period(f.central, 5) &&
                  has_period(f.central, 8) && f.central.size() == 8 + 5 - 2;
        auto end = std::chrono::steady_clock::now();
        require(ok, "central factorization mismatch");
        best_ms = std::min(best_ms,
                           std::chrono::duration<double, std::milli>(end - start).count());
    }
    require(best_ms < 1.0, "word and factorization exceeded 1 ms");
}

void criterion_line_words() {
    NormalData nd(vec({2, 5}));
    require(line_word(nd, vec({0, 0}), 0, 7) == "aaabaab", "direction-1 period mismatch");
    require(line_word(nd, vec({0, 0}), 1, 7) == "abbabbb", "direction-2 period mismatch");
}

void criterion_forward_pirillo() {
    for (const auto& nd : pirillo_batch()) {
        FlipTranslateCheck check = verify_flip_translate(nd);
        require(residue(nd, check.t) == 1, "translation residue must be 1");
        require(check.ok, "flip(H) != H + t for a sampled case");
    }
}

void criterion_body_and_reversal() {
    for (const auto& nd : pirillo_batch()) {
        require(verify_body_symmetric(nd), "body not symmetric for a sampled case");
        require(verify_reversal_translate(nd), "-H != H + t for a sampled case");
    }
}

void criterion_kernel_algebra() {
    std::mt19937_64 rng(1005);
    for (int it = 0; it < 100; ++it) {
        IVec a = random_coprime_vector(rng, 3, 90);
        for (Index i = 0; i < 3; ++i) a[i] = 1 + (a[i] - 1) % 30;
        if (gcd_all(a) != 1) {
            --it;
            continue;
        }
        NormalData nd(a);
        KernelLattice general = kernel_basis(nd);
        require(lattices_equal(general, KernelLattice::from_rows(kernel_basis_d3(a))),
                "algorithmic kernel differs from the closed form");
        require(general.index() == nd.s(), "kernel index must equal the sum");
    }
    IMat m(4, 3);
    m << 1, 1, 1, 5, 0, -2, 0, 5, -3, 3, -2, 0;
    require(subgroup_index(m) == 10, "index of the 4x3 stack must be 10");
}

void criterion_sigma_and_hypercube() {
    std::mt19937_64 rng(1006);
    for (int it = 0; it < 500; ++it) {
        Index d = std::uniform_int_distribution<Index>(2, 5)(rng);
        NormalData nd(random_coprime_vector(rng, d, 50));
        SigmaPath path{random_point(rng, d, 30), {}};
        path.perm.resize(d);
        std::iota(path.perm.begin(), path.perm.end(), Index{0});
        std::shuffle(path.perm.begin(), path.perm.end(), rng);
        auto edges = sigma_path_edges(path);
        int missing = 0;
        Index found = -1;
        for (Index k = 0; k < d; ++k) {
            if (!edge_in_graph(nd, edges[k])) {
                ++missing;
                found = k;
            }
        }
        require(missing == 1, "sigma-path must miss exactly one edge");
        require(missing_edge(nd, path) == found, "missing edge position mismatch");
    }
    int nonedges = 0;
    while (nonedges < 500) {
        Index d = std::uniform_int_distribution<Index>(2, 5)(rng);
        NormalData nd(random_coprime_vector(rng, d, 40));
        Edge e{random_point(rng, d, 25), std::uniform_int_distribution<Index>(0, d - 1)(rng)};
        if (edge_in_graph(nd, e)) continue;
        ++nonedges;
        std::vector<Index> others;
        for (Index j = 0; j < d; ++j)
            if (j != e.dir) others.push_back(j);
        for (const Edge& h : hypercube_edges(e.head(), others))
            require(edge_in_graph(nd, h), "orthogonal hypercube edge absent");
    }
}

void criterion_fig9_converse() {
    IMat rows(3, 3);
    rows << 0, 4, 1, -2, 0, 3, 1, 1, 1;
    KernelLattice k = KernelLattice::from_rows(rows);
    require(k.index() == 18, "lattice index must be 18");
    auto solutions = pirillo_search(k);
    EdgeSet fwd = fundamental_domain_edges(NormalData(vec({3, 7, 8}), 18));
    EdgeSet bwd = fundamental_domain_edges(NormalData(vec({15, 11, 10}), 18));
    IVec t_fwd = vec({0, -1, 1});
    IVec t_bwd = vec({0, 1, -1});
    int fwd_hits = 0, bwd_hits = 0;
    for (const auto& sol : solutions) {
        if (sol.pattern.to_edge_set() == fwd) {
            ++fwd_hits;
            require(k.contains(sol.t - t_fwd), "graph of (3,7,8) must come from e3 - e2");
            require(sol.classification.kind == PatternKind::ChristoffelGraph &&
                        sol.classification.a == vec({3, 7, 8}),
                    "expected the Christoffel classification for e3 - e2");
        }
        if (sol.pattern.to_edge_set() == bwd) {
            ++bwd_hits;
            require(k.contains(sol.t - t_bwd), "graph of width 18 must come from e2 - e3");
            require(sol.classification.kind == PatternKind::ComplementOfReversal &&
                        sol.classification.b == vec({3, 7, 8}),
                    "expected the complement-of-reversal classification for e2 - e3");
        }
    }
    require(fwd_hits == 1 && bwd_hits == 1,
            "each width-18 pattern must arise from exactly one class");
}

void criterion_tiling() {
    std::mt19937_64 rng(1008);
    for (const IVec& a : {vec({2, 3, 5}), vec({4, 6, 7})}) {
        NormalData nd(a);
        int done = 0;
        while (done < 1000) {
            RVec x = random_rational_point(rng, 3, 5, 13);
            if (!generic(x)) continue;
            ++done;
            require(tile_contains(locate_tile(nd, x), x), "located tile misses its point");
        }
    }
}

void criterion_parallelogram() {
    for (const IVec& a : {vec({2, 3, 5}), vec({4, 6, 7}), vec({3, 7, 8})}) {
        NormalData nd(a);
        ChristoffelParallelogram p = christoffel_parallelogram(nd);
        require(static_cast<Int>(p.points.size()) == nd.s(), "point count must equal the sum");
        std::vector<bool> seen(static_cast<std::size_t>(nd.s()), false);
        for (const auto& [c, label] : p.points) {
            require(!seen[static_cast<std::size_t>(label)], "duplicate label");
            seen[static_cast<std::size_t>(label)] = true;
        }
        require(parallelogram_body_symmetric(p), "body must be centrally symmetric");
        require(parallelogram_flip_is_translate(p), "flip must reappear as a translate");
        std::ostringstream name;
        name << "parallelogram_" << a[0] << "_" << a[1] << "_" << a[2] << ".svg";
        require(render_parallelogram(p) == golden(name.str()),
                "golden SVG mismatch for " + name.str());
    }
}

void criterion_appendix() {
    std::mt19937_64 rng(1010);
    for (int it = 0; it < 1000; ++it) {
        NormalData nd(random_coprime_vector(
            rng, std::uniform_int_distribution<Index>(2, 4)(rng), 30));
        IVec x = random_point(rng, nd.dim(), 12);
        require(integer_in_surface(nd, x) == in_surface(nd, to_rational(x)),
                "integer corollary disagrees with the surface test");
    }

    NormalData nd(vec({2, 3, 5}));
    SurfaceProjection up = project_f(nd, to_rational(vec({1, 1, 1})));
    require(up.y == to_rational(vec({0, 0, 0})) && up.t == Rational(1),
            "f(1,1,1) must be the origin with t = 1");
    SurfaceProjection down = project_f(nd, to_rational(vec({-1, -1, -1})));
    require(down.y == to_rational(vec({0, 0, 0})) && down.t == Rational(-1),
            "f(-1,-1,-1) must be the origin with t = -1");

    for (int it = 0; it < 500; ++it) {
        NormalData n(random_coprime_vector(
            rng, std::uniform_int_distribution<Index>(2, 4)(rng), 25));
        RVec x = random_rational_point(rng, n.dim(), 6, 10);
        SurfaceProjection sp = project_f(n, x);
        require(in_surface(n, sp.y), "projection must land on the surface");
        require(project_f(n, sp.y).t == Rational(0), "projection must be idempotent");
        RVec shifted = x;
        Rational lambda(std::uniform_int_distribution<Int>(-15, 15)(rng),
                        std::uniform_int_distribution<Int>(1, 7)(rng));
        for (Index i = 0; i < n.dim(); ++i) shifted[i] += lambda;
        require(project_f(n, shifted).y == sp.y, "projection must be diagonal-invariant");
    }

    for (int it = 0; it < 20; ++it) {
        NormalData n(random_coprime_vector(
            rng, std::uniform_int_distribution<Index>(2, 4)(rng), 25));
        for (const IVec& rep : kernel_basis(n).coset_representatives()) {
            IVec u = rep;
            Int v = 0;
            for (Index i = 0; i < n.dim(); ++i) v += n.a(i) * u[i];
            u -= IVec::Ones(n.dim()) * floor_div(v, n.s());
            for (Index i = 0; i < n.dim(); ++i)
                require(segment_in_surface(n, u, i) == edge_in_graph(n, Edge{u, i}),
                        "segment test disagrees with edge membership");
        }
    }
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"1. word anchors: (8,5) word and its central factorization", 0.0,
         criterion_word_anchors},
        {"2. line-word anchors for a=(2,5)", 0.0, criterion_line_words},
        {"3. forward flip/translate, 50 cases, exhaustive domains", 5000.0,
         criterion_forward_pirillo},
        {"4. body symmetry and reversal translate, same 50 cases", 0.0,
         criterion_body_and_reversal},
        {"5. kernel algebra: closed form, index, gcd of minors", 2000.0,
         criterion_kernel_algebra},
        {"6. sigma-paths miss one edge; nonedges force hypercubes", 0.0,
         criterion_sigma_and_hypercube},
        {"7. width-18 converse: the two patterns and their classes", 1000.0,
         criterion_fig9_converse},
        {"8. tiling point location, 1000 generic points per vector", 0.0, criterion_tiling},
        {"9. labeled parallelograms, symmetry, flip translate, golden SVG", 0.0,
         criterion_parallelogram},
        {"10. surface suite: corollary, projections, segments", 5000.0, criterion_appendix},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.body();
        } catch (const std::exception& e) {
            error = e.what();
        }
        auto end = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(end - start).count();
        bool ok = error.empty();
        if (ok && c.limit_ms > 0 && ms > c.limit_ms) {
            ok = false;
            error = "runtime " + std::to_string(ms) + " ms over the " +
                    std::to_string(c.limit_ms) + " ms limit";
        }
        if (!ok) ++failures;
        std::printf("[%s] %s (%.1f ms)%s%s\n", ok ? "PASS" : "FAIL", c.name.c_str(), ms,
                    error.empty() ? "" : " - ", error.c_str());
    }
    return failures == 0 ? 0 : 1;
}
