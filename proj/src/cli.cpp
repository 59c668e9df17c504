#include "christoffel/cli.hpp"

#include "christoffel/edges.hpp"
#include "christoffel/json_io.hpp"
#include "christoffel/pirillo.hpp"
#include "christoffel/projection.hpp"
#include "christoffel/surface.hpp"
#include "christoffel/svg_render.hpp"
#include "christoffel/words.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <sstream>

namespace christoffel {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

Int parse_int(const std::string& s) {
    std::size_t used = 0;
    Int v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: '" + s + "'");
    }
    if (used != s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
    return v;
}

IVec parse_int_vec(const std::string& s) {
    auto parts = split(s, ',');
    IVec v(static_cast<Index>(parts.size()));
    for (std::size_t i = 0; i < parts.size(); ++i) v[static_cast<Index>(i)] = parse_int(parts[i]);
    return v;
}

Rational parse_rational(const std::string& s) {
    if (auto slash = s.find('/'); slash != std::string::npos)
        return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        Int den = 1;
        for (std::size_t k = dot + 1; k < s.size(); ++k) den = checked_mul(den, 10);
        bool negative = !digits.empty() && digits[0] == '-';
        if (negative) digits = digits.substr(1);
        if (digits.empty()) throw std::invalid_argument("not a number: '" + s + "'");
        Int num = parse_int(digits);
        return Rational(negative ? -num : num, den);
    }
    return Rational(parse_int(s));
}

RVec parse_rational_vec(const std::string& s) {
    auto parts = split(s, ',');
    RVec v(static_cast<Index>(parts.size()));
    for (std::size_t i = 0; i < parts.size(); ++i)
        v[static_cast<Index>(i)] = parse_rational(parts[i]);
    return v;
}

Box parse_box(const std::string& s) {
    auto parts = split(s, ',');
    IVec lo(static_cast<Index>(parts.size()));
    IVec hi(static_cast<Index>(parts.size()));
    for (std::size_t i = 0; i < parts.size(); ++i) {
        auto range = split(parts[i], ':');
        if (range.size() != 2)
            throw std::invalid_argument("window ranges look like lo:hi,lo:hi,...");
        lo[static_cast<Index>(i)] = parse_int(range[0]);
        hi[static_cast<Index>(i)] = parse_int(range[1]);
    }
    return Box{lo, hi};
}

IMat parse_rows(const std::string& s) {
    auto parts = split(s, ';');
    std::vector<IVec> rows;
    for (const std::string& p : parts) rows.push_back(parse_int_vec(p));
    IMat m(static_cast<Index>(rows.size()), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols())
            throw std::invalid_argument("lattice rows must share one dimension");
        m.row(static_cast<Index>(i)) = rows[i].transpose();
    }
    return m;
}

std::string show(const IVec& v) {
    std::ostringstream os;
    os << "(";
    for (Index i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

std::string show(const RVec& v) {
    std::ostringstream os;
    os << "(";
    for (Index i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i].str();
    }
    os << ")";
    return os.str();
}

std::string show(const Classification& c) {
    switch (c.kind) {
        case PatternKind::ChristoffelGraph:
            return "christoffel a=" + show(c.a) + " omega=" + std::to_string(c.omega);
        case PatternKind::ComplementOfReversal:
            return "complement-of-reversal b=" + show(c.b) + " omega=" + std::to_string(c.omega);
        case PatternKind::WidthGraph:
            return "width-graph a=" + show(c.a) + " omega=" + std::to_string(c.omega);
        case PatternKind::Inconsistent:
            break;
    }
    return "inconsistent: " + c.reason;
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty()) {
        out << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write file '" + path + "'");
    f << content;
    out << "wrote " << path << "\n";
}

NormalData normal_from(const std::string& a_csv, const std::optional<Int>& omega) {
    return NormalData(parse_int_vec(a_csv), omega);
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Christoffel graphs: residue maps, kernels, flips and renders"};
    app.require_subcommand(1);
    app.failure_message([](const CLI::App*, const CLI::Error& e) {
        return std::string("error: ") + e.what() + "\n";
    });

    std::string a_csv, point_csv, window_csv, kernel_rows, format = "json", outfile;
    std::string target, body_color = "blue", leg_color = "red";
    std::optional<Int> omega;
    Int p = 0, q = 0, length = 0, dir = 0;
    std::string x_csv;
    bool arrows_on = false, arrows_off = false, no_labels = false;

    auto* word = app.add_subcommand("word", "print the lower Christoffel word of (p,q)");
    word->add_option("-p", p, "number of letters a")->required();
    word->add_option("-q", q, "number of letters b")->required();

    auto* lineword = app.add_subcommand("lineword", "print the letters along a lattice line");
    lineword->add_option("-a", a_csv, "normal vector, comma-separated")->required();
    lineword->add_option("-w", omega, "width (defaults to the entry sum)");
    lineword->add_option("-x", x_csv, "start point, comma-separated")->required();
    lineword->add_option("-i", dir, "line direction, 1-based")->required();
    lineword->add_option("-n", length, "letters to print")->required();

    auto* graph = app.add_subcommand("graph", "export the edges of a graph window");
    graph->add_option("-a", a_csv, "normal vector, comma-separated")->required();
    graph->add_option("-w", omega, "width (defaults to the entry sum)");
    graph->add_option("--window", window_csv, "tail ranges lo:hi,lo:hi,...")->required();
    graph->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    graph->add_option("-o,--output", outfile, "output file (stdout when omitted)");

    auto* flipcheck = app.add_subcommand("flipcheck", "verify flip(H) == H + t on a domain");
    flipcheck->add_option("-a", a_csv, "normal vector, comma-separated")->required();
    flipcheck->add_option("-w", omega, "width (defaults to the entry sum)");

    auto* pirillo = app.add_subcommand("pirillo", "find the flip/translate patterns of a lattice");
    pirillo->add_option("-K", kernel_rows, "generator rows, e.g. \"0,4,1;-2,0,3;1,1,1\"")->required();

    auto* kernel = app.add_subcommand("kernel", "print the kernel lattice of the residue map");
    kernel->add_option("-a", a_csv, "normal vector, comma-separated")->required();
    kernel->add_option("-w", omega, "width (defaults to the entry sum)");

    auto* tile = app.add_subcommand("tile", "locate the tile holding a projected point");
    tile->add_option("-a", a_csv, "normal vector, comma-separated")->required();
    tile->add_option("--point", point_csv, "rational coordinates, comma-separated")->required();

    auto* parallelogram =
        app.add_subcommand("parallelogram", "print the labeled fundamental parallelogram");
    parallelogram->add_option("-a", a_csv, "normal vector of dimension 3")->required();

    auto* render = app.add_subcommand("render", "write an SVG picture");
    render->add_option("--target", target, "h (d=2 grid), i (d=3 projection), g (quotient), parallelogram, word")
        ->required()
        ->check(CLI::IsMember({"h", "i", "g", "parallelogram", "word"}));
    render->add_option("-a", a_csv, "normal vector for the graph targets");
    render->add_option("-w", omega, "width (defaults to the entry sum)");
    render->add_option("--window", window_csv, "tail ranges for the h and i targets");
    render->add_option("-p", p, "word target: letters a");
    render->add_option("-q", q, "word target: letters b");
    render->add_option("-o,--output", outfile, "output SVG file")->required();
    render->add_option("--body-color", body_color, "stroke for body edges");
    render->add_option("--leg-color", leg_color, "stroke for leg edges");
    render->add_flag("--arrows", arrows_on, "force arrowheads on");
    render->add_flag("--no-arrows", arrows_off, "force arrowheads off");
    render->add_flag("--no-labels", no_labels, "omit vertex labels");

    auto* surface = app.add_subcommand("surface", "surface membership and diagonal projection");
    surface->add_option("-a", a_csv, "normal vector, comma-separated")->required();
    surface->add_option("--point", point_csv, "rational coordinates, comma-separated")->required();

    std::vector<const char*> argv;
    argv.push_back("christoffel");
    for (const std::string& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (word->parsed()) {
            out << christoffel_word(p, q) << "\n";
        } else if (lineword->parsed()) {
            NormalData nd = normal_from(a_csv, omega);
            if (dir < 1 || dir > nd.dim())
                throw std::invalid_argument("direction must be between 1 and the dimension");
            out << line_word(nd, parse_int_vec(x_csv), dir - 1, length) << "\n";
        } else if (graph->parsed()) {
            NormalData nd = normal_from(a_csv, omega);
            EdgeSet set = window_edges(nd, parse_box(window_csv));
            if (format == "json")
                write_output(outfile, edge_set_to_json(nd, set).dump(2) + "\n", out);
            else
                write_output(outfile, edge_set_to_dot(set, *set.kernel, body_color, leg_color),
                             out);
        } else if (flipcheck->parsed()) {
            NormalData nd = normal_from(a_csv, omega);
            FlipTranslateCheck check = verify_flip_translate(nd);
            out << "t=" << show(check.t) << " " << (check.ok ? "PASS" : "FAIL") << "\n";
            if (!check.ok) throw std::logic_error("flip/translate identity failed");
        } else if (pirillo->parsed()) {
            IMat rows = parse_rows(kernel_rows);
            IVec ones = IVec::Ones(rows.cols());
            std::optional<KernelLattice> k;
            try {
                KernelLattice candidate = KernelLattice::from_rows(rows);
                if (candidate.contains(ones)) k = std::move(candidate);
            } catch (const std::invalid_argument&) {
                // adding the all-ones row below may still complete the rank
            }
            if (!k) {
                bool literal_ones = false;
                for (Index r = 0; r < rows.rows(); ++r)
                    literal_ones = literal_ones || rows.row(r).transpose() == ones;
                if (!literal_ones) {
                    err << "warning: adding the all-ones row to the generators\n";
                    rows.conservativeResize(rows.rows() + 1, rows.cols());
                    rows.row(rows.rows() - 1) = ones.transpose();
                }
                k = KernelLattice::from_rows(rows);
            }
            for (const PirilloSolution& sol : pirillo_search(*k))
                out << "t=" << show(sol.t) << " " << show(sol.classification) << "\n";
        } else if (kernel->parsed()) {
            NormalData nd = normal_from(a_csv, omega);
            KernelLattice k = kernel_basis(nd);
            out << "a=" << show(nd.a()) << " omega=" << nd.omega() << "\n";
            out << "basis:\n";
            for (Index r = 0; r < k.basis().rows(); ++r)
                out << show(IVec(k.basis().row(r).transpose())) << "\n";
            out << "index=" << k.index() << "\n";
            if (nd.dim() == 3 && nd.standard()) {
                IMat closed = kernel_basis_d3(nd.a());
                out << "closed-form generators:";
                for (Index r = 0; r < closed.rows(); ++r)
                    out << " " << show(IVec(closed.row(r).transpose()));
                out << "\n";
                bool same = lattices_equal(k, KernelLattice::from_rows(closed));
                out << "closed-form check: " << (same ? "OK" : "MISMATCH") << "\n";
                if (!same) throw std::logic_error("closed-form kernel mismatch");
            }
        } else if (tile->parsed()) {
            NormalData nd(parse_int_vec(a_csv));
            Tile t = locate_tile(nd, parse_rational_vec(point_csv));
            out << "base=" << show(t.base) << " omitted=" << t.omitted + 1 << " spanning=(";
            bool first = true;
            for (Index i = 0; i < nd.dim(); ++i) {
                if (i == t.omitted) continue;
                if (!first) out << ",";
                out << i + 1;
                first = false;
            }
            out << ")\n";
        } else if (parallelogram->parsed()) {
            NormalData nd(parse_int_vec(a_csv));
            ChristoffelParallelogram cp = christoffel_parallelogram(nd);
            out << "a=" << show(nd.a()) << " s=" << cp.s << "\n";
            out << "sides: u=(" << cp.sides(0, 0) << "," << cp.sides(0, 1) << ") v=("
                << cp.sides(1, 0) << "," << cp.sides(1, 1) << ")\n";
            out << "points:\n";
            for (const auto& [c, label] : cp.points)
                out << "(" << c[0] << "," << c[1] << ") label=" << label << "\n";
            out << "legs:\n";
            for (const ParallelogramEdge& e : cp.legs)
                out << "(" << e.tail[0] << "," << e.tail[1] << ") dir=" << e.dir + 1 << "\n";
            out << "body:\n";
            for (const ParallelogramEdge& e : cp.body)
                out << "(" << e.tail[0] << "," << e.tail[1] << ") dir=" << e.dir + 1 << "\n";
        } else if (render->parsed()) {
            RenderStyle style;
            style.body_color = body_color;
            style.leg_color = leg_color;
            style.labels = !no_labels;
            if (arrows_on && arrows_off)
                throw std::invalid_argument("choose one of --arrows / --no-arrows");
            if (arrows_on) style.arrows = true;
            if (arrows_off) style.arrows = false;
            std::string svg;
            if (target == "word") {
                if (p <= 0 || q <= 0) throw std::invalid_argument("word render needs -p and -q");
                svg = render_word_path(p, q);
            } else {
                if (a_csv.empty()) throw std::invalid_argument("render needs -a");
                NormalData nd = normal_from(a_csv, omega);
                if ((target == "h" || target == "i") && window_csv.empty())
                    throw std::invalid_argument("render target needs --window");
                if (target == "h")
                    svg = render_h_window(nd, parse_box(window_csv), style);
                else if (target == "i")
                    svg = render_i_window(nd, parse_box(window_csv), style);
                else if (target == "g")
                    svg = render_quotient(nd, style);
                else
                    svg = render_parallelogram(christoffel_parallelogram(nd), style);
            }
            write_output(outfile, svg, out);
        } else if (surface->parsed()) {
            NormalData nd(parse_int_vec(a_csv));
            RVec x = parse_rational_vec(point_csv);
            SurfaceProjection sp = project_f(nd, x);
            out << "in_surface: " << (in_surface(nd, x) ? "true" : "false") << "\n";
            out << "f=" << show(sp.y) << "\n";
            out << "t=" << sp.t.str() << "\n";
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace christoffel
