#include "christoffel/svg_render.hpp"

#include "christoffel/words.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace christoffel {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

struct P2 {
    double x{0};
    double y{0};

    P2 operator+(const P2& o) const { return {x + o.x, y + o.y}; }
    P2 operator*(double s) const { return {x * s, y * s}; }
};

std::string marker_id(const std::string& color) {
    std::string id = "arrow-";
    for (char c : color)
        if (std::isalnum(static_cast<unsigned char>(c))) id.push_back(c);
    return id;
}

class SvgDoc {
public:
    void line(P2 a, P2 b, const std::string& color, double width, bool arrow = false) {
        body_ << "  <line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\"" << fmt(b.x)
              << "\" y2=\"" << fmt(b.y) << "\" stroke=\"" << color << "\" stroke-width=\""
              << fmt(width) << "\"";
        if (arrow) {
            body_ << " marker-end=\"url(#" << marker_id(color) << ")\"";
            markers_.insert(color);
        }
        body_ << "/>\n";
    }

    void circle(P2 c, double r, const std::string& fill, const std::string& stroke) {
        body_ << "  <circle cx=\"" << fmt(c.x) << "\" cy=\"" << fmt(c.y) << "\" r=\"" << fmt(r)
              << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\"/>\n";
    }

    void text(P2 at, const std::string& s, double size) {
        body_ << "  <text x=\"" << fmt(at.x) << "\" y=\"" << fmt(at.y) << "\" font-size=\""
              << fmt(size) << "\" font-family=\"monospace\" text-anchor=\"middle\">" << s
              << "</text>\n";
    }

    void polygon(const std::vector<P2>& pts, const std::string& stroke, double width) {
        body_ << "  <polygon points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) body_ << " ";
            body_ << fmt(pts[i].x) << "," << fmt(pts[i].y);
        }
        body_ << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << fmt(width)
              << "\"/>\n";
    }

    std::string finish(double width, double height) const {
        std::ostringstream os;
        os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
           << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
        if (!markers_.empty()) {
            os << "  <defs>\n";
            for (const std::string& color : markers_) {
                os << "    <marker id=\"" << marker_id(color)
                   << "\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"5\""
                      " markerHeight=\"5\" orient=\"auto\">\n";
                os << "      <path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"" << color << "\"/>\n";
                os << "    </marker>\n";
            }
            os << "  </defs>\n";
        }
        os << body_.str();
        os << "</svg>\n";
        return os.str();
    }

private:
    std::ostringstream body_;
    std::set<std::string> markers_;
};

constexpr double kUnit = 40.0;
constexpr double kMargin = 30.0;
constexpr double kRoot3Half = 0.8660254037844386;

// Projections of the unit directions at 90, 210 and 330 degrees, y down.
const P2 kHex[3] = {{0.0, -kUnit}, {-kRoot3Half * kUnit, 0.5 * kUnit},
                    {kRoot3Half * kUnit, 0.5 * kUnit}};

P2 hex_position(double c1, double c2, double c3 = 0.0) {
    return kHex[0] * c1 + kHex[1] * c2 + kHex[2] * c3;
}

bool is_leg(const NormalData& nd, const Edge& e) {
    return residue(nd, e.tail) == 0 || residue(nd, e.head()) == 0;
}

}  // namespace

std::string render_h_window(const NormalData& nd, const Box& box, const RenderStyle& style) {
    if (nd.dim() != 2) throw std::invalid_argument("grid render needs d == 2");
    if (box.lo.size() != 2 || box.lo[0] > box.hi[0] || box.lo[1] > box.hi[1])
        throw std::invalid_argument("invalid window");
    bool arrows = style.arrows.value_or(true);
    double width = 2 * kMargin + static_cast<double>(box.hi[0] + 1 - box.lo[0]) * kUnit;
    double height = 2 * kMargin + static_cast<double>(box.hi[1] + 1 - box.lo[1]) * kUnit;
    auto pos = [&](Int x, Int y) {
        return P2{kMargin + static_cast<double>(x - box.lo[0]) * kUnit,
                  height - kMargin - static_cast<double>(y - box.lo[1]) * kUnit};
    };
    SvgDoc doc;
    for (const Edge& e : window_edges(nd, box).edges) {
        IVec h = e.head();
        doc.line(pos(e.tail[0], e.tail[1]), pos(h[0], h[1]),
                 is_leg(nd, e) ? style.leg_color : style.body_color, 2.0, arrows);
    }
    for (Int x = box.lo[0]; x <= box.hi[0] + 1; ++x)
        for (Int y = box.lo[1]; y <= box.hi[1] + 1; ++y) doc.circle(pos(x, y), 2.0, "gray", "none");
    if (box.lo[0] <= 0 && 0 <= box.hi[0] + 1 && box.lo[1] <= 0 && 0 <= box.hi[1] + 1)
        doc.circle(pos(0, 0), 7.0, "none", "red");
    return doc.finish(width, height);
}

std::string render_i_window(const NormalData& nd, const Box& box, const RenderStyle& style) {
    if (nd.dim() != 3) throw std::invalid_argument("projected render needs d == 3");
    bool arrows = style.arrows.value_or(false);
    EdgeSet edges = window_edges(nd, box);
    std::set<std::array<Int, 3>> vertex_set;
    for (const Edge& e : edges.edges) {
        IVec h = e.head();
        vertex_set.insert({e.tail[0], e.tail[1], e.tail[2]});
        vertex_set.insert({h[0], h[1], h[2]});
    }
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    for (const auto& v : vertex_set) {
        P2 p = hex_position(static_cast<double>(v[0]), static_cast<double>(v[1]),
                            static_cast<double>(v[2]));
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    P2 shift{kMargin - xmin, kMargin - ymin};
    auto pos = [&](const IVec& u) {
        return hex_position(static_cast<double>(u[0]), static_cast<double>(u[1]),
                            static_cast<double>(u[2])) +
               shift;
    };
    SvgDoc doc;
    for (const Edge& e : edges.edges)
        doc.line(pos(e.tail), pos(e.head()), is_leg(nd, e) ? style.leg_color : style.body_color,
                 2.0, arrows);
    for (const auto& v : vertex_set) {
        IVec u(3);
        u << v[0], v[1], v[2];
        P2 p = pos(u);
        if (style.labels) {
            doc.circle(p, 8.0, "white", "black");
            doc.text(P2{p.x, p.y + 3.5}, std::to_string(residue(nd, u)), 10.0);
        } else {
            doc.circle(p, 2.5, "black", "none");
        }
    }
    return doc.finish(xmax - xmin + 2 * kMargin, ymax - ymin + 2 * kMargin);
}

std::string render_quotient(const NormalData& nd, const RenderStyle& style) {
    bool arrows = style.arrows.value_or(false);
    double radius = std::max(60.0, static_cast<double>(nd.omega()) * 10.0);
    double size = 2 * (radius + kMargin + 10.0);
    P2 center{size / 2, size / 2};
    auto pos = [&](Int k) {
        double angle = (-90.0 + 360.0 * static_cast<double>(k) / static_cast<double>(nd.omega())) *
                       M_PI / 180.0;
        return P2{center.x + radius * std::cos(angle), center.y + radius * std::sin(angle)};
    };
    SvgDoc doc;
    for (const QuotientEdge& e : quotient_graph(nd))
        doc.line(pos(e.from), pos(e.to), e.from == 0 ? style.leg_color : style.body_color, 1.5,
                 arrows);
    for (Int k = 0; k < nd.omega(); ++k) {
        P2 p = pos(k);
        doc.circle(p, 9.0, "white", "black");
        if (style.labels) doc.text(P2{p.x, p.y + 3.5}, std::to_string(k), 10.0);
    }
    return doc.finish(size, size);
}

std::string render_parallelogram(const ChristoffelParallelogram& p, const RenderStyle& style) {
    auto pos_raw = [&](double c1, double c2) { return hex_position(c1, c2); };
    std::vector<P2> corners = {
        pos_raw(0, 0), pos_raw(static_cast<double>(p.sides(0, 0)), static_cast<double>(p.sides(0, 1))),
        pos_raw(static_cast<double>(p.sides(0, 0) + p.sides(1, 0)),
                static_cast<double>(p.sides(0, 1) + p.sides(1, 1))),
        pos_raw(static_cast<double>(p.sides(1, 0)), static_cast<double>(p.sides(1, 1)))};
    double xmin = corners[0].x, xmax = corners[0].x, ymin = corners[0].y, ymax = corners[0].y;
    for (const P2& c : corners) {
        xmin = std::min(xmin, c.x);
        xmax = std::max(xmax, c.x);
        ymin = std::min(ymin, c.y);
        ymax = std::max(ymax, c.y);
    }
    P2 shift{kMargin - xmin, kMargin - ymin};
    auto pos = [&](Int c1, Int c2) {
        return pos_raw(static_cast<double>(c1), static_cast<double>(c2)) + shift;
    };
    SvgDoc doc;
    std::vector<P2> outline;
    for (const P2& c : corners) outline.push_back(c + shift);
    doc.polygon(outline, "gray", 1.0);
    const Int steps[3][2] = {{1, 0}, {0, 1}, {-1, -1}};
    auto draw_edges = [&](const std::vector<ParallelogramEdge>& es, const std::string& color) {
        for (const ParallelogramEdge& e : es)
            doc.line(pos(e.tail[0], e.tail[1]),
                     pos(e.tail[0] + steps[e.dir][0], e.tail[1] + steps[e.dir][1]), color, 2.0,
                     style.arrows.value_or(false));
    };
    draw_edges(p.body, style.body_color);
    draw_edges(p.legs, style.leg_color);
    for (const auto& [c, label] : p.points) {
        P2 at = pos(c[0], c[1]);
        doc.circle(at, 8.0, "white", "black");
        if (style.labels) doc.text(P2{at.x, at.y + 3.5}, std::to_string(label), 10.0);
    }
    return doc.finish(xmax - xmin + 2 * kMargin, ymax - ymin + 2 * kMargin);
}

std::string render_word_path(Int p, Int q) {
    Word w = christoffel_word(p, q);
    const double unit = 30.0;
    double width = 2 * kMargin + static_cast<double>(p) * unit;
    double height = 2 * kMargin + static_cast<double>(q) * unit;
    auto pos = [&](Int x, Int y) {
        return P2{kMargin + static_cast<double>(x) * unit,
                  height - kMargin - static_cast<double>(y) * unit};
    };
    SvgDoc doc;
    for (Int x = 0; x <= p; ++x)
        for (Int y = 0; y <= q; ++y) doc.circle(pos(x, y), 1.5, "gray", "none");
    doc.line(pos(0, 0), pos(p, q), "gray", 1.0);
    Int x = 0, y = 0;
    for (char c : w) {
        Int nx = x + (c == 'a' ? 1 : 0);
        Int ny = y + (c == 'b' ? 1 : 0);
        doc.line(pos(x, y), pos(nx, ny), "black", 2.5);
        x = nx;
        y = ny;
    }
    doc.circle(pos(0, 0), 3.0, "black", "none");
    doc.circle(pos(p, q), 3.0, "black", "none");
    return doc.finish(width, height);
}

}  // namespace christoffel
