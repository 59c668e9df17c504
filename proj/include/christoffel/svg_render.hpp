#pragma once

#include "christoffel/edges.hpp"
#include "christoffel/projection.hpp"

#include <optional>
#include <string>

namespace christoffel {

/// Styling of the geometric renders. Arrows default to on for planar grids
/// and off for projected d=3 pictures, where the direction of an edge is
/// redundant.
struct RenderStyle {
    std::string body_color = "blue";
    std::string leg_color = "red";
    std::optional<bool> arrows;
    bool labels = true;
};

/// Grid picture of a d=2 graph window.
std::string render_h_window(const NormalData& nd, const Box& box, const RenderStyle& style = {});

/// Projection of a d=3 graph window onto the diagonal plane, with the unit
/// directions drawn at 90, 210 and 330 degrees.
std::string render_i_window(const NormalData& nd, const Box& box, const RenderStyle& style = {});

/// Quotient graph on a circle of residues.
std::string render_quotient(const NormalData& nd, const RenderStyle& style = {});

std::string render_parallelogram(const ChristoffelParallelogram& p, const RenderStyle& style = {});

/// Staircase path of the (p,q) word under its segment.
std::string render_word_path(Int p, Int q);

}  // namespace christoffel
