#pragma once

#include "clexp/polygon.hpp"
#include "clexp/qp.hpp"
#include "clexp/snake.hpp"
#include "clexp/surface.hpp"

#include <string>

namespace clexp {

Triangulation surface_from_json(const std::string& text);
Triangulation surface_from_file(const std::string& path);

ArcSpec arc_from_json(const std::string& text);
ArcSpec arc_from_file(const std::string& path);

LoopSpec loop_from_json(const std::string& text);
LoopSpec loop_from_file(const std::string& path);

std::string polygon_to_json(const TPolygon& tp);

// Graphviz dumps for debugging.
std::string snake_to_dot(const SnakeGraph& g);
std::string quiver_to_dot(const QuiverPotential& qp, const TPolygon& tp);

}  // namespace clexp
