#pragma once

#include "kss/document.hpp"

#include <string>

namespace kss {

class WrongDimension : public KssError {
public:
    using KssError::KssError;
};

/// SVG of a k = 2 domain: unit square, Calabi-Yau and beta lines, the filled
/// polygon and vertex captions. Pixel coordinates are exact rationals scaled
/// by `scale`; non-terminating ones are rounded and followed by a comment
/// with the exact value. Throws WrongDimension when k != 2.
std::string render_polygon_svg(const ResultDocument& doc, int scale = 400);

/// OFF mesh of a k = 3 domain: one face per constraint incident to at least
/// three vertices, wound counter-clockwise seen from outside.
/// Throws WrongDimension when k != 3.
std::string render_polytope_mesh(const ResultDocument& doc);

/// Vertices of a convex polygon in counter-clockwise order, exact.
std::vector<RatVector> convex_polygon_order(std::vector<RatVector> points);

}  // namespace kss
