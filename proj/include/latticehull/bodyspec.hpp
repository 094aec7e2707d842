#pragma once

#include <string>
#include <vector>

#include "latticehull/geometry.hpp"
#include "latticehull/vec.hpp"

namespace lh {

/// Build a body from a short spec string:
///   disk             unit disk at the origin
///   disk-r<R>        disk of radius R (e.g. disk-r2, disk-r20)
///   ball3d-r<R>      3D ball of radius R
///   square           unit square centered at the origin
///   square-s<S>      square of side S centered at the origin
///   ellipse          ellipse with semi-axes (2, 1) at the origin
///   ellipse-a<A>-b<B>  ellipse with semi-axes (A, B)
///   hexagon          regular hexagon with unit circumradius
///   anything else    path to a polygon file (one "x y" vertex per line,
///                    '#' starts a comment)
Body make_body(const std::string& spec);

/// Parse the polygon text format.
std::vector<Vec> read_polygon_file(const std::string& path);

}  // namespace lh
