#include "latticehull/bodyspec.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lh {

namespace {

bool consume_prefix(const std::string& s, const std::string& prefix, std::string& rest) {
    if (s.rfind(prefix, 0) != 0) return false;
    rest = s.substr(prefix.size());
    return true;
}

double parse_positive(const std::string& s, const char* what) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("bad ") + what + " in body spec");
    }
    if (pos != s.size() || !(v > 0.0))
        throw std::invalid_argument(std::string("bad ") + what + " in body spec");
    return v;
}

Body centered_square(double side) {
    const double h = side / 2.0;
    return Body::polygon({Vec(-h, -h), Vec(h, -h), Vec(h, h), Vec(-h, h)});
}

}  // namespace

Body make_body(const std::string& spec) {
    std::string rest;
    if (spec == "disk") return Body::ball(Vec(0.0, 0.0), 1.0);
    if (consume_prefix(spec, "disk-r", rest))
        return Body::ball(Vec(0.0, 0.0), parse_positive(rest, "radius"));
    if (spec == "ball3d") return Body::ball(Vec(0.0, 0.0, 0.0), 1.0);
    if (consume_prefix(spec, "ball3d-r", rest))
        return Body::ball(Vec(0.0, 0.0, 0.0), parse_positive(rest, "radius"));
    if (spec == "square") return centered_square(1.0);
    if (consume_prefix(spec, "square-s", rest)) return centered_square(parse_positive(rest, "side"));
    if (spec == "ellipse") return Body::ellipse(Vec(0.0, 0.0), 2.0, 1.0, 0.0);
    if (consume_prefix(spec, "ellipse-a", rest)) {
        const std::size_t dash = rest.find("-b");
        if (dash == std::string::npos)
            throw std::invalid_argument("ellipse spec needs both axes: ellipse-a<A>-b<B>");
        const double a = parse_positive(rest.substr(0, dash), "semi-major");
        const double b = parse_positive(rest.substr(dash + 2), "semi-minor");
        return Body::ellipse(Vec(0.0, 0.0), a, b, 0.0);
    }
    if (spec == "hexagon") {
        std::vector<Vec> verts;
        for (int k = 0; k < 6; ++k) {
            const double phi = kPi * static_cast<double>(k) / 3.0;
            verts.emplace_back(std::cos(phi), std::sin(phi));
        }
        return Body::polygon(std::move(verts));
    }
    return Body::polygon(read_polygon_file(spec));
}

std::vector<Vec> read_polygon_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open polygon file: " + path);
    std::vector<Vec> verts;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        double x, y;
        if (!(ss >> x)) continue;  // blank or comment-only line
        if (!(ss >> y)) {
            std::ostringstream msg;
            msg << "polygon file " << path << ": line " << lineno << " needs two coordinates";
            throw std::invalid_argument(msg.str());
        }
        double extra;
        if (ss >> extra) {
            std::ostringstream msg;
            msg << "polygon file " << path << ": line " << lineno << " has trailing data";
            throw std::invalid_argument(msg.str());
        }
        verts.emplace_back(x, y);
    }
    if (verts.empty()) throw std::invalid_argument("polygon file " + path + " has no vertices");
    return verts;
}

}  // namespace lh
