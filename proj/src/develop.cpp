#include "teichtet/develop.hpp"

#include "teichtet/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>

namespace teichtet {

namespace {

constexpr double kPi = std::numbers::pi;

int corner_index(const PlacedTriangle& t, int w) {
    for (int i = 0; i < 3; ++i)
        if (t.corner_vertices[static_cast<std::size_t>(i)] == w) return i;
    throw InternalError("corner vertex not in triangle");
}

std::string fmt(double x) {
    if (std::abs(x) < 5e-9) x = 0;  // avoid -0.00000000
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.8f", x);
    return buf;
}

}  // namespace

DevelopmentLayout develop_link(const RealizedStructure& rs, int cusp, double tol) {
    const Topology& topo = *rs.topo;
    if (cusp < 0 || cusp >= static_cast<int>(topo.vertices.size()))
        throw UsageError("cusp index out of range");
    const LinkSurface& ls = topo.link_of_cusp(cusp);

    DevelopmentLayout out;
    out.cusp = cusp;

    const auto side_len = [&](int t, int v, int f) {
        return rs.lengths[static_cast<std::size_t>(topo.side_class_of({t, v, f}))];
    };

    std::map<CornerSlot, std::size_t> placed;  // triangle -> index into out.triangles

    // Seed: the smallest corner slot, its first side (between its first two
    // corners) along the positive x axis.
    {
        const CornerSlot seed = ls.triangles.front();
        PlacedTriangle pt;
        pt.triangle = seed;
        int k = 0;
        for (int w = 0; w < 4; ++w)
            if (w != seed.vertex) pt.corner_vertices[static_cast<std::size_t>(k++)] = w;
        const int w1 = pt.corner_vertices[0], w2 = pt.corner_vertices[1], w3 = pt.corner_vertices[2];
        const double base = side_len(seed.tet, seed.vertex, w3);  // joins corners w1, w2
        const double b = side_len(seed.tet, seed.vertex, w2);     // joins corners w1, w3
        const double a = side_len(seed.tet, seed.vertex, w1);     // joins corners w2, w3
        const double x = (base * base + b * b - a * a) / (2 * base);
        const double y2 = b * b - x * x;
        pt.pos[0] = {0, 0};
        pt.pos[1] = {base, 0};
        pt.pos[2] = {x, std::sqrt(std::max(0.0, y2))};
        placed[seed] = 0;
        out.triangles.push_back(pt);
    }

    // BFS across interior sides.
    for (std::size_t qi = 0; qi < out.triangles.size(); ++qi) {
        const PlacedTriangle cur = out.triangles[qi];  // copy: vector may grow
        const int t = cur.triangle.tet, v = cur.triangle.vertex;
        for (int f = 0; f < 4; ++f) {
            if (f == v) continue;
            const auto g = topo.pattern.gluing_at({t, f});
            if (!g) continue;
            const CornerSlot nb{g->dst.tet, g->vertex_map[v]};
            if (placed.count(nb)) continue;

            // Shared side endpoints: corners a, b of the current triangle map
            // to s(a), s(b) of the neighbor.
            const auto ends = Topology::side_endpoints({t, v, f});
            const int a = ends[0].other, b = ends[1].other;
            const Vec2 P = cur.pos[static_cast<std::size_t>(corner_index(cur, a))];
            const Vec2 Q = cur.pos[static_cast<std::size_t>(corner_index(cur, b))];
            const int na = g->vertex_map[a], nb_corner = g->vertex_map[b];
            const int third = g->dst.face;  // remaining corner of the neighbor

            PlacedTriangle pt;
            pt.triangle = nb;
            int k = 0;
            for (int w = 0; w < 4; ++w)
                if (w != nb.vertex) pt.corner_vertices[static_cast<std::size_t>(k++)] = w;

            const double dx = Q.x - P.x, dy = Q.y - P.y;
            const double L = std::hypot(dx, dy);
            const double class_len = side_len(nb.tet, nb.vertex, third);
            out.max_side_mismatch = std::max(out.max_side_mismatch, std::abs(L - class_len));
            // Distances from the new third corner to P (image na) and Q.
            const double to_p = side_len(nb.tet, nb.vertex, nb_corner);
            const double to_q = side_len(nb.tet, nb.vertex, na);
            const double ux = dx / L, uy = dy / L;   // along P -> Q
            const double nx = -uy, ny = ux;          // normal
            const double xo = (L * L + to_p * to_p - to_q * to_q) / (2 * L);
            const double h = std::sqrt(std::max(0.0, to_p * to_p - xo * xo));
            // The previous triangle's third corner sits on one side; develop
            // the neighbor on the other.
            const int prev_third_w = [&] {
                for (int w : cur.corner_vertices)
                    if (w != a && w != b) return w;
                throw InternalError("degenerate triangle corners");
            }();
            const Vec2 prev_third = cur.pos[static_cast<std::size_t>(corner_index(cur, prev_third_w))];
            const double side_of_prev = (prev_third.x - P.x) * nx + (prev_third.y - P.y) * ny;
            const double sign = side_of_prev > 0 ? -1.0 : 1.0;

            pt.pos[static_cast<std::size_t>(corner_index(pt, na))] = P;
            pt.pos[static_cast<std::size_t>(corner_index(pt, nb_corner))] = Q;
            pt.pos[static_cast<std::size_t>(corner_index(pt, third))] = {P.x + xo * ux + sign * h * nx,
                                                                         P.y + xo * uy + sign * h * ny};
            placed[nb] = out.triangles.size();
            out.triangles.push_back(pt);
        }
    }
    if (out.triangles.size() != ls.triangles.size())
        throw InternalError("development did not reach every triangle of the link");

    // Cone markers: developed corner positions of singular link vertices,
    // deduplicated by position.
    std::map<std::pair<long long, long long>, ConeMarker> markers;
    for (const PlacedTriangle& pt : out.triangles) {
        for (int i = 0; i < 3; ++i) {
            const EndSlot end{pt.triangle.tet, pt.triangle.vertex,
                              pt.corner_vertices[static_cast<std::size_t>(i)]};
            const int lv = topo.end_class_of(end);
            const LinkVertexClass& cls = topo.link_vertices[static_cast<std::size_t>(lv)];
            const double theta = rs.edge_angles[static_cast<std::size_t>(cls.edge_class)].theta;
            if (std::abs(theta - 2 * kPi) <= tol) continue;
            const Vec2 p = pt.pos[static_cast<std::size_t>(i)];
            const auto key = std::make_pair(static_cast<long long>(std::llround(p.x * 1e9)),
                                            static_cast<long long>(std::llround(p.y * 1e9)));
            markers.emplace(key, ConeMarker{p, lv, theta});
        }
    }
    for (const auto& [key, m] : markers) out.markers.push_back(m);

    out.min_x = out.min_y = 1e300;
    out.max_x = out.max_y = -1e300;
    for (const PlacedTriangle& pt : out.triangles) {
        for (const Vec2& p : pt.pos) {
            out.min_x = std::min(out.min_x, p.x);
            out.min_y = std::min(out.min_y, p.y);
            out.max_x = std::max(out.max_x, p.x);
            out.max_y = std::max(out.max_y, p.y);
        }
    }
    return out;
}

std::string development_svg(const DevelopmentLayout& layout) {
    const double w = layout.max_x - layout.min_x;
    const double h = layout.max_y - layout.min_y;
    const double margin = 0.05 * std::max(w, h);
    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
        << fmt(layout.min_x - margin) << " " << fmt(layout.min_y - margin) << " " << fmt(w + 2 * margin)
        << " " << fmt(h + 2 * margin) << "\">\n";
    const double stroke = 0.004 * std::max(w, h);
    svg << "<g fill=\"none\" stroke=\"black\" stroke-width=\"" << fmt(stroke) << "\">\n";
    for (const PlacedTriangle& pt : layout.triangles) {
        svg << "<polygon points=\"";
        for (int i = 0; i < 3; ++i) {
            if (i) svg << " ";
            svg << fmt(pt.pos[static_cast<std::size_t>(i)].x) << "," << fmt(pt.pos[static_cast<std::size_t>(i)].y);
        }
        svg << "\"><title>tet " << pt.triangle.tet << " vertex " << pt.triangle.vertex << "</title></polygon>\n";
    }
    svg << "</g>\n";
    if (!layout.markers.empty()) {
        const double r = 0.012 * std::max(w, h);
        svg << "<g fill=\"red\" stroke=\"none\" font-size=\"" << fmt(3 * r) << "\">\n";
        for (const ConeMarker& m : layout.markers) {
            char label[64];
            std::snprintf(label, sizeof label, "%.6g", m.theta / kPi);
            svg << "<circle cx=\"" << fmt(m.pos.x) << "\" cy=\"" << fmt(m.pos.y) << "\" r=\"" << fmt(r)
                << "\"/>\n";
            svg << "<text x=\"" << fmt(m.pos.x + 1.5 * r) << "\" y=\"" << fmt(m.pos.y) << "\">theta/pi="
                << label << "</text>\n";
        }
        svg << "</g>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace teichtet
