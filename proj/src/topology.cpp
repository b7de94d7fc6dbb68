#include "teichtet/topology.hpp"

#include "teichtet/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace teichtet {

namespace {

constexpr int kPairIndex[4][4] = {
    {-1, 0, 1, 2},
    {0, -1, 3, 4},
    {1, 3, -1, 5},
    {2, 4, 5, -1},
};

int third_index(int v, int w) {
    // Index of w within {0,1,2,3} \ {v}, in increasing order.
    return w - (w > v ? 1 : 0);
}

std::array<int, 2> complement_pair(int i, int j) {
    std::array<int, 2> out{};
    int k = 0;
    for (int v = 0; v < 4; ++v)
        if (v != i && v != j) out[static_cast<std::size_t>(k++)] = v;
    return out;  // increasing
}

struct UnionFind {
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
    std::vector<int> parent;
};

/// Directed wedge state while walking around an edge.
struct WalkState {
    int tet;
    int e0, e1;  // ordered ends of the edge
    int enter, exit;

    bool same_position(const WalkState& o) const {
        return tet == o.tet && enter == o.enter && exit == o.exit;
    }
};

std::optional<WalkState> step(const GluingPattern& p, const WalkState& s) {
    const auto g = p.gluing_at({s.tet, s.exit});
    if (!g) return std::nullopt;
    const Perm4& m = g->vertex_map;
    WalkState n;
    n.tet = g->dst.tet;
    n.e0 = m[s.e0];
    n.e1 = m[s.e1];
    n.enter = g->dst.face;
    n.exit = m[s.enter];
    return n;
}

Wedge to_wedge(const WalkState& s) { return {s.tet, s.e0, s.e1, s.enter, s.exit}; }

std::array<int, 5> wedge_key(const Wedge& w) {
    return {w.tet, std::min(w.end0, w.end1), std::max(w.end0, w.end1), w.enter, w.exit};
}

}  // namespace

int angle_pair(int i, int j) {
    static constexpr int kAngleOfPair[6] = {0, 1, 2, 2, 1, 0};
    return kAngleOfPair[kPairIndex[i][j]];
}

int encode_corner(const CornerSlot& c) { return c.tet * 4 + c.vertex; }
int encode_edge(const EdgeSlot& e) { return e.tet * 6 + kPairIndex[e.lo][e.hi]; }
int encode_end(const EndSlot& e) { return e.tet * 12 + e.vertex * 3 + third_index(e.vertex, e.other); }
int encode_side(const SideSlot& s) { return s.tet * 12 + s.vertex * 3 + third_index(s.vertex, s.face); }

const LinkSurface& Topology::link_of_cusp(int cusp_id) const {
    for (const LinkSurface& l : links)
        if (l.cusp == cusp_id) return l;
    throw UsageError("no such cusp: " + std::to_string(cusp_id));
}

int Topology::side_class_of(const SideSlot& s) const { return side_class_idx[static_cast<std::size_t>(encode_side(s))]; }
int Topology::vertex_class_of(const CornerSlot& c) const { return vertex_class_idx[static_cast<std::size_t>(encode_corner(c))]; }
int Topology::end_class_of(const EndSlot& e) const { return end_class_idx[static_cast<std::size_t>(encode_end(e))]; }
int Topology::edge_class_of(const EdgeSlot& e) const { return edge_class_idx[static_cast<std::size_t>(encode_edge(e))]; }

std::array<EndSlot, 2> Topology::side_endpoints(const SideSlot& s) {
    const auto ab = complement_pair(s.vertex, s.face);
    return {EndSlot{s.tet, s.vertex, ab[0]}, EndSlot{s.tet, s.vertex, ab[1]}};
}

namespace {

/// Walks the wedges of the edge class containing `slot`. Returns the wedge
/// chain/cycle; throws TopologyError when the walk closes with the edge ends
/// exchanged.
std::pair<std::vector<Wedge>, bool> walk_edge(const GluingPattern& p, const EdgeSlot& slot) {
    const auto faces = complement_pair(slot.lo, slot.hi);
    const WalkState start{slot.tet, slot.lo, slot.hi, faces[0], faces[1]};
    const std::size_t limit = static_cast<std::size_t>(p.tet_count()) * 6 + 1;

    std::vector<Wedge> forward{to_wedge(start)};
    WalkState cur = start;
    bool closed = false;
    while (true) {
        const auto next = step(p, cur);
        if (!next) break;  // free face: open chain
        if (next->same_position(start)) {
            if (next->e0 != start.e0)
                throw TopologyError(
                    "edge of tetrahedron " + std::to_string(slot.tet) + " (" + std::to_string(slot.lo) +
                    "," + std::to_string(slot.hi) +
                    ") is glued to itself with its ends exchanged; the pattern does not triangulate a "
                    "manifold");
            closed = true;
            break;
        }
        cur = *next;
        forward.push_back(to_wedge(cur));
        if (forward.size() > limit)
            throw TopologyError("edge walk does not close properly; the pattern does not triangulate a manifold");
    }

    if (closed) return {std::move(forward), true};

    // Open chain: walk the other way from the start, then stitch.
    std::vector<Wedge> backward;
    cur = WalkState{start.tet, start.e0, start.e1, start.exit, start.enter};
    while (true) {
        const auto next = step(p, cur);
        if (!next) break;
        cur = *next;
        backward.push_back(to_wedge(cur));
        if (backward.size() > limit) throw TopologyError("edge walk does not close properly");
    }
    std::vector<Wedge> chain;
    for (auto it = backward.rbegin(); it != backward.rend(); ++it) {
        chain.push_back({it->tet, it->end0, it->end1, it->exit, it->enter});  // re-orient forward
    }
    chain.insert(chain.end(), forward.begin(), forward.end());

    // Canonical chain direction: smaller wedge key in front.
    std::vector<Wedge> flipped;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
        flipped.push_back({it->tet, it->end0, it->end1, it->exit, it->enter});
    const auto lex_less = [](const std::vector<Wedge>& a, const std::vector<Wedge>& b) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            const auto ka = wedge_key(a[i]), kb = wedge_key(b[i]);
            if (ka != kb) return ka < kb;
        }
        return false;
    };
    if (lex_less(flipped, chain)) chain = std::move(flipped);
    return {std::move(chain), false};
}

}  // namespace

Topology analyze(const GluingPattern& p) {
    Topology topo{p, {}, {}, {}, {}, {}, 0, {}, {}, {}, {}};
    const int n = p.tet_count();

    // --- edge classes via wedge walks -------------------------------------
    topo.edge_class_idx.assign(static_cast<std::size_t>(n) * 6, -1);
    for (int t = 0; t < n; ++t) {
        for (int lo = 0; lo < 4; ++lo) {
            for (int hi = lo + 1; hi < 4; ++hi) {
                const EdgeSlot seed{t, lo, hi};
                if (topo.edge_class_idx[static_cast<std::size_t>(encode_edge(seed))] != -1) continue;
                EdgeClass ec;
                ec.id = static_cast<int>(topo.edges.size());
                auto [wedges, closed] = walk_edge(p, seed);
                ec.closed = closed;
                ec.wedges = std::move(wedges);
                for (const Wedge& w : ec.wedges) {
                    const EdgeSlot es{w.tet, std::min(w.end0, w.end1), std::max(w.end0, w.end1)};
                    int& cell = topo.edge_class_idx[static_cast<std::size_t>(encode_edge(es))];
                    if (cell != -1 && cell != ec.id)
                        throw InternalError("edge orbit inconsistency");
                    if (cell == ec.id)
                        throw TopologyError("edge wedge repeats within one walk; the pattern does not "
                                            "triangulate a manifold");
                    cell = ec.id;
                    ec.slots.push_back(es);
                }
                std::sort(ec.slots.begin(), ec.slots.end());
                topo.edges.push_back(std::move(ec));
            }
        }
    }

    // --- link vertex classes (edge ends) from the same walks --------------
    topo.end_class_idx.assign(static_cast<std::size_t>(n) * 12, -1);
    std::vector<LinkVertexClass> ends;  // two per edge, tail first
    for (EdgeClass& ec : topo.edges) {
        LinkVertexClass side0, side1;
        for (const Wedge& w : ec.wedges) {
            side0.corners.push_back({w.tet, w.end0, w.end1});
            side1.corners.push_back({w.tet, w.end1, w.end0});
        }
        std::sort(side0.corners.begin(), side0.corners.end());
        std::sort(side1.corners.begin(), side1.corners.end());
        if (side1.corners.front() < side0.corners.front()) std::swap(side0, side1);
        side0.edge_class = side1.edge_class = ec.id;
        side0.end_index = 0;
        side1.end_index = 1;
        side0.boundary = side1.boundary = !ec.closed;
        ends.push_back(std::move(side0));
        ends.push_back(std::move(side1));
    }
    std::sort(ends.begin(), ends.end(), [](const LinkVertexClass& a, const LinkVertexClass& b) {
        return a.corners.front() < b.corners.front();
    });
    for (std::size_t i = 0; i < ends.size(); ++i) {
        ends[i].id = static_cast<int>(i);
        for (const EndSlot& e : ends[i].corners) {
            int& cell = topo.end_class_idx[static_cast<std::size_t>(encode_end(e))];
            if (cell != -1) throw InternalError("end slot in two link-vertex classes");
            cell = static_cast<int>(i);
        }
        topo.edges[static_cast<std::size_t>(ends[i].edge_class)]
            .ends[static_cast<std::size_t>(ends[i].end_index)] = static_cast<int>(i);
    }
    topo.link_vertices = std::move(ends);
    for (const EdgeClass& ec : topo.edges)
        if (ec.ends[0] == -1 || ec.ends[1] == -1 || ec.ends[0] == ec.ends[1])
            throw InternalError("edge class without two distinct ends");

    // --- vertex classes (cusps) -------------------------------------------
    UnionFind cornerUf(n * 4);
    for (const FaceGluing& g : p.gluings()) {
        for (int v = 0; v < 4; ++v) {
            if (v == g.src.face) continue;
            cornerUf.unite(encode_corner({g.src.tet, v}), encode_corner({g.dst.tet, g.vertex_map[v]}));
        }
    }
    topo.vertex_class_idx.assign(static_cast<std::size_t>(n) * 4, -1);
    {
        std::map<int, std::vector<CornerSlot>> groups;
        for (int t = 0; t < n; ++t)
            for (int v = 0; v < 4; ++v) groups[cornerUf.find(encode_corner({t, v}))].push_back({t, v});
        for (auto& [root, corners] : groups) {
            VertexClass vc;
            vc.id = static_cast<int>(topo.vertices.size());
            vc.corners = corners;  // already sorted: generated in slot order
            for (const CornerSlot& c : vc.corners)
                topo.vertex_class_idx[static_cast<std::size_t>(encode_corner(c))] = vc.id;
            topo.vertices.push_back(std::move(vc));
        }
    }

    // --- side classes -------------------------------------------------------
    topo.side_class_idx.assign(static_cast<std::size_t>(n) * 12, -1);
    for (int t = 0; t < n; ++t) {
        for (int v = 0; v < 4; ++v) {
            for (int f = 0; f < 4; ++f) {
                if (f == v) continue;
                const SideSlot s{t, v, f};
                if (topo.side_class_idx[static_cast<std::size_t>(encode_side(s))] != -1) continue;
                SideClass sc;
                sc.id = static_cast<int>(topo.sides.size());
                sc.slots.push_back(s);
                if (const auto g = p.gluing_at({t, f})) {
                    sc.slots.push_back({g->dst.tet, g->vertex_map[v], g->dst.face});
                    sc.boundary = false;
                } else {
                    sc.boundary = true;
                }
                std::sort(sc.slots.begin(), sc.slots.end());
                sc.cusp = topo.vertex_class_idx[static_cast<std::size_t>(encode_corner({t, v}))];
                for (const SideSlot& slot : sc.slots) {
                    const int cusp = topo.vertex_class_idx[static_cast<std::size_t>(encode_corner({slot.tet, slot.vertex}))];
                    if (cusp != sc.cusp) throw InternalError("side class spans two cusps");
                    int& cell = topo.side_class_idx[static_cast<std::size_t>(encode_side(slot))];
                    if (cell != -1) throw InternalError("side slot in two side classes");
                    cell = sc.id;
                }
                topo.sides.push_back(std::move(sc));
            }
        }
    }

    // cusp of each link vertex
    for (LinkVertexClass& lv : topo.link_vertices) {
        lv.cusp = topo.vertex_class_idx[static_cast<std::size_t>(
            encode_corner({lv.corners.front().tet, lv.corners.front().vertex}))];
        for (const EndSlot& e : lv.corners)
            if (topo.vertex_class_idx[static_cast<std::size_t>(encode_corner({e.tet, e.vertex}))] != lv.cusp)
                throw InternalError("link vertex spans two cusps");
    }

    // --- link surfaces ------------------------------------------------------
    for (const VertexClass& vc : topo.vertices) {
        LinkSurface ls;
        ls.cusp = vc.id;
        ls.triangles = vc.corners;
        for (const SideClass& sc : topo.sides)
            if (sc.cusp == vc.id) {
                ls.sides.push_back(sc.id);
                if (sc.boundary) ls.boundary_sides.push_back(sc.id);
            }
        for (const LinkVertexClass& lv : topo.link_vertices)
            if (lv.cusp == vc.id) ls.link_vertices.push_back(lv.id);
        ls.closed = ls.boundary_sides.empty();
        ls.euler_char = static_cast<int>(ls.link_vertices.size()) - static_cast<int>(ls.sides.size()) +
                        static_cast<int>(ls.triangles.size());

        // Orientability: assign each triangle a sign and require identified
        // sides to receive opposite induced directions.
        std::map<CornerSlot, int> sign;
        ls.orientable = true;
        const auto direction_plus = [](const SideSlot& s) {
            // Endpoint order (from, to) induced by the +1 orientation, which
            // is the increasing cyclic order of the corner indices.
            const auto ab = complement_pair(s.vertex, s.face);
            // corners of the triangle in increasing order
            std::array<int, 3> w{};
            int k = 0;
            for (int x = 0; x < 4; ++x)
                if (x != s.vertex) w[static_cast<std::size_t>(k++)] = x;
            const bool wrap = (ab[0] == w[0] && ab[1] == w[2]);
            return wrap ? std::pair<int, int>{ab[1], ab[0]} : std::pair<int, int>{ab[0], ab[1]};
        };
        for (const CornerSlot& seed : ls.triangles) {
            if (sign.count(seed)) continue;
            sign[seed] = +1;
            std::vector<CornerSlot> queue{seed};
            for (std::size_t qi = 0; qi < queue.size() && ls.orientable; ++qi) {
                const CornerSlot tri = queue[qi];
                for (int f = 0; f < 4; ++f) {
                    if (f == tri.vertex) continue;
                    const auto g = p.gluing_at({tri.tet, f});
                    if (!g) continue;
                    const SideSlot s1{tri.tet, tri.vertex, f};
                    const CornerSlot tri2{g->dst.tet, g->vertex_map[tri.vertex]};
                    const SideSlot s2{tri2.tet, tri2.vertex, g->dst.face};
                    const auto d1 = direction_plus(s1);
                    const auto d2 = direction_plus(s2);
                    // Image of d1 under the gluing, expressed in tri2's corners.
                    const std::pair<int, int> d1img{g->vertex_map[d1.first], g->vertex_map[d1.second]};
                    const int same = (d1img == d2) ? +1 : -1;
                    const int want = -same * sign[tri];
                    auto it = sign.find(tri2);
                    if (it == sign.end()) {
                        sign[tri2] = want;
                        queue.push_back(tri2);
                    } else if (it->second != want) {
                        ls.orientable = false;
                        break;
                    }
                }
            }
            if (!ls.orientable) break;
        }
        if (ls.closed && ls.orientable) ls.genus = (2 - ls.euler_char) / 2;
        topo.links.push_back(std::move(ls));
    }

    topo.face_classes = static_cast<int>(p.gluings().size()) + static_cast<int>(p.free_faces().size());

    // --- global sanity checks ----------------------------------------------
    std::size_t total_triangles = 0, total_vertices = 0, interior = 0, boundary = 0;
    for (const LinkSurface& ls : topo.links) {
        total_triangles += ls.triangles.size();
        total_vertices += ls.link_vertices.size();
        boundary += ls.boundary_sides.size();
        interior += ls.sides.size() - ls.boundary_sides.size();
    }
    if (total_triangles != static_cast<std::size_t>(n) * 4) throw InternalError("link triangles do not partition corners");
    if (3 * total_triangles != 2 * interior + boundary) throw InternalError("side handshake failed");
    if (total_vertices != 2 * topo.edges.size()) throw InternalError("link vertices do not pair with edge ends");

    return topo;
}

std::vector<EdgeClass> compute_edge_classes(const GluingPattern& p) { return analyze(p).edges; }
std::vector<VertexClass> compute_cusps(const GluingPattern& p) { return analyze(p).vertices; }
std::vector<LinkSurface> build_link_surfaces(const GluingPattern& p) { return analyze(p).links; }

}  // namespace teichtet
