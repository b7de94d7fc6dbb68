#include "teichtet/teich.hpp"

#include "teichtet/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace teichtet {

namespace {

std::array<int, 2> others(int u, int v) {
    std::array<int, 2> out{};
    int k = 0;
    for (int x = 0; x < 4; ++x)
        if (x != u && x != v) out[static_cast<std::size_t>(k++)] = x;
    return out;
}

}  // namespace

SimilaritySystem build_similarity_system(const Topology& topo) {
    SimilaritySystem sys;
    sys.variables = topo.sides.size();
    sys.matrix = RatMatrix(0, sys.variables);

    const auto cls = [&](int t, int v, int f) { return topo.side_class_of({t, v, f}); };

    for (int t = 0; t < topo.pattern.tet_count(); ++t) {
        for (int v = 1; v < 4; ++v) {
            const int u = 0;
            const auto [w1, w2] = others(u, v);
            // Side correspondence for the corner pair (u, v).
            const std::array<std::pair<int, int>, 3> corr{
                std::pair<int, int>{cls(t, u, v), cls(t, v, u)},
                std::pair<int, int>{cls(t, u, w1), cls(t, v, w2)},
                std::pair<int, int>{cls(t, u, w2), cls(t, v, w1)},
            };
            for (int ratio = 0; ratio < 2; ++ratio) {
                RatVector row(sys.variables, Rational(0));
                row[static_cast<std::size_t>(corr[0].first)] += 1;
                row[static_cast<std::size_t>(corr[0].second)] -= 1;
                const auto& other = corr[static_cast<std::size_t>(1 + ratio)];
                row[static_cast<std::size_t>(other.first)] -= 1;
                row[static_cast<std::size_t>(other.second)] += 1;
                sys.matrix.append_row(row);
                sys.tags.push_back({t, u, v, ratio});
            }
        }
    }
    return sys;
}

KernelChart kernel_chart(const Topology& topo, const SimilaritySystem& sys,
                         const std::optional<std::vector<int>>& gauge_sides) {
    KernelChart chart;
    chart.kernel_basis = nullspace(sys.matrix);

    const std::size_t cusps = topo.vertices.size();
    for (std::size_t i = 0; i < cusps; ++i) {
        RatVector ind(sys.variables, Rational(0));
        for (const SideClass& sc : topo.sides)
            if (sc.cusp == static_cast<int>(i)) ind[static_cast<std::size_t>(sc.id)] = 1;
        if (!in_nullspace(sys.matrix, ind))
            throw InternalError("cusp scale vector is not in the kernel of the similarity system");
        chart.cusp_scale_vectors.push_back(std::move(ind));
    }
    chart.dim = static_cast<int>(chart.kernel_basis.size()) - static_cast<int>(cusps);
    if (chart.dim < 0) throw InternalError("kernel smaller than the cusp-scale subspace");

    // Gauge sides: one per cusp, defaulting to the cusp's smallest side class.
    chart.gauge_sides.assign(cusps, -1);
    if (gauge_sides) {
        if (gauge_sides->size() != cusps) throw UsageError("need exactly one gauge side per cusp");
        for (int g : *gauge_sides) {
            if (g < 0 || g >= static_cast<int>(topo.sides.size())) throw UsageError("gauge side out of range");
            int& cell = chart.gauge_sides[static_cast<std::size_t>(topo.sides[static_cast<std::size_t>(g)].cusp)];
            if (cell != -1) throw UsageError("two gauge sides on one cusp");
            cell = g;
        }
        for (int g : chart.gauge_sides)
            if (g == -1) throw UsageError("some cusp has no gauge side");
    } else {
        for (const SideClass& sc : topo.sides) {
            int& cell = chart.gauge_sides[static_cast<std::size_t>(sc.cusp)];
            if (cell == -1) cell = sc.id;
        }
    }

    // Subtract per-cusp scalings so every kernel vector vanishes on the gauge
    // sides, then row-reduce for a deterministic basis of the complement.
    RatMatrix shifted(0, sys.variables);
    for (const RatVector& b : chart.kernel_basis) {
        RatVector v = b;
        for (std::size_t i = 0; i < cusps; ++i) {
            const Rational g = v[static_cast<std::size_t>(chart.gauge_sides[i])];
            if (g == 0) continue;
            const RatVector& ind = chart.cusp_scale_vectors[i];
            for (std::size_t c = 0; c < v.size(); ++c)
                if (ind[c] != 0) v[c] -= g * ind[c];
        }
        shifted.append_row(v);
    }
    const ReducedForm red = reduce(shifted);
    if (red.rank != static_cast<std::size_t>(chart.dim))
        throw InternalError("normalized kernel basis has the wrong rank");
    for (std::size_t r = 0; r < red.rank; ++r) chart.normalized_basis.push_back(red.rref.row(r));
    chart.base_point.assign(sys.variables, Rational(0));
    return chart;
}

int dimension_formula(const Topology& topo) {
    if (!topo.pattern.is_closed())
        throw UsageError("dimension formula requires a closed pattern (no free faces)");
    return static_cast<int>(topo.edges.size()) - static_cast<int>(topo.vertices.size());
}

SkeletonReport dimension_skeleton(const Topology& topo) {
    if (!topo.pattern.is_closed())
        throw UsageError("skeleton dimension requires a closed pattern (no free faces)");
    SkeletonReport rep;
    rep.d0 = 3 * topo.face_classes - static_cast<int>(topo.edges.size());

    for (const LinkSurface& ls : topo.links) {
        // First Betti number of the link 1-skeleton: sides are graph edges
        // joining the link-vertex classes of their endpoints.
        std::map<int, int> comp;  // link vertex id -> component root (union-find by map)
        for (int lv : ls.link_vertices) comp[lv] = lv;
        const std::function<int(int)> find = [&](int a) {
            while (comp[a] != a) a = comp[a] = comp[comp[a]];
            return a;
        };
        int components = static_cast<int>(ls.link_vertices.size());
        for (int sid : ls.sides) {
            const SideClass& sc = topo.sides[static_cast<std::size_t>(sid)];
            const auto ends = Topology::side_endpoints(sc.slots.front());
            const int a = find(topo.end_class_of(ends[0]));
            const int b = find(topo.end_class_of(ends[1]));
            if (a != b) {
                comp[std::max(a, b)] = std::min(a, b);
                --components;
            }
        }
        rep.r.push_back(static_cast<int>(ls.sides.size()) - static_cast<int>(ls.link_vertices.size()) +
                        components);
    }
    rep.dim = rep.d0 - std::accumulate(rep.r.begin(), rep.r.end(), 0);
    return rep;
}

AngleRelationSystem angle_relation_system(const Topology& topo) {
    AngleRelationSystem sys;
    sys.matrix = RatMatrix(topo.vertices.size(), topo.edges.size());
    for (const LinkSurface& ls : topo.links) {
        sys.cusp_ids.push_back(ls.cusp);
        // chi of the double: 2 chi(S) whether or not S has boundary.
        sys.rhs_pi.push_back(Rational(2 * ls.euler_char));
        for (int lv : ls.link_vertices) {
            const LinkVertexClass& v = topo.link_vertices[static_cast<std::size_t>(lv)];
            sys.matrix.at(static_cast<std::size_t>(ls.cusp), static_cast<std::size_t>(v.edge_class)) += 1;
        }
    }
    return sys;
}

BasisEdges basis_edges(const Topology& topo) {
    if (!topo.pattern.is_closed())
        throw UsageError("basis edges require a closed pattern (no free faces)");
    const AngleRelationSystem sys = angle_relation_system(topo);
    const std::size_t cusps = topo.vertices.size();
    const std::size_t edges = topo.edges.size();

    if (rank(sys.matrix) != cusps)
        throw TopologyError(
            "FINDING: angle relation system has rank " + std::to_string(rank(sys.matrix)) +
            " instead of the cusp count " + std::to_string(cusps) +
            "; this contradicts the expected linear independence of the Gauss-Bonnet relations");

    // In terms of angles: sum_e M[i][e] theta_e = pi (2 sum_e M[i][e] - rhs_pi_i).
    RatMatrix aug(cusps, edges + 1);
    for (std::size_t i = 0; i < cusps; ++i) {
        Rational rowsum(0);
        for (std::size_t e = 0; e < edges; ++e) {
            aug.at(i, e) = sys.matrix.at(i, e);
            rowsum += sys.matrix.at(i, e);
        }
        aug.at(i, edges) = 2 * rowsum - sys.rhs_pi[i];
    }
    const ReducedForm red = reduce(aug);
    if (red.rank != cusps || (!red.pivot_cols.empty() && red.pivot_cols.back() == edges))
        throw InternalError("inconsistent angle relation system");

    BasisEdges out;
    std::vector<bool> is_pivot(edges, false);
    for (std::size_t c : red.pivot_cols) is_pivot[c] = true;
    for (std::size_t e = 0; e < edges; ++e)
        if (!is_pivot[e]) out.basis.push_back(static_cast<int>(e));

    for (std::size_t e = 0; e < edges; ++e) {
        AngleExpression ex;
        ex.edge = static_cast<int>(e);
        if (!is_pivot[e]) {
            ex.terms.emplace_back(static_cast<int>(e), Rational(1));
        } else {
            const std::size_t row = static_cast<std::size_t>(
                std::find(red.pivot_cols.begin(), red.pivot_cols.end(), e) - red.pivot_cols.begin());
            ex.const_pi = red.rref.at(row, edges);
            for (int b : out.basis) {
                const Rational c = red.rref.at(row, static_cast<std::size_t>(b));
                if (c != 0) ex.terms.emplace_back(b, -c);
            }
        }
        out.expressions.push_back(std::move(ex));
    }
    return out;
}

SimilaritySystem build_similarity_system(const GluingPattern& p) { return build_similarity_system(analyze(p)); }
KernelChart kernel_basis(const GluingPattern& p) {
    const Topology topo = analyze(p);
    return kernel_chart(topo, build_similarity_system(topo));
}
int dimension_formula(const GluingPattern& p) { return dimension_formula(analyze(p)); }
SkeletonReport dimension_skeleton(const GluingPattern& p) { return dimension_skeleton(analyze(p)); }
AngleRelationSystem angle_relation_system(const GluingPattern& p) { return angle_relation_system(analyze(p)); }
BasisEdges basis_edges(const GluingPattern& p) { return basis_edges(analyze(p)); }

}  // namespace teichtet
