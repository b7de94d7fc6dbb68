#pragma once

// Test-support: first homology of the quotient from the dual spine (one
// vertex per tetrahedron, one edge per face gluing, one 2-cell per edge
// class glued along its wedge cycle). Used to pin down which manifold a
// frozen builtin table encodes; knot complements have H1 = Z and the
// figure-eight sister carries 5-torsion.

#include "teichtet/pattern.hpp"
#include "teichtet/topology.hpp"

#include <cstdlib>
#include <vector>

namespace teichtet::testsupport {

/// Invariant factors of an integer matrix (Smith normal form diagonal).
inline std::vector<long long> smith_invariants(std::vector<std::vector<long long>> m) {
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<long long> factors;
    std::size_t r = 0, c = 0;
    while (r < rows && c < cols) {
        std::size_t pr = rows, pc = cols;
        long long best = 0;
        for (std::size_t i = r; i < rows; ++i)
            for (std::size_t j = c; j < cols; ++j)
                if (m[i][j] != 0 && (best == 0 || std::llabs(m[i][j]) < best)) {
                    best = std::llabs(m[i][j]);
                    pr = i;
                    pc = j;
                }
        if (pr == rows) break;
        std::swap(m[r], m[pr]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][c], m[i][pc]);
        bool again = true;
        while (again) {
            again = false;
            for (std::size_t i = r + 1; i < rows; ++i) {
                const long long q = m[i][c] / m[r][c];
                for (std::size_t j = c; j < cols; ++j) m[i][j] -= q * m[r][j];
                if (m[i][c] != 0) {
                    std::swap(m[r], m[i]);
                    again = true;
                }
            }
            for (std::size_t j = c + 1; j < cols; ++j) {
                const long long q = m[r][j] / m[r][c];
                for (std::size_t i = r; i < rows; ++i) m[i][j] -= q * m[i][c];
                if (m[r][j] != 0) {
                    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][c], m[i][j]);
                    again = true;
                }
            }
        }
        factors.push_back(std::llabs(m[r][c]));
        ++r;
        ++c;
    }
    return factors;
}

struct Homology {
    int free_rank = 0;
    std::vector<long long> torsion;  // invariant factors > 1
};

inline Homology first_homology(const GluingPattern& p) {
    const Topology topo = analyze(p);
    const auto& gl = p.gluings();
    const std::size_t faces = gl.size(), tets = static_cast<std::size_t>(p.tet_count());

    std::vector<std::vector<long long>> d1(tets, std::vector<long long>(faces, 0));
    for (std::size_t j = 0; j < faces; ++j) {
        d1[static_cast<std::size_t>(gl[j].dst.tet)][j] += 1;
        d1[static_cast<std::size_t>(gl[j].src.tet)][j] -= 1;
    }
    std::vector<std::vector<long long>> d2(faces, std::vector<long long>(topo.edges.size(), 0));
    for (const EdgeClass& e : topo.edges) {
        for (const Wedge& w : e.wedges) {
            const auto g = p.gluing_at({w.tet, w.exit});
            FaceGluing canon = *g;
            int sign = +1;
            if (!(canon.src < canon.dst)) {
                std::swap(canon.src, canon.dst);
                sign = -1;
            }
            for (std::size_t j = 0; j < faces; ++j) {
                if (gl[j].src == canon.src && gl[j].dst == canon.dst) {
                    d2[j][static_cast<std::size_t>(e.id)] += sign;
                    break;
                }
            }
        }
    }
    const auto f1 = smith_invariants(d1);
    const auto f2 = smith_invariants(d2);
    std::size_t rank1 = 0, rank2 = 0;
    for (long long x : f1)
        if (x) ++rank1;
    Homology h;
    for (long long x : f2) {
        if (x) ++rank2;
        if (x > 1) h.torsion.push_back(x);
    }
    h.free_rank = static_cast<int>(faces - rank1 - rank2);
    return h;
}

}  // namespace teichtet::testsupport
