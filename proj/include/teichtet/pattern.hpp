#pragma once

// Combinatorial gluing patterns of ideal tetrahedra.
//
// Conventions used throughout the project:
//   * Tetrahedron vertices are 0..3. Face f is the face opposite vertex f,
//     i.e. the face spanned by the other three vertices.
//   * A gluing identifies face f of tetrahedron A with face g of
//     tetrahedron B via a permutation p of {0,1,2,3} with p[f] = g; vertex i
//     of A maps to vertex p[i] of B. A face is never glued to itself, but
//     two faces of the same tetrahedron may be glued.
//   * Gluings are stored once per unordered pair of face slots, normalized
//     so the smaller slot (tet, face) is the source; the inverse map is
//     derived on demand.
//   * Orientability: each tetrahedron gets a sign and a gluing is consistent
//     when sign(src) * sign(dst) * parity(p) = -1, so face gluings reverse
//     orientation.
//
// File format (UTF-8, line based, '#' starts a comment):
//     tetrahedra N
//     allow_free            (optional)
//     glue A:f B:g perm=p0p1p2p3
//     free A:f              (optional, only with allow_free)
// Canonical serialization lists gluings sorted by source slot and, when
// allow_free is set, every free face explicitly.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace teichtet {

/// Permutation of {0,1,2,3}.
class Perm4 {
public:
    Perm4() : image_{0, 1, 2, 3} {}
    explicit Perm4(const std::array<int, 4>& image);

    int operator[](int i) const { return image_[static_cast<std::size_t>(i)]; }
    Perm4 inverse() const;
    bool is_even() const;
    bool operator==(const Perm4&) const = default;

    std::string digits() const;

private:
    std::array<int, 4> image_;
};

/// A face of a tetrahedron: face `face` of tetrahedron `tet`.
struct FaceSlot {
    int tet = 0;
    int face = 0;
    auto operator<=>(const FaceSlot&) const = default;
};

struct FaceGluing {
    FaceSlot src;
    FaceSlot dst;
    Perm4 vertex_map;  // vertices of src.tet -> vertices of dst.tet, maps src.face to dst.face

    bool operator==(const FaceGluing&) const = default;
};

class GluingPattern {
public:
    /// Validates and normalizes (src < dst per gluing, gluings sorted by
    /// src). Throws ParseError on duplicate slots, non-simplicial maps,
    /// self-gluings, or unglued faces when allow_free is false.
    GluingPattern(int tet_count, std::vector<FaceGluing> gluings, bool allow_free);

    int tet_count() const noexcept { return tet_count_; }
    bool allow_free() const noexcept { return allow_free_; }
    const std::vector<FaceGluing>& gluings() const noexcept { return gluings_; }

    /// The gluing attached to a face slot, oriented so `slot` is the source;
    /// nullopt for a free face.
    std::optional<FaceGluing> gluing_at(FaceSlot slot) const;

    bool is_free(FaceSlot slot) const { return !gluing_at(slot).has_value(); }
    std::vector<FaceSlot> free_faces() const;
    bool is_closed() const { return free_faces().empty(); }

    bool operator==(const GluingPattern&) const = default;

private:
    int tet_count_;
    bool allow_free_;
    std::vector<FaceGluing> gluings_;
    std::vector<int> gluing_index_;  // per face slot: index into gluings_, -1 if free
};

GluingPattern parse_pattern(const std::string& text);
std::string serialize_pattern(const GluingPattern& p);

/// Per-tetrahedron signs making every gluing orientation reversing, or a
/// witness cycle of gluings whose parities cannot be satisfied.
struct OrientationResult {
    bool orientable = false;
    std::vector<int> signs;           // +1/-1 per tetrahedron (orientable case)
    std::vector<FaceGluing> witness;  // inconsistent cycle (non-orientable case)
};

OrientationResult check_orientable(const GluingPattern& p);

/// Built-in example patterns. Known names: example1_thurston, figure_eight,
/// example3_genus3, whitehead. Throws UsageError for unknown names.
GluingPattern builtin(const std::string& name);

struct BuiltinInfo {
    std::string name;
    std::string description;
};
std::vector<BuiltinInfo> builtin_catalog();

}  // namespace teichtet
