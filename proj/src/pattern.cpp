#include "teichtet/pattern.hpp"

#include "teichtet/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace teichtet {

Perm4::Perm4(const std::array<int, 4>& image) : image_(image) {
    std::array<bool, 4> seen{false, false, false, false};
    for (int v : image_) {
        if (v < 0 || v > 3 || seen[static_cast<std::size_t>(v)])
            throw ParseError(0, 0, "vertex map is not a permutation of {0,1,2,3}");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Perm4 Perm4::inverse() const {
    std::array<int, 4> inv{};
    for (int i = 0; i < 4; ++i) inv[static_cast<std::size_t>(image_[static_cast<std::size_t>(i)])] = i;
    return Perm4(inv);
}

bool Perm4::is_even() const {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if ((*this)[i] > (*this)[j]) ++inversions;
    return inversions % 2 == 0;
}

std::string Perm4::digits() const {
    std::string s;
    for (int i = 0; i < 4; ++i) s += static_cast<char>('0' + (*this)[i]);
    return s;
}

namespace {

int slot_index(int tet_count, FaceSlot s) {
    if (s.tet < 0 || s.tet >= tet_count || s.face < 0 || s.face > 3)
        throw ParseError(0, 0, "face slot out of range");
    return s.tet * 4 + s.face;
}

FaceGluing reversed(const FaceGluing& g) { return {g.dst, g.src, g.vertex_map.inverse()}; }

}  // namespace

GluingPattern::GluingPattern(int tet_count, std::vector<FaceGluing> gluings, bool allow_free)
    : tet_count_(tet_count), allow_free_(allow_free), gluings_(std::move(gluings)) {
    if (tet_count_ <= 0) throw ParseError(0, 0, "tetrahedron count must be positive");

    for (FaceGluing& g : gluings_) {
        if (g.src == g.dst) throw ParseError(0, 0, "face glued to itself");
        if (g.vertex_map[g.src.face] != g.dst.face)
            throw ParseError(0, 0, "vertex map is not simplicial: it must send the vertex opposite the "
                                   "source face to the vertex opposite the destination face");
        if (g.dst < g.src) g = reversed(g);
    }
    std::sort(gluings_.begin(), gluings_.end(),
              [](const FaceGluing& a, const FaceGluing& b) { return a.src < b.src; });

    gluing_index_.assign(static_cast<std::size_t>(tet_count_) * 4, -1);
    for (std::size_t i = 0; i < gluings_.size(); ++i) {
        for (FaceSlot s : {gluings_[i].src, gluings_[i].dst}) {
            int& cell = gluing_index_[static_cast<std::size_t>(slot_index(tet_count_, s))];
            if (cell != -1)
                throw ParseError(0, 0, "duplicate face slot " + std::to_string(s.tet) + ":" +
                                           std::to_string(s.face));
            cell = static_cast<int>(i);
        }
    }
    if (!allow_free_) {
        for (std::size_t i = 0; i < gluing_index_.size(); ++i) {
            if (gluing_index_[i] == -1)
                throw ParseError(0, 0, "face " + std::to_string(i / 4) + ":" + std::to_string(i % 4) +
                                           " is unglued but allow_free is not set");
        }
    }
}

std::optional<FaceGluing> GluingPattern::gluing_at(FaceSlot slot) const {
    const int idx = gluing_index_[static_cast<std::size_t>(slot_index(tet_count_, slot))];
    if (idx == -1) return std::nullopt;
    const FaceGluing& g = gluings_[static_cast<std::size_t>(idx)];
    return slot == g.src ? g : reversed(g);
}

std::vector<FaceSlot> GluingPattern::free_faces() const {
    std::vector<FaceSlot> out;
    for (int t = 0; t < tet_count_; ++t)
        for (int f = 0; f < 4; ++f)
            if (gluing_index_[static_cast<std::size_t>(t * 4 + f)] == -1) out.push_back({t, f});
    return out;
}

namespace {

struct Token {
    std::string text;
    int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

int parse_int(const Token& tok, int line) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok.text, &used);
        if (used != tok.text.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, tok.column, "expected an integer, got '" + tok.text + "'");
    }
}

FaceSlot parse_slot(const Token& tok, int line, int tet_count) {
    const auto colon = tok.text.find(':');
    if (colon == std::string::npos)
        throw ParseError(line, tok.column, "expected a face slot 'TET:FACE', got '" + tok.text + "'");
    FaceSlot s;
    try {
        s.tet = std::stoi(tok.text.substr(0, colon));
        s.face = std::stoi(tok.text.substr(colon + 1));
    } catch (const std::exception&) {
        throw ParseError(line, tok.column, "malformed face slot '" + tok.text + "'");
    }
    if (s.tet < 0 || s.tet >= tet_count)
        throw ParseError(line, tok.column, "tetrahedron index out of range in '" + tok.text + "'");
    if (s.face < 0 || s.face > 3)
        throw ParseError(line, tok.column, "face index out of range in '" + tok.text + "'");
    return s;
}

Perm4 parse_perm(const Token& tok, int line) {
    const std::string prefix = "perm=";
    if (tok.text.rfind(prefix, 0) != 0)
        throw ParseError(line, tok.column, "expected 'perm=XXXX', got '" + tok.text + "'");
    const std::string digits = tok.text.substr(prefix.size());
    if (digits.size() != 4)
        throw ParseError(line, tok.column, "vertex map must list exactly four digits");
    std::array<int, 4> image{};
    for (int i = 0; i < 4; ++i) {
        const char c = digits[static_cast<std::size_t>(i)];
        if (c < '0' || c > '3')
            throw ParseError(line, tok.column, "vertex map digits must be in {0,1,2,3}");
        image[static_cast<std::size_t>(i)] = c - '0';
    }
    try {
        return Perm4(image);
    } catch (const ParseError& e) {
        throw ParseError(line, tok.column, e.what());
    }
}

}  // namespace

GluingPattern parse_pattern(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;

    int tet_count = -1;
    bool allow_free = false;
    std::vector<FaceGluing> gluings;
    std::vector<std::pair<FaceSlot, int>> declared_free;
    std::set<FaceSlot> used_slots;

    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        const std::vector<Token> tok = tokenize(raw);
        if (tok.empty()) continue;
        const std::string& kw = tok[0].text;

        if (tet_count < 0) {
            if (kw != "tetrahedra")
                throw ParseError(line_no, tok[0].column, "file must start with 'tetrahedra N'");
            if (tok.size() != 2) throw ParseError(line_no, tok[0].column, "usage: tetrahedra N");
            tet_count = parse_int(tok[1], line_no);
            if (tet_count <= 0) throw ParseError(line_no, tok[1].column, "tetrahedron count must be positive");
            continue;
        }
        if (kw == "tetrahedra") throw ParseError(line_no, tok[0].column, "duplicate 'tetrahedra' line");
        if (kw == "allow_free") {
            if (tok.size() != 1) throw ParseError(line_no, tok[0].column, "'allow_free' takes no arguments");
            allow_free = true;
        } else if (kw == "glue") {
            if (tok.size() != 4)
                throw ParseError(line_no, tok[0].column, "usage: glue A:f B:g perm=p0p1p2p3");
            FaceGluing g;
            g.src = parse_slot(tok[1], line_no, tet_count);
            g.dst = parse_slot(tok[2], line_no, tet_count);
            g.vertex_map = parse_perm(tok[3], line_no);
            if (g.src == g.dst) throw ParseError(line_no, tok[1].column, "face glued to itself");
            if (g.vertex_map[g.src.face] != g.dst.face)
                throw ParseError(line_no, tok[3].column,
                                 "vertex map is not simplicial (digit " + std::to_string(g.src.face) +
                                     " must be " + std::to_string(g.dst.face) + ")");
            for (const FaceSlot& s : {g.src, g.dst}) {
                if (!used_slots.insert(s).second)
                    throw ParseError(line_no, 0, "duplicate face slot " + std::to_string(s.tet) + ":" +
                                                     std::to_string(s.face));
            }
            gluings.push_back(g);
        } else if (kw == "free") {
            if (tok.size() != 2) throw ParseError(line_no, tok[0].column, "usage: free A:f");
            if (!allow_free)
                throw ParseError(line_no, tok[0].column, "'free' lines require allow_free");
            declared_free.emplace_back(parse_slot(tok[1], line_no, tet_count), line_no);
        } else {
            throw ParseError(line_no, tok[0].column, "unknown directive '" + kw + "'");
        }
    }
    if (tet_count < 0) throw ParseError(line_no, 0, "missing 'tetrahedra N' line");

    try {
        GluingPattern p(tet_count, std::move(gluings), allow_free);
        for (const auto& [slot, line] : declared_free) {
            if (!p.is_free(slot))
                throw ParseError(line, 0, "face " + std::to_string(slot.tet) + ":" +
                                              std::to_string(slot.face) + " declared free but is glued");
        }
        return p;
    } catch (const ParseError& e) {
        if (e.line() > 0) throw;
        throw ParseError(line_no, 0, e.what());  // attach the last line read to constructor errors
    }
}

std::string serialize_pattern(const GluingPattern& p) {
    std::ostringstream out;
    out << "tetrahedra " << p.tet_count() << "\n";
    if (p.allow_free()) out << "allow_free\n";
    for (const FaceGluing& g : p.gluings()) {
        out << "glue " << g.src.tet << ":" << g.src.face << " " << g.dst.tet << ":" << g.dst.face
            << " perm=" << g.vertex_map.digits() << "\n";
    }
    if (p.allow_free()) {
        for (const FaceSlot& s : p.free_faces()) out << "free " << s.tet << ":" << s.face << "\n";
    }
    return out.str();
}

OrientationResult check_orientable(const GluingPattern& p) {
    OrientationResult res;
    const int n = p.tet_count();
    res.signs.assign(static_cast<std::size_t>(n), 0);

    // BFS over tetrahedra; parent_gluing remembers the tree edge used to
    // reach each tetrahedron so a violation can be reported as a cycle.
    std::vector<std::optional<FaceGluing>> parent(static_cast<std::size_t>(n));
    for (int root = 0; root < n; ++root) {
        if (res.signs[static_cast<std::size_t>(root)] != 0) continue;
        res.signs[static_cast<std::size_t>(root)] = +1;
        std::vector<int> queue{root};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const int t = queue[qi];
            for (int f = 0; f < 4; ++f) {
                const auto g = p.gluing_at({t, f});
                if (!g) continue;
                // Consistency demands sign(src)*sign(dst)*parity = -1,
                // where parity is +1 for even maps.
                const int parity = g->vertex_map.is_even() ? +1 : -1;
                const int want = -parity * res.signs[static_cast<std::size_t>(t)];
                int& other = res.signs[static_cast<std::size_t>(g->dst.tet)];
                if (other == 0) {
                    other = want;
                    parent[static_cast<std::size_t>(g->dst.tet)] = *g;
                    queue.push_back(g->dst.tet);
                } else if (other != want) {
                    // Violating cycle: tree path to t, the gluing, tree path back from dst.
                    res.orientable = false;
                    std::vector<FaceGluing> up;
                    for (int a = t; parent[static_cast<std::size_t>(a)];) {
                        up.push_back(*parent[static_cast<std::size_t>(a)]);
                        a = up.back().src.tet;
                    }
                    std::reverse(up.begin(), up.end());
                    up.push_back(*g);
                    for (int a = g->dst.tet; parent[static_cast<std::size_t>(a)];) {
                        up.push_back(reversed(*parent[static_cast<std::size_t>(a)]));
                        a = up.back().dst.tet;
                    }
                    res.witness = std::move(up);
                    res.signs.clear();
                    return res;
                }
            }
        }
    }
    res.orientable = true;
    return res;
}

}  // namespace teichtet
