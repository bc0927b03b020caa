#include "fenceq/surface.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace fenceq {

namespace {

std::string diag_str(const Diagonal& d) {
    return "(" + std::to_string(d.a) + "," + std::to_string(d.b) + ")";
}

// true iff x lies strictly inside the counterclockwise open interval (u, v).
bool in_ccw_open(int x, int u, int v, int n) {
    int span = (v - u + n) % n;
    int off = (x - u + n) % n;
    return off > 0 && off < span;
}

bool boundary_adjacent(int a, int b, int n) {
    int d = (b - a + n) % n;
    return d == 0 || d == 1 || d == n - 1;
}

}  // namespace

PolygonTriangulation::PolygonTriangulation(int n, std::vector<Diagonal> diagonals)
    : n_(n), diagonals_(std::move(diagonals)) {
    if (n_ < 3) throw ConstructionError("polygon needs at least 3 vertices");
    std::sort(diagonals_.begin(), diagonals_.end());
    if (static_cast<int>(diagonals_.size()) != n_ - 3)
        throw ConstructionError("a triangulation of an " + std::to_string(n_) + "-gon needs " +
                                std::to_string(n_ - 3) + " diagonals");
    for (size_t i = 0; i < diagonals_.size(); ++i) {
        const Diagonal& d = diagonals_[i];
        if (d.a < 1 || d.b > n_) throw ConstructionError("diagonal " + diag_str(d) + " out of range");
        if (boundary_adjacent(d.a, d.b, n_))
            throw ConstructionError("diagonal " + diag_str(d) + " is a boundary edge");
        if (i > 0 && diagonals_[i - 1] == d)
            throw ConstructionError("duplicate diagonal " + diag_str(d));
        for (size_t j = 0; j < i; ++j)
            if (arcs_cross(diagonals_[j], d, n_))
                throw ConstructionError("diagonals " + diag_str(diagonals_[j]) + " and " +
                                        diag_str(d) + " cross");
    }
}

int PolygonTriangulation::index_of(const Diagonal& d) const {
    auto it = std::lower_bound(diagonals_.begin(), diagonals_.end(), d);
    if (it != diagonals_.end() && *it == d) return static_cast<int>(it - diagonals_.begin());
    return -1;
}

std::vector<std::array<int, 3>> PolygonTriangulation::triangles() const {
    auto is_edge = [&](int u, int v) {
        return boundary_adjacent(u, v, n_) ? (u != v) : contains(Diagonal(u, v));
    };
    std::vector<std::array<int, 3>> out;
    for (int u = 1; u <= n_; ++u)
        for (int v = u + 1; v <= n_; ++v)
            for (int w = v + 1; w <= n_; ++w)
                if (is_edge(u, v) && is_edge(v, w) && is_edge(u, w)) out.push_back({u, v, w});
    return out;
}

std::pair<int, int> PolygonTriangulation::quad_apexes(const Diagonal& d) const {
    if (!contains(d)) throw NotADiagonal(diag_str(d) + " is not in the triangulation");
    auto is_edge = [&](int u, int v) {
        return boundary_adjacent(u, v, n_) || contains(Diagonal(u, v));
    };
    int right = 0, left = 0;
    for (int w = 1; w <= n_; ++w) {
        if (w == d.a || w == d.b) continue;
        if (!is_edge(d.a, w) || !is_edge(d.b, w)) continue;
        // A triangle of the triangulation: verify no diagonal separates w
        // from d (all pairwise edges suffice in a triangulated polygon).
        if (in_ccw_open(w, d.a, d.b, n_)) right = right == 0 ? w : right;
        else left = left == 0 ? w : left;
    }
    if (right == 0 || left == 0)
        throw ConstructionError("diagonal " + diag_str(d) + " lacks adjacent triangles");
    return {right, left};
}

bool arcs_cross(const Arc& a, const Arc& b, int n) {
    if (a.a == b.a || a.a == b.b || a.b == b.a || a.b == b.b) return false;
    return in_ccw_open(b.a, a.a, a.b, n) != in_ccw_open(b.b, a.a, a.b, n);
}

std::vector<Diagonal> crossed_diagonals(const PolygonTriangulation& t, const Arc& g) {
    const int n = t.vertex_count();
    if (g.a == g.b || g.a < 1 || g.b > n) throw ConstructionError("invalid arc " + diag_str(g));
    if (boundary_adjacent(g.a, g.b, n))
        throw ConstructionError("arc " + diag_str(g) + " is a boundary edge");
    if (t.contains(g)) return {};

    const auto tris = t.triangles();
    auto sides_of = [](const std::array<int, 3>& tri) {
        return std::array<Diagonal, 3>{Diagonal(tri[0], tri[1]), Diagonal(tri[1], tri[2]),
                                       Diagonal(tri[2], tri[0])};
    };
    auto has_vertex = [](const std::array<int, 3>& tri, int v) {
        return tri[0] == v || tri[1] == v || tri[2] == v;
    };
    auto has_side = [&](const std::array<int, 3>& tri, const Diagonal& s) {
        auto sides = sides_of(tri);
        return std::find(sides.begin(), sides.end(), s) != sides.end();
    };
    auto beyond = [&](int v, const Diagonal& s, int inner) {
        // v lies in the open arc of s away from the triangle vertex `inner`
        return v != s.a && v != s.b && in_ccw_open(v, s.a, s.b, n) != in_ccw_open(inner, s.a, s.b, n);
    };

    // Start in the triangle at g.a whose opposite side separates it from g.b.
    int cur = -1;
    for (size_t i = 0; i < tris.size(); ++i) {
        if (!has_vertex(tris[i], g.a)) continue;
        int u = 0, v = 0;
        for (int x : tris[i])
            if (x != g.a) (u == 0 ? u : v) = x;
        if (beyond(g.b, Diagonal(u, v), g.a)) {
            cur = static_cast<int>(i);
            break;
        }
    }
    if (cur < 0) throw InternalError("no starting triangle for arc walk");

    std::vector<Diagonal> out;
    int guard = 0;
    while (!has_vertex(tris[static_cast<size_t>(cur)], g.b)) {
        if (++guard > n) throw InternalError("arc walk failed to terminate");
        const auto& tri = tris[static_cast<size_t>(cur)];
        bool advanced = false;
        for (const Diagonal& s : sides_of(tri)) {
            if (t.index_of(s) < 0) continue;
            if (!out.empty() && s == out.back()) continue;
            const int other = tri[0] + tri[1] + tri[2] - s.a - s.b;
            if (!beyond(g.b, s, other)) continue;
            int next = -1;
            for (size_t i = 0; i < tris.size(); ++i)
                if (static_cast<int>(i) != cur && has_side(tris[i], s)) {
                    next = static_cast<int>(i);
                    break;
                }
            if (next < 0) throw InternalError("diagonal with a single triangle");
            out.push_back(s);
            cur = next;
            advanced = true;
            break;
        }
        if (!advanced) throw InternalError("arc walk found no exit side");
    }
    return out;
}

std::vector<std::vector<int>> signed_adjacency(const PolygonTriangulation& t) {
    const int k = static_cast<int>(t.diagonals().size());
    std::vector<std::vector<int>> B(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(k), 0));
    for (const auto& tri : t.triangles()) {
        // Sides in counterclockwise order; clockwise successor of side s_j is
        // s_{j-1}, and b[i][j] = +1 when side j follows side i clockwise.
        std::array<Diagonal, 3> sides = {Diagonal(tri[0], tri[1]), Diagonal(tri[1], tri[2]),
                                         Diagonal(tri[2], tri[0])};
        for (int j = 0; j < 3; ++j) {
            int i1 = t.index_of(sides[static_cast<size_t>((j + 1) % 3)]);
            int i2 = t.index_of(sides[static_cast<size_t>(j)]);
            if (i1 >= 0 && i2 >= 0) {
                B[static_cast<size_t>(i1)][static_cast<size_t>(i2)] += 1;
                B[static_cast<size_t>(i2)][static_cast<size_t>(i1)] -= 1;
            }
        }
    }
    return B;
}

Diagonal flipped_diagonal(const PolygonTriangulation& t, const Diagonal& d) {
    auto [right, left] = t.quad_apexes(d);
    return Diagonal(right, left);
}

PolygonTriangulation flip(const PolygonTriangulation& t, const Diagonal& d) {
    Diagonal replacement = flipped_diagonal(t, d);
    std::vector<Diagonal> diags;
    for (const Diagonal& x : t.diagonals())
        if (x != d) diags.push_back(x);
    diags.push_back(replacement);
    return PolygonTriangulation(t.vertex_count(), std::move(diags));
}

void validate_curve(const LamCurve& c, int n) {
    for (const CurveEnd& e : {c.from, c.to})
        if (e.edge < 1 || e.edge > n)
            throw InvalidCurve("curve endpoint edge " + std::to_string(e.edge) + " out of range");
    int dist = (c.to.edge - c.from.edge + n) % n;
    if (dist < 2 || dist > n - 2)
        throw InvalidCurve("curve endpoints must be at cyclic edge distance >= 2");
}

namespace {

// Position of a curve endpoint in the cyclic boundary order; slots separate
// endpoints sharing an edge, counterclockwise.
long long end_position(const CurveEnd& e) {
    constexpr long long kSlotSpan = 1 << 20;
    return static_cast<long long>(e.edge) * kSlotSpan + e.slot;
}

bool curves_cross(const LamCurve& c, const LamCurve& d, int n) {
    constexpr long long kSlotSpan = 1 << 20;
    const long long period = static_cast<long long>(n + 1) * kSlotSpan;
    auto in_open = [&](long long x, long long u, long long v) {
        long long span = ((v - u) % period + period) % period;
        long long off = ((x - u) % period + period) % period;
        return off > 0 && off < span;
    };
    long long c1 = end_position(c.from), c2 = end_position(c.to);
    long long d1 = end_position(d.from), d2 = end_position(d.to);
    if (c1 == d1 || c1 == d2 || c2 == d1 || c2 == d2)
        throw InvalidCurve("two curves share an endpoint slot");
    return in_open(d1, c1, c2) != in_open(d2, c1, c2);
}

}  // namespace

void validate_lamination(const Lamination& lam, int n) {
    for (const LamCurve& c : lam) validate_curve(c, n);
    for (size_t i = 0; i < lam.size(); ++i)
        for (size_t j = i + 1; j < lam.size(); ++j)
            if (curves_cross(lam[i], lam[j], n))
                throw InvalidCurve("curves within one lamination cross");
}

namespace {

// One diagonal crossed by a lamination curve, together with the entry and
// exit sides of that diagonal's quadrilateral (boundary edges included).
struct CurveCrossing {
    Diagonal diag{1, 3};
    Diagonal enter{1, 2};
    Diagonal exit{1, 2};
};

std::vector<CurveCrossing> walk_curve(const PolygonTriangulation& t, const LamCurve& c) {
    const int n = t.vertex_count();
    validate_curve(c, n);
    auto edge_of = [&](int k) { return Diagonal(k, k % n + 1); };
    const Diagonal start = edge_of(c.from.edge);
    const Diagonal target = edge_of(c.to.edge);

    const auto tris = t.triangles();
    auto sides_of = [](const std::array<int, 3>& tri) {
        return std::array<Diagonal, 3>{Diagonal(tri[0], tri[1]), Diagonal(tri[1], tri[2]),
                                       Diagonal(tri[2], tri[0])};
    };
    auto has_side = [&](const std::array<int, 3>& tri, const Diagonal& s) {
        auto sides = sides_of(tri);
        return std::find(sides.begin(), sides.end(), s) != sides.end();
    };
    // The open segment of boundary edge e lies inside the ccw open arc (u, v).
    auto segment_in_arc = [&](int e, int u, int v) {
        return (e - u + n) % n < (v - u + n) % n;
    };

    int cur = -1;
    for (size_t i = 0; i < tris.size(); ++i)
        if (has_side(tris[i], start)) {
            cur = static_cast<int>(i);
            break;
        }
    if (cur < 0) throw InternalError("start edge missing from the triangulation");

    std::vector<CurveCrossing> out;
    int guard = 0;
    while (!has_side(tris[static_cast<size_t>(cur)], target)) {
        if (++guard > n) throw InternalError("curve walk failed to terminate");
        const auto& tri = tris[static_cast<size_t>(cur)];
        bool advanced = false;
        for (const Diagonal& s : sides_of(tri)) {
            if (t.index_of(s) < 0) continue;                      // boundary side
            if (!out.empty() && s == out.back().diag) continue;   // entry side
            const int other = tri[0] + tri[1] + tri[2] - s.a - s.b;
            int fu = s.a, fv = s.b;
            if (in_ccw_open(other, s.a, s.b, n)) std::swap(fu, fv);
            if (!segment_in_arc(c.to.edge, fu, fv)) continue;
            int next = -1;
            for (size_t i = 0; i < tris.size(); ++i)
                if (static_cast<int>(i) != cur && has_side(tris[i], s)) {
                    next = static_cast<int>(i);
                    break;
                }
            if (next < 0) throw InternalError("diagonal with a single triangle");
            out.push_back({s, start, target});
            cur = next;
            advanced = true;
            break;
        }
        if (!advanced) throw InternalError("curve walk found no exit side");
    }
    for (size_t i = 0; i < out.size(); ++i) {
        out[i].enter = i > 0 ? out[i - 1].diag : start;
        out[i].exit = i + 1 < out.size() ? out[i + 1].diag : target;
    }
    return out;
}

}  // namespace

std::vector<int> shear_vector(const PolygonTriangulation& t, const Lamination& lam) {
    const int n = t.vertex_count();
    validate_lamination(lam, n);
    std::vector<int> shear(t.diagonals().size(), 0);
    for (const LamCurve& c : lam) {
        for (const CurveCrossing& cr : walk_curve(t, c)) {
            auto [r, l] = t.quad_apexes(cr.diag);
            const int a = cr.diag.a, b = cr.diag.b;
            // Quadrilateral sides in counterclockwise order a, r, b, l.
            const Diagonal ar(a, r), rb(r, b), bl(b, l), la(l, a);
            auto pair_is = [&](const Diagonal& u, const Diagonal& v) {
                return (cr.enter == u && cr.exit == v) || (cr.enter == v && cr.exit == u);
            };
            int contrib = 0;
            if (pair_is(rb, la)) contrib = 1;
            else if (pair_is(ar, bl)) contrib = -1;
            shear[static_cast<size_t>(t.index_of(cr.diag))] += contrib;
        }
    }
    return shear;
}

LamCurve elementary_lamination(const Arc& g) {
    LamCurve c;
    c.from = {g.a, 0};
    c.to = {g.b, 0};
    return c;
}

}  // namespace fenceq
