#pragma once

#include <array>
#include <utility>
#include <vector>

#include "fenceq/errors.hpp"

namespace fenceq {

// Chord of the polygon between two non-adjacent boundary vertices,
// stored with endpoints sorted.
struct Diagonal {
    int a, b;
    Diagonal(int u, int v) : a(std::min(u, v)), b(std::max(u, v)) {}
    bool operator==(const Diagonal& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Diagonal& o) const { return !(*this == o); }
    bool operator<(const Diagonal& o) const { return a != o.a ? a < o.a : b < o.b; }
};

using Arc = Diagonal;

// Endpoint of a lamination curve: an unmarked point on boundary edge
// (edge, edge+1 mod n); slot orders multiple endpoints on the same edge
// counterclockwise.
struct CurveEnd {
    int edge = 0;
    int slot = 0;
};

struct LamCurve {
    CurveEnd from, to;
};

using Lamination = std::vector<LamCurve>;
using MultiLamination = std::vector<Lamination>;

// Convex n-gon with vertices 1..n counterclockwise and a maximal set of
// pairwise non-crossing diagonals.
class PolygonTriangulation {
  public:
    PolygonTriangulation(int n, std::vector<Diagonal> diagonals);

    int vertex_count() const { return n_; }
    // Canonical order: sorted by (min vertex, max vertex). Matrices and
    // vectors are always indexed this way.
    const std::vector<Diagonal>& diagonals() const { return diagonals_; }
    int index_of(const Diagonal& d) const;  // -1 when absent
    bool contains(const Diagonal& d) const { return index_of(d) >= 0; }

    // Triangles as vertex triples (u < v < w in counterclockwise order).
    std::vector<std::array<int, 3>> triangles() const;

    // Third vertices of the two triangles adjacent to d, as (right, left)
    // apexes relative to the orientation a -> b of d = (a, b), a < b.
    std::pair<int, int> quad_apexes(const Diagonal& d) const;

  private:
    int n_;
    std::vector<Diagonal> diagonals_;
};

// Strictly interleaving endpoints in cyclic order.
bool arcs_cross(const Arc& a, const Arc& b, int n);

// Diagonals of t crossed by g, in order along g oriented from its
// smaller-labelled endpoint; empty when g is already in t.
std::vector<Diagonal> crossed_diagonals(const PolygonTriangulation& t, const Arc& g);

// Skew-symmetric signed adjacency matrix over the canonical diagonal order.
std::vector<std::vector<int>> signed_adjacency(const PolygonTriangulation& t);

PolygonTriangulation flip(const PolygonTriangulation& t, const Diagonal& d);
// The diagonal that replaces d under the flip.
Diagonal flipped_diagonal(const PolygonTriangulation& t, const Diagonal& d);

// Per-diagonal sum of +1 per S-shaped and -1 per Z-shaped quadrilateral
// crossing over all curves of one lamination. Curves must be pairwise
// non-crossing.
std::vector<int> shear_vector(const PolygonTriangulation& t, const Lamination& lam);

// Boundary-to-boundary curve shadowing the arc, endpoints shifted
// counterclockwise past each arc endpoint.
LamCurve elementary_lamination(const Arc& g);

void validate_curve(const LamCurve& c, int n);
void validate_lamination(const Lamination& lam, int n);

}  // namespace fenceq
