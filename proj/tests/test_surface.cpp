#include "doctest.h"

#include "fenceq/enumerate.hpp"
#include "fenceq/surface.hpp"

using namespace fenceq;

namespace {

// Octagon fan of the adjacency example; reference labels 1..5 map onto these
// diagonals in this order.
const std::vector<Diagonal> kOctagonLabelled = {Diagonal(1, 7), Diagonal(1, 6), Diagonal(1, 5),
                                                Diagonal(2, 5), Diagonal(2, 4)};

PolygonTriangulation octagon_example() { return PolygonTriangulation(8, kOctagonLabelled); }

// Re-index a canonical-order matrix into the reference label order.
std::vector<std::vector<int>> in_label_order(const PolygonTriangulation& t,
                                             const std::vector<std::vector<int>>& canonical) {
    const size_t k = kOctagonLabelled.size();
    std::vector<std::vector<int>> out(k, std::vector<int>(k, 0));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
            out[i][j] = canonical[static_cast<size_t>(t.index_of(kOctagonLabelled[i]))]
                                 [static_cast<size_t>(t.index_of(kOctagonLabelled[j]))];
    return out;
}

}  // namespace

TEST_CASE("arcs_cross") {
    CHECK(arcs_cross(Arc(1, 3), Arc(2, 4), 4));
    CHECK_FALSE(arcs_cross(Arc(1, 3), Arc(1, 4), 8));
    CHECK_FALSE(arcs_cross(Arc(1, 3), Arc(4, 6), 8));
    CHECK(arcs_cross(Arc(2, 7), Arc(5, 8), 8));
}

TEST_CASE("triangulation validation") {
    CHECK_NOTHROW(octagon_example());
    CHECK_THROWS_AS(PolygonTriangulation(5, {Diagonal(1, 3)}), ConstructionError);
    CHECK_THROWS_AS(PolygonTriangulation(5, {Diagonal(1, 3), Diagonal(2, 4)}), ConstructionError);
    CHECK_THROWS_AS(PolygonTriangulation(5, {Diagonal(1, 2), Diagonal(1, 3)}), ConstructionError);
}

TEST_CASE("signed adjacency matches the octagon example") {
    PolygonTriangulation t = octagon_example();
    const std::vector<std::vector<int>> expected = {{0, -1, 0, 0, 0},
                                                    {1, 0, -1, 0, 0},
                                                    {0, 1, 0, 1, 0},
                                                    {0, 0, -1, 0, -1},
                                                    {0, 0, 0, 1, 0}};
    CHECK(in_label_order(t, signed_adjacency(t)) == expected);
}

TEST_CASE("signed adjacency is skew symmetric") {
    for (const auto& t : all_triangulations(7)) {
        auto B = signed_adjacency(t);
        for (size_t i = 0; i < B.size(); ++i)
            for (size_t j = 0; j < B.size(); ++j) CHECK(B[i][j] == -B[j][i]);
    }
    // square: single diagonal, 1x1 zero matrix
    PolygonTriangulation sq(4, {Diagonal(1, 3)});
    CHECK(signed_adjacency(sq) == std::vector<std::vector<int>>{{0}});
}

TEST_CASE("crossed diagonals walk the strip in order") {
    PolygonTriangulation t = octagon_example();
    // arc 3-8 crosses all five reference diagonals; from vertex 3 the strip
    // order is labels 5,4,3,2,1
    std::vector<Diagonal> crossings = crossed_diagonals(t, Arc(3, 8));
    REQUIRE(crossings.size() == 5);
    CHECK(crossings[0] == Diagonal(2, 4));
    CHECK(crossings[1] == Diagonal(2, 5));
    CHECK(crossings[2] == Diagonal(1, 5));
    CHECK(crossings[3] == Diagonal(1, 6));
    CHECK(crossings[4] == Diagonal(1, 7));

    PolygonTriangulation sq(4, {Diagonal(1, 3)});
    CHECK(crossed_diagonals(sq, Arc(2, 4)) == std::vector<Diagonal>{Diagonal(1, 3)});
    CHECK(crossed_diagonals(sq, Arc(1, 3)).empty());
}

TEST_CASE("flips") {
    PolygonTriangulation sq(4, {Diagonal(1, 3)});
    CHECK(flip(sq, Diagonal(1, 3)).contains(Diagonal(2, 4)));
    CHECK_THROWS_AS(flip(sq, Diagonal(2, 4)), NotADiagonal);

    PolygonTriangulation pent(5, {Diagonal(1, 3), Diagonal(1, 4)});
    PolygonTriangulation flipped = flip(pent, Diagonal(1, 3));
    CHECK(flipped.contains(Diagonal(2, 4)));
    CHECK(flipped.contains(Diagonal(1, 4)));

    for (const auto& t : all_triangulations(7))
        for (const Diagonal& d : t.diagonals()) {
            PolygonTriangulation twice = flip(flip(t, d), flipped_diagonal(t, d));
            CHECK(twice.diagonals() == t.diagonals());
        }
}

TEST_CASE("shear vector reproduces the reference lamination row") {
    PolygonTriangulation t = octagon_example();
    LamCurve L;
    L.from = {7, 0};  // edge (7,8)
    L.to = {3, 0};    // edge (3,4)
    std::vector<int> shear = shear_vector(t, {L});
    std::vector<int> in_labels(5);
    for (size_t i = 0; i < 5; ++i)
        in_labels[i] = shear[static_cast<size_t>(t.index_of(kOctagonLabelled[i]))];
    CHECK(in_labels == std::vector<int>{-1, 0, 1, -1, 1});

    SUBCASE("reversed curve gives the same vector") {
        LamCurve rev;
        rev.from = L.to;
        rev.to = L.from;
        CHECK(shear_vector(t, {rev}) == shear);
    }
    SUBCASE("corner crossings contribute zero") {
        // edge (7,8) to edge (1,2) crosses (1,7), (1,6), (1,5); the fan
        // segments through (1,6) and (1,5) cut adjacent quadrilateral sides
        LamCurve hug;
        hug.from = {7, 0};
        hug.to = {1, 0};
        std::vector<int> v = shear_vector(t, {hug});
        CHECK(v[static_cast<size_t>(t.index_of(Diagonal(1, 7)))] == -1);
        int nonzero = 0;
        for (int x : v) nonzero += x != 0;
        CHECK(nonzero == 1);
    }
}

TEST_CASE("single curve shear coordinates stay within -1..1") {
    for (const auto& t : all_triangulations(7))
        for (const auto& c : all_single_curves(7))
            for (int v : shear_vector(t, {c})) CHECK((v >= -1 && v <= 1));
}

TEST_CASE("elementary laminations") {
    CHECK(elementary_lamination(Arc(1, 3)).from.edge == 1);
    CHECK(elementary_lamination(Arc(1, 3)).to.edge == 3);
    SUBCASE("pairwise non-crossing over a triangulation") {
        // Slots realize the isotopy: on every edge the curve heading to the
        // ccw-farther edge hugs the near vertex, taking the smaller slot.
        const int n = 7;
        for (const auto& t : all_triangulations(n)) {
            Lamination lam;
            for (const Diagonal& d : t.diagonals()) lam.push_back(elementary_lamination(d));
            for (int e = 1; e <= n; ++e) {
                std::vector<std::pair<int, size_t>> ends;  // (-ccw distance, curve idx)
                for (size_t i = 0; i < lam.size(); ++i) {
                    if (lam[i].from.edge == e)
                        ends.push_back({-((lam[i].to.edge - e + n) % n), i});
                    if (lam[i].to.edge == e)
                        ends.push_back({-((lam[i].from.edge - e + n) % n), i});
                }
                std::sort(ends.begin(), ends.end());
                for (size_t s = 0; s < ends.size(); ++s) {
                    LamCurve& c = lam[ends[s].second];
                    (c.from.edge == e ? c.from.slot : c.to.slot) = static_cast<int>(s);
                }
            }
            CHECK_NOTHROW(validate_lamination(lam, n));
        }
    }
    SUBCASE("shear of a diagonal's own elementary lamination is a signed unit vector") {
        for (const auto& t : all_triangulations(7))
            for (const Diagonal& d : t.diagonals()) {
                std::vector<int> v = shear_vector(t, {elementary_lamination(d)});
                for (size_t i = 0; i < v.size(); ++i) {
                    if (static_cast<int>(i) == t.index_of(d)) CHECK(v[i] == -1);
                    else CHECK(v[i] == 0);
                }
            }
    }
}

TEST_CASE("curve validation") {
    CHECK_THROWS_AS(validate_curve(LamCurve{{1, 0}, {2, 0}}, 8), InvalidCurve);
    CHECK_THROWS_AS(validate_curve(LamCurve{{1, 0}, {1, 0}}, 8), InvalidCurve);
    CHECK_THROWS_AS(validate_curve(LamCurve{{8, 0}, {1, 0}}, 8), InvalidCurve);
    CHECK_NOTHROW(validate_curve(LamCurve{{8, 0}, {2, 0}}, 8));
    // crossing pair within one lamination
    Lamination bad = {LamCurve{{1, 0}, {4, 0}}, LamCurve{{2, 0}, {6, 0}}};
    CHECK_THROWS_AS(validate_lamination(bad, 8), InvalidCurve);
}

TEST_CASE("enumeration counts") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(7) == 429);
    for (int n = 4; n <= 9; ++n) {
        CHECK(all_triangulations(n).size() == catalan(n - 2));
        CHECK(all_arcs(n).size() == static_cast<size_t>(n * (n - 3) / 2));
        CHECK(all_single_curves(n).size() == static_cast<size_t>(n * (n - 3) / 2));
    }
    std::mt19937 rng(5);
    for (int i = 0; i < 50; ++i) CHECK_NOTHROW(random_triangulation(11, rng));
}
