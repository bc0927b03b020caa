#include "fenceq/arcposet.hpp"

#include "fenceq/cluster.hpp"

namespace fenceq {

namespace {

// v strictly inside the ccw open interval (u, w).
bool in_ccw_open(int v, int u, int w, int n) {
    int span = (w - u + n) % n;
    int off = (v - u + n) % n;
    return off > 0 && off < span;
}

}  // namespace

ArcPosetResult fence_poset_of_arc(const PolygonTriangulation& t, const Arc& g) {
    const int n = t.vertex_count();
    const std::vector<Diagonal> crossings = crossed_diagonals(t, g);
    const int m = static_cast<int>(crossings.size());
    if (m == 0) throw NoCrossings("arc " + std::to_string(g.a) + "-" + std::to_string(g.b) +
                                  " crosses no diagonal");

    // With the arc oriented a -> b (a < b) on the counterclockwise vertex
    // circle, a vertex is to the right exactly when it sits in the cyclic
    // open interval (a, b); calibrated against the mutation pipeline.
    auto right_of_arc = [&](int v) { return in_ccw_open(v, g.a, g.b, n); };

    std::vector<std::string> labels;
    for (int i = 1; i <= m; ++i) labels.push_back("x" + std::to_string(i));
    std::vector<std::pair<int, int>> rels;
    std::vector<bool> ascending;  // step i: x_i < x_{i+1}?
    for (int i = 0; i + 1 < m; ++i) {
        const Diagonal& d1 = crossings[static_cast<size_t>(i)];
        const Diagonal& d2 = crossings[static_cast<size_t>(i) + 1];
        int shared = d1.a == d2.a || d1.a == d2.b ? d1.a : d1.b;
        if (!(shared == d2.a || shared == d2.b))
            throw InternalError("consecutive crossings share no endpoint");
        if (right_of_arc(shared)) {
            rels.emplace_back(i + 1, i);  // x_i > x_{i+1}
            ascending.push_back(false);
        } else {
            rels.emplace_back(i, i + 1);
            ascending.push_back(true);
        }
    }
    FinitePoset poset = FinitePoset::from_relations(labels, rels);

    // Read the zigzag back off as a composition; a single crossing is the
    // empty zigzag (0).
    std::vector<int> parts;
    if (ascending.empty()) {
        parts.push_back(0);
    } else {
        if (!ascending.front()) parts.push_back(0);
        int run = 1;
        for (size_t i = 1; i < ascending.size(); ++i) {
            if (ascending[i] == ascending[i - 1]) {
                ++run;
            } else {
                parts.push_back(run);
                run = 1;
            }
        }
        parts.push_back(run);
    }
    return ArcPosetResult{Composition(parts), std::move(poset), m};
}

bool verify_expansion(const PolygonTriangulation& t, const Arc& g) {
    if (t.contains(g)) return true;
    return fence_poset_of_arc(t, g).poset.rank_sequence() == f_polynomial_q(t, g);
}

}  // namespace fenceq
