#include "fenceq/cluster.hpp"

#include <algorithm>

namespace fenceq {

ExtendedSeed::ExtendedSeed(PolygonTriangulation t, std::vector<std::vector<int>> matrix,
                           std::vector<IntPoly> values)
    : tri_(std::move(t)), matrix_(std::move(matrix)), values_(std::move(values)) {
    labels_ = tri_.diagonals();
    if (matrix_.size() < values_.size())
        throw ConstructionError("matrix needs at least one row per cluster index");
    for (const auto& row : matrix_)
        if (row.size() != values_.size())
            throw ConstructionError("matrix row width does not match cluster size");
}

int ExtendedSeed::index_of_label(const Diagonal& d) const {
    for (int i = 0; i < width(); ++i)
        if (labels_[static_cast<size_t>(i)] == d) return i;
    return -1;
}

void ExtendedSeed::mutate(int k) {
    if (k < 0 || k >= width()) throw IndexOutOfRange("mutation index out of range");
    const size_t uk = static_cast<size_t>(k);
    const int rows = static_cast<int>(matrix_.size());

    // Exchange relation under x = 1, y_j = q: cluster columns contribute their
    // values, coefficient rows contribute powers of q.
    IntPoly plus(1), minus(1);
    for (int i = 0; i < width(); ++i) {
        const int b = matrix_[static_cast<size_t>(i)][uk];
        if (b > 0) plus *= values_[static_cast<size_t>(i)].pow(b);
        if (b < 0) minus *= values_[static_cast<size_t>(i)].pow(-b);
    }
    int eplus = 0, eminus = 0;
    for (int i = width(); i < rows; ++i) {
        const int b = matrix_[static_cast<size_t>(i)][uk];
        if (b > 0) eplus += b;
        if (b < 0) eminus += -b;
    }
    values_[uk] = poly_exact_div(plus.shifted(eplus) + minus.shifted(eminus), values_[uk]);

    // Matrix mutation on every row, coefficient rows included.
    std::vector<std::vector<int>> out = matrix_;
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < width(); ++j) {
            const int bik = matrix_[static_cast<size_t>(i)][uk];
            const int bkj = matrix_[uk][static_cast<size_t>(j)];
            if (i == k || j == k) {
                out[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    -matrix_[static_cast<size_t>(i)][static_cast<size_t>(j)];
            } else {
                out[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    matrix_[static_cast<size_t>(i)][static_cast<size_t>(j)] +
                    std::max(-bik, 0) * bkj + bik * std::max(bkj, 0);
            }
        }
    }
    matrix_ = std::move(out);

    const Diagonal old = labels_[uk];
    labels_[uk] = flipped_diagonal(tri_, old);
    tri_ = flip(tri_, old);
}

ExtendedSeed seed_from(const PolygonTriangulation& t, const MultiLamination& ml) {
    const int k = static_cast<int>(t.diagonals().size());
    std::vector<std::vector<int>> matrix = signed_adjacency(t);
    for (const Lamination& lam : ml) matrix.push_back(shear_vector(t, lam));
    std::vector<IntPoly> values(static_cast<size_t>(k), IntPoly(1));
    return ExtendedSeed(t, std::move(matrix), std::move(values));
}

ExtendedSeed principal_seed(const PolygonTriangulation& t) {
    const int k = static_cast<int>(t.diagonals().size());
    std::vector<std::vector<int>> matrix = signed_adjacency(t);
    for (int i = 0; i < k; ++i) {
        std::vector<int> row(static_cast<size_t>(k), 0);
        row[static_cast<size_t>(i)] = 1;
        matrix.push_back(std::move(row));
    }
    std::vector<IntPoly> values(static_cast<size_t>(k), IntPoly(1));
    return ExtendedSeed(t, std::move(matrix), std::move(values));
}

namespace {

template <typename Chooser>
std::vector<Diagonal> plan_flips(const PolygonTriangulation& t, const Arc& g, Chooser choose) {
    const int n = t.vertex_count();
    if ((g.b - g.a + n) % n <= 1 || (g.a - g.b + n) % n <= 1)
        throw ConstructionError("target arc is a boundary edge");
    PolygonTriangulation cur = t;
    std::vector<Diagonal> plan;
    while (!cur.contains(g)) {
        std::vector<Diagonal> candidates;
        for (const Diagonal& d : cur.diagonals()) {
            if (!arcs_cross(d, g, n)) continue;
            if (!arcs_cross(flipped_diagonal(cur, d), g, n)) candidates.push_back(d);
        }
        if (candidates.empty()) throw InternalError("flip planner stalled");
        Diagonal pick = choose(candidates);
        plan.push_back(pick);
        cur = flip(cur, pick);
    }
    return plan;
}

}  // namespace

std::vector<Diagonal> flip_sequence_to_arc(const PolygonTriangulation& t, const Arc& g) {
    return plan_flips(t, g, [](const std::vector<Diagonal>& cand) {
        return *std::min_element(cand.begin(), cand.end());
    });
}

std::vector<Diagonal> random_flip_sequence_to_arc(const PolygonTriangulation& t, const Arc& g,
                                                  std::mt19937& rng) {
    return plan_flips(t, g, [&rng](const std::vector<Diagonal>& cand) {
        std::uniform_int_distribution<size_t> dist(0, cand.size() - 1);
        return cand[dist(rng)];
    });
}

IntPoly c_polynomial_along(const PolygonTriangulation& t, const MultiLamination& ml, const Arc& g,
                           const std::vector<Diagonal>& plan) {
    if (t.contains(g)) return IntPoly(1);
    ExtendedSeed seed = seed_from(t, ml);
    for (const Diagonal& d : plan) {
        int idx = seed.index_of_label(d);
        if (idx < 0) throw InternalError("flip plan references a missing diagonal");
        seed.mutate(idx);
    }
    int idx = seed.index_of_label(g);
    if (idx < 0) throw InternalError("flip plan did not reach the target arc");
    return seed.values()[static_cast<size_t>(idx)];
}

IntPoly c_polynomial(const PolygonTriangulation& t, const MultiLamination& ml, const Arc& g) {
    if (t.contains(g)) return IntPoly(1);
    return c_polynomial_along(t, ml, g, flip_sequence_to_arc(t, g));
}

IntPoly f_polynomial_q(const PolygonTriangulation& t, const Arc& g) {
    if (t.contains(g)) return IntPoly(1);
    ExtendedSeed seed = principal_seed(t);
    for (const Diagonal& d : flip_sequence_to_arc(t, g)) seed.mutate(seed.index_of_label(d));
    return seed.values()[static_cast<size_t>(seed.index_of_label(g))];
}

std::vector<RecurrenceStep> classify_flip_recurrence(const PolygonTriangulation& t,
                                                     const MultiLamination& ml, const Arc& g) {
    if (ml.size() != 1 || ml.front().size() != 1)
        throw NotSingleLamination("classification needs exactly one single-curve lamination");
    const std::vector<Diagonal> crossings = crossed_diagonals(t, g);
    const int m = static_cast<int>(crossings.size());
    if (m < 2) throw TooFewCrossings("arc must cross at least two diagonals");

    ExtendedSeed seed = seed_from(t, ml);
    std::vector<int> slot(static_cast<size_t>(m) + 1, -1);
    for (int i = 1; i <= m; ++i)
        slot[static_cast<size_t>(i)] = seed.index_of_label(crossings[static_cast<size_t>(i) - 1]);

    // c[i] = value produced by the i-th crossing flip; c[0] = 1.
    std::vector<IntPoly> c(static_cast<size_t>(m) + 1, IntPoly(1));
    // h[i] = index of the second already-flipped slot in the exchange column
    // of crossing i (0 when the column only reaches constants).
    std::vector<int> h(static_cast<size_t>(m) + 1, 0);
    for (int i = 1; i <= m; ++i) {
        const int col = slot[static_cast<size_t>(i)];
        for (int p = 1; p < i; ++p) {
            if (p == i - 1) continue;
            if (seed.matrix()[static_cast<size_t>(slot[static_cast<size_t>(p)])]
                             [static_cast<size_t>(col)] != 0)
                h[static_cast<size_t>(i)] = p;
        }
        seed.mutate(col);
        c[static_cast<size_t>(i)] = seed.values()[static_cast<size_t>(col)];
    }

    const IntPoly q = IntPoly(1).shifted(1);
    std::vector<RecurrenceStep> steps;
    for (int k = 2; k < m; ++k) {
        RecurrenceStep step;
        step.k = k;
        step.h = h[static_cast<size_t>(k)];
        const IntPoly& next = c[static_cast<size_t>(k) + 1];
        const IntPoly& curr = c[static_cast<size_t>(k)];
        const IntPoly& prev = c[static_cast<size_t>(k) - 1];
        const IntPoly& hval = c[static_cast<size_t>(step.h)];
        const auto holds = [&](const IntPoly& lhs, const IntPoly& a, const IntPoly& x,
                               const IntPoly& b, const IntPoly& y) { return lhs == a * x + b * y; };
        const IntPoly one(1);
        // Six shapes where the new exchange pairs x_k with x_{k-1}, six where
        // it pairs x_k with x_h; the second line is how c_{x_k} itself arose.
        struct Case {
            bool second_kind;
            const IntPoly *a1, *b1, *a2, *b2;
        };
        const Case cases[12] = {
            {false, &q, &one, &one, &one},   // 1
            {false, &one, &q, &q, &one},     // 2
            {false, &one, &q, &one, &one},   // 3
            {false, &one, &one, &q, &one},   // 4
            {false, &one, &one, &one, &q},   // 5
            {false, &one, &one, &one, &one}, // 6
            {true, &q, &one, &one, &one},    // 7
            {true, &one, &q, &one, &q},      // 8
            {true, &one, &q, &one, &one},    // 9
            {true, &one, &one, &q, &one},    // 10
            {true, &one, &one, &one, &q},    // 11
            {true, &one, &one, &one, &one},  // 12
        };
        for (int ci = 0; ci < 12; ++ci) {
            const Case& cs = cases[ci];
            const IntPoly& partner = cs.second_kind ? hval : prev;
            if (holds(next, *cs.a1, curr, *cs.b1, partner) &&
                holds(curr, *cs.a2, prev, *cs.b2, hval))
                step.matched_cases.push_back(ci + 1);
        }
        steps.push_back(std::move(step));
    }
    return steps;
}

}  // namespace fenceq
