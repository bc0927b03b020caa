#pragma once

#include <random>
#include <vector>

#include "fenceq/poly.hpp"
#include "fenceq/surface.hpp"

namespace fenceq {

// Exchange matrix with lamination coefficient rows plus the per-diagonal
// cluster values specialized at x_i = 1, y_j = q. The top k x k block stays
// skew-symmetric; the bottom rows are shear vectors (or the identity for
// principal coefficients). Values are updated by the exchange relation; the
// division is exact whenever the bookkeeping is sound.
class ExtendedSeed {
  public:
    ExtendedSeed(PolygonTriangulation t, std::vector<std::vector<int>> matrix,
                 std::vector<IntPoly> values);

    int width() const { return static_cast<int>(values_.size()); }
    int coefficient_rows() const { return static_cast<int>(matrix_.size()) - width(); }
    const std::vector<std::vector<int>>& matrix() const { return matrix_; }
    const std::vector<IntPoly>& values() const { return values_; }
    const PolygonTriangulation& triangulation() const { return tri_; }
    // labels()[i] is the diagonal currently sitting at matrix column i.
    const std::vector<Diagonal>& labels() const { return labels_; }
    int index_of_label(const Diagonal& d) const;

    void mutate(int k);  // 0-based column index

  private:
    PolygonTriangulation tri_;
    std::vector<std::vector<int>> matrix_;  // (k + L) x k
    std::vector<IntPoly> values_;
    std::vector<Diagonal> labels_;
};

// Top block B(t); one shear row per lamination; all values 1.
ExtendedSeed seed_from(const PolygonTriangulation& t, const MultiLamination& ml);

// Identity bottom block, realized directly.
ExtendedSeed principal_seed(const PolygonTriangulation& t);

// Flips that bring g into the triangulation: at each step the smallest
// canonical crossing diagonal whose flip strictly lowers the crossing count.
std::vector<Diagonal> flip_sequence_to_arc(const PolygonTriangulation& t, const Arc& g);

// Same contract with random choices among the strictly-decreasing candidates;
// used to confirm flip-path independence.
std::vector<Diagonal> random_flip_sequence_to_arc(const PolygonTriangulation& t, const Arc& g,
                                                  std::mt19937& rng);

// Cluster expansion of g evaluated at x = 1, y = q, with one q-row per
// lamination of ml. Returns 1 when g is already in t.
IntPoly c_polynomial(const PolygonTriangulation& t, const MultiLamination& ml, const Arc& g);

IntPoly c_polynomial_along(const PolygonTriangulation& t, const MultiLamination& ml, const Arc& g,
                           const std::vector<Diagonal>& plan);

// c-polynomial under principal coefficients.
IntPoly f_polynomial_q(const PolygonTriangulation& t, const Arc& g);

// One step of the crossing-order walk along g: which of the twelve
// single-lamination recurrences the computed polynomials satisfy at step k.
// h = 0 stands for the constant value 1.
struct RecurrenceStep {
    int k = 0;
    int h = 0;
    std::vector<int> matched_cases;  // 1..12, empty = NoMatch
};

std::vector<RecurrenceStep> classify_flip_recurrence(const PolygonTriangulation& t,
                                                     const MultiLamination& ml, const Arc& g);

}  // namespace fenceq
