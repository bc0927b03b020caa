#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fenceq/poly.hpp"

namespace fenceq {

// Composition alpha = (a_1,...,a_s): a_1 >= 0, a_i >= 1 for i >= 2. The first
// part being zero means the fence starts with a descending run.
struct Composition {
    std::vector<int> parts;

    explicit Composition(std::vector<int> p);
    int total() const;                     // n = sum of parts
    int num_parts() const { return static_cast<int>(parts.size()); }
    // Direction of the fence step between x_pos and x_pos+1, 1-based.
    // true = ascending (x_pos < x_pos+1).
    bool step_ascending(int pos) const;
    std::string to_string() const;
};

// Finite poset on at most 64 labelled elements, stored as a transitively
// reduced cover list plus closure bitmasks for fast order queries.
class FinitePoset {
  public:
    FinitePoset() = default;

    // Relations are arbitrary generator pairs (a < b); the order is their
    // transitive closure. Throws CycleCreated when antisymmetry fails.
    static FinitePoset from_relations(std::vector<std::string> labels,
                                      const std::vector<std::pair<int, int>>& relations);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }
    int index_of(const std::string& label) const;  // UnknownElement if absent

    // Cover pairs (lower, upper), sorted.
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    bool less(int a, int b) const;  // strict order a < b
    bool is_cover(int a, int b) const;

    // Closed up/down sets as bitmasks over element indices (include z itself).
    uint64_t up_mask(int z) const { return up_[static_cast<size_t>(z)]; }
    uint64_t down_mask(int z) const { return down_[static_cast<size_t>(z)]; }
    std::vector<int> up_set(int z) const;
    std::vector<int> down_set(int z) const;

    FinitePoset induced(uint64_t keep) const;

    // Poset surgery. All operations return a fresh poset.
    FinitePoset add_above(const std::vector<int>& below, const std::string& label) const;
    FinitePoset add_below(const std::vector<int>& above, const std::string& label) const;
    FinitePoset remove_cover(int a, int b) const;   // UnknownCover if (a,b) is not a cover
    FinitePoset delete_up_set(int z) const;         // removes z and everything above
    FinitePoset delete_down_set(int z) const;       // removes z and everything below
    FinitePoset delete_element(int z) const;        // induced order on the rest
    // Identify a and b into one element carrying the union of their relations.
    FinitePoset merge(int a, int b, const std::string& label) const;
    FinitePoset dual() const;

    // Elements of Hasse degree <= 1; a fence has exactly its two ends here.
    std::vector<int> hasse_endpoints() const;

    // Rank generating function of the lattice of order ideals: coefficient of
    // q^k counts the down-closed subsets of size k. Recursive splitting on a
    // high-degree element with memoization on the surviving element bitmask.
    IntPoly rank_sequence(int max_size = 40) const;

  private:
    void check_element(int z) const;
    std::vector<std::string> labels_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<uint64_t> up_, down_;  // closed masks
};

FinitePoset fence(const Composition& alpha);

// fence(alpha) plus the relation x_i < x_j (1-based element positions).
FinitePoset ij_fence(const Composition& alpha, int i, int j);

enum class NotchKind { First, Last, Both };

// (i,j) index pair the notch adds for the given composition; IndexOutOfRange
// when the composition is too short to carry it.
std::pair<int, int> notch_pair_first(const Composition& alpha);
std::pair<int, int> notch_pair_last(const Composition& alpha);

FinitePoset notched(const Composition& alpha, NotchKind which);

// Fence poset with the identification x_{n+1} = x_1; requires an even number
// of parts and n >= 2.
FinitePoset circular_fence(const Composition& alpha);

// Same output as rank_sequence(fence(alpha)) via a left-to-right two-state
// dynamic program over the zigzag.
IntPoly rank_sequence_fence_fast(const Composition& alpha);

// Verification of the two rank-polynomial decomposition identities for the
// end-notched poset, rebuilt by surgery. For an odd number of parts the dual
// composition (even) is checked together with the coefficient-reversal bridge.
struct NotchedDecompositionReport {
    bool split_top = false;       // R_T = R + q^{d1+1} R(beta)
    bool split_top_bar = false;   // Rbar_T = R_T + q^{a_s+1} R(gamma)
    bool split_delta = false;     // Rbar(delta) = q^{d1-a_s} R(beta) + R(gamma)
    bool eq1 = false;             // R = Rbar_T - q^{a_s+1} Rbar(delta)
    bool split_bottom = false;    // R_B = q R + R(beta')
    bool split_bottom_bar = false;  // Rbar_B = R_B + q^{a_{s-1}} R(gamma')
    bool split_delta_prime = false; // Rbar(delta') = R(beta') + q^{a_{s-1}} R(gamma')
    bool eq2 = false;             // q R = Rbar_B - Rbar(delta')
    bool dual_bridge = true;      // odd-parts only: R^{(n+1)}(alpha) reversed matches dual
    bool all_hold() const {
        return split_top && split_top_bar && split_delta && eq1 && split_bottom &&
               split_bottom_bar && split_delta_prime && eq2 && dual_bridge;
    }
    IntPoly notched_rank;  // R^{(n+1)}(alpha; q)
};

NotchedDecompositionReport check_notched_decompositions(const Composition& alpha);

}  // namespace fenceq
