#include "fenceq/poset.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

#include "fenceq/errors.hpp"

namespace fenceq {

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
    if (parts.empty()) throw InvalidComposition("composition needs at least one part");
    if (parts.front() < 0) throw InvalidComposition("first part must be >= 0");
    for (size_t i = 1; i < parts.size(); ++i)
        if (parts[i] < 1) throw InvalidComposition("parts after the first must be >= 1");
}

int Composition::total() const {
    int n = 0;
    for (int p : parts) n += p;
    return n;
}

bool Composition::step_ascending(int pos) const {
    int acc = 0;
    for (size_t r = 0; r < parts.size(); ++r) {
        acc += parts[r];
        if (pos <= acc) return r % 2 == 0;  // odd-numbered runs ascend
    }
    throw IndexOutOfRange("fence step " + std::to_string(pos) + " out of range");
}

std::string Composition::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ",";
        os << parts[i];
    }
    os << ")";
    return os.str();
}

int FinitePoset::index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (labels_[static_cast<size_t>(i)] == label) return i;
    throw UnknownElement("no element labelled " + label);
}

void FinitePoset::check_element(int z) const {
    if (z < 0 || z >= size()) throw UnknownElement("element index " + std::to_string(z));
}

bool FinitePoset::less(int a, int b) const {
    check_element(a);
    check_element(b);
    return a != b && (up_[static_cast<size_t>(a)] >> b) & 1u;
}

bool FinitePoset::is_cover(int a, int b) const {
    return std::binary_search(covers_.begin(), covers_.end(), std::make_pair(a, b));
}

std::vector<int> FinitePoset::up_set(int z) const {
    check_element(z);
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if ((up_[static_cast<size_t>(z)] >> i) & 1u) out.push_back(i);
    return out;
}

std::vector<int> FinitePoset::down_set(int z) const {
    check_element(z);
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if ((down_[static_cast<size_t>(z)] >> i) & 1u) out.push_back(i);
    return out;
}

FinitePoset FinitePoset::from_relations(std::vector<std::string> labels,
                                        const std::vector<std::pair<int, int>>& relations) {
    const int n = static_cast<int>(labels.size());
    if (n > 64) throw TooLarge("posets are capped at 64 elements");
    std::vector<uint64_t> above(static_cast<size_t>(n), 0);  // strict successors
    for (auto [a, b] : relations) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw UnknownElement("relation endpoint out of range");
        if (a == b) throw CycleCreated("reflexive relation on " + labels[static_cast<size_t>(a)]);
        above[static_cast<size_t>(a)] |= uint64_t(1) << b;
    }
    // Floyd-Warshall style closure over bitmasks.
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if ((above[static_cast<size_t>(i)] >> k) & 1u)
                above[static_cast<size_t>(i)] |= above[static_cast<size_t>(k)];
    for (int i = 0; i < n; ++i)
        if ((above[static_cast<size_t>(i)] >> i) & 1u)
            throw CycleCreated("relations create a cycle through " +
                               labels[static_cast<size_t>(i)]);

    FinitePoset p;
    p.labels_ = std::move(labels);
    p.up_.assign(static_cast<size_t>(n), 0);
    p.down_.assign(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        p.up_[static_cast<size_t>(i)] = above[static_cast<size_t>(i)] | (uint64_t(1) << i);
        for (int j = 0; j < n; ++j)
            if ((above[static_cast<size_t>(i)] >> j) & 1u)
                p.down_[static_cast<size_t>(j)] |= uint64_t(1) << i;
        p.down_[static_cast<size_t>(i)] |= uint64_t(1) << i;
    }
    // Transitive reduction: a cover is a strict relation with no interior.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || !((above[static_cast<size_t>(a)] >> b) & 1u)) continue;
            uint64_t between = above[static_cast<size_t>(a)] &
                               (p.down_[static_cast<size_t>(b)] & ~(uint64_t(1) << b));
            if (between == 0) p.covers_.emplace_back(a, b);
        }
    std::sort(p.covers_.begin(), p.covers_.end());
    return p;
}

FinitePoset FinitePoset::induced(uint64_t keep) const {
    std::vector<std::string> labels;
    std::vector<int> remap(static_cast<size_t>(size()), -1);
    for (int i = 0; i < size(); ++i)
        if ((keep >> i) & 1u) {
            remap[static_cast<size_t>(i)] = static_cast<int>(labels.size());
            labels.push_back(labels_[static_cast<size_t>(i)]);
        }
    // Induced order = restriction of the closure, so feed closure pairs.
    std::vector<std::pair<int, int>> rels;
    for (int a = 0; a < size(); ++a) {
        if (!((keep >> a) & 1u)) continue;
        for (int b = 0; b < size(); ++b)
            if (a != b && ((keep >> b) & 1u) && less(a, b))
                rels.emplace_back(remap[static_cast<size_t>(a)], remap[static_cast<size_t>(b)]);
    }
    return from_relations(std::move(labels), rels);
}

FinitePoset FinitePoset::add_above(const std::vector<int>& below, const std::string& label) const {
    for (int z : below) check_element(z);
    std::vector<std::string> labels = labels_;
    labels.push_back(label);
    std::vector<std::pair<int, int>> rels(covers_);
    for (int z : below) rels.emplace_back(z, size());
    return from_relations(std::move(labels), rels);
}

FinitePoset FinitePoset::add_below(const std::vector<int>& above, const std::string& label) const {
    for (int z : above) check_element(z);
    std::vector<std::string> labels = labels_;
    labels.push_back(label);
    std::vector<std::pair<int, int>> rels(covers_);
    for (int z : above) rels.emplace_back(size(), z);
    return from_relations(std::move(labels), rels);
}

FinitePoset FinitePoset::remove_cover(int a, int b) const {
    check_element(a);
    check_element(b);
    if (!is_cover(a, b))
        throw UnknownCover(label(a) + " -> " + label(b) + " is not a cover");
    std::vector<std::pair<int, int>> rels;
    for (auto c : covers_)
        if (c != std::make_pair(a, b)) rels.push_back(c);
    return from_relations(labels_, rels);
}

FinitePoset FinitePoset::delete_up_set(int z) const {
    check_element(z);
    uint64_t keep = ~up_mask(z);
    if (size() < 64) keep &= (uint64_t(1) << size()) - 1;
    return induced(keep);
}

FinitePoset FinitePoset::delete_down_set(int z) const {
    check_element(z);
    uint64_t keep = ~down_mask(z);
    if (size() < 64) keep &= (uint64_t(1) << size()) - 1;
    return induced(keep);
}

FinitePoset FinitePoset::delete_element(int z) const {
    check_element(z);
    uint64_t keep = ~(uint64_t(1) << z);
    if (size() < 64) keep &= (uint64_t(1) << size()) - 1;
    return induced(keep);
}

FinitePoset FinitePoset::merge(int a, int b, const std::string& label) const {
    check_element(a);
    check_element(b);
    if (a == b) throw UnknownElement("merge needs two distinct elements");
    std::vector<std::string> labels;
    std::vector<int> remap(static_cast<size_t>(size()), -1);
    for (int i = 0; i < size(); ++i) {
        if (i == b) continue;
        remap[static_cast<size_t>(i)] = static_cast<int>(labels.size());
        labels.push_back(i == a ? label : labels_[static_cast<size_t>(i)]);
    }
    remap[static_cast<size_t>(b)] = remap[static_cast<size_t>(a)];
    std::vector<std::pair<int, int>> rels;
    for (auto [lo, hi] : covers_) {
        int l = remap[static_cast<size_t>(lo)], h = remap[static_cast<size_t>(hi)];
        if (l != h) rels.emplace_back(l, h);
    }
    return from_relations(std::move(labels), rels);
}

FinitePoset FinitePoset::dual() const {
    std::vector<std::pair<int, int>> rels;
    rels.reserve(covers_.size());
    for (auto [a, b] : covers_) rels.emplace_back(b, a);
    return from_relations(labels_, rels);
}

std::vector<int> FinitePoset::hasse_endpoints() const {
    std::vector<int> degree(static_cast<size_t>(size()), 0);
    for (auto [a, b] : covers_) {
        ++degree[static_cast<size_t>(a)];
        ++degree[static_cast<size_t>(b)];
    }
    std::vector<int> ends;
    for (int i = 0; i < size(); ++i)
        if (degree[static_cast<size_t>(i)] <= 1) ends.push_back(i);
    return ends;
}

IntPoly FinitePoset::rank_sequence(int max_size) const {
    if (size() > max_size)
        throw TooLarge("rank_sequence limited to " + std::to_string(max_size) + " elements");
    const uint64_t full = size() == 64 ? ~uint64_t(0) : (uint64_t(1) << size()) - 1;
    std::unordered_map<uint64_t, IntPoly> memo;

    auto rec = [&](auto&& self, uint64_t alive) -> IntPoly {
        if (alive == 0) return IntPoly(1);
        auto it = memo.find(alive);
        if (it != memo.end()) return it->second;
        // Split on the element whose removal shrinks both branches the most.
        int best = -1, best_gain = -1;
        for (int i = 0; i < size(); ++i) {
            if (!((alive >> i) & 1u)) continue;
            int gain = std::popcount(up_[static_cast<size_t>(i)] & alive) +
                       std::popcount(down_[static_cast<size_t>(i)] & alive);
            if (gain > best_gain) {
                best_gain = gain;
                best = i;
            }
        }
        uint64_t without = alive & ~(up_[static_cast<size_t>(best)] & alive);
        uint64_t down = down_[static_cast<size_t>(best)] & alive;
        IntPoly result = self(self, without) + self(self, alive & ~down).shifted(std::popcount(down));
        memo.emplace(alive, result);
        return result;
    };
    return rec(rec, full);
}

namespace {

std::vector<std::string> fence_labels(int count) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(count));
    for (int i = 1; i <= count; ++i) labels.push_back("x" + std::to_string(i));
    return labels;
}

// Zigzag cover between positions pos and pos+1 (0-based element indices).
std::pair<int, int> fence_step(const Composition& alpha, int pos) {
    return alpha.step_ascending(pos) ? std::make_pair(pos - 1, pos) : std::make_pair(pos, pos - 1);
}

}  // namespace

FinitePoset fence(const Composition& alpha) {
    const int n = alpha.total();
    std::vector<std::pair<int, int>> rels;
    for (int pos = 1; pos <= n; ++pos) rels.push_back(fence_step(alpha, pos));
    return FinitePoset::from_relations(fence_labels(n + 1), rels);
}

FinitePoset ij_fence(const Composition& alpha, int i, int j) {
    const int n = alpha.total();
    if (i < 1 || i > n + 1 || j < 1 || j > n + 1)
        throw IndexOutOfRange("fence has elements x1..x" + std::to_string(n + 1));
    if (i == j) throw IndexOutOfRange("added relation needs distinct elements");
    FinitePoset base = fence(alpha);
    if (base.less(j - 1, i - 1))
        throw CycleCreated("x" + std::to_string(j) + " < x" + std::to_string(i) +
                           " already holds");
    std::vector<std::pair<int, int>> rels(base.covers());
    rels.emplace_back(i - 1, j - 1);
    return FinitePoset::from_relations(base.labels(), rels);
}

std::pair<int, int> notch_pair_first(const Composition& alpha) {
    const int n = alpha.total();
    std::pair<int, int> ij;
    if (alpha.parts[0] != 0) {
        ij = {1, alpha.parts[0] + 2};
    } else {
        if (alpha.num_parts() < 2) throw IndexOutOfRange("notch undefined for " + alpha.to_string());
        ij = {alpha.parts[1] + 2, 1};
    }
    if (ij.first < 1 || ij.first > n + 1 || ij.second < 1 || ij.second > n + 1)
        throw IndexOutOfRange("first notch " + alpha.to_string() + " falls outside the fence");
    return ij;
}

std::pair<int, int> notch_pair_last(const Composition& alpha) {
    const int n = alpha.total();
    const int s = alpha.num_parts();
    const int last = alpha.parts.back();
    std::pair<int, int> ij = s % 2 == 0 ? std::make_pair(n + 1, n - last)
                                        : std::make_pair(n - last, n + 1);
    if (ij.first < 1 || ij.first > n + 1 || ij.second < 1 || ij.second > n + 1)
        throw IndexOutOfRange("last notch " + alpha.to_string() + " falls outside the fence");
    return ij;
}

FinitePoset notched(const Composition& alpha, NotchKind which) {
    std::vector<std::pair<int, int>> notches;
    if (which == NotchKind::First || which == NotchKind::Both)
        notches.push_back(notch_pair_first(alpha));
    if (which == NotchKind::Last || which == NotchKind::Both)
        notches.push_back(notch_pair_last(alpha));
    FinitePoset p = fence(alpha);
    std::vector<std::pair<int, int>> rels(p.covers());
    for (auto [i, j] : notches) {
        if (p.less(j - 1, i - 1))
            throw CycleCreated("notch relation contradicts the fence");
        rels.emplace_back(i - 1, j - 1);
    }
    return FinitePoset::from_relations(p.labels(), rels);
}

FinitePoset circular_fence(const Composition& alpha) {
    const int n = alpha.total();
    if (alpha.num_parts() % 2 != 0)
        throw InvalidComposition("circular fence needs an even number of parts");
    if (n < 2) throw InvalidComposition("circular fence needs n >= 2");
    std::vector<std::pair<int, int>> rels;
    for (int pos = 1; pos <= n; ++pos) {
        auto [lo, hi] = fence_step(alpha, pos);
        // identify x_{n+1} with x_1
        if (lo == n) lo = 0;
        if (hi == n) hi = 0;
        if (lo == hi) continue;
        rels.emplace_back(lo, hi);
    }
    try {
        return FinitePoset::from_relations(fence_labels(n), rels);
    } catch (const CycleCreated&) {
        throw InvalidComposition("wrap relation is inconsistent for " + alpha.to_string());
    }
}

IntPoly rank_sequence_fence_fast(const Composition& alpha) {
    const int n = alpha.total();
    // state 0: x_i outside the ideal, state 1: inside (tracking ideal size).
    IntPoly out(1), in = IntPoly(1).shifted(1);
    for (int pos = 1; pos <= n; ++pos) {
        IntPoly new_out, new_in;
        if (alpha.step_ascending(pos)) {
            // x_{pos+1} in the ideal forces x_pos in.
            new_out = out + in;
            new_in = in.shifted(1);
        } else {
            // x_pos in the ideal forces x_{pos+1} in.
            new_out = out;
            new_in = (out + in).shifted(1);
        }
        out = std::move(new_out);
        in = std::move(new_in);
    }
    return out + in;
}

namespace {

// Closes the union of two decomposition pieces into the circular fence by
// adding a fresh neighbour to the anchor end, a fresh neighbour to the other
// end, and identifying the two. Falls back to the ideal-split value when the
// pieces are too small to carry the surgery (the anchor vertex and the far end
// both disappear for short compositions); callers then take the split formula
// as the value of the circular rank polynomial.
struct DeltaResult {
    IntPoly rank;
    bool surgically_built = false;
};

DeltaResult build_delta(const FinitePoset& parent, uint64_t keep, const Composition& alpha,
                        const std::string& anchor, bool fresh_above_anchor,
                        const IntPoly& fallback) {
    FinitePoset U = parent.induced(keep);
    auto ends = U.hasse_endpoints();
    if (U.size() >= 2 && ends.size() == 2) {
        int anchor_u = -1, far_u = -1;
        for (int e : ends) (U.label(e) == anchor ? anchor_u : far_u) = e;
        if (anchor_u >= 0 && far_u >= 0) {
            try {
                const int far_pos = std::stoi(U.label(far_u).substr(1));
                FinitePoset with_fresh = fresh_above_anchor ? U.add_above({anchor_u}, "fresh")
                                                            : U.add_below({anchor_u}, "fresh");
                const int far_idx = with_fresh.index_of(U.label(far_u));
                FinitePoset with_next = alpha.step_ascending(far_pos)
                                            ? with_fresh.add_above({far_idx}, "next")
                                            : with_fresh.add_below({far_idx}, "next");
                FinitePoset delta =
                    with_next.merge(with_next.index_of("fresh"), with_next.index_of("next"),
                                    anchor + "~");
                return {delta.rank_sequence(), true};
            } catch (const ConstructionError&) {
                // fall through to the split value
            }
        }
    }
    return {fallback, false};
}

// The even-parts decomposition chain behind the two identities. Every poset is
// rebuilt by surgery on the fence; P_T-bar keeps the x_T generators as defining
// relations even where the dropped run relation would have made the cover
// redundant, which is what the ideal-counting argument needs.
NotchedDecompositionReport check_even(const Composition& alpha) {
    const int n = alpha.total();
    const int a_s = alpha.parts.back();
    NotchedDecompositionReport rep;

    FinitePoset P = notched(alpha, NotchKind::Last);
    const IntPoly R = P.rank_sequence();
    rep.notched_rank = R;

    const int peak = n - a_s + 1;  // local max next to the notch
    const int deep = n + 1;        // minimal end the notch starts from

    // T side.
    FinitePoset PT = P.add_above({P.index_of("x1"), P.index_of("x" + std::to_string(peak))}, "xT");
    const int xT = PT.index_of("xT");
    const int d1 = std::popcount(PT.down_mask(xT)) - 1;
    FinitePoset beta = PT.delete_down_set(xT);
    const IntPoly R_T = PT.rank_sequence();
    const IntPoly R_beta = beta.rank_sequence();
    rep.split_top = R_T == R + R_beta.shifted(d1 + 1);

    // P_T-bar: same generators minus the run relation x_{n-a_s} < x_peak.
    FinitePoset fenceP = fence(alpha);
    std::vector<std::pair<int, int>> rels;
    const std::pair<int, int> dropped =
        alpha.step_ascending(peak - 1) ? std::make_pair(peak - 2, peak - 1)
                                       : std::make_pair(peak - 1, peak - 2);
    for (auto c : fenceP.covers())
        if (c != dropped) rels.push_back(c);
    auto [ni, nj] = notch_pair_last(alpha);
    rels.emplace_back(ni - 1, nj - 1);
    rels.emplace_back(0, n + 1);         // x1 < xT
    rels.emplace_back(peak - 1, n + 1);  // x_peak < xT
    auto labels = fenceP.labels();
    labels.push_back("xT");
    FinitePoset PTbar = FinitePoset::from_relations(labels, rels);

    FinitePoset trimmed = PTbar.delete_up_set(PTbar.index_of("x" + std::to_string(peak - 1)));
    FinitePoset gamma = trimmed.delete_down_set(trimmed.index_of("x" + std::to_string(peak)));
    const IntPoly R_Tbar = PTbar.rank_sequence();
    const IntPoly R_gamma = gamma.rank_sequence();
    rep.split_top_bar = R_Tbar == R_T + R_gamma.shifted(a_s + 1);

    uint64_t keep = 0;
    for (const auto& lbl : beta.labels()) keep |= uint64_t(1) << PTbar.index_of(lbl);
    for (const auto& lbl : gamma.labels()) keep |= uint64_t(1) << PTbar.index_of(lbl);
    const IntPoly delta_split = R_beta.shifted(d1 - a_s) + R_gamma;
    DeltaResult delta = build_delta(PTbar, keep, alpha, "xT", true, delta_split);
    rep.split_delta = delta.rank == delta_split;
    rep.eq1 = R == R_Tbar - delta.rank.shifted(a_s + 1);

    // B side.
    FinitePoset PB = P.add_below({P.index_of("x1"), P.index_of("x" + std::to_string(deep))}, "xB");
    const int xB = PB.index_of("xB");
    FinitePoset beta_p = PB.delete_up_set(xB);
    const IntPoly R_B = PB.rank_sequence();
    const IntPoly R_beta_p = beta_p.rank_sequence();
    rep.split_bottom = R_B == R.shifted(1) + R_beta_p;

    // P_B-bar drops the notch relation itself.
    std::vector<std::pair<int, int>> rels_b(fenceP.covers());
    rels_b.emplace_back(n + 1, 0);         // xB < x1
    rels_b.emplace_back(n + 1, deep - 1);  // xB < x_{n+1}
    auto labels_b = fenceP.labels();
    labels_b.push_back("xB");
    FinitePoset PBbar = FinitePoset::from_relations(labels_b, rels_b);

    const int notch_lo = PBbar.index_of("x" + std::to_string(n - a_s));
    FinitePoset tmp = PBbar.delete_down_set(notch_lo);
    FinitePoset gamma_p = tmp.delete_up_set(tmp.index_of("x" + std::to_string(deep)));
    const IntPoly R_Bbar = PBbar.rank_sequence();
    const IntPoly R_gamma_p = gamma_p.rank_sequence();
    const int w = std::popcount(PBbar.down_mask(notch_lo));
    rep.split_bottom_bar = R_Bbar == R_B + R_gamma_p.shifted(w);

    uint64_t keep_b = 0;
    for (const auto& lbl : beta_p.labels()) keep_b |= uint64_t(1) << PBbar.index_of(lbl);
    for (const auto& lbl : gamma_p.labels()) keep_b |= uint64_t(1) << PBbar.index_of(lbl);
    const IntPoly delta_p_split = R_beta_p + R_gamma_p.shifted(w);
    DeltaResult delta_p = build_delta(PBbar, keep_b, alpha, "xB", false, delta_p_split);
    rep.split_delta_prime = delta_p.rank == delta_p_split;
    rep.eq2 = R.shifted(1) == R_Bbar - delta_p.rank;
    return rep;
}

// Reversing every fence relation in place toggles the leading-zero part and
// flips run parity; the notch pair is carried along unchanged.
Composition dual_composition(const Composition& alpha) {
    std::vector<int> parts;
    if (alpha.parts.front() == 0) {
        parts.assign(alpha.parts.begin() + 1, alpha.parts.end());
    } else {
        parts.push_back(0);
        parts.insert(parts.end(), alpha.parts.begin(), alpha.parts.end());
    }
    return Composition(parts);
}

}  // namespace

NotchedDecompositionReport check_notched_decompositions(const Composition& alpha) {
    if (alpha.num_parts() % 2 == 0) return check_even(alpha);
    Composition dual_alpha = dual_composition(alpha);
    NotchedDecompositionReport rep = check_even(dual_alpha);
    IntPoly own = notched(alpha, NotchKind::Last).rank_sequence();
    rep.dual_bridge = own == rep.notched_rank.reversed();
    rep.notched_rank = own;
    return rep;
}

}  // namespace fenceq
