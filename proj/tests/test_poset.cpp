#include "doctest.h"

#include "fenceq/enumerate.hpp"
#include "fenceq/poset.hpp"
#include "oracles.hpp"

using namespace fenceq;

namespace {
IntPoly P(std::vector<long long> c) { return IntPoly::from_int_coeffs(c); }
Composition C(std::vector<int> parts) { return Composition(std::move(parts)); }
}  // namespace

TEST_CASE("composition validation") {
    CHECK_NOTHROW(C({0, 2, 1}));
    CHECK_NOTHROW(C({3}));
    CHECK_THROWS_AS(C({}), InvalidComposition);
    CHECK_THROWS_AS(C({2, 0, 1}), InvalidComposition);
    CHECK_THROWS_AS(C({-1, 2}), InvalidComposition);
    CHECK(C({1, 2, 1, 2}).total() == 6);
}

TEST_CASE("fence posets") {
    CHECK(fence(C({1})).rank_sequence() == P({1, 1, 1}));
    CHECK(fence(C({1, 1})).rank_sequence() == P({1, 2, 1, 1}));

    // 9-element zigzag with runs of two
    FinitePoset f = fence(C({2, 2, 2, 2}));
    CHECK(f.size() == 9);
    CHECK(f.less(f.index_of("x1"), f.index_of("x3")));
    CHECK(f.less(f.index_of("x5"), f.index_of("x3")));
    CHECK_FALSE(f.less(f.index_of("x1"), f.index_of("x9")));

    // leading zero starts descending
    FinitePoset g = fence(C({0, 2}));
    CHECK(g.less(g.index_of("x3"), g.index_of("x1")));
}

TEST_CASE("ij fence posets") {
    CHECK(ij_fence(C({1, 1}), 3, 1).rank_sequence() == P({1, 1, 1, 1}));
    // x1 < x3 added to x1 < x2 > x3 linearizes to the chain x1 < x3 < x2
    FinitePoset chained = ij_fence(C({1, 1}), 1, 3);
    CHECK(chained.rank_sequence() == P({1, 1, 1, 1}));
    CHECK(chained.rank_sequence() == brute_force_rank(chained));
    // already implied: poset unchanged
    CHECK(ij_fence(C({2}), 1, 2).covers() == fence(C({2})).covers());
    CHECK_THROWS_AS(ij_fence(C({1, 1}), 2, 9), IndexOutOfRange);
    CHECK_THROWS_AS(ij_fence(C({2}), 3, 1), CycleCreated);
}

TEST_CASE("notched posets") {
    CHECK(notched(C({1, 1}), NotchKind::Last).rank_sequence() == P({1, 1, 1, 1}));
    CHECK(notched(C({1, 1}), NotchKind::First).rank_sequence() == P({1, 1, 1, 1}));

    // s even: notch (n+1, n - a_s) = (9, 6)
    FinitePoset p = notched(C({2, 2, 2, 2}), NotchKind::Last);
    CHECK(p.less(p.index_of("x9"), p.index_of("x6")));
    CHECK(p.rank_sequence() == brute_force_rank(p));

    // too short to carry the notch
    CHECK_THROWS_AS(notched(C({1}), NotchKind::Last), IndexOutOfRange);
    CHECK_THROWS_AS(notched(C({3}), NotchKind::First), IndexOutOfRange);
    CHECK_THROWS_AS(notched(C({0, 3}), NotchKind::First), IndexOutOfRange);
    // the two notches of (1,1) contradict each other
    CHECK_THROWS_AS(notched(C({1, 1}), NotchKind::Both), CycleCreated);
}

TEST_CASE("circular fence posets") {
    CHECK(circular_fence(C({1, 2, 1, 2})).rank_sequence() == P({1, 2, 3, 2, 3, 2, 1}));
    CHECK(circular_fence(C({1, 1, 1, 1})).rank_sequence() == P({1, 2, 1, 2, 1}));
    SUBCASE("(2,2) is symmetric") {
        FinitePoset p = circular_fence(C({2, 2}));
        IntPoly r = p.rank_sequence();
        CHECK(r == brute_force_rank(p));
        CHECK(r.degree() == 4);
        CHECK(seq_report(r).symmetric);
    }
    CHECK_THROWS_AS(circular_fence(C({1, 2, 1})), InvalidComposition);
    CHECK_THROWS_AS(circular_fence(C({0, 2})), InvalidComposition);
}

TEST_CASE("rank sequence basics") {
    FinitePoset antichain = FinitePoset::from_relations({"a", "b", "c"}, {});
    CHECK(antichain.rank_sequence() == P({1, 3, 3, 1}));
    FinitePoset chain =
        FinitePoset::from_relations({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(chain.rank_sequence() == P({1, 1, 1, 1, 1}));
    FinitePoset f = fence(C({2, 2, 2, 2}));
    CHECK(f.rank_sequence() == brute_force_rank(f));
    CHECK(f.rank_sequence() == rank_sequence_fence_fast(C({2, 2, 2, 2})));
}

TEST_CASE("fast fence rank agrees with the generic path") {
    CHECK(rank_sequence_fence_fast(C({1, 1})) == P({1, 2, 1, 1}));
    CHECK(rank_sequence_fence_fast(C({3})) == P({1, 1, 1, 1, 1}));
    for (int n = 1; n <= 10; ++n)
        for (const auto& alpha : compositions_of(n, true))
            CHECK(rank_sequence_fence_fast(alpha) == fence(alpha).rank_sequence());
}

TEST_CASE("surgery") {
    SUBCASE("add_above rebuilds the x_T poset") {
        FinitePoset f = fence(C({2, 2, 2, 2}));
        FinitePoset pt = f.add_above({f.index_of("x1"), f.index_of("x7")}, "xT");
        CHECK(pt.size() == 10);
        CHECK(pt.is_cover(pt.index_of("x1"), pt.index_of("xT")));
        CHECK(pt.is_cover(pt.index_of("x7"), pt.index_of("xT")));
        CHECK(pt.rank_sequence() == brute_force_rank(pt));
    }
    SUBCASE("delete_element of a maximal chain element") {
        FinitePoset chain = FinitePoset::from_relations({"a", "b", "c"}, {{0, 1}, {1, 2}});
        FinitePoset shorter = chain.delete_element(2);
        CHECK(shorter.size() == 2);
        CHECK(shorter.rank_sequence() == P({1, 1, 1}));
        // deleting the middle keeps the outer relation
        FinitePoset outer = chain.delete_element(1);
        CHECK(outer.rank_sequence() == P({1, 1, 1}));
    }
    SUBCASE("remove_cover grows the ideal count coefficientwise") {
        FinitePoset f = fence(C({2, 1, 2}));
        IntPoly before = f.rank_sequence();
        FinitePoset relaxed = f.remove_cover(f.index_of("x1"), f.index_of("x2"));
        IntPoly after = relaxed.rank_sequence();
        for (int k = 0; k <= after.degree(); ++k) CHECK(after.coeff(k) >= before.coeff(k));
        CHECK_THROWS_AS(f.remove_cover(f.index_of("x1"), f.index_of("x3")), UnknownCover);
    }
    SUBCASE("dual reverses the rank sequence") {
        for (int n = 1; n <= 7; ++n)
            for (const auto& alpha : compositions_of(n, true)) {
                FinitePoset f = fence(alpha);
                CHECK(f.dual().rank_sequence() == f.rank_sequence().reversed());
            }
    }
    SUBCASE("merge identifies two elements") {
        // a < b, c < d; merging b and c give a 3-chain a < bc < d? No:
        // bc inherits above-a and below-d, a and d stay incomparable? They
        // compare through bc: a < bc < d.
        FinitePoset two = FinitePoset::from_relations({"a", "b", "c", "d"}, {{0, 1}, {2, 3}});
        FinitePoset merged = two.merge(1, 2, "bc");
        CHECK(merged.size() == 3);
        CHECK(merged.less(merged.index_of("a"), merged.index_of("d")));
    }
}

TEST_CASE("fence ranks are almost interlacing and shaped") {
    for (int n = 1; n <= 12; ++n)
        for (const auto& alpha : compositions_of(n, true)) {
            SeqReport r = seq_report(rank_sequence_fence_fast(alpha));
            CHECK(r.almost_interlacing);
            CHECK((r.top_interlacing || r.bottom_interlacing || r.symmetric));
            CHECK((r.ineq_a && r.ineq_b) == r.almost_interlacing);
        }
}

TEST_CASE("singly notched ranks are unimodal and satisfy the half-chains") {
    for (int n = 2; n <= 10; ++n)
        for (const auto& alpha : compositions_of(n, true))
            for (NotchKind kind : {NotchKind::First, NotchKind::Last}) {
                FinitePoset p;
                try {
                    p = notched(alpha, kind);
                } catch (const ConstructionError&) {
                    continue;
                }
                SeqReport r = seq_report(p.rank_sequence());
                CHECK(r.unimodal);
                CHECK(r.ineq_b);
                CHECK((r.ineq_a && r.ineq_b) == r.almost_interlacing);
            }
}

// Almost interlacing does not survive on every notched composition: when the
// run carrying the notch is short the auxiliary circular posets of the
// decomposition argument degenerate, and the interlacing inequality genuinely
// fails. These sequences are pinned against brute-force subset counts; the
// acceptance scan reports the full family.
TEST_CASE("known interlacing failures of notched posets") {
    FinitePoset last21 = notched(C({2, 1}), NotchKind::Last);
    CHECK(last21.rank_sequence() == P({1, 2, 1, 1, 1}));
    CHECK(last21.rank_sequence() == brute_force_rank(last21));
    CHECK_FALSE(seq_report(last21.rank_sequence()).almost_interlacing);

    FinitePoset first12 = notched(C({1, 2}), NotchKind::First);
    CHECK(first12.rank_sequence() == P({1, 2, 1, 1, 1}));
    CHECK_FALSE(seq_report(first12.rank_sequence()).almost_interlacing);

    FinitePoset both1111 = notched(C({1, 1, 1, 1}), NotchKind::Both);
    CHECK(both1111.rank_sequence() == P({1, 2, 1, 1, 2, 1}));
    CHECK(both1111.rank_sequence() == brute_force_rank(both1111));
    CHECK_FALSE(seq_report(both1111.rank_sequence()).unimodal);

    // away from the degenerate family the interlacing statement holds
    for (std::vector<int> parts : {std::vector<int>{2, 2, 2, 2}, std::vector<int>{1, 2, 1, 2, 1},
                                   std::vector<int>{3, 2, 2}}) {
        Composition alpha(parts);
        for (NotchKind kind : {NotchKind::First, NotchKind::Last, NotchKind::Both}) {
            FinitePoset p;
            try {
                p = notched(alpha, kind);
            } catch (const ConstructionError&) {
                continue;
            }
            CAPTURE(alpha.to_string());
            CHECK(seq_report(p.rank_sequence()).almost_interlacing);
        }
    }
}

TEST_CASE("first notch matches the reflected last notch") {
    // reflect the zigzag left-to-right and compare rank polynomials
    auto reflected = [](const Composition& a) {
        std::vector<int> parts(a.parts.rbegin(), a.parts.rend());
        if (a.num_parts() % 2 == 1) parts.insert(parts.begin(), 0);
        if (parts.back() == 0) parts.pop_back();
        return Composition(parts);
    };
    for (int n = 2; n <= 9; ++n)
        for (const auto& alpha : compositions_of(n, true)) {
            Composition mirror = reflected(alpha);
            IntPoly first, last;
            bool ok_first = true, ok_last = true;
            try {
                first = notched(alpha, NotchKind::First).rank_sequence();
            } catch (const ConstructionError&) {
                ok_first = false;
            }
            try {
                last = notched(mirror, NotchKind::Last).rank_sequence();
            } catch (const ConstructionError&) {
                ok_last = false;
            }
            CHECK(ok_first == ok_last);
            if (ok_first && ok_last) CHECK(first == last);
        }

    // The same-composition variants need not agree: reflection relates a
    // first notch to the last notch of the reversed composition, not of the
    // composition itself.
    CHECK(notched(C({1, 2}), NotchKind::First).rank_sequence() !=
          notched(C({1, 2}), NotchKind::Last).rank_sequence());
    CHECK(notched(C({2, 2}), NotchKind::First).rank_sequence() ==
          notched(C({2, 2}), NotchKind::Last).rank_sequence());
}

TEST_CASE("circular order lemma including the exceptional family") {
    for (int n = 2; n <= 10; ++n)
        for (const auto& alpha : compositions_of(n, false)) {
            if (alpha.num_parts() % 2 != 0) continue;
            IntPoly rank = circular_fence(alpha).rank_sequence();
            const auto& r = rank.coeffs();
            const int m = rank.degree();
            for (int i = 0; i <= m; ++i)
                for (int j = i; j <= m; ++j) {
                    if (i + j <= m - 2) CHECK(r[static_cast<size_t>(i)] <= r[static_cast<size_t>(j)]);
                    if (i + j >= m + 2) CHECK(r[static_cast<size_t>(i)] >= r[static_cast<size_t>(j)]);
                }
        }
}

TEST_CASE("rank sequence rejects oversized posets") {
    std::vector<std::string> labels;
    for (int i = 0; i < 45; ++i) labels.push_back("e" + std::to_string(i));
    FinitePoset big = FinitePoset::from_relations(labels, {});
    CHECK_THROWS_AS(big.rank_sequence(), TooLarge);
}
