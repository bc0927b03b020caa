#include "doctest.h"

#include <random>

#include "fenceq/poly.hpp"

using namespace fenceq;

namespace {
IntPoly P(std::vector<long long> c) { return IntPoly::from_int_coeffs(c); }
}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    CHECK(P({1, 1}) + P({0, 1, 1}) == P({1, 2, 1}));
    CHECK(P({3, 7}) + IntPoly() == P({3, 7}));
    CHECK(P({7, 6, 1}) + P({-7, -6, -1}) == IntPoly());

    CHECK(P({1, 1}) * P({1, 1}) == P({1, 2, 1}));
    CHECK(P({5, 0, 2}) * IntPoly(1) == P({5, 0, 2}));
    CHECK(IntPoly::monomial(1, 3) * P({2, 5}) == P({0, 0, 0, 2, 5}));

    CHECK(P({1, 2, 1}).degree() == 2);
    CHECK(IntPoly().degree() == -1);
    CHECK(P({0, 0, 0}).is_zero());
}

TEST_CASE("exact division") {
    CHECK(poly_exact_div(P({1, 2, 1}), P({1, 1})) == P({1, 1}));
    CHECK(poly_exact_div(P({4, 9}), IntPoly(1)) == P({4, 9}));
    CHECK_THROWS_AS(poly_exact_div(P({1, 1}), P({1, 2})), InexactDivision);
    CHECK_THROWS_AS(poly_exact_div(P({1, 1}), IntPoly()), DivisionByZero);

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> deg(0, 6), coef(-4, 4);
    for (int iter = 0; iter < 300; ++iter) {
        std::vector<long long> a(static_cast<size_t>(deg(rng)) + 1), b(static_cast<size_t>(deg(rng)) + 1);
        for (auto& c : a) c = coef(rng);
        for (auto& c : b) c = coef(rng);
        IntPoly pa(std::vector<BigInt>(a.begin(), a.end()));
        IntPoly pb(std::vector<BigInt>(b.begin(), b.end()));
        if (pb.is_zero()) continue;
        CHECK(poly_exact_div(pa * pb, pb) == pa);
    }
}

TEST_CASE("sequence report on reference sequences") {
    SUBCASE("q^2+6q+7") {
        SeqReport r = seq_report(P({7, 6, 1}));
        CHECK(r.unimodal);
        CHECK_FALSE(r.ineq_a);
        CHECK_FALSE(r.almost_interlacing);
    }
    SUBCASE("exceptional circular shape") {
        SeqReport r = seq_report(P({1, 2, 3, 2, 3, 2, 1}));
        CHECK(r.symmetric);
        CHECK_FALSE(r.unimodal);
        REQUIRE(r.two_peak.has_value());
        CHECK(r.two_peak->first == 2);
        CHECK(r.two_peak->second == 4);
    }
    SUBCASE("12-gon c-polynomial") {
        SeqReport r = seq_report(P({2, 5, 9, 12, 11, 10, 6, 4, 2}));
        CHECK(r.unimodal);
        // 6^2 = 36 < 10*4 at index 6
        CHECK_FALSE(r.log_concave);
        CHECK(seq_report(P({5, 22, 26, 8})).log_concave);
    }
    SUBCASE("constant") {
        SeqReport r = seq_report(P({1}));
        CHECK(r.unimodal);
        CHECK(r.symmetric);
        CHECK(r.top_interlacing);
        CHECK(r.bottom_interlacing);
        CHECK(r.ineq_a);
        CHECK(r.ineq_b);
        CHECK(r.almost_interlacing);
        CHECK(r.log_concave);
        REQUIRE(r.two_peak.has_value());
        CHECK(*r.two_peak == std::make_pair(0, 0));
    }
    CHECK_THROWS_AS(seq_report(P({1, -1})), NegativeCoefficient);
}

// A unimodal sequence always admits an adjacent dominating pair; the reported
// two_peak is the lexicographically smallest dominating pair, which may sit
// wider apart when a plateau ties with the runner-up value.
TEST_CASE("unimodal sequences admit an adjacent two-peak") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> len(2, 9), val(0, 5);
    auto has_adjacent_peak = [](const std::vector<BigInt>& a) {
        for (size_t i = 0; i + 1 < a.size(); ++i) {
            const BigInt& floor_val = std::min(a[i], a[i + 1]);
            bool ok = true;
            for (size_t k = 0; k < a.size(); ++k)
                if (k != i && k != i + 1 && a[k] > floor_val) ok = false;
            if (ok) return true;
        }
        return false;
    };
    int tested = 0;
    while (tested < 500) {
        std::vector<BigInt> c(static_cast<size_t>(len(rng)));
        for (auto& x : c) x = val(rng);
        IntPoly p(std::move(c));
        if (p.is_zero() || p.degree() < 1) continue;
        SeqReport r = seq_report(p);
        if (!r.unimodal) continue;
        ++tested;
        REQUIRE(r.two_peak.has_value());
        CHECK(has_adjacent_peak(p.coeffs()));
        // the reported pair dominates
        const auto& a = p.coeffs();
        const BigInt& floor_val =
            std::min(a[static_cast<size_t>(r.two_peak->first)],
                     a[static_cast<size_t>(r.two_peak->second)]);
        for (int k = 0; k <= p.degree(); ++k)
            if (k != r.two_peak->first && k != r.two_peak->second)
                CHECK(a[static_cast<size_t>(k)] <= floor_val);
    }
}

TEST_CASE("interlacing chains") {
    // strictly rising-to-middle chains
    CHECK(seq_report(P({1, 3, 2})).top_interlacing);       // 1 <= 2 <= 3
    CHECK_FALSE(seq_report(P({2, 3, 1})).top_interlacing); // 2 <= 1 fails
    CHECK(seq_report(P({2, 3, 1})).bottom_interlacing);    // 1 <= 2 <= 3
    CHECK(seq_report(P({1, 2, 2, 1})).symmetric);
}
