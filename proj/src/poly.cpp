#include "fenceq/poly.hpp"

#include <algorithm>
#include <sstream>

namespace fenceq {

std::atomic<long>& inexact_division_events() {
    static std::atomic<long> count{0};
    return count;
}

IntPoly::IntPoly(long long constant) {
    if (constant != 0) coeffs_.emplace_back(constant);
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(BigInt coeff, int degree) {
    IntPoly p;
    if (coeff == 0) return p;
    p.coeffs_.assign(static_cast<size_t>(degree) + 1, BigInt(0));
    p.coeffs_.back() = std::move(coeff);
    return p;
}

IntPoly IntPoly::from_int_coeffs(const std::vector<long long>& coeffs) {
    std::vector<BigInt> c(coeffs.begin(), coeffs.end());
    return IntPoly(std::move(c));
}

const BigInt& IntPoly::coeff(int k) const {
    static const BigInt zero{0};
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<size_t>(k)];
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::shifted(int k) const {
    if (is_zero() || k == 0) return k >= 0 ? *this : IntPoly();
    std::vector<BigInt> out(coeffs_.size() + static_cast<size_t>(k), BigInt(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i + static_cast<size_t>(k)] = coeffs_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::pow(int e) const {
    IntPoly acc(1);
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

IntPoly IntPoly::reversed() const {
    std::vector<BigInt> out(coeffs_.rbegin(), coeffs_.rend());
    return IntPoly(std::move(out));
}

bool IntPoly::all_nonnegative() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c >= 0; });
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& c = coeffs_[static_cast<size_t>(k)];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        BigInt a = abs(c);
        if (a != 1 || k == 0) os << a.str();
        if (k >= 1) os << "q";
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) { return a + b; }
IntPoly poly_mul(const IntPoly& a, const IntPoly& b) { return a * b; }

IntPoly poly_exact_div(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (num.is_zero()) return IntPoly();
    if (num.degree() < den.degree())
        throw InexactDivision("exact division failed: numerator degree below denominator");
    std::vector<BigInt> rem(num.coeffs());
    const auto& d = den.coeffs();
    std::vector<BigInt> quot(rem.size() - d.size() + 1, BigInt(0));
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        const BigInt& lead = rem[static_cast<size_t>(k) + d.size() - 1];
        if (lead == 0) continue;
        if (lead % d.back() != 0)
            throw InexactDivision("exact division failed: non-divisible leading coefficient");
        BigInt q = lead / d.back();
        quot[static_cast<size_t>(k)] = q;
        for (size_t j = 0; j < d.size(); ++j) rem[static_cast<size_t>(k) + j] -= q * d[j];
    }
    for (const BigInt& r : rem)
        if (r != 0) throw InexactDivision("exact division failed: nonzero remainder");
    return IntPoly(std::move(quot));
}

namespace {

bool chain_nondecreasing(const std::vector<BigInt>& a, const std::vector<int>& idx) {
    for (size_t i = 0; i + 1 < idx.size(); ++i)
        if (a[static_cast<size_t>(idx[i])] > a[static_cast<size_t>(idx[i + 1])]) return false;
    return true;
}

// Outside-in alternating index order: 0, m, 1, m-1, ...
std::vector<int> interlace_order(int m, bool start_low) {
    std::vector<int> order;
    int lo = 0, hi = m;
    bool low_turn = start_low;
    while (lo <= hi) {
        if (low_turn) order.push_back(lo++);
        else order.push_back(hi--);
        low_turn = !low_turn;
    }
    return order;
}

}  // namespace

SeqReport seq_report(const IntPoly& p) {
    if (!p.all_nonnegative())
        throw NegativeCoefficient("seq_report requires nonnegative coefficients: " + p.to_string());
    SeqReport rep;
    const auto& a = p.coeffs();
    if (a.empty()) {
        rep.unimodal = rep.symmetric = rep.top_interlacing = rep.bottom_interlacing = true;
        rep.ineq_a = rep.ineq_b = rep.almost_interlacing = rep.log_concave = true;
        return rep;
    }
    const int m = p.degree();

    rep.unimodal = [&] {
        int i = 0;
        while (i < m && a[i] <= a[i + 1]) ++i;
        while (i < m && a[i] >= a[i + 1]) ++i;
        return i == m;
    }();

    rep.symmetric = [&] {
        for (int i = 0; i <= m; ++i)
            if (a[i] != a[m - i]) return false;
        return true;
    }();

    rep.top_interlacing = chain_nondecreasing(a, interlace_order(m, true));
    rep.bottom_interlacing = chain_nondecreasing(a, interlace_order(m, false));

    rep.ineq_a = [&] {
        for (int i = 0; i < m - 1 - i; ++i)
            if (a[i] > a[m - 1 - i]) return false;
        for (int i = 0; i + 1 < m - i; ++i)
            if (a[m - i] > a[i + 1]) return false;
        return true;
    }();

    // Index convention from the decomposition lemmas: nondecreasing through
    // floor((m-1)/2), nonincreasing from ceil((m-1)/2)+1.
    rep.ineq_b = [&] {
        int up_end = (m - 1) >= 0 ? (m - 1) / 2 : -1;
        for (int i = 0; i < up_end; ++i)
            if (a[i] > a[i + 1]) return false;
        int down_start = (m - 1) >= 0 ? (m - 1 + 1) / 2 + 1 : m + 1;
        for (int i = down_start; i < m; ++i)
            if (a[i] < a[i + 1]) return false;
        return true;
    }();

    rep.almost_interlacing = rep.unimodal && rep.ineq_a;

    rep.log_concave = [&] {
        for (int i = 1; i < m; ++i)
            if (a[i] * a[i] < a[i - 1] * a[i + 1]) return false;
        return true;
    }();

    if (m == 0) {
        rep.two_peak = {0, 0};
    } else {
        for (int i = 0; i <= m && !rep.two_peak; ++i) {
            for (int j = i + 1; j <= m && !rep.two_peak; ++j) {
                const BigInt& floor_val = std::min(a[i], a[j]);
                bool ok = true;
                for (int k = 0; k <= m; ++k) {
                    if (k == i || k == j) continue;
                    if (a[k] > floor_val) {
                        ok = false;
                        break;
                    }
                }
                if (ok) rep.two_peak = {i, j};
            }
        }
    }
    return rep;
}

}  // namespace fenceq
