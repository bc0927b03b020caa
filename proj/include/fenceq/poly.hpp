#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fenceq/errors.hpp"

namespace fenceq {

using BigInt = boost::multiprecision::cpp_int;

// Univariate polynomial in q with unbounded signed integer coefficients,
// stored densely in ascending degree order with trailing zeros trimmed.
// The zero polynomial is the empty coefficient list.
class IntPoly {
  public:
    IntPoly() = default;
    IntPoly(long long constant);  // NOLINT: implicit on purpose, mirrors integer literals
    explicit IntPoly(std::vector<BigInt> coeffs);

    static IntPoly monomial(BigInt coeff, int degree);
    static IntPoly from_int_coeffs(const std::vector<long long>& coeffs);

    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& coeff(int k) const;

    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const IntPoly& o) const { return coeffs_ != o.coeffs_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

    // Multiplication by q^k.
    IntPoly shifted(int k) const;
    IntPoly pow(int e) const;
    // Coefficient reversal a_k -> a_{deg-k}; rank polynomial of the dual poset.
    IntPoly reversed() const;

    bool all_nonnegative() const;
    std::string to_string() const;

  private:
    void trim();
    std::vector<BigInt> coeffs_;
};

IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);

// Exact quotient; throws InexactDivision when a nonzero remainder appears and
// DivisionByZero when den is zero. Inexactness here means a bug upstream in
// mutation bookkeeping, never a user error.
IntPoly poly_exact_div(const IntPoly& num, const IntPoly& den);

// Predicate bundle over a nonnegative coefficient sequence a_0..a_m.
struct SeqReport {
    bool unimodal = false;
    bool symmetric = false;
    bool top_interlacing = false;
    bool bottom_interlacing = false;
    bool ineq_a = false;
    bool ineq_b = false;
    bool almost_interlacing = false;
    bool log_concave = false;
    // Lexicographically smallest (i,j), i<j, with min(a_i,a_j) >= a_k for all
    // k outside {i,j}. A one-term sequence reports the degenerate (0,0).
    std::optional<std::pair<int, int>> two_peak;
};

SeqReport seq_report(const IntPoly& p);

}  // namespace fenceq
