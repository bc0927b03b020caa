#pragma once

#include <atomic>
#include <stdexcept>
#include <string>

namespace fenceq {

// Error categories map onto CLI exit codes: 2 = bad input, 3 = construction
// failure, 4 = internal invariant breach.
struct Error : std::runtime_error {
    int exit_code;
    Error(const std::string& msg, int code) : std::runtime_error(msg), exit_code(code) {}
};

struct InputError : Error {
    explicit InputError(const std::string& msg) : Error(msg, 2) {}
};

struct ConstructionError : Error {
    explicit ConstructionError(const std::string& msg) : Error(msg, 3) {}
};

struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error(msg, 4) {}
};

struct InvalidComposition : ConstructionError {
    explicit InvalidComposition(const std::string& msg) : ConstructionError(msg) {}
};

struct IndexOutOfRange : ConstructionError {
    explicit IndexOutOfRange(const std::string& msg) : ConstructionError(msg) {}
};

struct CycleCreated : ConstructionError {
    explicit CycleCreated(const std::string& msg) : ConstructionError(msg) {}
};

struct UnknownElement : ConstructionError {
    explicit UnknownElement(const std::string& msg) : ConstructionError(msg) {}
};

struct UnknownCover : ConstructionError {
    explicit UnknownCover(const std::string& msg) : ConstructionError(msg) {}
};

struct TooLarge : ConstructionError {
    explicit TooLarge(const std::string& msg) : ConstructionError(msg) {}
};

struct NegativeCoefficient : ConstructionError {
    explicit NegativeCoefficient(const std::string& msg) : ConstructionError(msg) {}
};

struct NotADiagonal : ConstructionError {
    explicit NotADiagonal(const std::string& msg) : ConstructionError(msg) {}
};

struct InvalidCurve : ConstructionError {
    explicit InvalidCurve(const std::string& msg) : ConstructionError(msg) {}
};

struct NoCrossings : ConstructionError {
    explicit NoCrossings(const std::string& msg) : ConstructionError(msg) {}
};

struct NotSingleLamination : ConstructionError {
    explicit NotSingleLamination(const std::string& msg) : ConstructionError(msg) {}
};

struct TooFewCrossings : ConstructionError {
    explicit TooFewCrossings(const std::string& msg) : ConstructionError(msg) {}
};

// Exact division is the correctness sentinel of the mutation engine; the
// acceptance suite asserts this counter stays at zero.
std::atomic<long>& inexact_division_events();

struct DivisionByZero : InternalError {
    explicit DivisionByZero(const std::string& msg) : InternalError(msg) {}
};

struct InexactDivision : InternalError {
    explicit InexactDivision(const std::string& msg) : InternalError(msg) {
        ++inexact_division_events();
    }
};

}  // namespace fenceq
