#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fenceq/poly.hpp"

namespace fenceq {

enum class ScanMode { Notched, Circular, SingleLam, LogConcavity, Identities };

ScanMode scan_mode_from_string(const std::string& s);
std::string to_string(ScanMode m);

struct ScanConfig {
    int n_min = 4;
    int n_max = 8;
    ScanMode mode = ScanMode::SingleLam;
    std::optional<std::uint64_t> sample_limit;  // per size, sampled modes
    std::uint64_t seed = 20240528;
    int parallelism = 1;

    void validate() const;
};

struct ScanViolation {
    int n = 0;
    std::string instance;  // canonical JSON instance description
    IntPoly poly;
    std::string failed;  // predicate or identity that failed
};

struct SizeSummary {
    int n = 0;
    std::uint64_t instances = 0;
    std::uint64_t violations = 0;
};

struct ScanReport {
    std::uint64_t instances_checked = 0;
    std::vector<ScanViolation> violations;
    std::vector<SizeSummary> per_size;
    double elapsed_seconds = 0;
    // Theorem modes assert; the log-concavity mode only reports findings.
    bool findings_only = false;
};

ScanReport run_scan(const ScanConfig& cfg);

}  // namespace fenceq
