#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qf {

/// Error with a stable machine-readable code ("NotAssociative", "Q2Violation", ...)
/// and a human-readable witness in what().
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

/// A search or enumeration exceeded its configured budget. The CLI maps this
/// to a SKIPPED verdict instead of a failure.
class CapExceeded : public Error {
public:
    explicit CapExceeded(const std::string& msg) : Error("CapExceeded", msg) {}
};

/// Budgets for the exhaustive searches. Defaults keep every operation total
/// at desk scale; the CLI exposes them as flags.
struct Caps {
    int max_quandle_size = 16;        // automorphism / isomorphism search
    int max_group_order = 512;        // constructed groups
    int max_group_aut_order = 64;     // automorphism search on groups
    long long search_budget = 10'000'000;   // node budget for backtracking searches
    long long max_enumeration = 2'000'000;  // brute-force cocycle sweeps
    long long max_class_reps = 4096;        // cohomology class representatives
};

inline void require(bool cond, const std::string& code, const std::string& msg) {
    if (!cond) throw Error(code, msg);
}

} // namespace qf
