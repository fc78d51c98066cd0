#pragma once

#include "logmean/claims/program.hpp"
#include "logmean/claims/suite.hpp"
#include "logmean/sampling.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace logmean::claims {

enum class PrecisionMode {
    standard, // oracle re-checks margins in [-10 eps, -eps) and confirms witnesses
    oracle,   // oracle re-checks every margin in (-10 eps, eps)
};

struct AuditConfig {
    SamplingConfig sampling;
    PrecisionMode precision = PrecisionMode::standard;
    double epsilon = kClaimTolerance;
    double fail_factor = 10.0; // a FAILS witness must violate by fail_factor * epsilon
};

struct AuditWitness {
    double a = 0.0;
    double b = 0.0;
    std::size_t comparison = 0; // index of the failing adjacent comparison
    double margin = 0.0;        // binary64
    double oracle_margin = 0.0;
};

struct EntryResult {
    std::string id;
    std::string source;
    std::string expression;
    std::string note;
    Verdict expectation = Verdict::holds;
    Verdict verdict = Verdict::holds;
    std::size_t samples = 0;
    std::size_t violations = 0;        // samples with some margin below -epsilon
    std::size_t strong_violations = 0; // samples with some margin below -fail_factor * epsilon
    std::size_t adjudicated = 0;       // samples re-evaluated by the oracle
    std::size_t eval_faults = 0;
    double min_margin = 0.0;
    double min_margin_a = 0.0;
    double min_margin_b = 0.0;
    std::optional<AuditWitness> witness;
    std::optional<AuditWitness> fault; // first pair with an evaluation fault

    bool expectation_met() const { return verdict == expectation; }
};

struct AuditReport {
    AuditConfig config;
    std::vector<EntryResult> entries;

    std::size_t mismatches() const;
    bool all_met() const { return mismatches() == 0; }
};

/// Evaluates every entry on the same seeded pair set. Verdict HOLDS needs zero
/// violations; FAILS needs an oracle-confirmed witness past fail_factor *
/// epsilon; anything else (only weak violations, faults) is UNRESOLVED.
AuditReport run_audit(const std::vector<ClaimEntry>& suite, const AuditConfig& config);

/// Pretty-printed JSON with a fixed key order and no timing data.
std::string to_json(const AuditReport& report);

} // namespace logmean::claims
