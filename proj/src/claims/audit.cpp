#include "logmean/claims/audit.hpp"

#include "logmean/simd/means_batch.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace logmean::claims {

std::size_t AuditReport::mismatches() const
{
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](const EntryResult& e) { return !e.expectation_met(); }));
}

namespace {

constexpr std::size_t kMaxWitnessCandidates = 16;
constexpr int kBisectionSteps = 60;
constexpr double kWitnessDepth = 100.0;

using Columns = std::map<Symbol, std::vector<double>>;

Columns evaluate_columns(const std::vector<ClaimEntry>& suite, const PairSet& pairs)
{
    Columns cols;
    for (const ClaimEntry& e : suite)
        for (const Symbol& s : symbols_of(e.chain))
            cols.try_emplace(s);
    for (auto& [sym, values] : cols) {
        values.resize(pairs.size());
        simd::mean_batch(sym.kind(), pairs.a, pairs.b, values);
    }
    return cols;
}

struct Checker {
    const CompiledChain& chain;
    const AuditConfig& config;

    double strong() const { return -config.fail_factor * config.epsilon; }

    std::vector<oracle::Real> oracle_margins(double a, double b) const
    {
        return eval_claim_oracle(chain, oracle::Real(a), oracle::Real(b));
    }

    // Worst comparison at (a, b) in binary64; nullopt on an evaluation fault.
    std::optional<std::pair<std::size_t, double>> worst(double a, double b) const
    {
        try {
            const std::vector<double> m = eval_claim(chain, PositivePair(a, b));
            const auto it = std::min_element(m.begin(), m.end());
            return std::pair{static_cast<std::size_t>(it - m.begin()), *it};
        } catch (const EvalFault&) {
            return std::nullopt;
        }
    }

    // Oracle-confirmed witness at (a, b), if the violation there is strong.
    std::optional<AuditWitness> confirm(double a, double b) const
    {
        const auto w = worst(a, b);
        if (!w)
            return std::nullopt;
        std::vector<oracle::Real> om;
        try {
            om = oracle_margins(a, b);
        } catch (const EvalFault&) {
            return std::nullopt;
        }
        const auto it = std::min_element(om.begin(), om.end());
        const double worst_oracle = oracle::to_double(*it);
        if (!(worst_oracle < strong()))
            return std::nullopt;
        const std::size_t j = static_cast<std::size_t>(it - om.begin());
        const std::vector<double> m = eval_claim(chain, PositivePair(a, b));
        return AuditWitness{a, b, j, m[j], worst_oracle};
    }

    // Moves b toward a along ln(b/a) while the violation stays below the
    // target, which sits kWitnessDepth times past the failure threshold so
    // the final witness does not hinge on the last few ulps.
    AuditWitness minimize(const AuditWitness& start) const
    {
        const double target = std::max(kWitnessDepth * strong(), start.oracle_margin);
        const double a = start.a;
        double inside = std::log(start.b / a);
        double outside = 0.0;
        for (int i = 0; i < kBisectionSteps; ++i) {
            const double mid = 0.5 * (inside + outside);
            const double b = a * std::exp(mid);
            if (b == a)
                break;
            const auto w = worst(a, b);
            if (w && w->second <= target)
                inside = mid;
            else
                outside = mid;
        }
        if (auto c = confirm(a, a * std::exp(inside)))
            return *c;
        return start;
    }
};

EntryResult audit_entry(const ClaimEntry& entry, const PairSet& pairs, const Columns& cols,
                        const AuditConfig& config)
{
    EntryResult r;
    r.id = entry.id;
    r.source = entry.source;
    r.expression = entry.expression;
    r.note = entry.note;
    r.expectation = entry.expectation;
    r.samples = pairs.size();
    r.min_margin = std::numeric_limits<double>::infinity();

    const CompiledChain chain = CompiledChain::compile(entry.chain);
    std::vector<const std::vector<double>*> slot_cols;
    for (const Symbol& s : chain.symbols)
        slot_cols.push_back(&cols.at(s));

    const Checker check{chain, config};
    const double eps = config.epsilon;
    const double strong = check.strong();
    const double band_top = config.precision == PrecisionMode::oracle ? eps : -eps;

    std::vector<double> terms(chain.terms.size());
    std::vector<std::pair<double, std::size_t>> strong_samples;

    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const double a = pairs.a[i];
        const double b = pairs.b[i];
        const auto load = [&](int slot) { return (*slot_cols[static_cast<std::size_t>(slot)])[i]; };
        try {
            for (std::size_t t = 0; t < terms.size(); ++t)
                terms[t] = chain.terms[t].run<double>(load);
        } catch (const EvalFault&) {
            if (r.eval_faults++ == 0)
                r.fault = AuditWitness{a, b, 0, 0.0, 0.0};
            continue;
        }

        double worst = std::numeric_limits<double>::infinity();
        bool needs_oracle = false;
        for (std::size_t j = 0; j + 1 < terms.size(); ++j) {
            const double m = comparison_margin(chain.chain.relations[j], terms[j], terms[j + 1], a);
            worst = std::min(worst, m);
            if (m >= strong && m < band_top)
                needs_oracle = true;
        }

        if (needs_oracle) {
            ++r.adjudicated;
            try {
                const std::vector<oracle::Real> om = check.oracle_margins(a, b);
                worst = oracle::to_double(*std::min_element(om.begin(), om.end()));
            } catch (const EvalFault&) {
                ++r.eval_faults;
                continue;
            }
        }

        if (worst < r.min_margin) {
            r.min_margin = worst;
            r.min_margin_a = a;
            r.min_margin_b = b;
        }
        if (worst < -eps)
            ++r.violations;
        if (worst < strong) {
            ++r.strong_violations;
            strong_samples.emplace_back(worst, i);
        }
    }

    // Most negative first; ties by sample index keep the choice deterministic.
    std::sort(strong_samples.begin(), strong_samples.end());
    for (std::size_t k = 0; k < strong_samples.size() && k < kMaxWitnessCandidates; ++k) {
        const std::size_t i = strong_samples[k].second;
        if (auto w = check.confirm(pairs.a[i], pairs.b[i])) {
            r.witness = check.minimize(*w);
            break;
        }
    }

    if (r.witness)
        r.verdict = Verdict::fails;
    else if (r.violations == 0 && r.eval_faults == 0)
        r.verdict = Verdict::holds;
    else
        r.verdict = Verdict::unresolved;
    return r;
}

} // namespace

AuditReport run_audit(const std::vector<ClaimEntry>& suite, const AuditConfig& config)
{
    AuditReport report;
    report.config = config;
    const PairSet pairs = draw_pairs(config.sampling);
    const Columns cols = evaluate_columns(suite, pairs);
    report.entries.reserve(suite.size());
    for (const ClaimEntry& e : suite)
        report.entries.push_back(audit_entry(e, pairs, cols, config));
    return report;
}

} // namespace logmean::claims
