#include "logmean/claims/audit.hpp"

#include <json.hpp>

namespace logmean::claims {

namespace {

using Json = nlohmann::ordered_json;

Json witness_json(const std::optional<AuditWitness>& w)
{
    if (!w)
        return nullptr;
    Json j;
    j["a"] = w->a;
    j["b"] = w->b;
    j["comparison"] = w->comparison;
    j["margin"] = w->margin;
    j["oracle_margin"] = w->oracle_margin;
    return j;
}

Json fault_json(const std::optional<AuditWitness>& w)
{
    if (!w)
        return nullptr;
    Json j;
    j["a"] = w->a;
    j["b"] = w->b;
    return j;
}

} // namespace

std::string to_json(const AuditReport& report)
{
    const AuditConfig& c = report.config;
    Json root;

    Json cfg;
    cfg["seed"] = c.sampling.seed;
    cfg["samples"] = c.sampling.samples;
    cfg["near_equal_samples"] = c.sampling.near_equal_samples;
    cfg["ratio_range"] = {c.sampling.ratio_min, c.sampling.ratio_max};
    cfg["near_equal_range"] = {c.sampling.near_equal_min, c.sampling.near_equal_max};
    cfg["scale"] = c.sampling.scale;
    root["config"] = cfg;

    Json tol;
    tol["epsilon"] = c.epsilon;
    tol["fail_factor"] = c.fail_factor;
    tol["precision"] = c.precision == PrecisionMode::oracle ? "oracle" : "standard";
    tol["adjudication_band"] = c.precision == PrecisionMode::oracle
                                   ? Json{-c.fail_factor * c.epsilon, c.epsilon}
                                   : Json{-c.fail_factor * c.epsilon, -c.epsilon};
    tol["margin_scale"] = "max(|left|, |right|, a)";
    root["tolerance"] = tol;

    Json entries = Json::array();
    for (const EntryResult& e : report.entries) {
        Json j;
        j["id"] = e.id;
        j["source"] = e.source;
        j["expression"] = e.expression;
        j["expectation"] = std::string(verdict_name(e.expectation));
        j["verdict"] = std::string(verdict_name(e.verdict));
        j["expectation_met"] = e.expectation_met();
        j["samples"] = e.samples;
        j["violations"] = e.violations;
        j["strong_violations"] = e.strong_violations;
        j["adjudicated"] = e.adjudicated;
        j["eval_faults"] = e.eval_faults;
        j["min_margin"] = e.min_margin;
        j["min_margin_pair"] = {e.min_margin_a, e.min_margin_b};
        j["witness"] = witness_json(e.witness);
        j["fault"] = fault_json(e.fault);
        j["note"] = e.note;
        entries.push_back(std::move(j));
    }
    root["entries"] = std::move(entries);

    Json summary;
    summary["entries"] = report.entries.size();
    summary["mismatches"] = report.mismatches();
    Json ids = Json::array();
    for (const EntryResult& e : report.entries)
        if (!e.expectation_met())
            ids.push_back(e.id);
    summary["mismatched_ids"] = std::move(ids);
    root["summary"] = std::move(summary);

    return root.dump(2) + "\n";
}

} // namespace logmean::claims
