// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include "logmean/claims/audit.hpp"
#include "logmean/claims/parser.hpp"
#include "logmean/claims/program.hpp"
#include "logmean/claims/scan.hpp"
#include "logmean/claims/suite.hpp"
#include "logmean/constants.hpp"
#include "logmean/convexity.hpp"
#include "logmean/oracle.hpp"
#include "logmean/sampling.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

using namespace logmean;
using namespace logmean::claims;

namespace {

// Pinned tolerances and budgets.
constexpr double kLimitTolerance = 1e-8;       // |g(1 +- 1e-9) - claimed|
constexpr double kLimitOffset = 1e-9;
constexpr double kSupSlack = 1e-9;             // sup g <= g(1) + slack
constexpr double kCurvatureFloor = -1e-12;     // f'' >= floor
constexpr double kNormalization = 1e-12;       // |f(1)|, |f'(1)|
constexpr double kFdTolerance = 1e-6;          // finite-difference relative error
constexpr double kSeriesTolerance = 1e-13;     // series path against the oracle
constexpr double kOracleValueTolerance = 1e-12;
constexpr std::size_t kGridPoints = 10000;
constexpr double kGridMin = 1e-6;
constexpr double kGridMax = 1e6;
constexpr double kBudgetConstants = 1.0;       // seconds
constexpr double kBudgetSupremum = 5.0;
constexpr double kBudgetConvexity = 10.0;
constexpr double kBudgetAudit = 30.0;

// Reference values from an independent 50-digit evaluation.
constexpr double kT3AtSmall = -0.0037512758188412709; // T3(1, 1e-5)
constexpr double kT3PrintedAtSmall = -0.00337512758;  // value as printed; only its sign is asserted
constexpr double kT3AtOnePointOne = 1.3213512833e-4;  // T3(1, 1.1)
constexpr double kFiveN3L = 0.14354739951034138;      // 5 (N3 - L)(1, 2)
constexpr double kSixN1L = 0.086470441785504702;      // 6 (N1 - L)(1, 2)
constexpr double kCorrectedMiddleMargin = 5.8678280088e-5; // ((N1 - (A+3L)/4) / N1)(1, 2)
constexpr double kCorrectedMiddleGap = 8.5500519825e-5;    // N1 - (A+3L)/4 at (1, 2)

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail, double seconds)
{
    if (!ok)
        ++failures;
    std::printf("AC%d %s %s: %s [%.2f s]\n", id, ok ? "PASS" : "FAIL", title.c_str(), detail.c_str(), seconds);
    std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

const EntryResult* find(const AuditReport& r, const std::string& id)
{
    for (const EntryResult& e : r.entries)
        if (e.id == id)
            return &e;
    return nullptr;
}

ExprPtr difference(std::string_view name)
{
    for (const NamedExpression& t : difference_functions())
        if (t.name == name)
            return parse_expression(t.text);
    throw std::out_of_range(std::string(name));
}

void ac1_limit_constants()
{
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::ostringstream os;
    for (const ConstantClaim& c : constant_claims()) {
        const Rational exact = ratio_at_one(c.numerator, c.denominator);
        const double lo = ratio_g(c.numerator, c.denominator, 1.0 - kLimitOffset);
        const double hi = ratio_g(c.numerator, c.denominator, 1.0 + kLimitOffset);
        const double want = c.claimed.to_double();
        const bool row = exact == c.claimed && std::fabs(lo - want) < kLimitTolerance &&
                         std::fabs(hi - want) < kLimitTolerance;
        ok = ok && row;
        os << c.numerator.name() << "/" << c.denominator.name() << "=" << exact.str() << (row ? "" : "(!)") << " ";
    }
    const double s = seconds_since(t0);
    report(1, "limit constants", ok && s < kBudgetConstants, os.str(), s);
}

void ac2_supremum_at_one()
{
    const auto t0 = std::chrono::steady_clock::now();
    ScanConfig sc;
    sc.grid_points = kGridPoints;
    sc.x_min = kGridMin;
    sc.x_max = kGridMax;
    bool ok = true;
    std::ostringstream os;
    for (const ConstantClaim& c : constant_claims()) {
        if (!c.proposition)
            continue;
        const RatioProfile p = extremum_scan(c.numerator, c.denominator, sc);
        const bool row = p.sup <= p.value_at_one + kSupSlack && p.sign.rises_then_falls() &&
                         p.sign.left_positive > 0 && p.sign.right_negative > 0;
        ok = ok && row;
        os << c.numerator.name() << "/" << c.denominator.name() << " sup-g(1)=" << fmt(p.sup - p.value_at_one)
           << (row ? "" : "(!)") << " ";
    }
    const double s = seconds_since(t0);
    report(2, "supremum at 1 and g' sign pattern", ok && s < kBudgetSupremum, os.str(), s);
}

void ac3_convexity()
{
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<double> grid = log_grid(kGridMin, kGridMax, kGridPoints);
    ConvexityConfig cfg;
    cfg.eq13_samples = 10000;
    cfg.midpoint_samples = 10000;
    bool ok = true;
    std::ostringstream os;
    for (const MeasurePair& m : convex_measures()) {
        const ConvexityVerdict v = verify_lemma11(m, grid, cfg);
        const bool row = std::fabs(v.f_at_one) <= kNormalization && std::fabs(v.fprime_at_one) <= kNormalization &&
                         v.second_derivative_min >= kCurvatureFloor && v.curvature_violations == 0 &&
                         v.eq13_violations == 0 && v.midpoint_violations == 0;
        ok = ok && row;
        os << m.name() << (row ? " ok " : " FAILED ");
    }
    const double s = seconds_since(t0);
    report(3, "convexity of eight measures", ok && s < kBudgetConvexity, os.str(), s);
}

void ac4_derivatives()
{
    const auto t0 = std::chrono::steady_clock::now();
    double worst_fd = 0.0;
    for (const MeasurePair& m : registered_measures())
        for (double x : log_grid(1e-3, 1e3, 2001)) {
            if (x > 0.99 && x < 1.01)
                continue;
            worst_fd = std::max(worst_fd, fd_cross_check(m, x));
        }

    // Series paths: L near a = b, and k inside its window in ln x.
    double worst_series = 0.0;
    UniformSource u(7);
    for (int i = 0; i < 5000; ++i) {
        const double gap = (u.next() < 0.5 ? -1 : 1) * u.log_uniform(1e-14, kLogMeanSeriesWindow);
        const double x = 1.0 + gap;
        const double l = mean_value(MeanKind::of(MeanTag::L), PositivePair(1.0, x));
        const double lo = oracle::to_double(oracle::mean(MeanTag::L, 0, 1, x));
        worst_series = std::max(worst_series, std::fabs(l - lo) / lo);
        const double y = std::exp(u.uniform(-kLogSeriesWindow, kLogSeriesWindow));
        const double ko = oracle::to_double(oracle::k(oracle::Real(y)));
        worst_series = std::max(worst_series, std::fabs(k_fn(y) - ko) / ko);
    }
    const double s = seconds_since(t0);
    report(4, "derivative transcription", worst_fd < kFdTolerance && worst_series < kSeriesTolerance,
           "max fd rel err " + fmt(worst_fd) + ", max series rel err " + fmt(worst_series), s);
}

const char* const kChainIds[] = {"eq17-chain", "eq2-chain",  "eq2-power-means", "eq3-dp-half", "eq3-dp-quarter",
                                 "eq3-dp-three-quarters", "eq4-chain", "eq5-bound", "eq6-chain", "eq9-chain",
                                 "eq10-chain", "eq11-chain", "eq31-chain", "eq32-chain", "eq33-chain",
                                 "eq34-bound", "eq36-chain", "eq54-chain", "eq55-chain", "eq56-chain",
                                 "eq57-chain"};

void ac5_chain_audit(const AuditReport& r, double seconds)
{
    bool ok = true;
    std::size_t samples = 0;
    std::ostringstream os;
    for (const char* id : kChainIds) {
        const EntryResult* e = find(r, id);
        const bool row = e && e->verdict == Verdict::holds && e->violations == 0 && e->eval_faults == 0;
        ok = ok && row;
        if (e)
            samples = e->samples;
        if (!row)
            os << id << " FAILED ";
    }
    os << std::size(kChainIds) << " chains, " << samples << " samples each, zero violations required";
    report(5, "chain audit", ok && seconds < kBudgetAudit && samples >= 100000, os.str(), seconds);
}

void ac6_errata(const AuditReport& r)
{
    const auto t0 = std::chrono::steady_clock::now();
    const auto verdict_is = [&](const char* id, Verdict v, bool need_witness) {
        const EntryResult* e = find(r, id);
        if (!e || e->verdict != v)
            return false;
        if (need_witness)
            return e->witness.has_value() && e->witness->oracle_margin < -10 * kClaimTolerance;
        return e->violations == 0;
    };
    bool ok = verdict_is("eq35-printed-tail", Verdict::fails, true) &&
              verdict_is("eq35-corrected", Verdict::holds, false) &&
              verdict_is("eq60-middle-printed", Verdict::fails, true) &&
              verdict_is("eq60-middle-corrected", Verdict::holds, false) &&
              verdict_is("eq63-printed-left", Verdict::fails, true) &&
              verdict_is("remark45-t4", Verdict::holds, false);

    // The printed tail at (1, 2), and the corrected middle margin there.
    const oracle::Real one(1), two(2);
    const double five_n3l = oracle::to_double(eval_expression_oracle(*parse_expression("5*(N3-L)"), one, two));
    const double six_n1l = oracle::to_double(eval_expression_oracle(*parse_expression("6*(N1-L)"), one, two));
    const CompiledChain middle = CompiledChain::compile(parse_claim("(A+3*L)/4 <= N1"));
    const double middle_margin = oracle::to_double(eval_claim_oracle(middle, one, two)[0]);
    const double middle_gap = oracle::to_double(eval_expression_oracle(*parse_expression("N1 - (A+3*L)/4"), one, two));
    ok = ok && std::fabs(five_n3l - kFiveN3L) < kOracleValueTolerance &&
         std::fabs(six_n1l - kSixN1L) < kOracleValueTolerance && five_n3l > six_n1l &&
         std::fabs(middle_margin - kCorrectedMiddleMargin) < kOracleValueTolerance &&
         std::fabs(middle_gap - kCorrectedMiddleGap) < kOracleValueTolerance;

    std::string detail = "at (1,2): 5*(N3-L)=" + fmt(five_n3l) + " > 6*(N1-L)=" + fmt(six_n1l) +
                         "; (A+3L)/4 <= N1 margin " + fmt(middle_margin) + " (gap " + fmt(middle_gap) + ")";
    if (const EntryResult* e = find(r, "eq35-printed-tail"); e && e->witness)
        detail += "; tail witness (" + fmt(e->witness->a) + ", " + fmt(e->witness->b) + ")";
    report(6, "errata detection", ok, detail, seconds_since(t0));
}

void ac7_sign_change()
{
    const auto t0 = std::chrono::steady_clock::now();
    const ExprPtr t3 = difference("T3");
    const SignReport scan = sign_change_scan(*t3, kGridMin, kGridMax, kGridPoints, false, {1e-5});

    bool negative_at_probe = false;
    for (const SignSample& s : scan.negatives)
        negative_at_probe = negative_at_probe || s.x == 1e-5;
    bool positive_in_band = false;
    double band_x = 0.0, band_v = 0.0;
    for (const SignSample& s : scan.positives)
        if (s.x > 1.0 && s.x < 2.0 && s.value > band_v) {
            positive_in_band = true;
            band_x = s.x;
            band_v = s.value;
        }

    const double at_small = oracle::to_double(eval_expression_oracle(*t3, 1, oracle::Real(1e-5)));
    const double at_one_one = oracle::to_double(eval_expression_oracle(*t3, 1, oracle::Real(1.1)));
    const bool ok = negative_at_probe && positive_in_band && !scan.single_signed() &&
                    std::signbit(at_small) == std::signbit(kT3PrintedAtSmall) &&
                    std::fabs(at_small - kT3AtSmall) < kOracleValueTolerance &&
                    std::fabs(at_one_one - kT3AtOnePointOne) < kOracleValueTolerance;
    report(7, "T3 sign change", ok,
           "T3(1e-5)=" + fmt(at_small) + ", T3(1.1)=" + fmt(at_one_one) + ", scan positive at x=" + fmt(band_x) +
               " value " + fmt(band_v),
           seconds_since(t0));
}

void ac8_nonnegative_differences(const AuditReport& r)
{
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::ostringstream os;
    for (const char* name : {"T1", "T2"}) {
        const SignReport s = sign_change_scan(*difference(name), kGridMin, kGridMax, kGridPoints);
        const bool row = s.negatives.empty() && s.faults == 0;
        ok = ok && row;
        os << name << " negatives " << s.negatives.size() << ", min " << fmt(s.min_abs.value) << "; ";
    }
    for (const char* id : {"eq58-t1", "eq62-t2"}) {
        const EntryResult* e = find(r, id);
        const bool row = e && e->verdict == Verdict::holds && e->violations == 0;
        ok = ok && row;
        os << id << " violations " << (e ? e->violations : 0) << "; ";
    }
    report(8, "T1 and T2 nonnegative", ok, os.str(), seconds_since(t0));
}

void ac9_determinism(const std::string& first)
{
    const auto t0 = std::chrono::steady_clock::now();
    const std::string second = to_json(run_audit(bundled_suite(), AuditConfig{}));
    const bool ok = !first.empty() && first == second;
    report(9, "determinism", ok, std::to_string(first.size()) + " byte reports identical: " + (ok ? "yes" : "no"),
           seconds_since(t0));
}

} // namespace

int main()
{
    ac1_limit_constants();
    ac2_supremum_at_one();
    ac3_convexity();
    ac4_derivatives();

    const auto t0 = std::chrono::steady_clock::now();
    const AuditReport audit = run_audit(bundled_suite(), AuditConfig{});
    const double audit_seconds = seconds_since(t0);
    const std::string json = to_json(audit);

    ac5_chain_audit(audit, audit_seconds);
    ac6_errata(audit);
    ac7_sign_change();
    ac8_nonnegative_differences(audit);
    ac9_determinism(json);

    std::printf("%d failing\n", failures);
    return failures == 0 ? 0 : 1;
}
