// Command-line front end: eval, audit, constants, convexity, scan, plot-data.
//
// Exit codes: 0 success, 1 a claim or check did not meet its expectation,
// 2 usage or parse error, 3 internal error.

#include "logmean/claims/audit.hpp"
#include "logmean/claims/parser.hpp"
#include "logmean/claims/program.hpp"
#include "logmean/claims/scan.hpp"
#include "logmean/claims/suite.hpp"
#include "logmean/constants.hpp"
#include "logmean/convexity.hpp"
#include "logmean/oracle.hpp"
#include "logmean/sampling.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace logmean;

struct RunConfig {
    std::uint64_t seed = 42;
    std::size_t samples = 100000;
    std::size_t grid = 10000;
    double xmin = 1e-6;
    double xmax = 1e6;
    bool oracle = false;
    std::string out;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string num(double v)
{
    if (std::isnan(v))
        return "NaN";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Writes to --out when given, stdout otherwise.
void emit(const RunConfig& rc, const std::string& text)
{
    if (rc.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(rc.out, std::ios::binary);
    if (!f)
        throw UsageError("cannot write " + rc.out);
    f << text;
}

void check_range(const RunConfig& rc)
{
    if (!(rc.xmin > 0.0 && rc.xmin < rc.xmax) || !std::isfinite(rc.xmax))
        throw UsageError("need 0 < --xmin < --xmax");
    if (rc.grid < 2)
        throw UsageError("--grid must be at least 2");
}

int cmd_eval(const RunConfig& rc, const std::string& text, double a, double b)
{
    const claims::ExprPtr e = claims::parse_expression(text);
    if (rc.oracle) {
        const oracle::Real v = claims::eval_expression_oracle(*e, oracle::Real(a), oracle::Real(b));
        std::cout << v.str(40) << "\n";
    } else {
        std::cout << num(claims::eval_expression(*e, PositivePair(a, b))) << "\n";
    }
    return 0;
}

int cmd_audit(const RunConfig& rc, const std::string& suite_path)
{
    const std::vector<claims::ClaimEntry> suite =
        suite_path.empty() ? claims::bundled_suite() : claims::load_suite_file(suite_path);

    claims::AuditConfig cfg;
    cfg.sampling.seed = rc.seed;
    cfg.sampling.samples = rc.samples;
    cfg.sampling.near_equal_samples = rc.samples / 10;
    cfg.precision = rc.oracle ? claims::PrecisionMode::oracle : claims::PrecisionMode::standard;

    const claims::AuditReport report = claims::run_audit(suite, cfg);
    emit(rc, claims::to_json(report));

    for (const claims::EntryResult& e : report.entries)
        if (!e.expectation_met())
            std::cerr << "mismatch: " << e.id << " expected " << claims::verdict_name(e.expectation) << ", got "
                      << claims::verdict_name(e.verdict) << "\n";
    std::cerr << report.entries.size() << " claims, " << report.mismatches() << " mismatches\n";
    return report.all_met() ? 0 : 1;
}

int cmd_constants(const RunConfig& rc)
{
    check_range(rc);
    ScanConfig sc;
    sc.grid_points = rc.grid;
    sc.x_min = rc.xmin;
    sc.x_max = rc.xmax;

    std::ostringstream os;
    os << "ratio,claimed,g(1),g(1-1e-9),g(1+1e-9),sup,argmax,inf,arginf,alpha,beta,sign_pattern,status\n";
    bool ok = true;
    for (const ConstantClaim& c : constant_claims()) {
        const RatioProfile prof = extremum_scan(c.numerator, c.denominator, sc);
        const Rational exact = ratio_at_one(c.numerator, c.denominator);
        const double below = ratio_g(c.numerator, c.denominator, 1.0 - 1e-9);
        const double above = ratio_g(c.numerator, c.denominator, 1.0 + 1e-9);
        const double claimed = c.claimed.to_double();
        const bool limit_ok = exact == c.claimed && std::fabs(below - claimed) < 1e-8 &&
                              std::fabs(above - claimed) < 1e-8;
        const bool sup_ok = prof.sup <= prof.value_at_one + 1e-9;
        const bool sign_ok = !c.proposition || prof.sign.rises_then_falls();
        const bool row_ok = limit_ok && sup_ok && sign_ok;
        ok = ok && row_ok;

        std::string pattern = "n/a";
        if (c.proposition)
            pattern = prof.sign.rises_then_falls() ? "rise-fall" : "other";
        os << c.numerator.name() << "/" << c.denominator.name() << "," << c.claimed.str() << "," << exact.str() << ","
           << num(below) << "," << num(above) << "," << num(prof.sup) << "," << num(prof.argmax) << ","
           << num(prof.inf) << "," << num(prof.arginf) << "," << num(prof.alpha) << "," << num(prof.beta) << ","
           << pattern << "," << (row_ok ? "ok" : "FAIL") << "\n";
    }
    emit(rc, os.str());
    return ok ? 0 : 1;
}

int cmd_convexity(const RunConfig& rc)
{
    check_range(rc);
    if (rc.xmin < 1e-8 || rc.xmax > 1e8)
        throw UsageError("convexity grid must lie in [1e-8, 1e8]");
    const std::vector<double> grid = log_grid(rc.xmin, rc.xmax, rc.grid);
    ConvexityConfig cfg;
    cfg.seed = rc.seed;

    std::ostringstream os;
    os << "measure,f(1),f'(1),min_f'',argmin_f'',fd_max_rel_err,fd_points,eq13_violations,midpoint_violations,"
          "curvature_violations,witness,status\n";
    bool ok = true;
    for (const MeasurePair& m : convex_measures()) {
        const ConvexityVerdict v = verify_lemma11(m, grid, cfg);
        ok = ok && v.passed();
        std::string witness;
        if (v.witness)
            witness = v.witness->check + "@(" + num(v.witness->a) + " " + num(v.witness->b) + ")";
        os << m.name() << "," << num(v.f_at_one) << "," << num(v.fprime_at_one) << ","
           << num(v.second_derivative_min) << "," << num(v.second_derivative_argmin) << ","
           << num(v.fd_max_rel_err) << "," << v.fd_points << "," << v.eq13_violations << ","
           << v.midpoint_violations << "," << v.curvature_violations << "," << witness << ","
           << (v.passed() ? "ok" : "FAIL") << "\n";
    }
    emit(rc, os.str());
    return ok ? 0 : 1;
}

int cmd_scan(const RunConfig& rc, const std::string& text)
{
    check_range(rc);
    const claims::ExprPtr e = claims::parse_expression(text);
    const claims::SignReport r = claims::sign_change_scan(*e, rc.xmin, rc.xmax, rc.grid, rc.oracle);

    std::ostringstream os;
    os << "expression: " << claims::pretty(*e) << "\n";
    os << "points: " << r.points << "\n";
    os << "negative: " << r.negatives.size() << "\n";
    os << "positive: " << r.positives.size() << "\n";
    os << "zero: " << r.zeros << "\n";
    os << "faults: " << r.faults << "\n";
    if (r.single_signed()) {
        os << "single-signed over scan; min |value| " << num(r.min_abs.value) << " at x = " << num(r.min_abs.x)
           << "\n";
    } else {
        os << "sign change\n";
        os << "most negative " << num(r.most_negative.value) << " at x = " << num(r.most_negative.x) << "\n";
        os << "most positive " << num(r.most_positive.value) << " at x = " << num(r.most_positive.x) << "\n";
    }
    emit(rc, os.str());
    return 0;
}

std::string pair_tag(const MeasurePair& n, const MeasurePair& d) { return n.name() + "_" + d.name(); }

int cmd_plot(const RunConfig& rc, const std::string& target)
{
    check_range(rc);
    const std::vector<double> xs = log_grid(rc.xmin, rc.xmax, rc.grid);
    std::ostringstream os;

    if (target == "second-derivatives") {
        const std::vector<MeasurePair> ms = convex_measures();
        os << "x";
        for (const MeasurePair& m : ms)
            os << "," << m.name();
        os << "\n";
        for (double x : xs) {
            os << num(x);
            for (const MeasurePair& m : ms)
                os << "," << num(gen_derivatives(m, x).f2);
            os << "\n";
        }
    } else if (target == "ratios") {
        std::vector<ConstantClaim> props;
        for (const ConstantClaim& c : constant_claims())
            if (c.proposition)
                props.push_back(c);
        os << "x";
        for (const ConstantClaim& c : props)
            os << ",g_" << pair_tag(c.numerator, c.denominator) << ",dg_" << pair_tag(c.numerator, c.denominator);
        os << "\n";
        for (double x : xs) {
            os << num(x);
            for (const ConstantClaim& c : props) {
                double g = NAN, dg = NAN;
                try {
                    g = ratio_g(c.numerator, c.denominator, x);
                    dg = ratio_g_derivative(c.numerator, c.denominator, x);
                } catch (const std::domain_error&) {
                }
                os << "," << num(g) << "," << num(dg);
            }
            os << "\n";
        }
    } else if (target == "t-functions") {
        std::vector<claims::ExprPtr> fs;
        os << "x";
        for (const claims::NamedExpression& t : claims::difference_functions()) {
            fs.push_back(claims::parse_expression(t.text));
            os << "," << t.name;
        }
        os << "\n";
        for (double x : xs) {
            os << num(x);
            for (const claims::ExprPtr& f : fs)
                os << "," << num(claims::eval_expression(*f, PositivePair(1.0, x)));
            os << "\n";
        }
    } else {
        throw UsageError("unknown plot target '" + target + "' (second-derivatives, ratios, t-functions)");
    }
    emit(rc, os.str());
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Bivariate means, difference measures and inequality audits"};
    app.require_subcommand(1);

    RunConfig rc;
    const auto add_common = [&rc](CLI::App* sub) {
        sub->add_option("--seed", rc.seed, "RNG seed")->capture_default_str();
        sub->add_option("--samples", rc.samples, "log-uniform sample pairs")->capture_default_str();
        sub->add_option("--grid", rc.grid, "grid points")->capture_default_str();
        sub->add_option("--xmin", rc.xmin, "grid lower end")->capture_default_str();
        sub->add_option("--xmax", rc.xmax, "grid upper end")->capture_default_str();
        sub->add_flag("--oracle", rc.oracle, "extended-precision evaluation");
        sub->add_option("--out", rc.out, "output file (default stdout)");
    };

    std::string text;
    double a = 0.0, b = 0.0;
    auto* eval = app.add_subcommand("eval", "value of a mean or expression at (a, b)");
    eval->add_option("expr", text, "mean symbol or expression, e.g. L or B[2] or (A+3*L)/4")->required();
    eval->add_option("a", a)->required();
    eval->add_option("b", b)->required();
    add_common(eval);

    std::string suite;
    auto* audit = app.add_subcommand("audit", "audit the bundled or given claim suite; JSON report");
    audit->add_option("--suite", suite, "suite file");
    add_common(audit);

    auto* constants = app.add_subcommand("constants", "ratio profiles of the eight best-constant claims (CSV)");
    add_common(constants);

    auto* convexity = app.add_subcommand("convexity", "convexity checks of the eight measures (CSV)");
    add_common(convexity);

    auto* scan = app.add_subcommand("scan", "sign census of E(1, x) over a log grid");
    scan->add_option("expr", text, "expression")->required();
    add_common(scan);

    std::string target;
    auto* plot = app.add_subcommand("plot-data", "CSV curves: second-derivatives, ratios, t-functions");
    plot->add_option("target", target)->required();
    add_common(plot);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc_exit = app.exit(e);
        return rc_exit == 0 ? 0 : 2;
    }

    try {
        if (*eval)
            return cmd_eval(rc, text, a, b);
        if (*audit)
            return cmd_audit(rc, suite);
        if (*constants)
            return cmd_constants(rc);
        if (*convexity)
            return cmd_convexity(rc);
        if (*scan)
            return cmd_scan(rc, text);
        if (*plot)
            return cmd_plot(rc, target);
    } catch (const claims::ParseError& e) {
        std::cerr << "parse error at " << e.position() << ": " << e.what() << "\n";
        return 2;
    } catch (const claims::SuiteError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
