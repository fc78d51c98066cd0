#include "logmean/claims/scan.hpp"

#include "logmean/claims/program.hpp"
#include "logmean/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace logmean::claims {

std::span<const NamedExpression> difference_functions()
{
    static constexpr NamedExpression kList[] = {
        {"T1", "5/3*(A-G) - (S-L)"},
        {"T2", "(5*A+7*L)/12 - (2*N2+3*L)/5"},
        {"T3", "(S+5*L)/6 - (2*N2+3*L)/5"},
        {"T4", "N2 - (5*N3+L)/6"},
    };
    return kList;
}

SignReport sign_change_scan(const Expr& expr, double xmin, double xmax, std::size_t points, bool use_oracle,
                            const std::vector<double>& probes)
{
    std::vector<double> xs = log_grid(xmin, xmax, points);
    xs.insert(xs.end(), probes.begin(), probes.end());
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<Symbol> table;
    const Program prog = Program::compile(expr, table);

    SignReport rep;
    rep.min_abs.value = std::numeric_limits<double>::infinity();
    for (double x : xs) {
        double v = 0.0;
        try {
            if (use_oracle) {
                std::vector<oracle::Real> slots;
                for (const Symbol& s : table)
                    slots.push_back(oracle::mean(s.tag, oracle_param(s), oracle::Real(1), oracle::Real(x)));
                v = oracle::to_double(
                    prog.run<oracle::Real>([&](int i) { return slots[static_cast<std::size_t>(i)]; }));
            } else {
                const PositivePair p(1.0, x);
                std::vector<double> slots;
                for (const Symbol& s : table)
                    slots.push_back(mean_value(s.kind(), p));
                v = prog.run<double>([&](int i) { return slots[static_cast<std::size_t>(i)]; });
            }
        } catch (const EvalFault&) {
            ++rep.faults;
            continue;
        }
        ++rep.points;
        const SignSample s{x, v};
        if (std::fabs(v) < std::fabs(rep.min_abs.value))
            rep.min_abs = s;
        if (std::fabs(v) <= kSignZeroBand * std::max(1.0, x))
            ++rep.zeros;
        else if (v < 0.0)
            rep.negatives.push_back(s);
        else
            rep.positives.push_back(s);
        if (v < rep.most_negative.value)
            rep.most_negative = s;
        if (v > rep.most_positive.value)
            rep.most_positive = s;
    }
    return rep;
}

} // namespace logmean::claims
