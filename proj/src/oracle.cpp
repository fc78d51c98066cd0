#include "logmean/oracle.hpp"

#include <stdexcept>

namespace logmean::oracle {

using boost::multiprecision::log;
using boost::multiprecision::pow;
using boost::multiprecision::sqrt;

Real dp_mid(const Real& r, const Real& a, const Real& b)
{
    if (a == b)
        return pow(a, r);
    return (pow(b, r + 1) - pow(a, r + 1)) / ((r + 1) * (b - a));
}

Real mean(MeanTag tag, const Real& param, const Real& a, const Real& b)
{
    switch (tag) {
    case MeanTag::H: return 2 * a * b / (a + b);
    case MeanTag::G: return sqrt(a * b);
    case MeanTag::L: return a == b ? a : Real((b - a) / (log(b) - log(a)));
    case MeanTag::N1: {
        Real h = (sqrt(a) + sqrt(b)) / 2;
        return h * h;
    }
    case MeanTag::N2: return (sqrt(a) + sqrt(b)) / 2 * sqrt((a + b) / 2);
    case MeanTag::N3: return (a + sqrt(a * b) + b) / 3;
    case MeanTag::A: return (a + b) / 2;
    case MeanTag::S: return sqrt((a * a + b * b) / 2);
    case MeanTag::Bt:
        if (boost::multiprecision::isinf(param))
            return param > 0 ? (a < b ? b : a) : (a < b ? a : b);
        if (param == 0)
            return sqrt(a * b);
        return pow((pow(a, param) + pow(b, param)) / 2, 1 / param);
    case MeanTag::DP:
        if (!(param > 0 && param < 1))
            throw std::invalid_argument("DP mean requires 0 < r < 1");
        return pow(dp_mid(param, a, b), 1 / param);
    }
    throw std::logic_error("unhandled mean tag");
}

Real mean(const MeanKind& kind, const Real& a, const Real& b)
{
    return mean(kind.tag, Real(kind.param), a, b);
}

Real k(const Real& x)
{
    if (x == 1)
        return Real(1) / 6;
    const Real lx = log(x);
    return ((x + 1) * lx - 2 * (x - 1)) / (x * x * lx * lx * lx);
}

} // namespace logmean::oracle
