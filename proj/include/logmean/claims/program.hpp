#pragma once

#include "logmean/claims/ast.hpp"
#include "logmean/means.hpp"
#include "logmean/oracle.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace logmean::claims {

/// Raised when an expression has no real value at a point (sqrt of a
/// negative number, division by zero).
class EvalFault : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Postfix form of an expression whose symbols refer to slots of a symbol
/// table, so the same program runs in binary64 and in oracle precision.
class Program {
public:
    enum class Code { constant, slot, add, sub, mul, div, pow, sqrt };
    struct Instr {
        Code code;
        int slot = 0;
        int exponent = 0;
        Rational value;
    };

    /// `table` is extended with any symbol not yet present.
    static Program compile(const Expr& e, std::vector<Symbol>& table);

    /// `load(i)` returns the value of slot i.
    template <class Real, class Load>
    Real run(Load&& load) const;

    std::size_t depth() const { return depth_; }

private:
    std::vector<Instr> code_;
    std::size_t depth_ = 0;
};

/// A chain with every term compiled against one symbol table.
struct CompiledChain {
    Chain chain;
    std::vector<Symbol> symbols;
    std::vector<Program> terms;

    static CompiledChain compile(Chain chain);
};

inline constexpr double kClaimTolerance = 1e-12;

/// Margin of comparison i: right - left for <=, left - right for >=,
/// divided by max(|left|, |right|, a).
template <class Real>
Real comparison_margin(Relation rel, const Real& left, const Real& right, const Real& a)
{
    using std::abs;
    const Real diff = rel == Relation::le ? Real(right - left) : Real(left - right);
    Real scale = abs(left);
    if (abs(right) > scale)
        scale = abs(right);
    if (a > scale)
        scale = a;
    return diff / scale;
}

/// Term values of `c` at p, in binary64.
std::vector<double> eval_terms(const CompiledChain& c, const PositivePair& p);

/// Term values of `c` at (a, b) with every mean and literal in oracle precision.
std::vector<oracle::Real> eval_terms_oracle(const CompiledChain& c, const oracle::Real& a, const oracle::Real& b);

/// Scale-normalized margins of every adjacent comparison at p. The claim is
/// satisfied at p iff every margin is >= -kClaimTolerance.
std::vector<double> eval_claim(const Chain& chain, const PositivePair& p);
std::vector<double> eval_claim(const CompiledChain& chain, const PositivePair& p);

/// Oracle-precision margins.
std::vector<oracle::Real> eval_claim_oracle(const CompiledChain& chain, const oracle::Real& a,
                                            const oracle::Real& b);

/// Value of a single expression at p.
double eval_expression(const Expr& e, const PositivePair& p);
oracle::Real eval_expression_oracle(const Expr& e, const oracle::Real& a, const oracle::Real& b);

/// Exact value of a symbol's parameter in oracle precision.
oracle::Real oracle_param(const Symbol& s);

template <class Real, class Load>
Real Program::run(Load&& load) const
{
    constexpr std::size_t kMaxDepth = 64;
    if (depth_ > kMaxDepth)
        throw std::length_error("expression nests too deeply");
    Real stack[kMaxDepth];
    std::size_t sp = 0;
    for (const Instr& in : code_) {
        switch (in.code) {
        case Code::constant:
            stack[sp++] = Real(static_cast<double>(in.value.num())) / Real(static_cast<double>(in.value.den()));
            break;
        case Code::slot:
            stack[sp++] = load(in.slot);
            break;
        case Code::add:
            --sp;
            stack[sp - 1] = stack[sp - 1] + stack[sp];
            break;
        case Code::sub:
            --sp;
            stack[sp - 1] = stack[sp - 1] - stack[sp];
            break;
        case Code::mul:
            --sp;
            stack[sp - 1] = stack[sp - 1] * stack[sp];
            break;
        case Code::div:
            --sp;
            if (stack[sp] == 0)
                throw EvalFault("division by zero");
            stack[sp - 1] = stack[sp - 1] / stack[sp];
            break;
        case Code::pow: {
            Real base = stack[sp - 1];
            if (in.exponent < 0 && base == 0)
                throw EvalFault("zero raised to a negative power");
            Real acc = Real(1);
            for (int i = 0, n = in.exponent < 0 ? -in.exponent : in.exponent; i < n; ++i)
                acc = acc * base;
            stack[sp - 1] = in.exponent < 0 ? Real(Real(1) / acc) : acc;
            break;
        }
        case Code::sqrt: {
            using std::sqrt;
            if (stack[sp - 1] < 0)
                throw EvalFault("square root of a negative value");
            stack[sp - 1] = sqrt(stack[sp - 1]);
            break;
        }
        }
    }
    return stack[0];
}

} // namespace logmean::claims
