#include "logmean/claims/program.hpp"

#include "logmean/claims/parser.hpp"

#include <algorithm>

namespace logmean::claims {

namespace {

int slot_of(const Symbol& s, std::vector<Symbol>& table)
{
    auto it = std::find(table.begin(), table.end(), s);
    if (it != table.end())
        return static_cast<int>(it - table.begin());
    table.push_back(s);
    return static_cast<int>(table.size() - 1);
}

void emit(const Expr& e, std::vector<Symbol>& table, std::vector<Program::Instr>& code, std::size_t& depth,
          std::size_t& max_depth)
{
    using Code = Program::Code;
    auto push = [&] { max_depth = std::max(max_depth, ++depth); };
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Literal>) {
                code.push_back({Code::constant, 0, 0, n.value});
                push();
            } else if constexpr (std::is_same_v<T, SymbolRef>) {
                code.push_back({Code::slot, slot_of(n.symbol, table), 0, {}});
                push();
            } else if constexpr (std::is_same_v<T, Binary>) {
                emit(*n.lhs, table, code, depth, max_depth);
                emit(*n.rhs, table, code, depth, max_depth);
                static constexpr Code ops[] = {Code::add, Code::sub, Code::mul, Code::div};
                code.push_back({ops[static_cast<int>(n.op)], 0, 0, {}});
                --depth;
            } else if constexpr (std::is_same_v<T, Power>) {
                emit(*n.base, table, code, depth, max_depth);
                code.push_back({Code::pow, 0, n.exponent, {}});
            } else {
                emit(*n.arg, table, code, depth, max_depth);
                code.push_back({Code::sqrt, 0, 0, {}});
            }
        },
        e.node);
}

} // namespace

Program Program::compile(const Expr& e, std::vector<Symbol>& table)
{
    Program p;
    std::size_t depth = 0;
    emit(e, table, p.code_, depth, p.depth_);
    return p;
}

CompiledChain CompiledChain::compile(Chain chain)
{
    CompiledChain out;
    out.chain = std::move(chain);
    for (const auto& t : out.chain.terms)
        out.terms.push_back(Program::compile(*t, out.symbols));
    return out;
}

oracle::Real oracle_param(const Symbol& s)
{
    return oracle::Real(s.param.num()) / oracle::Real(s.param.den());
}

std::vector<double> eval_terms(const CompiledChain& c, const PositivePair& p)
{
    std::vector<double> slots;
    slots.reserve(c.symbols.size());
    for (const Symbol& s : c.symbols)
        slots.push_back(mean_value(s.kind(), p));
    std::vector<double> out;
    out.reserve(c.terms.size());
    for (const Program& prog : c.terms)
        out.push_back(prog.run<double>([&](int i) { return slots[static_cast<std::size_t>(i)]; }));
    return out;
}

std::vector<oracle::Real> eval_terms_oracle(const CompiledChain& c, const oracle::Real& a, const oracle::Real& b)
{
    std::vector<oracle::Real> slots;
    slots.reserve(c.symbols.size());
    for (const Symbol& s : c.symbols)
        slots.push_back(oracle::mean(s.tag, oracle_param(s), a, b));
    std::vector<oracle::Real> out;
    out.reserve(c.terms.size());
    for (const Program& prog : c.terms)
        out.push_back(prog.run<oracle::Real>([&](int i) { return slots[static_cast<std::size_t>(i)]; }));
    return out;
}

std::vector<double> eval_claim(const CompiledChain& chain, const PositivePair& p)
{
    const std::vector<double> v = eval_terms(chain, p);
    std::vector<double> margins;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        margins.push_back(comparison_margin(chain.chain.relations[i], v[i], v[i + 1], p.a()));
    return margins;
}

std::vector<double> eval_claim(const Chain& chain, const PositivePair& p)
{
    return eval_claim(CompiledChain::compile(chain), p);
}

std::vector<oracle::Real> eval_claim_oracle(const CompiledChain& chain, const oracle::Real& a,
                                            const oracle::Real& b)
{
    const std::vector<oracle::Real> v = eval_terms_oracle(chain, a, b);
    std::vector<oracle::Real> margins;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        margins.push_back(comparison_margin(chain.chain.relations[i], v[i], v[i + 1], a));
    return margins;
}

double eval_expression(const Expr& e, const PositivePair& p)
{
    std::vector<Symbol> table;
    const Program prog = Program::compile(e, table);
    std::vector<double> slots;
    for (const Symbol& s : table)
        slots.push_back(mean_value(s.kind(), p));
    return prog.run<double>([&](int i) { return slots[static_cast<std::size_t>(i)]; });
}

oracle::Real eval_expression_oracle(const Expr& e, const oracle::Real& a, const oracle::Real& b)
{
    std::vector<Symbol> table;
    const Program prog = Program::compile(e, table);
    std::vector<oracle::Real> slots;
    for (const Symbol& s : table)
        slots.push_back(oracle::mean(s.tag, oracle_param(s), a, b));
    return prog.run<oracle::Real>([&](int i) { return slots[static_cast<std::size_t>(i)]; });
}

} // namespace logmean::claims
