#include "logmean/claims/ast.hpp"

#include <algorithm>
#include <stdexcept>

namespace logmean::claims {

MeanKind Symbol::kind() const
{
    switch (tag) {
    case MeanTag::Bt: return MeanKind::power(param.to_double());
    case MeanTag::DP: return MeanKind::dp(param.to_double());
    default: return MeanKind::of(tag);
    }
}

std::string Symbol::str() const
{
    if (tag == MeanTag::Bt || tag == MeanTag::DP)
        return std::string(tag_name(tag)) + "[" + param.str() + "]";
    return std::string(tag_name(tag));
}

bool operator<(const Symbol& x, const Symbol& y)
{
    if (x.tag != y.tag)
        return static_cast<int>(x.tag) < static_cast<int>(y.tag);
    return x.param < y.param;
}

ExprPtr make_literal(Rational value) { return std::make_shared<const Expr>(Expr{Literal{value}}); }
ExprPtr make_symbol(Symbol symbol) { return std::make_shared<const Expr>(Expr{SymbolRef{symbol}}); }
ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs)
{
    return std::make_shared<const Expr>(Expr{Binary{op, std::move(lhs), std::move(rhs)}});
}
ExprPtr make_power(ExprPtr base, int exponent)
{
    return std::make_shared<const Expr>(Expr{Power{std::move(base), exponent}});
}
ExprPtr make_sqrt(ExprPtr arg) { return std::make_shared<const Expr>(Expr{Sqrt{std::move(arg)}}); }

bool same_tree(const Expr& x, const Expr& y)
{
    if (x.node.index() != y.node.index())
        return false;
    return std::visit(
        [&](const auto& xn) -> bool {
            using T = std::decay_t<decltype(xn)>;
            const T& yn = std::get<T>(y.node);
            if constexpr (std::is_same_v<T, Literal>)
                return xn.value == yn.value;
            else if constexpr (std::is_same_v<T, SymbolRef>)
                return xn.symbol == yn.symbol;
            else if constexpr (std::is_same_v<T, Binary>)
                return xn.op == yn.op && same_tree(*xn.lhs, *yn.lhs) && same_tree(*xn.rhs, *yn.rhs);
            else if constexpr (std::is_same_v<T, Power>)
                return xn.exponent == yn.exponent && same_tree(*xn.base, *yn.base);
            else
                return same_tree(*xn.arg, *yn.arg);
        },
        x.node);
}

bool same_tree(const Chain& x, const Chain& y)
{
    if (x.terms.size() != y.terms.size() || x.relations != y.relations)
        return false;
    for (std::size_t i = 0; i < x.terms.size(); ++i)
        if (!same_tree(*x.terms[i], *y.terms[i]))
            return false;
    return true;
}

namespace {

// Binding strength: sums 1, products 2, powers 3, atoms 4.
int precedence(const Expr& e)
{
    if (const auto* b = std::get_if<Binary>(&e.node))
        return (b->op == BinaryOp::add || b->op == BinaryOp::sub) ? 1 : 2;
    if (std::holds_alternative<Power>(e.node))
        return 3;
    return 4;
}

// Literals come only from integer or decimal tokens, so the denominator
// divides a power of ten and the decimal expansion terminates.
std::string literal_text(const Rational& r)
{
    if (r.is_integer())
        return std::to_string(r.num());
    std::int64_t den = r.den();
    int digits = 0;
    std::int64_t scale = 1;
    while (scale % den != 0) {
        scale *= 10;
        if (++digits > 18)
            return r.str();
    }
    const std::int64_t scaled = r.num() * (scale / den);
    std::string mag = std::to_string(scaled < 0 ? -scaled : scaled);
    if (static_cast<int>(mag.size()) <= digits)
        mag.insert(0, static_cast<std::size_t>(digits) - mag.size() + 1, '0');
    mag.insert(mag.size() - static_cast<std::size_t>(digits), ".");
    return (scaled < 0 ? "-" : "") + mag;
}

std::string wrap(const Expr& e, bool parens)
{
    return parens ? "(" + pretty(e) + ")" : pretty(e);
}

} // namespace

std::string pretty(const Expr& e)
{
    return std::visit(
        [&](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Literal>) {
                return literal_text(n.value);
            } else if constexpr (std::is_same_v<T, SymbolRef>) {
                return n.symbol.str();
            } else if constexpr (std::is_same_v<T, Binary>) {
                const int p = precedence(e);
                const std::string l = wrap(*n.lhs, precedence(*n.lhs) < p);
                const std::string r = wrap(*n.rhs, precedence(*n.rhs) <= p);
                switch (n.op) {
                case BinaryOp::add: return l + " + " + r;
                case BinaryOp::sub: return l + " - " + r;
                case BinaryOp::mul: return l + "*" + r;
                case BinaryOp::div: return l + "/" + r;
                }
                return {};
            } else if constexpr (std::is_same_v<T, Power>) {
                return wrap(*n.base, precedence(*n.base) < 3) + "^" + std::to_string(n.exponent);
            } else {
                return "sqrt(" + pretty(*n.arg) + ")";
            }
        },
        e.node);
}

std::string pretty(const Chain& c)
{
    std::string out;
    for (std::size_t i = 0; i < c.terms.size(); ++i) {
        if (i > 0)
            out += c.relations[i - 1] == Relation::le ? " <= " : " >= ";
        out += pretty(*c.terms[i]);
    }
    return out;
}

namespace {

void collect(const Expr& e, std::vector<Symbol>& out)
{
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, SymbolRef>) {
                if (std::find(out.begin(), out.end(), n.symbol) == out.end())
                    out.push_back(n.symbol);
            } else if constexpr (std::is_same_v<T, Binary>) {
                collect(*n.lhs, out);
                collect(*n.rhs, out);
            } else if constexpr (std::is_same_v<T, Power>) {
                collect(*n.base, out);
            } else if constexpr (std::is_same_v<T, Sqrt>) {
                collect(*n.arg, out);
            }
        },
        e.node);
}

} // namespace

std::vector<Symbol> symbols_of(const Expr& e)
{
    std::vector<Symbol> out;
    collect(e, out);
    return out;
}

std::vector<Symbol> symbols_of(const Chain& c)
{
    std::vector<Symbol> out;
    for (const auto& t : c.terms)
        collect(*t, out);
    return out;
}

} // namespace logmean::claims
