#pragma once

#include "logmean/means.hpp"
#include "logmean/rational.hpp"

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace logmean::claims {

/// A mean symbol of the claim language: H, G, L, N1, N2, N3, A, S, B[t], DP[r].
struct Symbol {
    MeanTag tag = MeanTag::A;
    Rational param; // t for B, r for DP, zero otherwise

    MeanKind kind() const;
    std::string str() const;

    friend bool operator==(const Symbol&, const Symbol&) = default;
    friend bool operator<(const Symbol& x, const Symbol& y);
};

enum class BinaryOp { add, sub, mul, div };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Literal {
    Rational value;
};
struct SymbolRef {
    Symbol symbol;
};
struct Binary {
    BinaryOp op;
    ExprPtr lhs;
    ExprPtr rhs;
};
struct Power {
    ExprPtr base;
    int exponent;
};
struct Sqrt {
    ExprPtr arg;
};

struct Expr {
    std::variant<Literal, SymbolRef, Binary, Power, Sqrt> node;
};

ExprPtr make_literal(Rational value);
ExprPtr make_symbol(Symbol symbol);
ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs);
ExprPtr make_power(ExprPtr base, int exponent);
ExprPtr make_sqrt(ExprPtr arg);

/// Structural equality.
bool same_tree(const Expr& x, const Expr& y);

enum class Relation { le, ge };

/// terms[0] rel[0] terms[1] rel[1] ... ; at least two terms.
struct Chain {
    std::vector<ExprPtr> terms;
    std::vector<Relation> relations;
};

bool same_tree(const Chain& x, const Chain& y);

/// Canonical text; parse(pretty(t)) rebuilds an identical tree.
std::string pretty(const Expr& e);
std::string pretty(const Chain& c);

/// Distinct symbols in first-appearance order.
std::vector<Symbol> symbols_of(const Expr& e);
std::vector<Symbol> symbols_of(const Chain& c);

} // namespace logmean::claims
