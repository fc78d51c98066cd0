#pragma once

#include "logmean/claims/ast.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace logmean::claims {

class ParseError : public std::runtime_error {
public:
    enum class Kind { syntax, unknown_symbol, bad_parameter };

    ParseError(Kind kind, std::size_t position, const std::string& message);

    Kind kind() const { return kind_; }
    /// Byte offset into the parsed text.
    std::size_t position() const { return position_; }

private:
    Kind kind_;
    std::size_t position_;
};

/// chain  := expr (("<=" | ">=") expr)+
/// expr   := term (("+" | "-") term)*
/// term   := factor (("*" | "/") factor)*
/// factor := primary ("^" integer)*
/// primary:= number | symbol | "sqrt(" expr ")" | "(" expr ")"
/// symbol := H | G | L | N1 | N2 | N3 | A | S | B[rational] | DP[rational]
///
/// Whitespace is ignored; U+2264/U+2265 are accepted for <= / >=.
Chain parse_claim(std::string_view text);

/// A single expression with no relation operators.
ExprPtr parse_expression(std::string_view text);

} // namespace logmean::claims
