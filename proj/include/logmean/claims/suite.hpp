#pragma once

#include "logmean/claims/ast.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace logmean::claims {

enum class Verdict { holds, fails, unresolved };

std::string_view verdict_name(Verdict v);

struct ClaimEntry {
    std::string id;
    std::string source;     // "<origin>:<line>"
    std::string expression; // text as written in the suite
    Chain chain;
    Verdict expectation = Verdict::holds;
    std::string note;
};

class SuiteError : public std::runtime_error {
public:
    SuiteError(std::string origin, std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Line-oriented suite: `#` starts a comment; each record is
///   id | expression | expect=HOLDS|FAILS | note
/// Ids must be unique. Throws SuiteError with the offending line.
std::vector<ClaimEntry> parse_suite(std::string_view text, std::string_view origin);

std::vector<ClaimEntry> load_suite_file(const std::string& path);

/// The built-in audit suite covering every chain, bound and counterexample.
std::string_view bundled_suite_text();
std::vector<ClaimEntry> bundled_suite();

} // namespace logmean::claims
