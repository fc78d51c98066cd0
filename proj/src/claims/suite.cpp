#include "logmean/claims/suite.hpp"

#include "logmean/claims/parser.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace logmean::claims {

std::string_view verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::holds: return "HOLDS";
    case Verdict::fails: return "FAILS";
    case Verdict::unresolved: return "UNRESOLVED";
    }
    return "?";
}

SuiteError::SuiteError(std::string origin, std::size_t line, const std::string& message)
    : std::runtime_error(origin + ":" + std::to_string(line) + ": " + message), line_(line)
{
}

namespace {

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

} // namespace

std::vector<ClaimEntry> parse_suite(std::string_view text, std::string_view origin)
{
    std::vector<ClaimEntry> out;
    std::set<std::string> seen;
    std::size_t lineno = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find('\n', start), text.size());
        const std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++lineno;

        const std::string body = trim(line);
        if (body.empty() || body.front() == '#')
            continue;

        std::vector<std::string> fields;
        std::size_t pos = 0;
        for (int i = 0; i < 3; ++i) {
            const std::size_t bar = body.find('|', pos);
            if (bar == std::string::npos)
                break;
            fields.push_back(trim(std::string_view(body).substr(pos, bar - pos)));
            pos = bar + 1;
        }
        fields.push_back(trim(std::string_view(body).substr(pos)));
        if (fields.size() < 3)
            throw SuiteError(std::string(origin), lineno, "expected 'id | expression | expect=... | note'");

        ClaimEntry e;
        e.id = fields[0];
        e.expression = fields[1];
        e.source = std::string(origin) + ":" + std::to_string(lineno);
        e.note = fields.size() > 3 ? fields[3] : std::string();
        if (e.id.empty())
            throw SuiteError(std::string(origin), lineno, "empty id");
        if (!seen.insert(e.id).second)
            throw SuiteError(std::string(origin), lineno, "duplicate id '" + e.id + "'");

        if (fields[2] == "expect=HOLDS")
            e.expectation = Verdict::holds;
        else if (fields[2] == "expect=FAILS")
            e.expectation = Verdict::fails;
        else
            throw SuiteError(std::string(origin), lineno, "expectation must be expect=HOLDS or expect=FAILS");

        try {
            e.chain = parse_claim(e.expression);
        } catch (const ParseError& ex) {
            throw SuiteError(std::string(origin), lineno, "in '" + e.id + "': " + ex.what());
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<ClaimEntry> load_suite_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw SuiteError(path, 0, "cannot open suite file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_suite(buf.str(), path);
}

std::vector<ClaimEntry> bundled_suite()
{
    return parse_suite(bundled_suite_text(), "bundled");
}

} // namespace logmean::claims
