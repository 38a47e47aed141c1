#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srep/oracle.hpp"
#include "srep/point.hpp"
#include "srep/space.hpp"
#include "srep/text.hpp"

namespace srep {

/// Line-oriented input files: poset and space declarations followed by
/// queries.  '#' starts a comment.
///
///   poset A2 { a; b }
///   poset C2 { a < b }
///   space W = words(A2)
///   leq W : a? b? <= {a,b}*
///   meet W : a? /\ b?
///   member W : ab in a? b?
///   closure W : ab
///   canon W : a? {b}*
///   top W
///   check leq W : eps <= a?

enum class Command { Leq, Meet, Member, Closure, Canon, Top };

struct Query {
    Command cmd;
    bool check = false;
    std::string space_name;
    SpaceRef space;
    std::vector<Code> codes;    // leq/meet: two; member/canon: one
    std::optional<Point> point; // member/closure
    int line = 0;
};

struct SpecFile {
    std::vector<std::pair<std::string, SpaceRef>> spaces; // declaration order; posets included as base spaces
    std::vector<Query> queries;

    SpaceRef find_space(std::string_view name) const;
};

/// Parses and type-checks a whole file; throws diag_error on the first
/// problem.
SpecFile parse_spec(std::string_view text);

/// Parses one query line against already-declared spaces (the `eval`
/// subcommand).
Query parse_query_line(const SpecFile& spec, std::string_view line);

struct RunOptions {
    bool force_check = false;       // run the oracle on every query
    oracle::EnumConfig enum_config; // bounds for oracle checks
};

/// One result line for a query (without trailing newline).  When the query
/// carries a check, " AGREE" or " DISAGREE" is appended and *disagreed set
/// accordingly; an unsupported check throws diag_error (E07).
std::string run_query(const Query& q, const RunOptions& opts, bool* disagreed);

/// Runs all queries, one output line each to `out`, diagnostics to `err`.
/// Returns the exit code: 0 ok, 1 a query produced a diagnostic, 2 an oracle
/// disagreed.
int run_spec(const SpecFile& spec, const RunOptions& opts, std::ostream& out, std::ostream& err);

} // namespace srep
