#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "srep/code.hpp"
#include "srep/point.hpp"
#include "srep/space.hpp"

namespace srep {

/// Concrete syntax for codes and points, one grammar per space constructor:
///   base element         a
///   product code         (c1, c2)
///   sum code             L.c | R.c
///   word product         eps | a? {a,b}* b?
///   powerset code        pow{c1, c2} | pow{}
///   omega code           (P, {c1, c2}) | (eps, {})
///   word point           ab | eps | [p1, p2]
///   set point            {p1, p2} | {}
///   UP word point        ab.(ba)^w | eps.(b)^w | ab
/// Printing is deterministic and parse(print(v)) == v structurally.

struct Diagnostic {
    std::string code; // stable identifier, e.g. "E01"
    int line = 0;     // 1-based; 0 when unknown
    int col = 0;
    std::string message;

    std::string to_string() const;
};

class diag_error : public std::runtime_error {
public:
    explicit diag_error(Diagnostic d) : std::runtime_error(d.to_string()), diag(std::move(d)) {}
    Diagnostic diag;
};

// Diagnostic codes.
inline constexpr const char* DIAG_SYNTAX = "E01";       // lexical / syntax
inline constexpr const char* DIAG_UNKNOWN = "E02";      // unknown name
inline constexpr const char* DIAG_DUPLICATE = "E03";    // duplicate declaration
inline constexpr const char* DIAG_NOT_POSET = "E04";    // covering relation has a cycle
inline constexpr const char* DIAG_TYPE = "E05";         // operand/space mismatch
inline constexpr const char* DIAG_EMPTY_LIMIT = "E06";  // infwords code with empty limit set
inline constexpr const char* DIAG_NO_ORACLE = "E07";    // oracle unavailable for this query
inline constexpr const char* DIAG_BAD_VARIANT = "E08";  // point incompatible with omega variant

std::string print_code(const Space& s, const Code& c);
std::string print_word_product(const Space& letter_space, const WordProduct& p);
std::string print_closed_set(const Space& s, const ClosedSet& f); // {c1, c2} / {}
std::string print_point(const Space& s, const Point& p);

/// Parse a full string as a code/point of `s`; trailing input is an error.
/// Both throw diag_error with column positions relative to `text`.
Code parse_code(const Space& s, std::string_view text);
Point parse_point(const Space& s, std::string_view text);

} // namespace srep
