#pragma once

#include <stdexcept>
#include <string>

namespace srep {

// Caller handed a value that does not fit the space it was used with,
// or violated a documented precondition.
class usage_error : public std::invalid_argument {
public:
    explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

// An internal guarantee failed.  Never caught and patched over; if one of
// these fires, the computation that produced it is wrong.
class invariant_error : public std::logic_error {
public:
    explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace srep
