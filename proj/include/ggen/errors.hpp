#ifndef GGEN_ERRORS_HPP
#define GGEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ggen {

// Malformed edge-list input; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, long line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

// Unreadable or unwritable file / stream.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Construction constraints that cannot be satisfied (e.g. m > C(n,2)).
class InfeasibleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A subgraph count left the 64-bit range; counts never wrap silently.
class CountOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

} // namespace ggen

#endif
