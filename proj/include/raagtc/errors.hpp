#pragma once

#include <stdexcept>
#include <string>

namespace raagtc {

// Input text could not be parsed. line is 1-based, 0 when not tied to a line.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                      : what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Instance exceeds a hard implementation limit (vertex capacity, witness size).
class capacity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A caller-supplied value is outside the operation's domain (r < 2, bad
// catalog parameter, ...).
class argument_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The brute-force oracle refused an instance above its size guard.
class size_guard_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace raagtc
