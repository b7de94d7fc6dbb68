#pragma once

#include <stdexcept>
#include <string>

namespace teichtet {

/// Malformed triangulation file. Carries a 1-based line number (0 when the
/// error is not tied to a specific line) and a short reason.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& what)
        : std::runtime_error(format(line, column, what)), line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    static std::string format(int line, int column, const std::string& what) {
        std::string s = "parse error";
        if (line > 0) {
            s += " at line " + std::to_string(line);
            if (column > 0) s += ", column " + std::to_string(column);
        }
        return s + ": " + what;
    }
    int line_;
    int column_;
};

/// A combinatorial pattern that cannot be the ideal triangulation of a
/// manifold (e.g. an edge glued to itself reversing orientation).
class TopologyError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input outside the open domain of a map (triangle inequality failure,
/// Arc cos argument out of range, parameter outside a legal interval).
class DomainError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad invocation of an operation or CLI command.
class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A broken internal invariant; reaching this is a bug, not a user error.
class InternalError : public std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace teichtet
