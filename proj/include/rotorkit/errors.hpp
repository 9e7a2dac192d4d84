#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rotorkit {

// Input text could not be parsed. line/column are 1-based; column 0 means
// "whole line".
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& what_arg)
        : std::runtime_error("line " + std::to_string(line) +
                             (column > 0 ? ", column " + std::to_string(column) : "") +
                             ": " + what_arg),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// An exhaustive enumeration would exceed the configured state cap.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// Default guard for exhaustive state-space walks; overridable per call and
// via the CLI --cap option.
inline constexpr std::size_t kDefaultCap = 10'000'000;

}  // namespace rotorkit
