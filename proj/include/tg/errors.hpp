#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tg {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a state/candidate budget is exceeded. Budgets fail loudly;
// results are never silently truncated.
class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(const std::string& what, std::uint64_t limit)
        : Error(what), limit_(limit) {}
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t limit_;
};

// Raised by the text-format parsers; carries a 1-based line and column.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column = 0)
        : Error("line " + std::to_string(line) +
                (column ? ", column " + std::to_string(column) : std::string()) +
                ": " + what),
          line_(line),
          column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace tg
