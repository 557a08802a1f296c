#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace affine {

/// A machine definition violates a well-formedness rule.
class DefinitionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A word or symbol is outside the declared alphabet.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A restart machine halts with probability zero in a single round.
class NonterminationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Syntax or semantic error in a machine file. `line` and `column` are
/// 1-based; zero means the location is unknown (e.g. a missing directive).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string &what);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Outcome of a well-formedness check. Empty `problems` means pass.
struct ValidationReport {
    std::vector<std::string> problems;

    bool ok() const noexcept { return problems.empty(); }
    void add(std::string problem) { problems.push_back(std::move(problem)); }
    void merge(const ValidationReport &other);
    std::string str() const;
};

} // namespace affine
