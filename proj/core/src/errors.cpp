#include "affine/errors.hpp"

namespace affine {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string &what)
    : std::runtime_error(line == 0 ? what
                                   : "line " + std::to_string(line) + ", column " +
                                         std::to_string(column) + ": " + what),
      line_(line), column_(column)
{
}

void ValidationReport::merge(const ValidationReport &other)
{
    problems.insert(problems.end(), other.problems.begin(), other.problems.end());
}

std::string ValidationReport::str() const
{
    std::string out;
    for (const auto &p : problems) {
        out += p;
        out += '\n';
    }
    return out;
}

} // namespace affine
