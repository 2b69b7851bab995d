#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "contclose/polynomial.hpp"

namespace contclose {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses one polynomial expression over the given ordered variable names.
/// Grammar: expr := ['+'|'-'] term (('+'|'-') term)*; term := factor ('*' factor)*;
/// factor := base ('^' nonneg-int)?; base := rational | variable | '(' expr ')'.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars);

/// Parses a comma-separated list of polynomial expressions.
std::vector<Polynomial> parse_polynomial_list(const std::string& text,
                                              const std::vector<std::string>& vars);

/// Identifiers in order of first occurrence across the given texts.
std::vector<std::string> scan_variables(const std::vector<std::string>& texts);

}  // namespace contclose
