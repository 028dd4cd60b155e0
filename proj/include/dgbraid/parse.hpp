#pragma once

#include <string>

#include "dgbraid/algebra.hpp"

namespace dgbraid {

struct ParseError : Error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

/// Parses the expression grammar into a normal-form element of the given
/// algebra. Grammar: rational literals a/b or a; generator names (longest
/// match against the declared names, or quoted as 'name'); * product,
/// +/- sum, ^n positive integer power, parentheses. Whitespace insignificant.
GradedPoly parsePoly(const std::string& text, const AlgebraPtr& alg);

}  // namespace dgbraid
