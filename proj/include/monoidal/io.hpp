#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "monoidal/program.hpp"

namespace monoidal {

/// Program file grammar (one directive per line, '#' starts a comment):
///
///   monoidal-program v1
///   name construction-3-4        optional
///   dimension 3
///   variables x y z              optional, defaults to x1 .. xd
///   prefix {1,2}:1 ...           optional, may repeat
///   cycle {1,2}:1 {2,3}:3        required, may repeat
///
/// A step is {locus indices}:divisor, all 1-based.
/// Throws InputError with "line N: ..." messages.
TransformProgram parse_program(std::string_view text);
TransformProgram load_program(const std::string& path);
std::string serialize_program(const TransformProgram& program);

/// Monomials as exponent tuples "(2,0,-1)" or as products and quotients of
/// variable powers, e.g. "y/(x^2*z^3)" or "x^-1*y".
ExponentVector parse_monomial(std::string_view text, const std::vector<std::string>& variables);
std::string format_monomial(const ExponentVector& w, const std::vector<std::string>& variables);

/// Variable names of a program, defaulting to x1 .. xd.
std::vector<std::string> variable_names(const TransformProgram& program);

}  // namespace monoidal
