#pragma once

#include <map>
#include <string>
#include <string_view>

#include "algvar/laurent.hpp"
#include "algvar/multipoly.hpp"

namespace algvar {

using Substitution = std::map<std::string, MultiPoly>;

/// Parses the textual polynomial format ("3/2*a^2*b - 1"). Symbols listed in
/// `subst` are replaced while parsing, so a quotient such as "beta/gamma"
/// parses once gamma has been bound to a nonzero constant. Division by a
/// non-constant polynomial raises ParseError.
MultiPoly parse_poly(std::string_view text, const Substitution& subst = {});

/// Same grammar, with `var` treated as a Laurent variable: negative powers of
/// it and division by monomials c*var^k are allowed.
LaurentPoly parse_laurent(std::string_view text, const std::string& var = "t",
                          const Substitution& subst = {});

/// Value of an expression at a rational point (all symbols must be bound).
Rational eval_expr(std::string_view text, const Assignment& values);

}  // namespace algvar
