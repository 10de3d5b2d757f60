#pragma once

#include <functional>
#include <string>

#include "qg/ncpoly.hpp"

namespace qg {

using StarFn = std::function<NCPoly(const NCPoly&)>;

/// Parses an element of the free algebra over `alphabet`.
///
/// Grammar: sums and differences of products; juxtaposition multiplies; `/` only
/// by nonzero scalars; `x^n` for n >= 0 (negative n for scalars); postfix `^*`
/// applies `star`. The symbol `q` is the deformation parameter. Throws ParseError.
NCPoly parse_poly(const std::string& text, const Alphabet& alphabet, const StarFn& star = {});

/// Same as parse_scalar, reporting errors at (line, column + offset).
QScalar parse_scalar_at(const std::string& text, int line, int column);

}  // namespace qg
