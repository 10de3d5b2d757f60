#pragma once

#include <doctest.h>

#include <string>

#include "qg/presentation.hpp"
#include "qg/scalar.hpp"

namespace qg::test {

inline QScalar S(const std::string& text) { return parse_scalar(text); }

/// Reduced element parsed in P's alphabet.
inline NCPoly E(const Presentation& P, const std::string& text) { return P.reduce(P.parse(text)); }

}  // namespace qg::test
