#pragma once

#include <optional>

#include "shimura/rational.hpp"

namespace shimura {

/// Rational reconstruction of a floating-point estimate.
///
/// Walks the continued-fraction convergents of x and returns the first one
/// with denominator <= max_den lying within tol of x, provided it is the
/// only fraction with denominator <= max_den inside the wider window
/// [x - 2 tol, x + 2 tol]. Any ambiguity yields nullopt: a caller feeding
/// an Euler number through here never receives a guessed fraction.
std::optional<Rational> recognize_rational(double x, i64 max_den, double tol);

}  // namespace shimura
