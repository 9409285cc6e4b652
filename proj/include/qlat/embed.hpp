#pragma once

#include <stdexcept>

#include "qlat/cyclo.hpp"

namespace qlat {

enum class Sign { negative, zero, positive };

// Raised when a sign decision would need more working precision than the
// configured cap allows.  Callers that can degrade gracefully (isometry
// classification) catch it; everything else lets it propagate.
struct PrecisionCapError : std::runtime_error {
    explicit PrecisionCapError(const std::string& what) : std::runtime_error(what) {}
};

// Value of a at zeta_n = exp(2*pi*i/n), computed at `bits` working
// precision.  `radius` is a rigorous bound on the distance between
// (re, im) and the true value.
struct EmbedValue {
    double re = 0.0;
    double im = 0.0;
    double radius = 0.0;
};

EmbedValue embed(const Cyclo& a, unsigned bits = 128);

inline constexpr unsigned kDefaultPrecisionCap = 256;

// Exact sign of a real cyclotomic number: exact zero test first, then the
// embedding is refined (doubling precision up to `precision_cap`) until the
// enclosing interval excludes zero.  Never reports a sign from an interval
// containing zero.  Throws std::domain_error if a is not fixed by
// conjugation, PrecisionCapError if the cap is exhausted.
Sign real_sign(const Cyclo& a, unsigned precision_cap = kDefaultPrecisionCap);

inline int sign_to_int(Sign s) { return s == Sign::zero ? 0 : (s == Sign::positive ? 1 : -1); }

// |embedded midpoint| of a at default precision; used for reporting margins,
// never for decisions.
double embed_abs(const Cyclo& a);

}  // namespace qlat
