#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qlat {

// Exact rationals, always in lowest terms with positive denominator.
// GMP maintains that canonical form through all arithmetic; the helpers
// below cover construction from raw parts and the "p/q" string format
// used everywhere in reports and on the CLI.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p", "p/q" with optional sign on p.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class r;
    if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + text + "'");
    if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
        throw std::domain_error("rational with zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

// "p/q", denominator omitted when 1.
inline std::string rational_str(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace qlat
