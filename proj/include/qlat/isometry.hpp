#pragma once

#include <vector>

#include "qlat/embed.hpp"
#include "qlat/mat.hpp"

namespace qlat {

// Trichotomy of isometries of the complex hyperbolic plane, plus the two
// bookkeeping outcomes: scalar for projective identities, near-degenerate
// when a sign decision exhausted the configured precision cap.
struct IsometryClass {
    enum class Tag { scalar, elliptic, parabolic, loxodromic, near_degenerate };
    Tag tag = Tag::scalar;
    // Numeric distance of the decisive quantities from the decision
    // boundary (0 when the verdict came from exact identities alone).
    double margin = 0.0;
};

const char* to_string(IsometryClass::Tag t);

// Exact minimal polynomial of m over Q(zeta), monic, low degree first.
std::vector<Cyclo> min_poly(const Mat3C& m);

// True iff gcd(p, p') is constant for the exact minimal polynomial p.
bool min_poly_squarefree(const Mat3C& m);

// Classification of m with respect to h.  Requires herm_pullback(m, h)
// proportional to h with positive real ratio r.  Decided exactly:
//   scalar      m proportional to the identity;
//   loxodromic  some eigenvalue has |lambda|^2 != r;
//   elliptic    all |lambda|^2 = r and the minimal polynomial is squarefree;
//   parabolic   all |lambda|^2 = r, minimal polynomial not squarefree.
// The modulus condition reduces to sign decisions on real elements of the
// field (cubic discriminant and shifted-coefficient signs for
// t_i = lambda_i + r/lambda_i); each sign decision refines an interval up
// to precision_cap bits, and exhausting the cap yields near_degenerate.
IsometryClass classify_isometry(const Mat3C& m, const HermForm& h,
                                unsigned precision_cap = kDefaultPrecisionCap);

}  // namespace qlat
