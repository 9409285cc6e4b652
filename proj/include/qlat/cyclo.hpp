#pragma once

#include <ostream>
#include <vector>

#include "qlat/rational.hpp"

namespace qlat {

// Element of the cyclotomic field Q(zeta_n) for a prime conductor n,
// stored as rational coefficients of 1, zeta, ..., zeta^{n-2}.  The power
// basis is reduced with 1 + zeta + ... + zeta^{n-1} = 0 after every
// operation, so equality is coefficientwise.
//
// n = 5 is the conductor used by the rest of the library; the arithmetic
// itself works for any prime n.
class Cyclo {
  public:
    explicit Cyclo(int conductor = 5);
    Cyclo(int conductor, const Rational& constant);
    Cyclo(int conductor, std::vector<Rational> coeffs);  // size n-1, reduced form

    static Cyclo zeta(int conductor, long power = 1);  // zeta_n^power
    static Cyclo from_rational(int conductor, const Rational& r) { return Cyclo(conductor, r); }

    int conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;  // lies in Q
    // The constant coefficient; the full value only when is_rational().
    const Rational& rational_part() const { return c_[0]; }

    bool operator==(const Cyclo& o) const;
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    Cyclo operator-() const;
    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

    // Galois conjugation zeta -> zeta^{-1} (complex conjugation in the
    // standard embedding).
    Cyclo conj() const;
    bool is_real() const { return *this == conj(); }

    // Exact inverse, via the extended Euclidean algorithm against the
    // cyclotomic polynomial.  Throws std::domain_error on zero.
    Cyclo inverse() const;
    Cyclo operator/(const Cyclo& o) const { return *this * o.inverse(); }

    Cyclo pow(long k) const;

    // Human-readable form, e.g. "1/2 + 3*z^2 - z^3".
    std::string str() const;

  private:
    void check_same_field(const Cyclo& o) const;
    static void reduce_mod_phi(int n, std::vector<Rational>& acc, std::vector<Rational>& out);

    int n_;
    std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Cyclo& a);

}  // namespace qlat
