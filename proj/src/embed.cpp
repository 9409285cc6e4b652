#include "qlat/embed.hpp"

#include <mpfr.h>

#include <cmath>
#include <vector>

namespace qlat {

namespace {

// Minimal RAII wrapper around mpfr_t.
class Real {
  public:
    explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real& operator=(const Real& o) {
        if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

  private:
    mpfr_t v_;
};

// Conservative upward rounding for radius bookkeeping in double.  The
// tracked radii are astronomically small next to every separation this
// library has to certify, so a crude 1e-9 relative bump is ample cover for
// double rounding in the radius arithmetic itself.
double up(double x) { return x * (1.0 + 1e-9) + 1e-280; }

double abs_upper(const Real& x) {
    double d = std::fabs(mpfr_get_d(x.get(), MPFR_RNDA));
    return up(d);
}

// Complex ball: mpfr midpoint, double radius.
struct CBall {
    CBall(mpfr_prec_t prec) : re(prec), im(prec), rad(0.0), prec(prec) {}
    Real re, im;
    double rad;
    mpfr_prec_t prec;

    double ulp_scale() const {
        // bound on rounding error of one mpfr op on each component
        double mag = abs_upper(re) + abs_upper(im) + 1.0;
        return std::ldexp(mag, -static_cast<int>(prec) + 2);
    }
};

CBall ball_add(const CBall& a, const CBall& b) {
    CBall r(a.prec);
    mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    r.rad = up(a.rad + b.rad + r.ulp_scale());
    return r;
}

CBall ball_mul(const CBall& a, const CBall& b) {
    CBall r(a.prec);
    Real t1(a.prec), t2(a.prec);
    // re = a.re*b.re - a.im*b.im
    mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(r.re.get(), t1.get(), t2.get(), MPFR_RNDN);
    // im = a.re*b.im + a.im*b.re
    mpfr_mul(t1.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(r.im.get(), t1.get(), t2.get(), MPFR_RNDN);
    double ma = up(abs_upper(a.re) + abs_upper(a.im));
    double mb = up(abs_upper(b.re) + abs_upper(b.im));
    r.rad = up(ma * b.rad + mb * a.rad + a.rad * b.rad + 4.0 * r.ulp_scale());
    return r;
}

CBall ball_from_rational(const Rational& q, mpfr_prec_t prec) {
    CBall r(prec);
    mpfr_set_q(r.re.get(), q.get_mpq_t(), MPFR_RNDN);
    r.rad = up(std::ldexp(abs_upper(r.re) + 1.0, -static_cast<int>(prec)));
    return r;
}

// zeta_n^k = (cos, sin)(2*pi*k/n); each mpfr transcendental op is correctly
// rounded, so a handful of ulps covers the midpoint error.
CBall ball_root_of_unity(int n, int k, mpfr_prec_t prec) {
    CBall r(prec);
    Real theta(prec);
    mpfr_const_pi(theta.get(), MPFR_RNDN);
    mpfr_mul_si(theta.get(), theta.get(), 2 * k, MPFR_RNDN);
    mpfr_div_si(theta.get(), theta.get(), n, MPFR_RNDN);
    mpfr_sin_cos(r.im.get(), r.re.get(), theta.get(), MPFR_RNDN);
    r.rad = up(std::ldexp(8.0, -static_cast<int>(prec)));
    return r;
}

CBall eval_ball(const Cyclo& a, mpfr_prec_t prec) {
    CBall acc(prec);
    const auto& c = a.coeffs();
    for (int i = 0; i < static_cast<int>(c.size()); ++i) {
        if (c[i] == 0) continue;
        CBall term = ball_from_rational(c[i], prec);
        if (i > 0) term = ball_mul(term, ball_root_of_unity(a.conductor(), i, prec));
        acc = ball_add(acc, term);
    }
    return acc;
}

}  // namespace

EmbedValue embed(const Cyclo& a, unsigned bits) {
    if (bits < 64) bits = 64;
    CBall b = eval_ball(a, static_cast<mpfr_prec_t>(bits));
    EmbedValue v;
    v.re = mpfr_get_d(b.re.get(), MPFR_RNDN);
    v.im = mpfr_get_d(b.im.get(), MPFR_RNDN);
    // fold the double-conversion error of the midpoints into the radius
    v.radius = up(b.rad + std::ldexp(std::fabs(v.re) + std::fabs(v.im) + 1.0, -52));
    return v;
}

Sign real_sign(const Cyclo& a, unsigned precision_cap) {
    if (a.is_zero()) return Sign::zero;
    if (!a.is_real()) throw std::domain_error("real_sign on a non-real cyclotomic number");
    for (unsigned bits = 64;; bits *= 2) {
        CBall b = eval_ball(a, static_cast<mpfr_prec_t>(bits));
        // a is real, so the imaginary part is pure numeric noise; fold it in.
        double slack = up(b.rad + abs_upper(b.im));
        int s = mpfr_sgn(b.re.get());
        double re_low = std::fabs(mpfr_get_d(b.re.get(), MPFR_RNDZ));  // round toward 0
        if (s != 0 && re_low > slack) return s > 0 ? Sign::positive : Sign::negative;
        if (bits >= precision_cap)
            throw PrecisionCapError("real_sign: interval still contains 0 at " +
                                    std::to_string(precision_cap) + " bits");
    }
}

double embed_abs(const Cyclo& a) {
    EmbedValue v = embed(a, 128);
    return std::hypot(v.re, v.im);
}

}  // namespace qlat
