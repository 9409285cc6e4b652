#include "qlat/cyclo.hpp"

#include <sstream>

namespace qlat {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense polynomials over Q, only what the extended gcd needs.
using QPoly = std::vector<Rational>;

int degree(const QPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

QPoly poly_sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
    if (degree(a) < 0 || degree(b) < 0) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// a = q*b + r with deg r < deg b.
void poly_divmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
    int db = degree(b);
    if (db < 0) throw std::domain_error("polynomial division by zero");
    q.assign(std::max<int>(degree(a) - db + 1, 1), Rational(0));
    while (degree(a) >= db) {
        int da = degree(a);
        Rational f = a[da] / b[db];
        q[da - db] = f;
        for (int i = 0; i <= db; ++i) a[da - db + i] -= f * b[i];
    }
    r = std::move(a);
}

}  // namespace

Cyclo::Cyclo(int conductor) : n_(conductor), c_(conductor - 1, Rational(0)) {
    if (!is_prime(n_)) throw std::invalid_argument("conductor must be prime");
}

Cyclo::Cyclo(int conductor, const Rational& constant) : Cyclo(conductor) { c_[0] = constant; }

Cyclo::Cyclo(int conductor, std::vector<Rational> coeffs) : n_(conductor), c_(std::move(coeffs)) {
    if (!is_prime(n_)) throw std::invalid_argument("conductor must be prime");
    if (c_.size() != static_cast<size_t>(n_ - 1))
        throw std::invalid_argument("coefficient vector must have length n-1");
}

Cyclo Cyclo::zeta(int conductor, long power) {
    Cyclo z(conductor);
    long k = power % conductor;
    if (k < 0) k += conductor;
    if (k == conductor - 1) {
        for (auto& c : z.c_) c = Rational(-1);
    } else {
        z.c_[k] = Rational(1);
    }
    return z;
}

bool Cyclo::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool Cyclo::operator==(const Cyclo& o) const { return n_ == o.n_ && c_ == o.c_; }

void Cyclo::check_same_field(const Cyclo& o) const {
    if (n_ != o.n_) throw std::invalid_argument("cyclotomic conductor mismatch");
}

Cyclo Cyclo::operator-() const {
    Cyclo r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
    check_same_field(o);
    Cyclo r(*this);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

Cyclo Cyclo::operator-(const Cyclo& o) const {
    check_same_field(o);
    Cyclo r(*this);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

// acc holds coefficients of 1..zeta^{n-1}; fold zeta^{n-1} = -(1+...+zeta^{n-2}).
void Cyclo::reduce_mod_phi(int n, std::vector<Rational>& acc, std::vector<Rational>& out) {
    out.assign(n - 1, Rational(0));
    for (int k = 0; k < n - 1; ++k) out[k] = acc[k] - acc[n - 1];
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
    check_same_field(o);
    std::vector<Rational> acc(n_, Rational(0));
    for (int i = 0; i < n_ - 1; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < n_ - 1; ++j) {
            if (o.c_[j] == 0) continue;
            acc[(i + j) % n_] += c_[i] * o.c_[j];
        }
    }
    Cyclo r(n_);
    reduce_mod_phi(n_, acc, r.c_);
    return r;
}

Cyclo Cyclo::conj() const {
    std::vector<Rational> acc(n_, Rational(0));
    for (int i = 0; i < n_ - 1; ++i) acc[(n_ - i) % n_] += c_[i];
    Cyclo r(n_);
    reduce_mod_phi(n_, acc, r.c_);
    return r;
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::domain_error("cyclotomic division by zero");
    if (is_rational()) {
        Cyclo r(n_);
        r.c_[0] = 1 / c_[0];
        return r;
    }
    // Extended gcd of a(x) with Phi_n(x) = 1 + x + ... + x^{n-1}: since Phi_n
    // is irreducible over Q, gcd = 1 and the Bezout coefficient of a is the
    // inverse mod Phi_n.
    QPoly phi(n_, Rational(1));
    QPoly r0 = phi, r1(c_.begin(), c_.end());
    QPoly s0 = {Rational(0)}, s1 = {Rational(1)};  // s tracks the coefficient of a
    while (degree(r1) > 0) {
        QPoly q, rem;
        poly_divmod(r0, r1, q, rem);
        QPoly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (degree(r1) != 0) throw std::logic_error("gcd with cyclotomic polynomial not constant");
    Rational lead = r1[0];
    std::vector<Rational> acc(n_, Rational(0));
    for (size_t i = 0; i < s1.size() && i < static_cast<size_t>(n_); ++i) acc[i] = s1[i] / lead;
    Cyclo inv(n_);
    reduce_mod_phi(n_, acc, inv.c_);
    return inv;
}

Cyclo Cyclo::pow(long k) const {
    Cyclo base = k < 0 ? inverse() : *this;
    unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    Cyclo acc(n_, Rational(1));
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string Cyclo::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < n_ - 1; ++i) {
        if (c_[i] == 0) continue;
        Rational a = c_[i];
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (i == 0) {
            os << rational_str(a);
        } else {
            if (a != 1) os << rational_str(a) << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclo& a) { return os << a.str(); }

}  // namespace qlat
