#pragma once

#include <array>
#include <ostream>

#include "qlat/cyclo.hpp"

namespace qlat {

// 2x2 integer matrix; group elements are determinant +1 (SL2(Z)).
struct Mat2Z {
    std::array<Integer, 4> e;  // row major

    static Mat2Z identity() { return {{1, 0, 0, 1}}; }
    static Mat2Z sl2(long a, long b, long c, long d);  // checks det = 1

    Integer det() const { return e[0] * e[3] - e[1] * e[2]; }
    Integer trace() const { return e[0] + e[3]; }
    Mat2Z operator*(const Mat2Z& o) const;
    Mat2Z inverse_sl2() const;  // adjugate; valid when det = 1
    Mat2Z negated() const;
    bool operator==(const Mat2Z& o) const { return e == o.e; }
};

std::ostream& operator<<(std::ostream& os, const Mat2Z& m);

// Square matrices over Q(zeta_n).
template <int N>
struct MatC {
    std::array<Cyclo, N * N> e;

    explicit MatC(int conductor = 5) { e.fill(Cyclo(conductor)); }
    int conductor() const { return e[0].conductor(); }

    const Cyclo& at(int i, int j) const { return e[i * N + j]; }
    Cyclo& at(int i, int j) { return e[i * N + j]; }

    static MatC identity(int conductor = 5) {
        MatC m(conductor);
        for (int i = 0; i < N; ++i) m.at(i, i) = Cyclo(conductor, Rational(1));
        return m;
    }

    MatC operator*(const MatC& o) const {
        MatC r(conductor());
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                Cyclo s(conductor());
                for (int k = 0; k < N; ++k) s += at(i, k) * o.at(k, j);
                r.at(i, j) = s;
            }
        return r;
    }

    MatC operator+(const MatC& o) const {
        MatC r(conductor());
        for (int i = 0; i < N * N; ++i) r.e[i] = e[i] + o.e[i];
        return r;
    }

    MatC scaled(const Cyclo& s) const {
        MatC r(conductor());
        for (int i = 0; i < N * N; ++i) r.e[i] = e[i] * s;
        return r;
    }

    MatC conj_transpose() const {
        MatC r(conductor());
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) r.at(i, j) = at(j, i).conj();
        return r;
    }

    bool operator==(const MatC& o) const { return e == o.e; }
    bool is_zero() const {
        for (const auto& x : e)
            if (!x.is_zero()) return false;
        return true;
    }
};

using Mat2C = MatC<2>;
using Mat3C = MatC<3>;

template <int N>
std::ostream& operator<<(std::ostream& os, const MatC<N>& m) {
    os << "[";
    for (int i = 0; i < N; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < N; ++j) os << (j ? ", " : "") << m.at(i, j);
    }
    return os << "]";
}

Cyclo det(const Mat2C& m);
Cyclo det(const Mat3C& m);
Cyclo trace(const Mat2C& m);
Cyclo trace(const Mat3C& m);
Mat2C inverse(const Mat2C& m);
Mat3C inverse(const Mat3C& m);

template <int N>
MatC<N> pow(const MatC<N>& m, long k) {
    MatC<N> base = k < 0 ? inverse(m) : m;
    unsigned long n = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    MatC<N> acc = MatC<N>::identity(m.conductor());
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

// Projective equality: true iff M = lambda * N for some nonzero scalar.
// Decided exactly from the first nonzero entry and full verification.
template <int N>
bool proj_equal(const MatC<N>& m, const MatC<N>& n) {
    if (m.is_zero() || n.is_zero()) throw std::invalid_argument("proj_equal on zero matrix");
    int pivot = -1;
    for (int i = 0; i < N * N && pivot < 0; ++i)
        if (!n.e[i].is_zero()) pivot = i;
    if (m.e[pivot].is_zero()) return false;
    Cyclo lambda = m.e[pivot] * n.e[pivot].inverse();
    for (int i = 0; i < N * N; ++i)
        if (m.e[i] != n.e[i] * lambda) return false;
    return true;
}

template <int N>
bool proj_scalar(const MatC<N>& m) {
    return proj_equal(m, MatC<N>::identity(m.conductor()));
}

using Vec3C = std::array<Cyclo, 3>;

Vec3C mul_vec(const Mat3C& m, const Vec3C& v);

// Hermitian form on C^3; conjugate symmetry is checked on construction.
class HermForm {
  public:
    explicit HermForm(Mat3C m);
    const Mat3C& matrix() const { return m_; }
    // <x, y> = conj(x)^T H y
    Cyclo pair(const Vec3C& x, const Vec3C& y) const;

  private:
    Mat3C m_;
};

// conj-transpose(M) * H * M, exact.
Mat3C herm_pullback(const Mat3C& m, const HermForm& h);

// If herm_pullback(m, h) = lambda * h for a scalar lambda, returns it;
// otherwise nullopt-like via the bool flag.
struct PullbackRatio {
    bool proportional = false;
    Cyclo ratio;
};
PullbackRatio pullback_ratio(const Mat3C& m, const HermForm& h);

// Inertia (p, q) by exact conjugate-symmetric Gaussian reduction, signs via
// real_sign.  Throws std::domain_error on a degenerate form.
std::pair<int, int> signature(const HermForm& h, unsigned precision_cap = 256);

// Matrix of m acting on the h-orthogonal complement of v, in the fixed
// basis obtained by Gram-Schmidt of the first two standard basis vectors
// independent of v.  Requires h(v,v) != 0 and m*v proportional to v.
Mat2C restrict_to_complement(const Mat3C& m, const HermForm& h, const Vec3C& v);

}  // namespace qlat
