#include "qlat/mat.hpp"

#include "qlat/embed.hpp"

namespace qlat {

Mat2Z Mat2Z::sl2(long a, long b, long c, long d) {
    Mat2Z m{{Integer(a), Integer(b), Integer(c), Integer(d)}};
    if (m.det() != 1) throw std::invalid_argument("matrix is not in SL2(Z)");
    return m;
}

Mat2Z Mat2Z::operator*(const Mat2Z& o) const {
    return {{e[0] * o.e[0] + e[1] * o.e[2], e[0] * o.e[1] + e[1] * o.e[3],
             e[2] * o.e[0] + e[3] * o.e[2], e[2] * o.e[1] + e[3] * o.e[3]}};
}

Mat2Z Mat2Z::inverse_sl2() const { return {{e[3], -e[1], -e[2], e[0]}}; }

Mat2Z Mat2Z::negated() const { return {{-e[0], -e[1], -e[2], -e[3]}}; }

std::ostream& operator<<(std::ostream& os, const Mat2Z& m) {
    return os << "(" << m.e[0] << " " << m.e[1] << "; " << m.e[2] << " " << m.e[3] << ")";
}

Cyclo det(const Mat2C& m) { return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0); }

Cyclo det(const Mat3C& m) {
    return m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
           m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
           m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
}

Cyclo trace(const Mat2C& m) { return m.at(0, 0) + m.at(1, 1); }

Cyclo trace(const Mat3C& m) { return m.at(0, 0) + m.at(1, 1) + m.at(2, 2); }

Mat2C inverse(const Mat2C& m) {
    Cyclo d = det(m);
    if (d.is_zero()) throw std::domain_error("singular 2x2 matrix");
    Cyclo di = d.inverse();
    Mat2C r(m.conductor());
    r.at(0, 0) = m.at(1, 1) * di;
    r.at(0, 1) = -m.at(0, 1) * di;
    r.at(1, 0) = -m.at(1, 0) * di;
    r.at(1, 1) = m.at(0, 0) * di;
    return r;
}

Mat3C inverse(const Mat3C& m) {
    Cyclo d = det(m);
    if (d.is_zero()) throw std::domain_error("singular 3x3 matrix");
    Cyclo di = d.inverse();
    Mat3C r(m.conductor());
    auto cof = [&](int i, int j) {
        int i1 = (i + 1) % 3, i2 = (i + 2) % 3, j1 = (j + 1) % 3, j2 = (j + 2) % 3;
        return m.at(i1, j1) * m.at(i2, j2) - m.at(i1, j2) * m.at(i2, j1);
    };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.at(i, j) = cof(j, i) * di;  // adjugate transpose
    return r;
}

Vec3C mul_vec(const Mat3C& m, const Vec3C& v) {
    Vec3C r{Cyclo(m.conductor()), Cyclo(m.conductor()), Cyclo(m.conductor())};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i] += m.at(i, j) * v[j];
    return r;
}

HermForm::HermForm(Mat3C m) : m_(std::move(m)) {
    if (!(m_.conj_transpose() == m_))
        throw std::invalid_argument("Hermitian form matrix is not conjugate-symmetric");
}

Cyclo HermForm::pair(const Vec3C& x, const Vec3C& y) const {
    Cyclo s(m_.conductor());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += x[i].conj() * m_.at(i, j) * y[j];
    return s;
}

Mat3C herm_pullback(const Mat3C& m, const HermForm& h) {
    return m.conj_transpose() * h.matrix() * m;
}

PullbackRatio pullback_ratio(const Mat3C& m, const HermForm& h) {
    Mat3C p = herm_pullback(m, h);
    PullbackRatio out{false, Cyclo(m.conductor())};
    int pivot = -1;
    for (int i = 0; i < 9 && pivot < 0; ++i)
        if (!h.matrix().e[i].is_zero()) pivot = i;
    if (pivot < 0 || p.e[pivot].is_zero()) return out;
    Cyclo lambda = p.e[pivot] * h.matrix().e[pivot].inverse();
    for (int i = 0; i < 9; ++i)
        if (p.e[i] != h.matrix().e[i] * lambda) return out;
    out.proportional = true;
    out.ratio = lambda;
    return out;
}

std::pair<int, int> signature(const HermForm& h, unsigned precision_cap) {
    if (det(h.matrix()).is_zero()) throw std::domain_error("signature of a degenerate form");
    Mat3C w = h.matrix();
    bool active[3] = {true, true, true};
    int pos = 0, neg = 0;
    auto col_op = [&](int dst, int src, const Cyclo& f) {
        // e_dst <- e_dst + f * e_src:  col_dst += f * col_src, row_dst += conj(f) * row_src
        for (int i = 0; i < 3; ++i) w.at(i, dst) += f * w.at(i, src);
        for (int j = 0; j < 3; ++j) w.at(dst, j) += f.conj() * w.at(src, j);
    };
    for (int step = 0; step < 3; ++step) {
        int piv = -1;
        for (int i = 0; i < 3 && piv < 0; ++i)
            if (active[i] && !w.at(i, i).is_zero()) piv = i;
        if (piv < 0) {
            // all active diagonal entries vanish; bring a nonzero pair onto
            // the diagonal (2 Re of conj(w_ij) * w_ij is positive)
            int ai = -1, aj = -1;
            for (int i = 0; i < 3 && ai < 0; ++i)
                for (int j = 0; j < 3 && ai < 0; ++j)
                    if (active[i] && active[j] && i != j && !w.at(i, j).is_zero()) {
                        ai = i;
                        aj = j;
                    }
            if (ai < 0) throw std::domain_error("signature of a degenerate form");
            col_op(ai, aj, w.at(ai, aj).conj());
            piv = ai;
        }
        Cyclo d = w.at(piv, piv);
        Sign s = real_sign(d, precision_cap);
        if (s == Sign::positive)
            ++pos;
        else
            ++neg;
        Cyclo dinv = d.inverse();
        for (int k = 0; k < 3; ++k) {
            if (!active[k] || k == piv) continue;
            Cyclo f = -(w.at(piv, k) * dinv);
            col_op(k, piv, f);
        }
        active[piv] = false;
    }
    return {pos, neg};
}

Mat2C restrict_to_complement(const Mat3C& m, const HermForm& h, const Vec3C& v) {
    const int cond = m.conductor();
    Cyclo vv = h.pair(v, v);
    if (vv.is_zero()) throw std::domain_error("restrict_to_complement: vector is isotropic");
    Vec3C mv = mul_vec(m, v);
    // m*v proportional to v?
    {
        int p = -1;
        for (int i = 0; i < 3 && p < 0; ++i)
            if (!v[i].is_zero()) p = i;
        Cyclo lam = mv[p] * v[p].inverse();
        for (int i = 0; i < 3; ++i)
            if (mv[i] != v[i] * lam)
                throw std::domain_error("restrict_to_complement: matrix moves the line");
    }
    // Fixed complement basis: Gram-Schmidt of the first two standard basis
    // vectors independent of v, orthogonalized against v only.  For
    // v = (0,0,1) this is the (1,0,0),(0,1,0) basis the kernel tests rely on.
    Cyclo one(cond, Rational(1));
    std::array<Vec3C, 2> basis;
    int found = 0;
    Cyclo vv_inv = vv.inverse();
    for (int i = 0; i < 3 && found < 2; ++i) {
        Vec3C e{Cyclo(cond), Cyclo(cond), Cyclo(cond)};
        e[i] = one;
        Cyclo coef = h.pair(v, e) * vv_inv;
        Vec3C b;
        for (int k = 0; k < 3; ++k) b[k] = e[k] - v[k] * coef;
        bool zero = b[0].is_zero() && b[1].is_zero() && b[2].is_zero();
        if (zero) continue;
        if (found == 1) {
            // reject if b is dependent on the first basis vector
            int p = -1;
            for (int k = 0; k < 3 && p < 0; ++k)
                if (!basis[0][k].is_zero()) p = k;
            Cyclo lam = b[p] * basis[0][p].inverse();
            bool dep = true;
            for (int k = 0; k < 3; ++k)
                if (b[k] != basis[0][k] * lam) dep = false;
            if (dep) continue;
        }
        basis[found++] = b;
    }
    if (found < 2) throw std::logic_error("restrict_to_complement: no complement basis");

    // Solve [b1 b2 v] * x = m*b_i exactly (Cramer on the 3x3 basis matrix).
    Mat3C B(cond);
    for (int i = 0; i < 3; ++i) {
        B.at(i, 0) = basis[0][i];
        B.at(i, 1) = basis[1][i];
        B.at(i, 2) = v[i];
    }
    Mat3C Binv = inverse(B);
    Mat2C out(cond);
    for (int col = 0; col < 2; ++col) {
        Vec3C img = mul_vec(m, basis[col]);
        Vec3C x = mul_vec(Binv, img);
        if (!x[2].is_zero())
            throw std::domain_error("restrict_to_complement: matrix moves the complement");
        out.at(0, col) = x[0];
        out.at(1, col) = x[1];
    }
    return out;
}

}  // namespace qlat
