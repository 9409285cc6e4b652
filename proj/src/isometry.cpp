#include "qlat/isometry.hpp"

#include <algorithm>

namespace qlat {

namespace {

using CPoly = std::vector<Cyclo>;  // dense, index = degree

int degree(const CPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (!p[i].is_zero()) return i;
    return -1;
}

CPoly derivative(const CPoly& p, int cond) {
    if (p.size() <= 1) return {Cyclo(cond)};
    CPoly d(p.size() - 1, Cyclo(cond));
    for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * Cyclo(cond, Rational(static_cast<long>(i)));
    return d;
}

void divmod(CPoly a, const CPoly& b, CPoly& rem) {
    int db = degree(b);
    if (db < 0) throw std::domain_error("polynomial division by zero");
    Cyclo lead_inv = b[db].inverse();
    while (degree(a) >= db) {
        int da = degree(a);
        Cyclo f = a[da] * lead_inv;
        for (int i = 0; i <= db; ++i) a[da - db + i] -= f * b[i];
    }
    rem = std::move(a);
}

CPoly gcd(CPoly a, CPoly b) {
    while (degree(b) >= 0) {
        CPoly r;
        divmod(a, b, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

const char* to_string(IsometryClass::Tag t) {
    switch (t) {
        case IsometryClass::Tag::scalar: return "scalar";
        case IsometryClass::Tag::elliptic: return "elliptic";
        case IsometryClass::Tag::parabolic: return "parabolic";
        case IsometryClass::Tag::loxodromic: return "loxodromic";
        case IsometryClass::Tag::near_degenerate: return "near-degenerate";
    }
    return "?";
}

std::vector<Cyclo> min_poly(const Mat3C& m) {
    const int cond = m.conductor();
    // Incremental elimination over the 9-dimensional coefficient space;
    // each processed power keeps its combination in terms of I, M, M^2, ...
    struct Row {
        std::array<Cyclo, 9> v;
        std::vector<Cyclo> comb;  // coefficients of powers of m
        int pivot = -1;
    };
    std::vector<Row> basis;
    Mat3C p = Mat3C::identity(cond);
    for (int k = 0; k <= 3; ++k) {
        Row row;
        row.v = p.e;
        row.comb.assign(k + 1, Cyclo(cond));
        row.comb[k] = Cyclo(cond, Rational(1));
        for (const Row& b : basis) {
            if (row.v[b.pivot].is_zero()) continue;
            Cyclo f = row.v[b.pivot];
            for (int i = 0; i < 9; ++i) row.v[i] -= f * b.v[i];
            row.comb.resize(std::max(row.comb.size(), b.comb.size()), Cyclo(cond));
            for (size_t i = 0; i < b.comb.size(); ++i) row.comb[i] -= f * b.comb[i];
        }
        int piv = -1;
        for (int i = 0; i < 9 && piv < 0; ++i)
            if (!row.v[i].is_zero()) piv = i;
        if (piv < 0) {
            // dependence: row.comb is the minimal polynomial (monic in x^k)
            return row.comb;
        }
        // normalize pivot to 1
        Cyclo inv = row.v[piv].inverse();
        for (int i = 0; i < 9; ++i) row.v[i] *= inv;
        for (auto& c : row.comb) c *= inv;
        row.pivot = piv;
        basis.push_back(std::move(row));
        p = p * m;
    }
    throw std::logic_error("3x3 matrix without minimal polynomial of degree <= 3");
}

bool min_poly_squarefree(const Mat3C& m) {
    CPoly p = min_poly(m);
    CPoly g = gcd(p, derivative(p, m.conductor()));
    return degree(g) == 0;
}

IsometryClass classify_isometry(const Mat3C& m, const HermForm& h, unsigned precision_cap) {
    const int cond = m.conductor();
    PullbackRatio pr = pullback_ratio(m, h);
    if (!pr.proportional) throw std::invalid_argument("classify_isometry: matrix does not preserve the form");
    if (!pr.ratio.is_real()) throw std::logic_error("classify_isometry: non-real pullback ratio");

    double margin = 0.0;
    auto decide = [&](const Cyclo& value) {
        Sign s = real_sign(value, precision_cap);
        if (s != Sign::zero) margin = margin == 0.0 ? embed_abs(value) : std::min(margin, embed_abs(value));
        return s;
    };

    try {
        if (decide(pr.ratio) != Sign::positive)
            throw std::invalid_argument("classify_isometry: pullback ratio is not positive");
        if (proj_scalar(m)) return {IsometryClass::Tag::scalar, 0.0};

        const Cyclo r = pr.ratio;
        const Cyclo s1 = trace(m);
        Cyclo s2(cond);
        for (int i = 0; i < 3; ++i) {
            int a = (i + 1) % 3, b = (i + 2) % 3;
            s2 += m.at(a, a) * m.at(b, b) - m.at(a, b) * m.at(b, a);
        }
        const Cyclo s3 = det(m);
        const Cyclo s3_inv = s3.inverse();
        const Cyclo three(cond, Rational(3));
        const Cyclo two(cond, Rational(2));

        // T(u) = prod(u - t_i), t_i = lambda_i + r/lambda_i; coefficients are
        // symmetric in the eigenvalues, hence exact in the field, and fixed
        // by conjugation because the eigenvalue multiset is.
        Cyclo E1 = s1 + r * s2 * s3_inv;
        Cyclo E2 = s2 + r * (s1 * s2 - three * s3) * s3_inv + r * r * s1 * s3_inv;
        Cyclo E3 = (s3 * s3 + r * (s2 * s2 - two * s1 * s3) + r * r * (s1 * s1 - two * s2) + r * r * r) * s3_inv;
        if (!E1.is_real() || !E2.is_real() || !E3.is_real())
            throw std::logic_error("classify_isometry: eigenvalue cubic has non-real coefficients");

        // all t_i real <=> disc >= 0  (for x^3 + bx^2 + cx + d)
        Cyclo b = -E1, c = E2, d = -E3;
        Cyclo disc = Cyclo(cond, Rational(18)) * b * c * d - Cyclo(cond, Rational(4)) * b * b * b * d +
                     b * b * c * c - Cyclo(cond, Rational(4)) * c * c * c -
                     Cyclo(cond, Rational(27)) * d * d;
        if (decide(disc) == Sign::negative) return {IsometryClass::Tag::loxodromic, margin};

        // all t_i^2 <= 4r <=> the shift W(v + 4r) of W(v) = prod(v - t_i^2)
        // has nonnegative coefficients (W is real-rooted here)
        Cyclo e1t = E1 * E1 - two * E2;
        Cyclo e2t = E2 * E2 - two * E1 * E3;
        Cyclo e3t = E3 * E3;
        Cyclo s = Cyclo(cond, Rational(4)) * r;
        Cyclo B = three * s - e1t;
        Cyclo C = three * s * s - two * s * e1t + e2t;
        Cyclo D = s * s * s - e1t * s * s + e2t * s - e3t;
        if (decide(B) == Sign::negative || decide(C) == Sign::negative ||
            decide(D) == Sign::negative)
            return {IsometryClass::Tag::loxodromic, margin};

        // unimodular: semisimple <=> squarefree minimal polynomial
        if (min_poly_squarefree(m)) return {IsometryClass::Tag::elliptic, margin};
        return {IsometryClass::Tag::parabolic, margin};
    } catch (const PrecisionCapError&) {
        return {IsometryClass::Tag::near_degenerate, margin};
    }
}

}  // namespace qlat
