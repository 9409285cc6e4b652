#include "qlat/pencil.hpp"

#include <sstream>
#include <stdexcept>

namespace qlat {

void ProjPoint::validate() const {
    if (h.size() != 2 && h.size() != 3)
        throw std::invalid_argument("projective point must have 2 or 3 coordinates");
    for (const auto& x : h)
        if (x != 0) return;
    throw std::invalid_argument("projective point with all coordinates zero");
}

bool ProjPoint::operator==(const ProjPoint& o) const {
    if (h.size() != o.h.size()) return false;
    // cross-multiplication: h[i] * o.h[j] == h[j] * o.h[i] for all pairs
    for (size_t i = 0; i < h.size(); ++i)
        for (size_t j = i + 1; j < h.size(); ++j)
            if (h[i] * o.h[j] != h[j] * o.h[i]) return false;
    return true;
}

std::string ProjPoint::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < h.size(); ++i) os << (i ? ":" : "") << rational_str(h[i]);
    os << "]";
    return os.str();
}

ProjPoint parse_proj_point(const std::string& text) {
    size_t a = text.find('[');
    size_t b = text.rfind(']');
    if (a == std::string::npos || b == std::string::npos || b <= a)
        throw std::invalid_argument("projective point must look like [a:b] or [a:b:c]");
    std::string inner = text.substr(a + 1, b - a - 1);
    std::vector<Rational> coords;
    size_t pos = 0;
    while (true) {
        size_t colon = inner.find(':', pos);
        std::string tok = inner.substr(pos, colon == std::string::npos ? std::string::npos : colon - pos);
        // trim spaces
        size_t s = tok.find_first_not_of(" \t");
        size_t e = tok.find_last_not_of(" \t");
        if (s == std::string::npos) throw std::invalid_argument("empty coordinate in point");
        coords.push_back(parse_rational(tok.substr(s, e - s + 1)));
        if (colon == std::string::npos) break;
        pos = colon + 1;
    }
    return ProjPoint(std::move(coords));
}

Rational ConicForm::det() const {
    auto& a = m;
    return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
           a[2] * (a[3] * a[7] - a[4] * a[6]);
}

Rational ConicForm::eval(const ProjPoint& p) const {
    if (p.dim() != 3) throw std::invalid_argument("conic evaluated off P^2");
    Rational s = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += p.h[i] * at(i, j) * p.h[j];
    return s;
}

const std::array<ProjPoint, 4>& pencil_base_points() {
    static const std::array<ProjPoint, 4> base = {
        ProjPoint::p2(1, 0, 0),
        ProjPoint::p2(0, 1, 0),
        ProjPoint::p2(0, 0, 1),
        ProjPoint::p2(1, 1, 1),
    };
    return base;
}

ProjPoint pencil_eval(const ProjPoint& p) {
    if (p.dim() != 3) throw std::invalid_argument("pencil_eval expects a point of P^2");
    const Rational& z1 = p.h[0];
    const Rational& z2 = p.h[1];
    const Rational& z3 = p.h[2];
    Rational a = (z1 - z3) * z2;
    Rational b = z1 * (z2 - z3);
    if (a == 0 && b == 0)
        throw std::domain_error("pencil is undefined at the base point " + p.str());
    return ProjPoint::p1(a, b);
}

ProjPoint blowup_chart_eval(BlowupChart chart, const Rational& x, const Rational& y) {
    Rational a, b;
    if (chart == BlowupChart::w_chart) {
        // (w1, w2|1)
        a = (x - 1) * y;
        b = x * y - 1;
    } else {
        // (w1|2, w2)
        a = y * x - 1;
        b = x * (y - 1);
    }
    if (a == 0 && b == 0) throw std::domain_error("blow-up chart value indeterminate");
    return ProjPoint::p1(a, b);
}

ConicForm fiber_equation(const ProjPoint& v) {
    if (v.dim() != 2) throw std::invalid_argument("pencil value must be a point of P^1");
    const Rational& lambda = v.h[0];
    const Rational& mu = v.h[1];
    Rational half(1, 2);
    // P = (z1-z3) z2 = z1 z2 - z2 z3;  Q = z1 (z2-z3) = z1 z2 - z1 z3
    ConicForm p{}, q{};
    p.m = {Rational(0), half, Rational(0), half, Rational(0), -half, Rational(0), -half, Rational(0)};
    q.m = {Rational(0), half, -half, half, Rational(0), Rational(0), -half, Rational(0), Rational(0)};
    ConicForm out{};
    for (int i = 0; i < 9; ++i) out.m[i] = mu * p.m[i] - lambda * q.m[i];
    return out;
}

bool is_singular_fiber(const ProjPoint& v) { return fiber_equation(v).det() == 0; }

std::vector<ProjPoint> singular_values() {
    return {ProjPoint::p1(1, 0), ProjPoint::p1(0, 1), ProjPoint::p1(1, 1)};
}

namespace {

Rational det2(const ProjPoint& a, const ProjPoint& b) {
    return a.h[0] * b.h[1] - a.h[1] * b.h[0];
}

}  // namespace

ProjPoint cross_ratio(const ProjPoint& v1, const ProjPoint& v2, const ProjPoint& v3,
                      const ProjPoint& v4) {
    Rational d14 = det2(v1, v4), d24 = det2(v2, v4);
    if (d14 == 0 || d24 == 0)
        throw std::domain_error("cross ratio undefined: coincident points");
    return ProjPoint::p1(det2(v1, v3) / d14, det2(v2, v3) / d24);
}

ProjPoint config5(const ProjPoint& v1, const ProjPoint& v2, const ProjPoint& v3,
                  const ProjPoint& v4, const ProjPoint& v5) {
    Rational d15 = det2(v1, v5), d25 = det2(v2, v5), d35 = det2(v3, v5);
    if (d15 == 0 || d25 == 0 || d35 == 0)
        throw std::domain_error("configuration map undefined: coincident points");
    return ProjPoint::p2(det2(v1, v4) / d15, det2(v2, v4) / d25, det2(v3, v4) / d35);
}

}  // namespace qlat
