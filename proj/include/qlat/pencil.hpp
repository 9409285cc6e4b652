#pragma once

#include <array>
#include <string>
#include <vector>

#include "qlat/rational.hpp"

namespace qlat {

// Point of P^1 or P^2 with exact homogeneous coordinates; equality is
// proportionality.
struct ProjPoint {
    std::vector<Rational> h;

    ProjPoint() = default;
    ProjPoint(std::initializer_list<Rational> init) : h(init) { validate(); }
    explicit ProjPoint(std::vector<Rational> coords) : h(std::move(coords)) { validate(); }
    static ProjPoint p2(const Rational& a, const Rational& b, const Rational& c) {
        return ProjPoint({a, b, c});
    }
    static ProjPoint p1(const Rational& a, const Rational& b) { return ProjPoint({a, b}); }

    size_t dim() const { return h.size(); }
    bool operator==(const ProjPoint& o) const;
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }
    std::string str() const;  // "[a:b:c]"

  private:
    void validate() const;
};

// "[a:b]" / "[a:b:c]" with rational entries.
ProjPoint parse_proj_point(const std::string& text);

// Symmetric 3x3 matrix of a conic.
struct ConicForm {
    std::array<Rational, 9> m;  // row major, symmetric

    const Rational& at(int i, int j) const { return m[i * 3 + j]; }
    Rational det() const;
    Rational eval(const ProjPoint& p) const;  // the quadratic form at p
};

// The four base points of the pencil of conics.
const std::array<ProjPoint, 4>& pencil_base_points();

// [z1:z2:z3] -> [(z1-z3) z2 : z1 (z2-z3)]; throws on the four base points,
// where both coordinates vanish.
ProjPoint pencil_eval(const ProjPoint& p);

// Chart extensions of the pencil across the exceptional curve of the
// blow-up at [0:0:1]:
//   w-chart  (w1, w2|1)  -> [(w1-1) w2|1 : w1 w2|1 - 1]
//   w'-chart (w1|2, w2)  -> [w2 w1|2 - 1 : w1|2 (w2-1)]
enum class BlowupChart { w_chart, w_prime_chart };
ProjPoint blowup_chart_eval(BlowupChart chart, const Rational& x, const Rational& y);

// mu P - lambda Q for the pencil value [lambda : mu], with
// P = (z1-z3) z2 and Q = z1 (z2-z3).
ConicForm fiber_equation(const ProjPoint& v);
bool is_singular_fiber(const ProjPoint& v);

// The three singular values [1:0], [0:1], [1:1].
std::vector<ProjPoint> singular_values();

// Cross ratio [det(v1,v3)/det(v1,v4) : det(v2,v3)/det(v2,v4)] of four
// points of P^1, and the five-point configuration map to P^2.
ProjPoint cross_ratio(const ProjPoint& v1, const ProjPoint& v2, const ProjPoint& v3,
                      const ProjPoint& v4);
ProjPoint config5(const ProjPoint& v1, const ProjPoint& v2, const ProjPoint& v3,
                  const ProjPoint& v4, const ProjPoint& v5);

}  // namespace qlat
