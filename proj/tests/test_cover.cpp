#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlat/cover.hpp"
#include "qlat/suites.hpp"

using namespace qlat;

namespace {

struct Fixture {
    Cover cover{Arrangement::complete_quadrilateral()};
    const Arrangement& arr = cover.arrangement();
    GaloisElt al(const char* label) const { return cover.alpha(arr.line_index(label)); }
};

}  // namespace

TEST_CASE("arrangement combinatorics") {
    Arrangement a = Arrangement::complete_quadrilateral();
    CHECK(a.k() == 6);
    CHECK(a.n == 5);
    int triples = 0, doubles = 0;
    for (size_t p = 0; p < a.points.size(); ++p)
        (a.points[p].lines.size() == 3 ? triples : doubles) += 1;
    CHECK(triples == 4);
    CHECK(doubles == 3);
    // every line passes through exactly two triple points and one double point
    for (int l = 0; l < a.k(); ++l) {
        int t = 0, d = 0;
        for (const auto& p : a.points) {
            bool onit = std::find(p.lines.begin(), p.lines.end(), l) != p.lines.end();
            if (!onit) continue;
            (p.lines.size() == 3 ? t : d) += 1;
        }
        CHECK(t == 2);
        CHECK(d == 1);
    }
    CHECK_THROWS_AS(a.line_index("D99"), std::invalid_argument);
}

TEST_CASE("deck group order") {
    Fixture f;
    CHECK(f.cover.full_group().order() == 3125);  // n^(k-1)
}

TEST_CASE("alpha generators") {
    Fixture f;
    GaloisElt prod = GaloisElt::identity(5, 6);
    for (int l = 0; l < 6; ++l) prod = prod + f.cover.alpha(l);
    CHECK(prod.is_identity());  // prod_D alpha_D = 1
    GaloisElt a12 = f.al("D12");
    GaloisElt five = a12.times(5);
    CHECK(five.is_identity());
    CHECK(a12 != f.al("D34"));
    CHECK_THROWS_AS(f.cover.alpha(17), std::invalid_argument);
}

TEST_CASE("loops around exceptional curves") {
    Fixture f;
    // p1 lies on D12, D13, D14
    GaloisElt l1 = f.cover.loop_around_exceptional(f.arr.point_index("p1"));
    CHECK(l1 == f.al("D12") + f.al("D13") + f.al("D14"));
    // sum over the four triple points is 2*(all-ones) = identity
    GaloisElt sum = GaloisElt::identity(5, 6);
    for (const char* p : {"p1", "p2", "p3", "p4"})
        sum = sum + f.cover.loop_around_exceptional(f.arr.point_index(p));
    CHECK(sum.is_identity());
    // a double point contributes the sum of its two lines
    GaloisElt q1 = f.cover.loop_around_exceptional(f.arr.point_index("q1"));
    CHECK(q1 == f.al("D12") + f.al("D34"));
    // the lift computation agrees
    for (size_t p = 0; p < f.arr.points.size(); ++p)
        CHECK(f.cover.monodromy_lift(static_cast<int>(p)) ==
              f.cover.loop_around_exceptional(static_cast<int>(p)));
}

TEST_CASE("stabilizers") {
    Fixture f;
    for (const char* p : {"p1", "p2", "p3", "p4"}) {
        auto s = f.cover.stabilizer(f.arr.point_index(p));
        CHECK(s.order() == 125);  // n^m, m = 3
        auto loop = f.cover.cyclic(f.cover.loop_around_exceptional(f.arr.point_index(p)));
        CHECK(quotient_order(s, loop) == 25);  // n^(m-1)
    }
    for (const char* p : {"q1", "q2", "q3"})
        CHECK(f.cover.stabilizer(f.arr.point_index(p)).order() == 25);  // m = 2
}

TEST_CASE("subgroup algebra") {
    Fixture f;
    // the intersection identity behind the singular-fiber count
    GaloisSubgroup h1 = GaloisSubgroup::span(
        5, 6, {f.al("D34"), f.al("D12") + f.al("D13") + f.al("D23"),
               f.al("D12") + f.al("D14") + f.al("D24")});
    GaloisSubgroup h2 = GaloisSubgroup::span(
        5, 6, {f.al("D12"), f.al("D34") + f.al("D13") + f.al("D14"),
               f.al("D34") + f.al("D23") + f.al("D24")});
    GaloisSubgroup expected = GaloisSubgroup::span(5, 6, {f.al("D12"), f.al("D34")});
    CHECK(intersect(h1, h2) == expected);

    // stab(p) join fiber group = everything; meet = the loop
    auto fiber_group = f.cover.component_group(Cover::CurveSpec::generic());
    for (const char* p : {"p1", "p2", "p3", "p4"}) {
        int idx = f.arr.point_index(p);
        auto s = f.cover.stabilizer(idx);
        CHECK(join(s, fiber_group) == f.cover.full_group());
        CHECK(intersect(s, fiber_group) == f.cover.cyclic(f.cover.loop_around_exceptional(idx)));
    }

    // containment
    CHECK(expected.contains(f.al("D12")));
    CHECK(expected.contains(f.al("D12") + f.al("D34").times(3)));
    CHECK_FALSE(expected.contains(f.al("D13")));
    CHECK(f.cover.full_group().contains_subgroup(h1));
}

TEST_CASE("fiber cardinalities") {
    Fixture f;
    CHECK(f.cover.fiber_cardinality(0) == 3125);
    CHECK(f.cover.fiber_cardinality(1) == 625);
    CHECK(f.cover.fiber_cardinality(3) == 25);
    CHECK_THROWS_AS(f.cover.fiber_cardinality(-1), std::invalid_argument);
    CHECK_THROWS_AS(f.cover.fiber_cardinality(7), std::invalid_argument);
}

TEST_CASE("branched Euler characteristics and genus") {
    CHECK(branched_euler(25, 2, 3, 5) == -10);
    CHECK(genus_from_euler(branched_euler(25, 2, 3, 5)) == 6);
    CHECK(branched_euler(3125, 2, 4, 5) == -3750);  // -6 * 5^4
    CHECK(branched_euler(125, 2, 4, 5) == -150);
    CHECK(genus_from_euler(branched_euler(125, 2, 4, 5)) == 76);
    CHECK(branched_euler(625, 2, 3, 5) == -250);  // -2 * 5^3
    CHECK_THROWS_AS(branched_euler(24, 2, 3, 5), std::invalid_argument);
    CHECK_THROWS_AS(genus_from_euler(Integer(3)), std::invalid_argument);
}

TEST_CASE("component groups and counts") {
    Fixture f;
    auto generic = Cover::CurveSpec::generic();
    CHECK(f.cover.component_group(generic).order() == 125);
    CHECK(f.cover.component_count(generic) == 25);

    auto d12 = Cover::CurveSpec::for_line(f.arr.line_index("D12"));
    CHECK(f.cover.component_count(d12) == 25);
    // count * order = n^(k-1), for every curve spec
    for (int l = 0; l < 6; ++l) {
        auto spec = Cover::CurveSpec::for_line(l);
        CHECK(f.cover.component_count(spec) * f.cover.component_group(spec).order() == 3125);
    }
    CHECK(f.cover.component_count(generic) * f.cover.component_group(generic).order() == 3125);
}

TEST_CASE("Riemann-Hurwitz cross-checks") {
    Fixture f;
    // generic fiber: total = components x per-component
    auto gen_group = f.cover.component_group(Cover::CurveSpec::generic());
    Integer total = branched_euler(3125, 2, 4, 5);
    Integer per = branched_euler(gen_group.order(), 2, 4, 5);
    CHECK(total == f.cover.component_count(Cover::CurveSpec::generic()) * per);
    // a branch line: degree n^4 overall, per component n^2
    auto d12 = Cover::CurveSpec::for_line(f.arr.line_index("D12"));
    Integer line_total = branched_euler(625, 2, 3, 5);
    Integer line_per = branched_euler(f.cover.component_group(d12).order() / 5, 2, 3, 5);
    CHECK(line_total == f.cover.component_count(d12) * line_per);
    CHECK(genus_from_euler(line_per) == 6);
    // points over the node: degree / ramification index
    CHECK(f.cover.component_group(d12).order() / 5 / 5 == 5);  // I_12 has 5 points
}

TEST_CASE("singular fiber report") {
    Fixture f;
    auto rep = singular_fiber_report(f.cover);
    CHECK(rep.singular_fiber_count == 15);
    CHECK(rep.components_per_fiber == 10);
    CHECK(rep.component_genus == 6);
    CHECK(rep.nodes_per_fiber == 25);
    CHECK(rep.smoothed_genus == 76);  // 6*10 + 16
    CHECK(rep.generic_fiber_genus == 76);
    CHECK(rep.generic_fiber_components == 25);
    CHECK(rep.consistent);
}

TEST_CASE("chart roundtrip") {
    CheckReport rep = chart_roundtrip_check(100, 2024);
    CHECK(rep.samples == 100);
    CHECK(rep.passes == 100);
    CHECK(rep.ok());
}
