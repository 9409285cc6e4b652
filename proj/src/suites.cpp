#include "qlat/suites.hpp"

#include <utility>

#include "qlat/pencil.hpp"
#include "qlat/rng.hpp"

namespace qlat {

namespace {

struct SampleOutcome {
    bool pass = true;
    std::string message;
};

CheckReport run_suite(std::string name, std::size_t samples, std::uint64_t seed, BatchMode mode,
                      SampleOutcome (*item)(std::uint64_t, std::size_t)) {
    CheckReport rep;
    rep.name = std::move(name);
    rep.seed = seed;
    rep.samples = samples;
    auto results = batch_map(
        samples,
        [&](std::size_t i) -> SampleOutcome {
            try {
                return item(seed, i);
            } catch (const std::exception& e) {
                return {false, "sample " + std::to_string(i) + ": " + e.what()};
            }
        },
        mode);
    for (const auto& r : results) {
        if (r.pass)
            ++rep.passes;
        else
            rep.failures.push_back(r.message);
    }
    return rep;
}

ProjPoint random_p1_point(SampleRng& rng) {
    if (rng.next() % 16 == 0) return ProjPoint::p1(1, 0);
    return ProjPoint::p1(rng.small_rational(), 1);
}

SampleOutcome commutativity_item(std::uint64_t seed, std::size_t index) {
    SampleRng rng(seed, index);
    std::vector<ProjPoint> v;
    while (v.size() < 5) {
        ProjPoint cand = random_p1_point(rng);
        bool dup = false;
        for (const auto& u : v) dup = dup || u == cand;
        if (!dup) v.push_back(cand);
    }
    ProjPoint via_plane = pencil_eval(config5(v[0], v[1], v[2], v[3], v[4]));
    ProjPoint direct = cross_ratio(v[0], v[1], v[2], v[3]);
    if (via_plane == direct) return {};
    return {false, "sample " + std::to_string(index) + ": " + via_plane.str() +
                       " != " + direct.str()};
}

SampleOutcome lefschetz_item(std::uint64_t seed, std::size_t index) {
    SampleRng rng(seed, index);
    Rational z1, z2, z3;
    do {
        z1 = rng.small_nonzero_rational();
        z2 = rng.small_rational();
        z3 = rng.small_rational();
    } while (z2 == z3);
    ProjPoint p = ProjPoint::p2(z1, z2, z3);
    Rational x = (z1 - z3) / z1;
    Rational y = z2 / (z2 - z3);
    if (pencil_eval(p) == ProjPoint::p1(x * y, 1)) return {};
    return {false, "sample " + std::to_string(index) + ": normal form fails at " + p.str()};
}

// One blow-up chart tuple for the cover at a triple point (m = 3, k = 6,
// n = 5): coordinates (w1, w2|1, v1, v2|1, v3|1, v4, v5) with
// w1 = v1^5 and w2|1 = (v2|1)^5.
SampleOutcome chart_item(std::uint64_t seed, std::size_t index) {
    SampleRng rng(seed, index);
    Rational v1, v21, v31, v4, v5;
    if (index % 17 == 0) {
        // exceptional divisor: w1 = 0
        v1 = 0;
        v21 = rng.small_rational();
        v31 = rng.small_rational();
        v4 = rng.small_rational();
        v5 = rng.small_rational();
    } else if (index % 23 == 0) {
        v1 = v21 = v31 = v4 = v5 = 0;  // degenerate all-zero tuple
    } else {
        v1 = rng.small_rational();
        v21 = rng.small_rational();
        v31 = rng.small_rational();
        v4 = rng.small_rational();
        v5 = rng.small_rational();
    }
    // explicit return type: gmpxx expression templates must not escape
    auto pow5 = [](const Rational& r) -> Rational { return r * r * r * r * r; };
    Rational w1 = pow5(v1);
    Rational w21 = pow5(v21);

    // rho: (w1, w2|1, v1, v2|1, v3|1, v4, v5) -> (w1, w2|1 w1, v1, v2|1 v1, v3|1 v1, v4, v5)
    Rational x_w1 = w1, x_w2 = w21 * w1;
    Rational x_v2 = v21 * v1;
    // chi projects to (w1, w2); tau(w1, w2|1) = (w1, w2|1 w1); sigma projects.
    Rational chi_rho_1 = x_w1, chi_rho_2 = x_w2;
    Rational tau_sigma_1 = w1, tau_sigma_2 = w21 * w1;

    if (chi_rho_1 != tau_sigma_1 || chi_rho_2 != tau_sigma_2)
        return {false, "sample " + std::to_string(index) + ": chi o rho != tau o sigma"};
    // compatibility of the covering equations downstairs: v2^5 = w2
    if (pow5(x_v2) != x_w2)
        return {false, "sample " + std::to_string(index) + ": v2^5 != w2 after rho"};
    (void)v31;
    (void)v4;
    (void)v5;
    return {};
}

}  // namespace

CheckReport commutativity_check(std::size_t samples, std::uint64_t seed, BatchMode mode) {
    return run_suite("commutativity-check", samples, seed, mode, commutativity_item);
}

CheckReport lefschetz_chart_check(std::size_t samples, std::uint64_t seed, BatchMode mode) {
    return run_suite("lefschetz-chart-check", samples, seed, mode, lefschetz_item);
}

CheckReport chart_roundtrip_check(std::size_t samples, std::uint64_t seed, BatchMode mode) {
    return run_suite("chart-roundtrip-check", samples, seed, mode, chart_item);
}

}  // namespace qlat
