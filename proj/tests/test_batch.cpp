#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlat/batch.hpp"
#include "qlat/rng.hpp"
#include "qlat/suites.hpp"

using namespace qlat;

namespace {

bool reports_equal(const CheckReport& a, const CheckReport& b) {
    return a.name == b.name && a.seed == b.seed && a.samples == b.samples &&
           a.passes == b.passes && a.failures == b.failures;
}

}  // namespace

TEST_CASE("per-index rng streams are deterministic and independent") {
    SampleRng a(123, 7), b(123, 7), c(123, 8);
    for (int i = 0; i < 20; ++i) CHECK(a.next() == b.next());
    bool differs = false;
    SampleRng a2(123, 7);
    for (int i = 0; i < 20; ++i) differs = differs || a2.next() != c.next();
    CHECK(differs);
}

TEST_CASE("small rationals stay in range and canonical") {
    SampleRng rng(5, 0);
    for (int i = 0; i < 200; ++i) {
        Rational r = rng.small_rational();
        CHECK(abs(r.get_num()) <= 9);
        CHECK(r.get_den() >= 1);
        CHECK(r.get_den() <= 9);
    }
}

TEST_CASE("batch_map preserves index order in both modes") {
    auto square = [](std::size_t i) { return i * i; };
    auto par = batch_map(1000, square, BatchMode::parallel);
    auto ser = batch_map(1000, square, BatchMode::serial);
    REQUIRE(par.size() == 1000);
    CHECK(par == ser);
    for (std::size_t i = 0; i < par.size(); ++i) CHECK(par[i] == i * i);
}

TEST_CASE("suite reports are identical in serial and parallel mode") {
    for (std::uint64_t seed : {0ull, 42ull, 31337ull}) {
        CHECK(reports_equal(commutativity_check(200, seed, BatchMode::parallel),
                            commutativity_check(200, seed, BatchMode::serial)));
        CHECK(reports_equal(lefschetz_chart_check(120, seed, BatchMode::parallel),
                            lefschetz_chart_check(120, seed, BatchMode::serial)));
        CHECK(reports_equal(chart_roundtrip_check(100, seed, BatchMode::parallel),
                            chart_roundtrip_check(100, seed, BatchMode::serial)));
    }
}

TEST_CASE("suite reports depend on the seed only") {
    CheckReport a = commutativity_check(50, 9);
    CheckReport b = commutativity_check(50, 9);
    CHECK(reports_equal(a, b));
}
