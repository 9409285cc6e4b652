#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qlat/batch.hpp"

namespace qlat {

// Outcome of a seeded exact-check suite.  Identical (samples, seed) give
// identical reports in either batch mode.
struct CheckReport {
    std::string name;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::size_t passes = 0;
    std::vector<std::string> failures;  // one message per failing sample

    bool ok() const { return passes == samples; }
};

// pencil_eval(config5(v)) = cross_ratio(v1..v4) on random 5-tuples of
// distinct points of P^1 (the commutative square of the configuration
// spaces), exactly.
CheckReport commutativity_check(std::size_t samples, std::uint64_t seed,
                                BatchMode mode = BatchMode::parallel);

// pencil_eval([z1:z2:z3]) = [xy:1] in the chart x = (z1-z3)/z1,
// y = z2/(z2-z3), exactly, on random chart points.
CheckReport lefschetz_chart_check(std::size_t samples, std::uint64_t seed,
                                  BatchMode mode = BatchMode::parallel);

// chi o rho = tau o sigma on random blow-up chart tuples with the w's
// derived from nth powers of the v's, exactly, including the boundary
// cases w1 = 0 and the all-zero tuple.
CheckReport chart_roundtrip_check(std::size_t samples, std::uint64_t seed,
                                  BatchMode mode = BatchMode::parallel);

}  // namespace qlat
