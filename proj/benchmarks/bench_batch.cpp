// Timing comparison of the serial reference path against the OpenMP path
// for the batch workloads (sample suites and corpus certification).
#include <chrono>
#include <cstdio>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "qlat/lattice.hpp"
#include "qlat/rng.hpp"
#include "qlat/suites.hpp"

using namespace qlat;

namespace {

template <class Fn>
double time_of(Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

GenWord random_pi1Cu_word(SampleRng& rng, int max_letters) {
    GenWord w;
    int n = static_cast<int>(rng.next_in(4, max_letters));
    for (int i = 0; i < n; ++i)
        w = w * GenWord::letter(static_cast<Gen>(rng.next_in(0, 2)), rng.next_bool() ? 1 : -1);
    auto ab = abelianize_mod5(w);
    if (ab.first) w = w * GenWord::letter(Gen::Tinf, 5 - ab.first);
    if (ab.second) w = w * GenWord::letter(Gen::T0, 5 - ab.second);
    return w;
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-28s %10.3fs %10.3fs %8.2fx\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
#if defined(_OPENMP)
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; both columns run the serial path\n");
#endif
    std::printf("%-28s %11s %11s %9s\n", "workload", "serial", "parallel", "speedup");

    row("commutativity 20000",
        time_of([] { commutativity_check(20000, 1, BatchMode::serial); }),
        time_of([] { commutativity_check(20000, 1, BatchMode::parallel); }));

    row("chart roundtrip 20000",
        time_of([] { chart_roundtrip_check(20000, 1, BatchMode::serial); }),
        time_of([] { chart_roundtrip_check(20000, 1, BatchMode::parallel); }));

    LatticeGens gens;
    Assignment asg;
    SampleRng rng(7, 0);
    std::vector<GenWord> corpus;
    for (int i = 0; i < 600; ++i) corpus.push_back(random_pi1Cu_word(rng, 14));
    auto certify_all = [&](BatchMode mode) {
        batch_map(corpus.size(), [&](std::size_t i) { return certify(gens, asg, corpus[i]); },
                  mode);
    };
    row("certify 600 words",
        time_of([&] { certify_all(BatchMode::serial); }),
        time_of([&] { certify_all(BatchMode::parallel); }));
    return 0;
}
