// Compares the serial Gray-code scan against the OpenMP-partitioned one on
// colouring-construction instances of growing rank. Not part of the test
// suite; build target bench_verify.

#include <chrono>
#include <cstdio>

#include "legal/construction.hpp"
#include "legal/random_models.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using Clock = std::chrono::steady_clock;

namespace {

double run_once(const legal::Graph& g, const legal::VertexSet& s, const legal::MoveSet& m,
                bool parallel) {
    legal::VerifyOptions opt;
    opt.parallel = parallel;
    auto t0 = Clock::now();
    auto cert = legal::verify(g, s, m, opt);
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    if (!cert.legal && cert.states_checked == 0) std::puts("unexpected certificate");
    return ms;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP disabled)\n");
#endif
    std::printf("%6s %6s %6s %12s %12s %8s\n", "n", "p", "rank", "serial_ms", "parallel_ms",
                "speedup");
    for (uint64_t seed = 1; seed <= 3; ++seed) {
        for (int n : {150, 200, 250}) {
            double p = 0.3;
            legal::Graph g = legal::gnp(n, p, seed);
            legal::RandomStream rng(seed);
            auto res = legal::construct(g, legal::Method::colouring, legal::MainParams{}, rng);
            if (!res.ok()) continue;
            const auto& t = *res.transcript;
            if (t.moves.rank() > 22) continue;
            double serial = run_once(g, t.s, t.moves, false);
            double parallel = run_once(g, t.s, t.moves, true);
            std::printf("%6d %6.2f %6d %12.1f %12.1f %7.2fx\n", n, p, t.moves.rank(), serial,
                        parallel, serial / parallel);
        }
    }
    return 0;
}
