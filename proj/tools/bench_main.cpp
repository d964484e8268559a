// Wall-clock comparison of the serial reference kernels against the
// OpenMP-parallel ones: subset enumeration and the exhaustive axiom checks.

#include <cstdio>

#include <omp.h>

#include "nssd/enumerate.hpp"
#include "nssd/hyperop.hpp"

namespace {

double time_enumeration_serial(int n, const nssd::EnumerateOptions& opt) {
    double t0 = omp_get_wtime();
    auto report = nssd::enumerate_nssd_serial(n, opt);
    double dt = omp_get_wtime() - t0;
    std::uint64_t total = 0;
    for (const auto& r : report.rows) total += r.nssd_subsets;
    std::printf("  serial            %8.3f s   (%llu NSSD subsets)\n", dt,
                static_cast<unsigned long long>(total));
    return dt;
}

double time_enumeration_parallel(int n, nssd::EnumerateOptions opt, int workers) {
    opt.workers = workers;
    double t0 = omp_get_wtime();
    auto report = nssd::enumerate_nssd(n, opt);
    double dt = omp_get_wtime() - t0;
    std::uint64_t total = 0;
    for (const auto& r : report.rows) total += r.nssd_subsets;
    std::printf("  parallel x%-2d      %8.3f s   (%llu NSSD subsets)\n", workers, dt,
                static_cast<unsigned long long>(total));
    return dt;
}

}  // namespace

int main() {
    const int hw = omp_get_max_threads();
    std::printf("hardware threads: %d\n\n", hw);

    for (int n : {7, 8}) {
        nssd::EnumerateOptions opt;
        opt.min_order = 2;
        opt.max_order = 10;
        std::printf("enumerate n=%d orders %d..%d\n", n, opt.min_order, opt.max_order);
        double ts = time_enumeration_serial(n, opt);
        double tp = 0;
        for (int w = 1; w <= hw; w *= 2) tp = time_enumeration_parallel(n, opt, w);
        if (tp > 0) std::printf("  speedup (serial / parallel x%d): %.2f\n\n", hw, ts / tp);
    }

    {
        const int n = 32;
        nssd::HvGroupCtx ctx(n);
        std::printf("axiom checks n=%d (%d^3 triples)\n", n, 2 * n);
        double t0 = omp_get_wtime();
        auto wa_s = nssd::check_weak_associativity_serial(ctx);
        auto re_s = nssd::check_reproduction_serial(ctx);
        double ts = omp_get_wtime() - t0;
        std::printf("  serial            %8.3f s   (holds: %s, %s)\n", ts,
                    wa_s.holds ? "yes" : "no", re_s.holds ? "yes" : "no");
        t0 = omp_get_wtime();
        auto wa_p = nssd::check_weak_associativity(ctx, hw);
        auto re_p = nssd::check_reproduction(ctx, hw);
        double tp = omp_get_wtime() - t0;
        std::printf("  parallel x%-2d      %8.3f s   (holds: %s, %s)\n", hw, tp,
                    wa_p.holds ? "yes" : "no", re_p.holds ? "yes" : "no");
        if (tp > 0) std::printf("  speedup: %.2f\n", ts / tp);
    }
    return 0;
}
