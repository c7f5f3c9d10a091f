// Compares the serial reference sweep against the OpenMP kernels.

#include <chrono>
#include <cstdio>

#include <omp.h>

#include "extenso/entropy.hpp"
#include "extenso/extremal_search.hpp"
#include "extenso/poset.hpp"
#include "extenso/random_orders.hpp"

using namespace extenso;

namespace {

template <class F>
double time_ms(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main() {
    int max_threads = omp_get_max_threads();
    std::printf("threads available: %d\n\n", max_threads);

    {
        uint64_t serial_total = 0;
        double t_serial = time_ms([&] {
            enumerate_labeled_posets(6, [&](const SmallPoset& p) {
                serial_total += p.extensions() > 0;
            });
        });
        ExtremalTable t1, tn;
        double t_jobs1 = time_ms([&] { t1 = extremal_table(6, 1); });
        double t_jobsn = time_ms([&] { tn = extremal_table(6, max_threads); });
        std::printf("extremal sweep n=6 (%llu posets)\n",
                    (unsigned long long)tn.total_posets);
        std::printf("  serial reference enumeration: %8.1f ms (visited %llu)\n", t_serial,
                    (unsigned long long)serial_total);
        std::printf("  table, jobs=1:                %8.1f ms\n", t_jobs1);
        std::printf("  table, jobs=%d:                %8.1f ms\n\n", max_threads, t_jobsn);
    }

    {
        Poset p = boolean_lattice(3);
        double t_1, t_n;
        VolumeEstimate v1, vn;
        omp_set_num_threads(1);
        t_1 = time_ms([&] { v1 = chain_volume_mc(p, 1000000, 7); });
        omp_set_num_threads(max_threads);
        t_n = time_ms([&] { vn = chain_volume_mc(p, 1000000, 7); });
        std::printf("volume MC, boolean lattice t=3, 1e6 samples\n");
        std::printf("  1 thread:  %8.1f ms (estimate %.2f)\n", t_1, v1.estimate);
        std::printf("  %d threads: %8.1f ms (estimate %.2f, hits identical: %s)\n\n",
                    max_threads, t_n, vn.estimate, v1.hits == vn.hits ? "yes" : "NO");
    }

    {
        double t_1, t_n;
        ConcentrationStats s1, sn;
        omp_set_num_threads(1);
        t_1 = time_ms([&] { s1 = comp_concentration_experiment(100, 2000, 11); });
        omp_set_num_threads(max_threads);
        t_n = time_ms([&] { sn = comp_concentration_experiment(100, 2000, 11); });
        std::printf("concentration n=100, 2000 trials\n");
        std::printf("  1 thread:  %8.1f ms (mean %.2f)\n", t_1, s1.mean_z);
        std::printf("  %d threads: %8.1f ms (mean %.2f, identical: %s)\n", max_threads, t_n,
                    sn.mean_z, s1.mean_z == sn.mean_z ? "yes" : "NO");
    }
    return 0;
}
