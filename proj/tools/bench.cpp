// Benchmark: serial vs OpenMP execution of the two block-parallel kernels
// (graded cohomology assembly and wave-operator nullspace search).

#include <chrono>
#include <cstdio>

#include "ncborel/homology.hpp"
#include "ncborel/waves.hpp"

using namespace ncborel;

namespace {

template <typename Fn>
double time_ms(Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
#ifdef NCBOREL_HAVE_OPENMP
    std::printf("OpenMP: enabled\n");
#else
    std::printf("OpenMP: not compiled in (both rows run serial code)\n");
#endif

    for (int grade : {4, 5, 6}) {
        CohomologyTable serial, parallel;
        double ts =
            time_ms([&] { serial = cohomology_dims(grade, Parallelism::serial); });
        double tp = time_ms(
            [&] { parallel = cohomology_dims(grade, Parallelism::openmp); });
        std::printf("cohomology_dims(%d): serial %8.1f ms | openmp %8.1f ms | "
                    "results %s\n",
                    grade, ts, tp, serial == parallel ? "equal" : "DIFFER");
    }

    for (int grade : {5, 6}) {
        std::vector<KernelEntry> serial, parallel;
        double ts = time_ms([&] {
            serial = kernel_find(KernelOperator::box0, grade, Parallelism::serial);
        });
        double tp = time_ms([&] {
            parallel =
                kernel_find(KernelOperator::box0, grade, Parallelism::openmp);
        });
        bool equal = serial.size() == parallel.size();
        for (std::size_t i = 0; equal && i < serial.size(); ++i)
            equal = serial[i].grade == parallel[i].grade &&
                    serial[i].element == parallel[i].element;
        std::printf("kernel_find(box0, %d): serial %8.1f ms | openmp %8.1f ms | "
                    "results %s\n",
                    grade, ts, tp, equal ? "equal" : "DIFFER");
    }
    return 0;
}
