// Compares the OpenMP counting/census kernels against the serial reference
// implementations and reports wall times and agreement.

#include "k3mw/counting.hpp"
#include "k3mw/data_files.hpp"

#include <chrono>
#include <iomanip>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace k3mw;

namespace {

template <typename F>
double timed(F&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    int nmax = argc > 1 ? std::atoi(argv[1]) : 4;
    auto f = load_curve_file(data_dir() + "/example1.poly");
#ifdef _OPENMP
    std::cout << "OpenMP enabled, max threads " << omp_get_max_threads() << "\n";
#else
    std::cout << "OpenMP disabled at build time; parallel rows run serially\n";
#endif
    std::cout << std::left << std::setw(10) << "q" << std::setw(14) << "serial-naive"
              << std::setw(14) << "kernel(1T)" << std::setw(14) << "kernel(par)"
              << std::setw(10) << "speedup" << "agree\n";

    for (int n = 1; n <= nmax; ++n) {
        FieldTower F(7, n);
        long long corrected_naive = -1, corrected_1 = -1, corrected_p = -1;
        double t_naive = -1;
        if (F.q() <= 121)
            t_naive = timed([&] { corrected_naive = count_points_naive(f, F).corrected; });
        double t1 = timed([&] { corrected_1 = count_points(f, F, kDefaultBudget, 1).corrected; });
        double tp = timed([&] { corrected_p = count_points(f, F, kDefaultBudget, 0).corrected; });
        bool agree = corrected_1 == corrected_p &&
                     (corrected_naive < 0 || corrected_naive == corrected_1);
        std::ostringstream qn;
        qn << "7^" << n;
        std::cout << std::setw(10) << qn.str();
        if (t_naive >= 0) std::cout << std::setw(14) << t_naive;
        else std::cout << std::setw(14) << "-";
        std::cout << std::setw(14) << t1 << std::setw(14) << tp << std::setw(10)
                  << (tp > 0 ? t1 / tp : 0.0) << (agree ? "yes" : "NO") << "\n";
        if (!agree) return 1;
    }

    // census kernel comparison at the largest size
    {
        FieldTower F(7, nmax);
        std::vector<ModpSingularPoint> a, b;
        double ts = timed([&] { a = singular_census_serial(f, F); });
        double tp = timed([&] { b = singular_census(f, F, 0); });
        bool agree = a.size() == b.size();
        for (size_t i = 0; agree && i < a.size(); ++i) agree = a[i].point == b[i].point;
        std::cout << "census 7^" << nmax << ": serial " << ts << "s, parallel " << tp
                  << "s, speedup " << (tp > 0 ? ts / tp : 0.0) << ", "
                  << (agree ? "agree" : "DISAGREE") << "\n";
        if (!agree) return 1;
    }
    return 0;
}
