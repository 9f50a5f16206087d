// Benchmark: parallel enumeration kernel vs the serial reference path.
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "cf/comtype.hpp"

using namespace cf;

namespace {

template <class F>
double timed(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int n = 4;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--n" && i + 1 < argc) n = std::atoi(argv[++i]);
    }
    Fan2D fan("P2", {{1, 0}, {0, 1}, {-1, -1}});
    Tangency alpha = n == 3 ? Tangency({{1, 2}, {1, 3}, {-2, -5}})
                   : n == 4 ? Tangency({{1, 4}, {1, 5}, {2, -3}, {-4, -6}})
                            : Tangency({{1, 4}, {1, 6}, {6, -1}, {2, 7}, {-10, -16}});

    std::vector<CombType> serial_out, parallel_out;
    EnumerateOptions ser;
    ser.threads = 1;
    double t_serial = timed([&] { serial_out = enumerate_realizable_serial(fan, alpha, ser); });
    EnumerateOptions par;
    par.threads = 0;  // library default: all hardware threads
    double t_parallel = timed([&] { parallel_out = enumerate_realizable(fan, alpha, par); });

    bool equal = serial_out.size() == parallel_out.size();
    for (size_t i = 0; equal && i < serial_out.size(); ++i)
        equal = serial_out[i].canonical_key() == parallel_out[i].canonical_key();

    std::cout << "fan=" << fan.name() << " n=" << n
              << " strata=" << serial_out.size() << "\n"
              << "serial:   " << t_serial << " s\n"
              << "parallel: " << t_parallel << " s\n"
              << "speedup:  " << (t_parallel > 0 ? t_serial / t_parallel : 0.0)
              << "x\n"
              << "results " << (equal ? "identical" : "DIFFER") << "\n";
    return equal ? 0 : 1;
}
