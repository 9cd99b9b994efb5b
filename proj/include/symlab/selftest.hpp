// Canonical self-check sweep. The grid is fixed so the emitted report is a
// stable artifact: any two runs, with any worker counts, must produce
// byte-identical bytes.
#pragma once

#include "symlab/report.hpp"
#include "symlab/sweep.hpp"

#include <string>

namespace symlab {

inline std::string selftest_report(int threads) {
    auto records = sweep_grid({"moebius", "ones"}, {0.45}, {0.6, 0.75},
                              {i64(1) << 10, i64(1) << 11, i64(1) << 12},
                              /*with_selberg=*/true, threads);
    return write_csv(records,
                     {"symlab selftest",
                      "grid: g in {moebius, ones}, theta = 0.45, lambda in {0.6, 0.75}, "
                      "N = 2^10..2^12"});
}

} // namespace symlab
