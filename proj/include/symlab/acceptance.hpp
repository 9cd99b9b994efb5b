// The ten release gates, as plain library calls. The gtest acceptance binary
// asserts on these results and the CLI selftest aggregates them, so both
// entry points run exactly the same checks with the same pinned tolerances
// and runtime budgets.
#pragma once

#include "symlab/arith.hpp"
#include "symlab/expsums.hpp"
#include "symlab/integrals.hpp"
#include "symlab/lemma.hpp"
#include "symlab/selftest.hpp"
#include "symlab/sweep.hpp"

#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace symlab {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool ok = false;
    std::string detail;
    double elapsed = 0; // seconds
};

namespace detail {

using accept_clock = std::chrono::steady_clock;

inline double seconds_since(accept_clock::time_point t0) {
    return std::chrono::duration<double>(accept_clock::now() - t0).count();
}

// Uniform draw in [0, n) from the standard-specified mt19937_64 stream;
// std::uniform_int_distribution's mapping is implementation defined, so it
// would break sample reproducibility across standard libraries.
inline u64 bounded_rand(std::mt19937_64& rng, u64 n) {
    u64 limit = ~u64(0) - ~u64(0) % n;
    u64 x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

inline CriterionResult finish(CriterionResult r, accept_clock::time_point t0, double budget,
                              bool checks_ok, std::string detail) {
    r.elapsed = seconds_since(t0);
    bool in_budget = r.elapsed < budget;
    r.ok = checks_ok && in_budget;
    std::ostringstream os;
    os << detail;
    if (!in_budget) os << (detail.empty() ? "" : "; ") << "over budget " << budget << " s";
    r.detail = os.str();
    return r;
}

} // namespace detail

// 1. Direct and closed-form Ramanujan sums agree to 1e-6 on t, n <= 300.
inline CriterionResult criterion_ramanujan() {
    CriterionResult r{1, "ramanujan closed form"};
    auto t0 = detail::accept_clock::now();
    int bad = 0;
    double worst = 0;
    for (i64 t = 1; t <= 300; ++t) {
        for (i64 n = 0; n <= 300; ++n) {
            double dev = std::abs(ramanujan_sum_direct(t, n) - double(ramanujan_sum_closed(t, n)));
            worst = std::max(worst, dev);
            if (dev > 1e-6) ++bad;
        }
    }
    std::ostringstream os;
    os << "worst deviation " << worst << ", failures " << bad;
    return detail::finish(r, t0, 10.0, bad == 0, os.str());
}

// 2. The divisor-bound envelope holds for every Kloosterman sum with
// c <= 400, 0 <= a, b <= 10.
inline CriterionResult criterion_weil() {
    CriterionResult r{2, "weil-estermann bound"};
    auto t0 = detail::accept_clock::now();
    int bad = 0;
    double min_slack = 1e300;
    for (i64 c = 1; c <= 400; ++c)
        for (i64 a = 0; a <= 10; ++a)
            for (i64 b = 0; b <= 10; ++b) {
                WeilCheck w = weil_estermann_check(a, b, c);
                min_slack = std::min(min_slack, w.slack);
                if (!w.ok) ++bad;
            }
    std::ostringstream os;
    os << "smallest slack " << min_slack << ", failures " << bad;
    return detail::finish(r, t0, 60.0, bad == 0, os.str());
}

// 3. The residue-class decomposition reproduces the direct trigonometric sum
// at every frequency |j| <= t/2 for 20 coprime (a, t) samples.
inline CriterionResult criterion_identity() {
    CriterionResult r{3, "trig identity residual"};
    auto t0 = detail::accept_clock::now();
    const std::vector<std::pair<i64, i64>> samples{
        {3, 101},  {7, 1000}, {13, 2003}, {1, 7},    {2, 9},    {2, 15},   {3, 8},
        {3, 100},  {4, 9},    {5, 42},    {5, 503},  {6, 35},   {7, 135},  {8, 45},
        {9, 100},  {10, 201}, {11, 200},  {12, 343}, {15, 308}, {17, 1000}};
    bool ok = samples.size() == 20;
    double worst_margin = 0;
    std::ostringstream os;
    for (auto [a, t] : samples) {
        if (std::gcd(a, t) != 1) {
            ok = false;
            os << "non-coprime sample (" << a << "," << t << "); ";
            continue;
        }
        LemmaSession ses(LemmaSample::make(a, t));
        double residual = ses.identity_residual_all(); // every |j| <= t/2
        double tol = 1e-8 * (1.0 + double(t) / 1e4);
        worst_margin = std::max(worst_margin, residual / tol);
        if (residual > tol) {
            ok = false;
            os << "residual " << residual << " > " << tol << " at (" << a << "," << t << "); ";
        }
    }
    os << "worst residual/tolerance " << worst_margin;
    return detail::finish(r, t0, 120.0, ok, os.str());
}

// 4. Calibrate C1, C2 on the full coprime sub-grid a <= 10, t <= 500, then
// require twice those envelopes on 200 pairs sampled from a <= 30, t <= 5000.
inline CriterionResult criterion_envelopes() {
    CriterionResult r{4, "calibrated envelopes"};
    auto t0 = detail::accept_clock::now();
    double C1 = 0, C2 = 0;
    for (i64 a = 2; a <= 10; ++a)
        for (i64 t = a * a; t <= 500; ++t) {
            if (std::gcd(a, t) != 1) continue;
            LemmaSession ses(LemmaSample::make(a, t));
            C1 = std::max(C1, ses.bound1_stat() * double(a) / std::pow(std::log(double(t) + 2), 2));
            C2 = std::max(C2, ses.bound2_stat(true) / (double(a) / double(t) + 1.0 / double(a)));
        }

    std::mt19937_64 rng(20250825);
    std::set<std::pair<i64, i64>> chosen;
    while (chosen.size() < 200) {
        i64 a = 2 + i64(detail::bounded_rand(rng, 29));
        i64 t = a * a + i64(detail::bounded_rand(rng, u64(5001 - a * a)));
        if (std::gcd(a, t) != 1) continue;
        chosen.insert({a, t});
    }
    bool ok = true;
    double worst1 = 0, worst2 = 0;
    std::ostringstream os;
    for (auto [a, t] : chosen) {
        LemmaSession ses(LemmaSample::make(a, t));
        double s1 = ses.bound1_stat() * double(a) / std::pow(std::log(double(t) + 2), 2);
        double s2 = ses.bound2_stat(true) / (double(a) / double(t) + 1.0 / double(a));
        worst1 = std::max(worst1, s1);
        worst2 = std::max(worst2, s2);
        if (s1 > 2 * C1 || s2 > 2 * C2) {
            ok = false;
            os << "envelope broken at (" << a << "," << t << "); ";
        }
    }
    os << "C1 " << C1 << ", C2 " << C2 << ", worst1 " << worst1 << " vs " << 2 * C1
       << ", worst2 " << worst2 << " vs " << 2 * C2;
    return detail::finish(r, t0, 300.0, ok, os.str());
}

// 5. The weighted-correlation identity stays within a stable normalized
// remainder across the doubling family, and the two exact integral paths
// agree bit for bit.
inline CriterionResult criterion_dispersion_family() {
    CriterionResult r{5, "dispersion residual family"};
    auto t0 = detail::accept_clock::now();
    bool ok = true;
    double nmin = 1e300, nmax = 0;
    std::ostringstream os;
    for (int k = 10; k <= 16; ++k) {
        i64 N = i64(1) << k;
        i64 h = floor_power(N, 0.4);
        i64 Q = floor_power(N, 0.3);
        SieveFunction g = catalog("moebius", Q);
        Segment f = dirichlet_convolve(g, std::max<i64>(1, N - 2 * h + 1), 2 * N + 2 * h);

        DispersionResult d = dispersion_decomposition(f, N, h, true);
        IntegralResult prefix = symmetry_integral_prefix(f, N, h);
        IntegralResult mid = symmetry_integral_midpoint(f, N, h);
        if (prefix.value != d.symmetry || prefix.value != mid.value) {
            ok = false;
            os << "integral paths disagree at N=2^" << k << "; ";
        }
        nmin = std::min(nmin, d.normalized);
        nmax = std::max(nmax, d.normalized);
    }
    if (!(nmin > 0 && nmax / nmin <= 10.0)) ok = false;
    os << "normalized residual range [" << nmin << ", " << nmax << "], spread "
       << (nmin > 0 ? nmax / nmin : -1.0);
    return detail::finish(r, t0, 120.0, ok, os.str());
}

// 6. Exact degeneracies: constant f gives a zero integral, constant shifts do
// not move it, and the convolution-accelerated correlation equals the direct
// one for three catalog transforms at N = 10^4, h = 10^2.
inline CriterionResult criterion_degeneracies() {
    CriterionResult r{6, "exact degeneracies"};
    auto t0 = detail::accept_clock::now();
    const i64 N = 10000, h = 100, Q = 100;
    bool ok = true;
    std::ostringstream os;

    Segment c;
    c.lo = N - 2 * h + 1;
    c.hi = 2 * N + 2 * h;
    c.values.assign(size_t(c.hi - c.lo + 1), 3);
    if (symmetry_integral_prefix(c, N, h).value != i128(0)) {
        ok = false;
        os << "constant f gave nonzero integral; ";
    }

    for (const char* label : {"ones", "moebius", "squarefree-indicator-transform"}) {
        SieveFunction g = catalog(label, Q);
        Segment f = dirichlet_convolve(g, N - 2 * h + 1, 2 * N + 2 * h);

        CorrelationTable fast = correlation_fast(f, N, h);
        CorrelationTable naive = correlation_naive(f, N, h);
        if (fast.vals != naive.vals || fast.zero_shift != naive.zero_shift) {
            ok = false;
            os << "correlation paths disagree for " << label << "; ";
        }

        Segment shifted = f;
        for (i64& v : shifted.values) v += 5;
        if (symmetry_integral_prefix(shifted, N, h).value !=
            symmetry_integral_prefix(f, N, h).value) {
            ok = false;
            os << "shift invariance broken for " << label << "; ";
        }
    }
    if (ok) os << "all exact equalities held";
    return detail::finish(r, t0, 30.0, ok, os.str());
}

// 7. a*inv(a) + q*inv(q) = 1 (mod aq) for every coprime 2 <= a < q <= 200.
inline CriterionResult criterion_reciprocity() {
    CriterionResult r{7, "modular reciprocity"};
    auto t0 = detail::accept_clock::now();
    int bad = 0, total = 0;
    for (i64 a = 2; a <= 200; ++a)
        for (i64 q = a + 1; q <= 200; ++q)
            if (std::gcd(a, q) == 1) {
                ++total;
                if (!reciprocity_check(a, q)) ++bad;
            }
    std::ostringstream os;
    os << total << " pairs, failures " << bad;
    return detail::finish(r, t0, 5.0, bad == 0, os.str());
}

// 8. |geometric sum| <= min(length, 1/(2*dist-to-nearest-int)) on 1000
// random rational rotations and ranges up to 10^4.
inline CriterionResult criterion_geometric() {
    CriterionResult r{8, "geometric sum bound"};
    auto t0 = detail::accept_clock::now();
    std::mt19937_64 rng(20250825);
    int bad = 0;
    for (int i = 0; i < 1000; ++i) {
        i64 den = 1 + i64(detail::bounded_rand(rng, 10000));
        i64 num = i64(detail::bounded_rand(rng, 20001)) - 10000;
        i64 lo = i64(detail::bounded_rand(rng, 20001)) - 10000;
        i64 len = 1 + i64(detail::bounded_rand(rng, 10000));
        if (!geometric_bound_check(num, den, lo, lo + len - 1).ok) ++bad;
    }
    std::ostringstream os;
    os << "1000 draws, failures " << bad;
    return detail::finish(r, t0, 5.0, bad == 0, os.str());
}

// 9. Desk-scale trend surrogate: the normalized ratio I_f/(N h^2) decays
// along N = 2^14..2^20 at theta = 0.45, lambda = 0.75, and the fitted
// exponent stays strictly below the trivial 1 + 2*theta.
inline CriterionResult criterion_trend() {
    CriterionResult r{9, "trend surrogate"};
    auto t0 = detail::accept_clock::now();
    std::vector<ExperimentRecord> family;
    for (int k = 14; k <= 20; ++k)
        family.push_back(run_point({"moebius", i64(1) << k, 0.45, 0.75}));

    bool ok = true;
    std::ostringstream os;
    int violations = 0;
    for (const auto& rec : family)
        if (!rec.region) {
            ok = false;
            os << "N=" << rec.N << " fell outside the region; ";
        }
    for (size_t i = 1; i < family.size(); ++i) {
        if (family[i].ratio > family[i - 1].ratio) {
            ++violations;
            if (family[i].ratio > family[i - 1].ratio * 1.05) {
                ok = false;
                os << "ratio step > 5% at N=" << family[i].N << "; ";
            }
        }
    }
    if (violations > 1) {
        ok = false;
        os << violations << " ratio increases; ";
    }
    FitResult fit = fit_exponent(family);
    double limit = 1 + 2 * 0.45 - 0.01;
    if (!(fit.slope < limit)) ok = false;
    os << "slope " << fit.slope << " vs limit " << limit << ", ratio violations " << violations;
    return detail::finish(r, t0, 600.0, ok, os.str());
}

// 10. The canonical selftest report is byte-identical for different worker
// counts.
inline CriterionResult criterion_determinism() {
    CriterionResult r{10, "deterministic selftest"};
    auto t0 = detail::accept_clock::now();
    std::string one = selftest_report(1);
    std::string two = selftest_report(2);
    bool ok = !one.empty() && one == two;
    return detail::finish(r, t0, 120.0, ok,
                          ok ? "reports identical" : "reports differ between worker counts");
}

inline std::vector<CriterionResult> run_all_criteria() {
    return {criterion_ramanujan(),    criterion_weil(),        criterion_identity(),
            criterion_envelopes(),    criterion_dispersion_family(),
            criterion_degeneracies(), criterion_reciprocity(), criterion_geometric(),
            criterion_trend(),        criterion_determinism()};
}

} // namespace symlab
