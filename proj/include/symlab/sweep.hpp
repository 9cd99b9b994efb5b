// Experiment harness: evaluates the reference bound for the symmetry
// integral, runs (g, N, theta, lambda) grids, and fits empirical growth
// exponents on doubling families.
//
// Grid realization: h = floor(N^theta), Q = floor(N^lambda); the exponents
// are then recomputed from the realized h and Q and reported, so records
// never mix nominal and realized values.
#pragma once

#include "symlab/arith.hpp"
#include "symlab/core.hpp"
#include "symlab/integrals.hpp"
#include "symlab/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace symlab {

// The four-term bound envelope: Nh + h^3 + Nh^3/Q + Nh^2 (Q^2 h / N^2)^(1/5),
// with the two hypothesis flags attached (Q small against N/sqrt(h), h below Q).
struct BoundTerms {
    double term1 = 0, term2 = 0, term3 = 0, term4 = 0;
    double total = 0;
    bool hyp_level = false; // Q <= N / sqrt(h)
    bool hyp_arm = false;   // h < Q
};

inline BoundTerms theorem_bound(i64 N, i64 h, i64 Q) {
    if (N < 1 || h < 1 || Q < 1)
        throw std::invalid_argument("theorem_bound: arguments must be >= 1");
    BoundTerms b;
    double Nd = double(N), hd = double(h), Qd = double(Q);
    b.term1 = Nd * hd;
    b.term2 = hd * hd * hd;
    b.term3 = Nd * hd * hd * hd / Qd;
    b.term4 = Nd * hd * hd * std::pow(Qd * Qd * hd / (Nd * Nd), 0.2);
    b.total = b.term1 + b.term2 + b.term3 + b.term4;
    b.hyp_level = Qd <= Nd / std::sqrt(hd);
    b.hyp_arm = h < Q;
    return b;
}

// The level window in which the bound beats the trivial N h^2:
// (1 + theta)/2 < lambda < 1 - theta/2.
inline bool region_flag(double theta, double lambda) {
    return (1 + theta) / 2 < lambda && lambda < 1 - theta / 2;
}

// Largest integer <= N^e, nudged so that exact integer powers are not lost
// to floating rounding from below.
inline i64 floor_power(i64 N, double e) {
    double v = std::pow(double(N), e);
    i64 r = i64(std::floor(v + 1e-9));
    return std::max<i64>(1, r);
}

struct ExperimentRecord {
    std::string g_label;
    i64 N = 0, h = 0, Q = 0;
    double theta = 0, lambda = 0; // realized exponents
    i128 I_f = 0;
    bool has_J = false;
    BigRat J_f;
    double term1 = 0, term2 = 0, term3 = 0, term4 = 0;
    double trivial = 0; // N h^2
    double ratio = 0;   // I_f / (N h^2)
    double t_opt = 0;   // (N h^2 / Q)^(2/5), diagnostic only
    bool region = false;
    bool hyp_level = false, hyp_arm = false;
    double residual_normalized = 0; // dispersion residual scaled by N h + h^3
};

struct GridPoint {
    std::string g_label;
    i64 N = 0;
    double theta = 0, lambda = 0;
};

inline constexpr double kThetaGuard = 0.05; // admissible width exponents: (0.05, 0.95)

// One full experiment with explicit window arm and support bound: sieve
// f = g*1 on (N-2h, 2N+2h], compute I_f exactly, the dispersion residual,
// the bound terms, and optionally the window-variance integral J_f.
inline ExperimentRecord run_explicit(const std::string& g_label, i64 N, i64 h, i64 Q,
                                     bool with_selberg = false, bool use_fft = true) {
    if (N < 4) throw std::invalid_argument("run_explicit: N too small");
    if (h < 1 || 2 * h >= N) throw std::invalid_argument("run_explicit: need 1 <= h < N/2");
    if (Q < 1) throw std::invalid_argument("run_explicit: need Q >= 1");

    ExperimentRecord r;
    r.g_label = g_label;
    r.N = N;
    r.h = h;
    r.Q = Q;
    r.theta = std::log(double(r.h)) / std::log(double(r.N));
    r.lambda = std::log(double(r.Q)) / std::log(double(r.N));

    SieveFunction g = catalog(g_label, r.Q);
    i64 lo = std::max<i64>(1, r.N - 2 * r.h + 1);
    Segment f = dirichlet_convolve(g, lo, 2 * r.N + 2 * r.h);
    require_quadratic_capacity(r.N, r.h, f.max_abs(), "run_explicit");

    DispersionResult d = dispersion_decomposition(f, r.N, r.h, use_fft);
    r.I_f = d.symmetry;
    r.residual_normalized = d.normalized;

    if (with_selberg) {
        r.has_J = true;
        r.J_f = selberg_integral(f, r.N, r.h, sieve_mean(g)).value;
    }

    BoundTerms b = theorem_bound(r.N, r.h, r.Q);
    r.term1 = b.term1;
    r.term2 = b.term2;
    r.term3 = b.term3;
    r.term4 = b.term4;
    r.hyp_level = b.hyp_level;
    r.hyp_arm = b.hyp_arm;
    r.trivial = double(r.N) * double(r.h) * double(r.h);
    r.ratio = to_double(r.I_f) / r.trivial;
    r.t_opt = std::pow(double(r.N) * double(r.h) * double(r.h) / double(r.Q), 0.4);
    r.region = region_flag(r.theta, r.lambda);
    return r;
}

// Grid-point entry: realizes h = floor(N^theta), Q = floor(N^lambda) and
// refuses width exponents outside the admissible band.
inline ExperimentRecord run_point(const GridPoint& p, bool with_selberg = false,
                                  bool use_fft = true) {
    if (!(p.theta > kThetaGuard && p.theta < 1 - kThetaGuard))
        throw std::invalid_argument("run_point: theta outside (0.05, 0.95)");
    if (!(p.lambda > 0 && p.lambda < 1))
        throw std::invalid_argument("run_point: lambda outside (0, 1)");
    if (p.N < 4) throw std::invalid_argument("run_point: N too small");
    return run_explicit(p.g_label, p.N, floor_power(p.N, p.theta), floor_power(p.N, p.lambda),
                        with_selberg, use_fft);
}

struct FitResult {
    double slope = 0;
    double intercept = 0;
    double residual_max = 0;
};

// Ordinary least squares of y against x; here y = log I_f, x = log N.
inline FitResult fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 3)
        throw std::invalid_argument("fit_loglog: need at least 3 points");
    size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    double det = double(n) * sxx - sx * sx;
    if (std::abs(det) < 1e-12 * double(n) * sxx)
        throw std::invalid_argument("fit_loglog: degenerate abscissae");
    FitResult fr;
    fr.slope = (double(n) * sxy - sx * sy) / det;
    fr.intercept = (sy - fr.slope * sx) / double(n);
    for (size_t i = 0; i < n; ++i)
        fr.residual_max = std::max(fr.residual_max,
                                   std::abs(y[i] - (fr.slope * x[i] + fr.intercept)));
    return fr;
}

inline FitResult fit_exponent(const std::vector<ExperimentRecord>& family) {
    std::vector<double> x, y;
    for (const auto& r : family) {
        if (r.g_label != family.front().g_label)
            throw std::invalid_argument("fit_exponent: mixed transforms in family");
        if (r.I_f <= 0)
            throw std::invalid_argument("fit_exponent: nonpositive integral in family");
        x.push_back(std::log(double(r.N)));
        y.push_back(std::log(to_double(r.I_f)));
    }
    return fit_loglog(x, y);
}

// Cartesian grid of experiments, evaluated in parallel into per-point slots
// and assembled in a fixed order, so the report is identical for any worker
// count.
inline std::vector<ExperimentRecord> sweep_grid(const std::vector<std::string>& g_labels,
                                                const std::vector<double>& thetas,
                                                const std::vector<double>& lambdas,
                                                const std::vector<i64>& Ns,
                                                bool with_selberg,
                                                int threads) {
    std::vector<GridPoint> points;
    for (const auto& g : g_labels)
        for (double th : thetas)
            for (double la : lambdas)
                for (i64 N : Ns) points.push_back({g, N, th, la});
    std::vector<ExperimentRecord> out(points.size());
    parallel_for(points.size(), threads,
                 [&](size_t i) { out[i] = run_point(points[i], with_selberg); });
    std::sort(out.begin(), out.end(), [](const ExperimentRecord& a, const ExperimentRecord& b) {
        if (a.g_label != b.g_label) return a.g_label < b.g_label;
        if (a.theta != b.theta) return a.theta < b.theta;
        if (a.lambda != b.lambda) return a.lambda < b.lambda;
        return a.N < b.N;
    });
    return out;
}

} // namespace symlab
