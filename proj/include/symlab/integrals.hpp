// The quadratic objects of the experiment: the tent-like weight W, shifted
// autocorrelations C_f(a), the exact symmetry integral over [N, 2N], the
// sliding-window variance against the expected density (Selberg-type
// integral), and the dispersion decomposition tying them together.
//
// Everything here is exact: the integrand of the symmetry integral is
// constant on open unit intervals (the window arm h is an integer and
// sgn(0) = 0 kills the endpoints), so integration is summation, done in
// 128-bit accumulators under an explicit capacity precondition.
#pragma once

#include "symlab/arith.hpp"
#include "symlab/core.hpp"
#include "symlab/fft.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace symlab {

struct WindowParams {
    i64 N = 2;
    i64 h = 1;
    double theta() const { return std::log(double(h)) / std::log(double(N)); }
};

// W(a) = 1_{[-2h,2h]}(a) * max(2h - 3|a|, |a| - 2h). Even, vanishes at
// |a| = 2h, negative on h < |a| < 2h.
inline i64 weight_W(i64 a, i64 h) {
    if (h < 1) throw std::invalid_argument("weight_W: arm must be >= 1");
    i64 abs_a = std::abs(a);
    if (abs_a > 2 * h) return 0;
    return std::max(2 * h - 3 * abs_a, abs_a - 2 * h);
}

// Exact value of sum over a != 0 of W(a*l); the interesting fact is that it
// stays O(h) although the summands reach size 2h.
inline i64 weight_sum_stat(i64 h, i64 l) {
    if (h < 1 || l < 1) throw std::invalid_argument("weight_sum_stat: arguments must be >= 1");
    i64 s = 0;
    for (i64 a = 1; a * l <= 2 * h; ++a) s += weight_W(a * l, h);
    return 2 * s;
}

// a -> C_f(a) = sum over N < n <= 2N of f(n) f(n-a), for 0 < |a| <= 2h.
struct CorrelationTable {
    i64 h = 1;
    i64 zero_shift = 0;      // C_f(0), kept as a diagnostic
    std::vector<i64> vals;   // index a + 2h, a in [-2h, 2h]; the 0 slot mirrors zero_shift

    i64 at(i64 a) const {
        if (a == 0 || std::abs(a) > 2 * h)
            throw std::out_of_range("CorrelationTable::at: need 0 < |a| <= 2h");
        return vals[size_t(a + 2 * h)];
    }
};

namespace detail {

inline void require_correlation_coverage(const Segment& f, i64 N, i64 h) {
    if (N < 1 || h < 1) throw std::invalid_argument("correlation: need N, h >= 1");
    if (!f.covers(N - 2 * h + 1, 2 * N + 2 * h))
        throw std::invalid_argument("correlation: segment must cover (N-2h, 2N+2h]");
}

inline void require_correlation_capacity(i64 N, i64 max_abs_f) {
    BigInt peak = BigInt(N) * max_abs_f * max_abs_f;
    if (peak >= (BigInt(1) << 62))
        throw capacity_error("correlation: values can exceed the exact integer range");
}

} // namespace detail

inline CorrelationTable correlation_naive(const Segment& f, i64 N, i64 h) {
    detail::require_correlation_coverage(f, N, h);
    detail::require_correlation_capacity(N, f.max_abs());
    CorrelationTable t;
    t.h = h;
    t.vals.assign(size_t(4 * h + 1), 0);
    for (i64 a = -2 * h; a <= 2 * h; ++a) {
        i128 s = 0;
        for (i64 n = N + 1; n <= 2 * N; ++n)
            s += i128(f.at(n)) * f.at(n - a);
        t.vals[size_t(a + 2 * h)] = i64(s);
    }
    t.zero_shift = t.vals[size_t(2 * h)];
    return t;
}

// Same table via one FFT cross-correlation: with u = f on (N, 2N] and
// v = f on (N-2h, 2N+2h], C_f(a) is coefficient 2h - a + |u| - 1 of
// conv(reverse(u), v). Exactness is enforced inside convolve_integer.
inline CorrelationTable correlation_fast(const Segment& f, i64 N, i64 h) {
    detail::require_correlation_coverage(f, N, h);
    detail::require_correlation_capacity(N, f.max_abs());
    std::vector<i64> u(size_t(N), 0);
    for (i64 n = N + 1; n <= 2 * N; ++n) u[size_t(2 * N - n)] = f.at(n); // reversed
    std::vector<i64> v(size_t(N + 4 * h), 0);
    for (i64 n = N - 2 * h + 1; n <= 2 * N + 2 * h; ++n)
        v[size_t(n - (N - 2 * h + 1))] = f.at(n);
    std::vector<i64> w = convolve_integer(u, v);
    CorrelationTable t;
    t.h = h;
    t.vals.assign(size_t(4 * h + 1), 0);
    for (i64 a = -2 * h; a <= 2 * h; ++a)
        t.vals[size_t(a + 2 * h)] = w[size_t(2 * h - a + N - 1)];
    t.zero_shift = t.vals[size_t(2 * h)];
    return t;
}

struct IntegralResult {
    i128 value = 0;
    std::string method;
    i64 N = 0, h = 0;
};

// Documented capacity precondition for the quadratic sums: the worst case
// N * (2h * max|f|)^2 must stay below 2^127.
inline void require_quadratic_capacity(i64 N, i64 h, i64 max_abs_f, const char* who) {
    BigInt peak = BigInt(N) * (BigInt(2 * h) * max_abs_f) * (BigInt(2 * h) * max_abs_f);
    if (peak >= (BigInt(1) << 127))
        throw capacity_error(std::string(who) + ": N*(2h*max|f|)^2 exceeds 2^127");
}

namespace detail {

inline void require_symmetry_coverage(const Segment& f, i64 N, i64 h) {
    if (N < 1 || h < 1) throw std::invalid_argument("symmetry integral: need N, h >= 1");
    if (!f.covers(N - h + 1, 2 * N + h))
        throw std::invalid_argument("symmetry integral: segment must cover (N-h, 2N+h]");
}

} // namespace detail

// I_f = integral over [N, 2N] of the squared sign-weighted window sum.
// On x in (m, m+1) the window sum equals S(m+h) - 2S(m) + S(m-h) with S the
// prefix sum of f, so the integral collapses to N exact unit contributions.
inline IntegralResult symmetry_integral_prefix(const Segment& f, i64 N, i64 h) {
    detail::require_symmetry_coverage(f, N, h);
    require_quadratic_capacity(N, h, f.max_abs(), "symmetry_integral_prefix");
    std::vector<i128> prefix(f.values.size() + 1, 0); // prefix[i] = sum of first i values
    for (size_t i = 0; i < f.values.size(); ++i) prefix[i + 1] = prefix[i] + f.values[i];
    auto S = [&](i64 m) { return prefix[size_t(m - f.lo + 1)]; }; // sum of f on [lo, m]
    i128 total = 0;
    for (i64 m = N; m <= 2 * N - 1; ++m) {
        i128 d = S(m + h) - 2 * S(m) + S(m - h);
        total += d * d;
    }
    return {total, "prefix", N, h};
}

// Same integral by evaluating the integrand at each midpoint m + 1/2 with a
// direct window loop; the piecewise-constancy witness for the prefix method.
inline IntegralResult symmetry_integral_midpoint(const Segment& f, i64 N, i64 h) {
    detail::require_symmetry_coverage(f, N, h);
    require_quadratic_capacity(N, h, f.max_abs(), "symmetry_integral_midpoint");
    i128 total = 0;
    for (i64 m = N; m <= 2 * N - 1; ++m) {
        i128 d = 0;
        for (i64 n = m + 1; n <= m + h; ++n) d += f.at(n);
        for (i64 n = m - h + 1; n <= m; ++n) d -= f.at(n);
        total += d * d;
    }
    return {total, "midpoint", N, h};
}

// Expected density of f per unit length: sum over q <= Q of g(q)/q, exact.
// Computed over the common denominator lcm(1..Q).
inline BigRat sieve_mean(const SieveFunction& g) {
    BigInt den = 1;
    for (i64 q = 2; q <= g.support_bound; ++q) den = boost::multiprecision::lcm(den, BigInt(q));
    BigInt num = 0;
    for (i64 q = 1; q <= g.support_bound; ++q) {
        if (g.coeffs[size_t(q - 1)] != 0) num += g.coeffs[size_t(q - 1)] * (den / q);
    }
    return BigRat(num, den);
}

struct SelbergResult {
    BigRat value;
    i64 N = 0, h = 0;
};

// J_f = sum over m in [N, 2N) of (window sum of f on (m, m+h] minus h*mean)^2,
// exact rational. Expanded as sum S^2 - 2 h mean sum S + N h^2 mean^2 so the
// big-rational arithmetic happens once, not per window.
inline SelbergResult selberg_integral(const Segment& f, i64 N, i64 h, const BigRat& mean) {
    if (N < 1 || h < 1) throw std::invalid_argument("selberg_integral: need N, h >= 1");
    if (!f.covers(N + 1, 2 * N + h))
        throw std::invalid_argument("selberg_integral: segment must cover (N, 2N+h]");
    require_quadratic_capacity(N, h, f.max_abs(), "selberg_integral");
    std::vector<i128> prefix(f.values.size() + 1, 0);
    for (size_t i = 0; i < f.values.size(); ++i) prefix[i + 1] = prefix[i] + f.values[i];
    auto S = [&](i64 m) { return prefix[size_t(m - f.lo + 1)]; };
    i128 sum_w = 0, sum_w2 = 0;
    for (i64 m = N; m <= 2 * N - 1; ++m) {
        i128 w = S(m + h) - S(m);
        sum_w += w;
        sum_w2 += w * w;
    }
    BigRat J = BigRat(to_bigint(sum_w2))
             - BigRat(2 * h) * mean * BigRat(to_bigint(sum_w))
             + BigRat(N) * BigRat(h) * BigRat(h) * mean * mean;
    return {J, N, h};
}

struct DispersionResult {
    i128 symmetry = 0;       // I_f, prefix method
    i128 weighted = 0;       // sum over a != 0 of W(a) C_f(a)
    i128 residual = 0;       // symmetry - weighted
    double normalized = 0.0; // |residual| / (N h + h^3)
};

// The elementary dispersion identity compares I_f against the weighted
// correlation sum; the remainder is O-size N h + h^3 and the normalized
// residual is the experiment's observable.
inline DispersionResult dispersion_decomposition(const Segment& f, i64 N, i64 h, bool use_fft = true) {
    detail::require_correlation_coverage(f, N, h);
    IntegralResult I = symmetry_integral_prefix(f, N, h);
    CorrelationTable C = use_fft ? correlation_fast(f, N, h) : correlation_naive(f, N, h);
    i128 weighted = 0;
    for (i64 a = -2 * h; a <= 2 * h; ++a) {
        if (a == 0) continue;
        weighted += i128(weight_W(a, h)) * C.at(a);
    }
    DispersionResult r;
    r.symmetry = I.value;
    r.weighted = weighted;
    r.residual = I.value - weighted;
    i128 res_abs = r.residual < 0 ? -r.residual : r.residual;
    r.normalized = to_double(res_abs) / (double(N) * double(h) + std::pow(double(h), 3));
    return r;
}

} // namespace symlab
