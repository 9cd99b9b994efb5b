// Shared exact-arithmetic plumbing: 128-bit accumulators for every quadratic
// sum, arbitrary-precision rationals for window means, and the fixed number
// formatting used by all reports (12 significant digits, locale independent).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace symlab {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Thrown when a requested computation cannot be held exactly in the integer
// types used for accumulation (e.g. the precondition N*(2h*max|f|)^2 < 2^127
// fails) or when a verified-rounding step rejects a convolution.
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

inline std::string to_string(i128 x) {
    if (x == 0) return "0";
    bool neg = x < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
    std::string s;
    while (u) {
        s += char('0' + int(u % 10));
        u /= 10;
    }
    if (neg) s += '-';
    return {s.rbegin(), s.rend()};
}

// All floating values in CSV/JSON output go through this.
inline std::string fmt_g12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline double to_double(i128 x) {
    if (x >= 0) return static_cast<double>(static_cast<unsigned __int128>(x));
    return -static_cast<double>(-static_cast<unsigned __int128>(x));
}

inline BigInt to_bigint(i128 x) { return BigInt(x); }

// Kahan-compensated accumulator; keeps long trigonometric sums near machine
// epsilon instead of growing like sqrt(terms).
struct KahanSum {
    double s = 0.0, c = 0.0;
    void add(double x) {
        double y = x - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    double value() const { return s; }
};

} // namespace symlab
