// Complete exponential sums over rationals: the additive character e(a/q),
// nearest-integer distance and the periodized odd sawtooth (both exact
// rationals), geometric sums with their classical bound, Ramanujan sums
// (direct and closed form), Kloosterman sums with the Weil-Estermann bound
// check, modular reciprocity, and additive-character orthogonality.
//
// Every trig call reduces its argument modulo the denominator in exact
// integer arithmetic first, so accuracy does not degrade with the size of
// the numerator.
#pragma once

#include "symlab/arith.hpp"
#include "symlab/core.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

namespace symlab {

using Cx = std::complex<double>;

// num/den reduced to lowest terms, den >= 1.
struct Frac {
    i64 num = 0;
    i64 den = 1;

    static Frac make(i64 n, i64 d) {
        if (d == 0) throw std::invalid_argument("Frac: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        i64 g = std::gcd(n, d);
        if (g > 1) { n /= g; d /= g; }
        return {n, d};
    }
    double value() const { return double(num) / double(den); }
    bool operator==(const Frac&) const = default;
};

// e(num/den) = exp(2*pi*i*num/den), argument reduced mod den first.
inline Cx additive_char(i64 num, i64 den) {
    if (den < 1) throw std::invalid_argument("additive_char: denominator must be >= 1");
    i64 r = mod_nonneg(num, den);
    double ang = 2.0 * std::numbers::pi * double(r) / double(den);
    return {std::cos(ang), std::sin(ang)};
}

// Distance from num/den to the nearest integer, exact, in [0, 1/2].
inline Frac nearest_int_distance(i64 num, i64 den) {
    if (den < 1) throw std::invalid_argument("nearest_int_distance: denominator must be >= 1");
    i64 r = mod_nonneg(num, den);
    return Frac::make(std::min(r, den - r), den);
}

// Odd 1-periodic sawtooth, value of num/den folded into (-1/2, 1/2].
// The positive representative is taken at the half-integer boundary, so
// den * result is the unique k with k == num (mod den), 0 <= |k| <= den/2,
// positive at ties.
inline Frac sawtooth(i64 num, i64 den) {
    if (den < 1) throw std::invalid_argument("sawtooth: denominator must be >= 1");
    i64 r = mod_nonneg(num, den);
    i64 k = (2 * r <= den) ? r : r - den;
    return Frac::make(k, den);
}

// Sum of e(n * alpha) over n_lo <= n <= n_hi, alpha = num/den.
inline Cx geometric_char_sum(i64 alpha_num, i64 alpha_den, i64 n_lo, i64 n_hi) {
    if (alpha_den < 1) throw std::invalid_argument("geometric_char_sum: denominator must be >= 1");
    if (n_lo > n_hi) throw std::invalid_argument("geometric_char_sum: empty range");
    i64 step = mod_nonneg(alpha_num, alpha_den);
    i64 r = i64(i128(n_lo) % alpha_den * step % alpha_den);
    if (r < 0) r += alpha_den;
    KahanSum re, im;
    for (i64 n = n_lo; n <= n_hi; ++n) {
        double ang = 2.0 * std::numbers::pi * double(r) / double(alpha_den);
        re.add(std::cos(ang));
        im.add(std::sin(ang));
        r += step;
        if (r >= alpha_den) r -= alpha_den;
    }
    return {re.value(), im.value()};
}

struct GeomBound {
    Cx sum;
    double bound; // min(length, 1/(2*dist to nearest integer)); length if dist = 0
    bool ok;      // |sum| <= bound up to rounding slack
};

// The classical estimate: a geometric character sum is at most the range
// length, and at most 1/(2*||alpha||) when alpha is not an integer.
inline GeomBound geometric_bound_check(i64 alpha_num, i64 alpha_den, i64 n_lo, i64 n_hi) {
    Cx sum = geometric_char_sum(alpha_num, alpha_den, n_lo, n_hi);
    double len = double(n_hi - n_lo + 1);
    Frac dist = nearest_int_distance(alpha_num, alpha_den);
    double bound = len;
    if (dist.num != 0) bound = std::min(len, 0.5 * double(dist.den) / double(dist.num));
    bool ok = std::abs(sum) <= bound * (1.0 + 1e-9) + 1e-9;
    return {sum, bound, ok};
}

// c_t(n) = sum over 1 <= j <= t, (j,t)=1 of e(j*n/t). Real up to rounding
// (terms pair j with t-j); the real part is returned.
inline double ramanujan_sum_direct(i64 t, i64 n) {
    if (t < 1) throw std::invalid_argument("ramanujan_sum_direct: modulus must be >= 1");
    i64 n_mod = mod_nonneg(n, t);
    KahanSum re;
    i64 r = 0;
    for (i64 j = 1; j <= t; ++j) {
        r += n_mod;
        if (r >= t) r -= t;
        if (std::gcd(j, t) != 1) continue;
        re.add(std::cos(2.0 * std::numbers::pi * double(r) / double(t)));
    }
    return re.value();
}

// Closed form phi(t) * mu(t/(t,n)) / phi(t/(t,n)), an exact integer.
inline i64 ramanujan_sum_closed(i64 t, i64 n) {
    if (t < 1) throw std::invalid_argument("ramanujan_sum_closed: modulus must be >= 1");
    i64 g = std::gcd(mod_nonneg(n, t), t);
    if (g == 0) g = t; // n == 0 mod t
    i64 m = t / g;
    int mu = mobius_single(m);
    if (mu == 0) return 0;
    i64 phi_t = totient_single(t);
    i64 phi_m = totient_single(m);
    // phi(m) | phi(t) because m | t, so the quotient is exact.
    return phi_t / phi_m * mu;
}

// S(a,b;c) = sum over j coprime to c of e((j*a + jbar*b)/c), jbar the
// inverse of j mod c. Conjugate-symmetric, hence real; real part returned.
inline double kloosterman_sum(i64 a, i64 b, i64 c) {
    if (c < 1) throw std::invalid_argument("kloosterman_sum: modulus must be >= 1");
    if (c == 1) return 1.0;
    i64 a_mod = mod_nonneg(a, c), b_mod = mod_nonneg(b, c);
    KahanSum re;
    for (i64 j = 1; j <= c; ++j) {
        if (std::gcd(j, c) != 1) continue;
        i64 jbar = mod_inverse(j, c);
        i64 r = i64((i128(j) * a_mod + i128(jbar) * b_mod) % c);
        re.add(std::cos(2.0 * std::numbers::pi * double(r) / double(c)));
    }
    return re.value();
}

struct WeilCheck {
    double abs_sum;
    double rhs;   // d(c) * sqrt(gcd(a,b,c)) * sqrt(c)
    double slack; // rhs - abs_sum
    bool ok;
};

inline WeilCheck weil_estermann_check(i64 a, i64 b, i64 c) {
    double s = std::abs(kloosterman_sum(a, b, c));
    i64 g = std::gcd(std::gcd(mod_nonneg(a, c), mod_nonneg(b, c)), c);
    if (g == 0) g = c;
    double rhs = double(divisor_count_single(c)) * std::sqrt(double(g)) * std::sqrt(double(c));
    return {s, rhs, rhs - s, s <= rhs + 1e-6};
}

// Exact integer form of modular reciprocity for coprime a, q: with abar the
// inverse of a mod q and qbar the inverse of q mod a,
//     a*abar + q*qbar == 1 (mod a*q).
// Inverses modulo 1 are 0 by convention; a = q = 1 is true by convention.
inline bool reciprocity_check(i64 a, i64 q) {
    if (a < 1 || q < 1) throw std::invalid_argument("reciprocity_check: arguments must be >= 1");
    if (std::gcd(a, q) != 1)
        throw std::invalid_argument("reciprocity_check: arguments not coprime");
    if (a == 1 && q == 1) return true;
    i64 abar = (q == 1) ? 0 : mod_inverse(a, q);
    i64 qbar = (a == 1) ? 0 : mod_inverse(q, a);
    i128 lhs = i128(a) * abar + i128(q) * qbar;
    i128 m = i128(a) * q;
    return lhs % m == 1 % m;
}

// (1/q) * sum over j mod q of e(j*(n - a)/q): 1 when n == a (mod q), else 0.
inline double character_orthogonality(i64 q, i64 n, i64 a) {
    if (q < 1) throw std::invalid_argument("character_orthogonality: modulus must be >= 1");
    i64 m = mod_nonneg(n - a, q);
    KahanSum re;
    i64 r = 0;
    for (i64 j = 0; j < q; ++j) {
        re.add(std::cos(2.0 * std::numbers::pi * double(r) / double(q)));
        r += m;
        if (r >= q) r -= q;
    }
    return re.value() / double(q);
}

} // namespace symlab
