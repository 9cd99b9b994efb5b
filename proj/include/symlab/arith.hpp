// Elementary arithmetic kernels: linear sieves for the Moebius function,
// Euler totient and divisor count, extended gcd / modular inverse, and the
// central construction f = g*1 (Dirichlet product with the constant 1) of a
// sieve function on a segment, together with its inverse (the Eratosthenes
// transform g = f*mu).
#pragma once

#include "symlab/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symlab {

// mu(n) for 1 <= n <= limit; entry [0] unused.
inline std::vector<int> sieve_mobius(i64 limit) {
    if (limit < 1) throw std::invalid_argument("sieve_mobius: limit must be >= 1");
    std::vector<int> mu(size_t(limit) + 1, 0);
    std::vector<i64> primes;
    std::vector<char> composite(size_t(limit) + 1, 0);
    mu[1] = 1;
    for (i64 i = 2; i <= limit; ++i) {
        if (!composite[size_t(i)]) {
            primes.push_back(i);
            mu[size_t(i)] = -1;
        }
        for (i64 p : primes) {
            if (p * i > limit) break;
            composite[size_t(p * i)] = 1;
            if (i % p == 0) {
                mu[size_t(p * i)] = 0;
                break;
            }
            mu[size_t(p * i)] = -mu[size_t(i)];
        }
    }
    return mu;
}

// Euler totient phi(n) for 1 <= n <= limit.
inline std::vector<i64> sieve_totient(i64 limit) {
    if (limit < 1) throw std::invalid_argument("sieve_totient: limit must be >= 1");
    std::vector<i64> phi(size_t(limit) + 1);
    std::iota(phi.begin(), phi.end(), i64(0));
    for (i64 p = 2; p <= limit; ++p) {
        if (phi[size_t(p)] == p) { // p prime
            for (i64 m = p; m <= limit; m += p)
                phi[size_t(m)] -= phi[size_t(m)] / p;
        }
    }
    return phi;
}

// d(n) = number of divisors, for 1 <= n <= limit.
inline std::vector<i64> sieve_divisor_count(i64 limit) {
    if (limit < 1) throw std::invalid_argument("sieve_divisor_count: limit must be >= 1");
    std::vector<i64> d(size_t(limit) + 1, 0);
    for (i64 q = 1; q <= limit; ++q)
        for (i64 m = q; m <= limit; m += q) ++d[size_t(m)];
    return d;
}

inline i64 divisor_count_single(i64 n) {
    if (n < 1) throw std::invalid_argument("divisor_count_single: n must be >= 1");
    i64 cnt = 0;
    for (i64 d = 1; d * d <= n; ++d) {
        if (n % d == 0) cnt += (d * d == n) ? 1 : 2;
    }
    return cnt;
}

inline int mobius_single(i64 n) {
    if (n < 1) throw std::invalid_argument("mobius_single: n must be >= 1");
    int mu = 1;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

inline i64 totient_single(i64 n) {
    if (n < 1) throw std::invalid_argument("totient_single: n must be >= 1");
    i64 phi = n;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            phi -= phi / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) phi -= phi / n;
    return phi;
}

// Residue of num mod den in [0, den).
inline i64 mod_nonneg(i64 num, i64 den) {
    i64 r = num % den;
    return r < 0 ? r + den : r;
}

struct ExtGcd {
    i64 g, x, y; // g = a*x + b*y
};

inline ExtGcd ext_gcd(i64 a, i64 b) {
    i64 old_r = a, r = b;
    i64 old_x = 1, x = 0;
    i64 old_y = 0, y = 1;
    while (r != 0) {
        i64 q = old_r / r;
        i64 t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * x; old_x = x; x = t;
        t = old_y - q * y; old_y = y; y = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    return {old_r, old_x, old_y};
}

// Inverse of a modulo m, in [1, m-1]. Requires m >= 2 and gcd(a, m) = 1.
inline i64 mod_inverse(i64 a, i64 m) {
    if (m < 2) throw std::invalid_argument("mod_inverse: modulus must be >= 2");
    i64 r = a % m;
    if (r < 0) r += m;
    ExtGcd e = ext_gcd(r, m);
    if (e.g != 1)
        throw std::invalid_argument("mod_inverse: arguments not coprime (gcd=" + std::to_string(e.g) + ")");
    i64 inv = e.x % m;
    if (inv < 0) inv += m;
    return inv;
}

// The transform g of a sieve function, supported on [1, Q]; g(q) = 0 for
// q > Q by construction. Coefficients are plain exact integers.
struct SieveFunction {
    std::string label;
    i64 support_bound = 1;  // Q
    std::vector<i64> coeffs; // coeffs[q-1] = g(q), length exactly Q

    i64 at(i64 q) const {
        return (q >= 1 && q <= support_bound) ? coeffs[size_t(q - 1)] : 0;
    }
    i64 max_abs() const {
        i64 m = 0;
        for (i64 c : coeffs) m = std::max(m, std::abs(c));
        return m;
    }
    // Crude pointwise bound for f = g*1 on any segment: sum of |g(q)|.
    i64 abs_sum() const {
        i64 s = 0;
        for (i64 c : coeffs) s += std::abs(c);
        return s;
    }
    // Finite essential-boundedness witness: max over q of |g(q)| / q^(1/4).
    double boundedness_witness() const {
        double w = 0;
        for (i64 q = 1; q <= support_bound; ++q) {
            double v = double(std::abs(coeffs[size_t(q - 1)])) / std::pow(double(q), 0.25);
            w = std::max(w, v);
        }
        return w;
    }
};

// Values of f on an inclusive integer range [lo, hi].
struct Segment {
    i64 lo = 1, hi = 1;
    std::vector<i64> values; // values[n - lo] = f(n)

    i64 length() const { return hi - lo + 1; }
    i64 at(i64 n) const {
        if (n < lo || n > hi) throw std::out_of_range("Segment::at: n outside [lo, hi]");
        return values[size_t(n - lo)];
    }
    bool covers(i64 a, i64 b) const { return lo <= a && b <= hi; }
    i64 max_abs() const {
        i64 m = 0;
        for (i64 v : values) m = std::max(m, std::abs(v));
        return m;
    }
};

// f = g*1 on [lo, hi] by a segmented divisor sieve: for each q <= Q add g(q)
// to every multiple of q in the range. O((hi-lo)*log Q + Q) additions.
inline Segment dirichlet_convolve(const SieveFunction& g, i64 lo, i64 hi) {
    if (lo < 1 || hi < lo) throw std::invalid_argument("dirichlet_convolve: need 1 <= lo <= hi");
    // |f(n)| <= sum |g(q)|; keep every value far inside i64.
    if (g.abs_sum() > (i64(1) << 60))
        throw capacity_error("dirichlet_convolve: sum |g| too large for exact i64 values");
    Segment seg;
    seg.lo = lo;
    seg.hi = hi;
    seg.values.assign(size_t(hi - lo + 1), 0);
    for (i64 q = 1; q <= g.support_bound; ++q) {
        i64 c = g.coeffs[size_t(q - 1)];
        if (c == 0) continue;
        i64 n0 = ((lo + q - 1) / q) * q;
        for (i64 n = n0; n <= hi; n += q) seg.values[size_t(n - lo)] += c;
    }
    return seg;
}

// Moebius inversion g = f*mu on a complete initial segment f(1..L), done by
// sieving out each g(q) from its proper multiples. Round-trips exactly with
// dirichlet_convolve.
inline std::vector<i64> eratosthenes_transform(std::span<const i64> f_from_1) {
    i64 L = i64(f_from_1.size());
    if (L < 1) throw std::invalid_argument("eratosthenes_transform: empty input");
    std::vector<i64> g(f_from_1.begin(), f_from_1.end()); // g[i] holds value at i+1
    for (i64 q = 1; q <= L; ++q) {
        i64 gq = g[size_t(q - 1)];
        if (gq == 0) continue;
        for (i64 m = 2 * q; m <= L; m += q) g[size_t(m - 1)] -= gq;
    }
    return g;
}

inline std::vector<i64> eratosthenes_transform(const Segment& f) {
    if (f.lo != 1) throw std::invalid_argument("eratosthenes_transform: segment must start at 1");
    return eratosthenes_transform(std::span<const i64>(f.values));
}

// Named transforms with integer coefficients, truncated to [1, Q]:
//   ones     g(q) = 1                 (f(n) counts divisors of n up to Q)
//   moebius  g(q) = mu(q)             (f = 1_{n=1} once Q >= n)
//   delta1   g(q) = 1_{q=1}           (f identically 1)
//   squarefree-indicator-transform
//            g(s^2) = mu(s), else 0   (f = squarefree indicator once Q >= n)
inline SieveFunction catalog(std::string_view name, i64 Q) {
    if (Q < 1) throw std::invalid_argument("catalog: Q must be >= 1");
    SieveFunction g;
    g.label = std::string(name);
    g.support_bound = Q;
    g.coeffs.assign(size_t(Q), 0);
    if (name == "ones") {
        for (auto& c : g.coeffs) c = 1;
    } else if (name == "moebius") {
        auto mu = sieve_mobius(Q);
        for (i64 q = 1; q <= Q; ++q) g.coeffs[size_t(q - 1)] = mu[size_t(q)];
    } else if (name == "delta1") {
        g.coeffs[0] = 1;
    } else if (name == "squarefree-indicator-transform") {
        i64 smax = 1;
        while ((smax + 1) * (smax + 1) <= Q) ++smax;
        auto mu = sieve_mobius(smax);
        for (i64 s = 1; s <= smax; ++s) g.coeffs[size_t(s * s - 1)] = mu[size_t(s)];
    } else {
        throw std::invalid_argument("catalog: unknown transform '" + std::string(name) + "'");
    }
    return g;
}

} // namespace symlab
