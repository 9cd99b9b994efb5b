// Radix-2 complex FFT and exact integer convolution on top of it.
//
// Integer sequences are convolved in double precision and rounded back; the
// result is exact provided the floating error stays below 1/2. Two guards
// enforce that: an a-priori bound eps * log2(n) * ||u||_2 * ||v||_2 checked
// before transforming, and an a-posteriori check that no coefficient lands
// farther than 0.25 from an integer. Either failing raises capacity_error.
#pragma once

#include "symlab/core.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace symlab {

using Cvec = std::vector<std::complex<double>>;

// In-place iterative FFT, n a power of two. Twiddles come from one table of
// order-n roots evaluated by direct trig, not by repeated multiplication.
inline void fft_inplace(Cvec& a, bool invert) {
    const size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("fft_inplace: size must be a power of two");
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    static thread_local Cvec roots;   // roots[j] = e(j / order), j < order/2
    static thread_local size_t order = 0;
    if (order != n) {
        order = n;
        roots.assign(n / 2, {});
        for (size_t j = 0; j < n / 2; ++j) {
            double ang = 2.0 * std::numbers::pi * double(j) / double(n);
            roots[j] = {std::cos(ang), std::sin(ang)};
        }
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        size_t stride = n / len;
        for (size_t i = 0; i < n; i += len) {
            for (size_t k = 0; k < len / 2; ++k) {
                std::complex<double> w = roots[k * stride];
                if (invert) w = std::conj(w);
                std::complex<double> x = a[i + k];
                std::complex<double> y = a[i + k + len / 2] * w;
                a[i + k] = x + y;
                a[i + k + len / 2] = x - y;
            }
        }
    }
    if (invert) {
        for (auto& z : a) z /= double(n);
    }
}

// Exact convolution w[k] = sum_j u[j] v[k-j], |w| = |u| + |v| - 1.
// Both inputs ride through a single FFT (u in the real lane, v in the
// imaginary lane); spectra are separated by conjugate symmetry.
inline std::vector<i64> convolve_integer(const std::vector<i64>& u, const std::vector<i64>& v) {
    if (u.empty() || v.empty()) throw std::invalid_argument("convolve_integer: empty input");
    const size_t out_len = u.size() + v.size() - 1;
    size_t n = 1;
    while (n < out_len) n <<= 1;

    // A-priori rounding guard: FFT convolution error is bounded by
    // c * eps * log2(n) * ||u||_2 * ||v||_2 with a small c; demand < 0.25.
    long double su = 0, sv = 0;
    for (i64 x : u) su += (long double)(x) * x;
    for (i64 x : v) sv += (long double)(x) * x;
    double norm_prod = double(std::sqrt(su) * std::sqrt(sv));
    double log2n = std::log2(double(n));
    double err_bound = 8.0 * 1.11e-16 * log2n * norm_prod;
    if (err_bound >= 0.25)
        throw capacity_error("convolve_integer: inputs too large for verified rounding");

    Cvec a(n, {0.0, 0.0});
    for (size_t i = 0; i < u.size(); ++i) a[i].real(double(u[i]));
    for (size_t i = 0; i < v.size(); ++i) a[i].imag(double(v[i]));
    fft_inplace(a, false);

    // U[k] = (A[k] + conj(A[n-k]))/2, V[k] = (A[k] - conj(A[n-k]))/(2i);
    // process k and n-k together, writing the products back in place.
    Cvec prod(n);
    for (size_t k = 0; k <= n / 2; ++k) {
        size_t km = (n - k) & (n - 1);
        std::complex<double> ak = a[k], akm = std::conj(a[km]);
        std::complex<double> uk = 0.5 * (ak + akm);
        std::complex<double> vk = std::complex<double>(0.0, -0.5) * (ak - akm);
        prod[k] = uk * vk;
        if (km != k) {
            std::complex<double> am = a[km], amk = std::conj(a[k]);
            std::complex<double> ukm = 0.5 * (am + amk);
            std::complex<double> vkm = std::complex<double>(0.0, -0.5) * (am - amk);
            prod[km] = ukm * vkm;
        }
    }
    fft_inplace(prod, true);

    std::vector<i64> w(out_len);
    double worst = 0.0;
    for (size_t k = 0; k < out_len; ++k) {
        double raw = prod[k].real();
        double r = std::nearbyint(raw);
        worst = std::max(worst, std::abs(raw - r));
        w[k] = i64(r);
    }
    if (worst > 0.25)
        throw capacity_error("convolve_integer: rounding validation failed (max offset "
                             + fmt_g12(worst) + ")");
    return w;
}

} // namespace symlab
