#include "symlab/fft.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace symlab;

namespace {

std::vector<i64> convolve_oracle(const std::vector<i64>& u, const std::vector<i64>& v) {
    std::vector<i64> w(u.size() + v.size() - 1, 0);
    for (size_t i = 0; i < u.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j)
            w[i + j] += u[i] * v[j];
    return w;
}

} // namespace

TEST(Fft, RoundTrip) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> val(-1.0, 1.0);
    for (size_t n : {size_t(1), size_t(2), size_t(64), size_t(1024)}) {
        Cvec a(n);
        for (auto& z : a) z = {val(rng), val(rng)};
        Cvec b = a;
        fft_inplace(b, false);
        fft_inplace(b, true);
        for (size_t i = 0; i < n; ++i) {
            ASSERT_NEAR(a[i].real(), b[i].real(), 1e-12);
            ASSERT_NEAR(a[i].imag(), b[i].imag(), 1e-12);
        }
    }
    Cvec bad(3);
    EXPECT_THROW(fft_inplace(bad, false), std::invalid_argument);
}

TEST(Fft, ParsevalOnImpulse) {
    Cvec a(8, {0.0, 0.0});
    a[0] = {1.0, 0.0};
    fft_inplace(a, false);
    for (auto& z : a) {
        EXPECT_NEAR(z.real(), 1.0, 1e-14);
        EXPECT_NEAR(z.imag(), 0.0, 1e-14);
    }
}

TEST(Convolve, MatchesNaiveOnRandomInputs) {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<i64> val(-200000, 200000);
    std::uniform_int_distribution<size_t> len(1, 200);
    for (int it = 0; it < 50; ++it) {
        std::vector<i64> u(len(rng)), v(len(rng));
        for (auto& x : u) x = val(rng);
        for (auto& x : v) x = val(rng);
        EXPECT_EQ(convolve_integer(u, v), convolve_oracle(u, v));
    }
}

TEST(Convolve, MediumSizeModerateMagnitude) {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<i64> val(-1024, 1024);
    std::vector<i64> u(4096), v(5000);
    for (auto& x : u) x = val(rng);
    for (auto& x : v) x = val(rng);
    EXPECT_EQ(convolve_integer(u, v), convolve_oracle(u, v));
}

TEST(Convolve, SingleElementAndZeros) {
    EXPECT_EQ(convolve_integer({3}, {5}), std::vector<i64>({15}));
    std::vector<i64> z(100, 0), u(50, 7);
    std::vector<i64> w = convolve_integer(u, z);
    for (i64 x : w) EXPECT_EQ(x, 0);
    EXPECT_THROW(convolve_integer({}, {1}), std::invalid_argument);
}

TEST(Convolve, RejectsInputsBeyondVerifiedRounding) {
    // Norm product ~2^52 pushes the a-priori error bound far past 1/4.
    std::vector<i64> u(4096, i64(1) << 20), v(4096, i64(1) << 20);
    EXPECT_THROW(convolve_integer(u, v), capacity_error);
}
