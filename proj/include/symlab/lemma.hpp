// Residue-class decomposition of a trigonometric sum, and the averaged
// bound statistics attached to it.
//
// For coprime a < t, with tbar the inverse of t mod a, the sum over
// 0 < |k| <= t/2 of
//     [cos(2*pi*k*tbar/a) (cos(2*pi*k/(a t)) - 1)
//      + sin(2*pi*k*tbar/a) sin(2*pi*k/(a t))] * cos(2*pi*j*k/t)
// splits exactly over the residue classes r of k mod a, because the first
// two factors only see k through k mod a. The identity is exact mathematics;
// computing the two sides with different groupings makes the residual a pure
// floating-point measurement.
//
// Boundary conventions: the summand is even in k, so the sum folds onto
// k in [1, floor(t/2)] with weight 2; for even t the class of t/2 enters
// through its positive representative with the same weight on both sides.
// For a = 1 the inverse tbar is 0 and the class split is trivial.
#pragma once

#include "symlab/arith.hpp"
#include "symlab/core.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace symlab {

struct LemmaSample {
    i64 a = 1, t = 2;
    i64 tbar_mod_a = 0; // inverse of t mod a, 0 when a = 1
    i64 abar_mod_t = 1; // inverse of a mod t

    static LemmaSample make(i64 a, i64 t) {
        if (a < 1 || t <= a) throw std::invalid_argument("LemmaSample: need 1 <= a < t");
        if (std::gcd(a, t) != 1) throw std::invalid_argument("LemmaSample: a, t must be coprime");
        LemmaSample s;
        s.a = a;
        s.t = t;
        s.tbar_mod_a = (a == 1) ? 0 : mod_inverse(t, a);
        s.abar_mod_t = mod_inverse(a, t);
        return s;
    }
};

struct LemmaStats {
    double identity_residual = 0;
    double bound1_stat = 0;
    double bound2_stat = 0;
    i64 j_count = 0;
};

// Shared trig tables for one (a, t) pair; every angle is reduced to a table
// index by exact integer arithmetic before lookup.
class LemmaSession {
public:
    explicit LemmaSession(const LemmaSample& s) : s_(s), half_(s.t / 2) {
        const double tau = 2.0 * std::numbers::pi;
        cos_t_.resize(size_t(s.t));
        sin_t_.resize(size_t(s.t));
        for (i64 m = 0; m < s.t; ++m) {
            cos_t_[size_t(m)] = std::cos(tau * double(m) / double(s.t));
            sin_t_[size_t(m)] = std::sin(tau * double(m) / double(s.t));
        }
        cos_a_.resize(size_t(s.a));
        sin_a_.resize(size_t(s.a));
        for (i64 m = 0; m < s.a; ++m) {
            cos_a_[size_t(m)] = std::cos(tau * double(m) / double(s.a));
            sin_a_[size_t(m)] = std::sin(tau * double(m) / double(s.a));
        }
        cos_at_.resize(size_t(half_) + 1);
        sin_at_.resize(size_t(half_) + 1);
        for (i64 k = 0; k <= half_; ++k) {
            double ang = tau * double(k) / (double(s.a) * double(s.t));
            cos_at_[size_t(k)] = std::cos(ang);
            sin_at_[size_t(k)] = std::sin(ang);
        }
    }

    const LemmaSample& sample() const { return s_; }

    // Left side at frequency j: single pass over k, the class-dependent
    // factor evaluated through k*tbar mod a directly.
    double lhs(i64 j) const {
        i64 jt = mod_nonneg(j, s_.t);
        i64 idx_t = 0;                       // j*k mod t
        i64 idx_a = 0;                       // k*tbar mod a
        i64 step_a = mod_nonneg(s_.tbar_mod_a, s_.a);
        KahanSum sum;
        for (i64 k = 1; k <= half_; ++k) {
            idx_t += jt; if (idx_t >= s_.t) idx_t -= s_.t;
            idx_a += step_a; if (idx_a >= s_.a) idx_a -= s_.a;
            double bracket = cos_a_[size_t(idx_a)] * (cos_at_[size_t(k)] - 1.0)
                           + sin_a_[size_t(idx_a)] * sin_at_[size_t(k)];
            sum.add(bracket * cos_t_[size_t(idx_t)]);
        }
        return 2.0 * sum.value();
    }

    // 2 * sum over k <= t/2, k == r (mod a) of (cos(2 pi k/(a t)) - 1) cos(2 pi j k/t).
    double sigma1(i64 r, i64 j) const { return progression_sum(r, j, /*use_sin=*/false); }

    // Same progression with sin(2 pi k/(a t)).
    double sigma2(i64 r, i64 j) const { return progression_sum(r, j, /*use_sin=*/true); }

    // M(j, r) = -2 sin(2 pi j r / t) * sum over J <= t/(2a) of
    // sin(2 pi J / t) sin(2 pi j a J / t).
    double m_correction(i64 r, i64 j) const {
        return -2.0 * sin_t_[size_t(mod_nonneg(j * r, s_.t))] * g_factor(j);
    }

    // Right side at frequency j: outer loop over residue classes r in Z_a.
    double rhs(i64 j) const {
        KahanSum sum;
        for (i64 r = 0; r < s_.a; ++r) {
            i64 arg = mod_nonneg(r * s_.tbar_mod_a, s_.a);
            sum.add(cos_a_[size_t(arg)] * sigma1(r, j));
            sum.add(sin_a_[size_t(arg)] * sigma2(r, j));
        }
        return sum.value();
    }

    // Max of |lhs - rhs| over every integer j with |j| <= t/2.
    double identity_residual_all() const {
        double worst = 0;
        for (i64 j = -half_; j <= half_; ++j)
            worst = std::max(worst, std::abs(lhs(j) - rhs(j)));
        return worst;
    }

    double identity_residual_for(const std::vector<i64>& js) const {
        double worst = 0;
        for (i64 j : js) worst = std::max(worst, std::abs(lhs(j) - rhs(j)));
        return worst;
    }

    // Signed-representative aggregate of sigma1 against cos weights:
    // A(j) = sum over 0 <= |r| <= a/2 of cos(2 pi r tbar / a) sigma1(r, j),
    // evaluated as one pass over k with per-class weights.
    double cos_aggregate(i64 j) const {
        return weighted_pass(j, cos_class_weights(), /*use_sin=*/false);
    }

    // Same with sin weights against sigma2: B(j).
    double sin_aggregate(i64 j) const {
        return weighted_pass(j, sin_class_weights(), /*use_sin=*/true);
    }

    // B(j) minus the sin-weighted M correction, i.e. the inner value of the
    // second bound statistic. Angles of negative arguments reduce mod the
    // period before lookup, which preserves their sign automatically.
    double sin_aggregate_corrected(i64 j) const {
        double b = sin_aggregate(j);
        KahanSum mr; // sum over signed r of sin(2 pi r tbar/a) sin(2 pi j r/t)
        for (i64 r = -(s_.a / 2); r <= s_.a / 2; ++r) {
            double w = sin_a_[size_t(mod_nonneg(r * s_.tbar_mod_a, s_.a))];
            mr.add(w * sin_t_[size_t(mod_nonneg(j * r, s_.t))]);
        }
        return b + 2.0 * g_factor(j) * mr.value();
    }

    // (1/t) sum over |j| <= t/2 of |A(j)|.
    double bound1_stat() const {
        KahanSum acc;
        acc.add(std::abs(cos_aggregate(0)));
        for (i64 j = 1; j <= half_; ++j) acc.add(2.0 * std::abs(cos_aggregate(j)));
        return acc.value() / double(s_.t);
    }

    // (1/t) sum over |j| <= t/2 of |B(j) - M part|, optionally skipping the
    // two exceptional classes j == +-abar (mod t).
    double bound2_stat(bool exclude_exceptional) const {
        i64 skip = -1;
        if (exclude_exceptional) {
            i64 j1 = mod_nonneg(s_.abar_mod_t, s_.t);
            skip = std::min(j1, s_.t - j1);
        }
        KahanSum acc;
        if (skip != 0) acc.add(std::abs(sin_aggregate_corrected(0)));
        for (i64 j = 1; j <= half_; ++j) {
            if (j == skip) continue;
            acc.add(2.0 * std::abs(sin_aggregate_corrected(j)));
        }
        return acc.value() / double(s_.t);
    }

    // The two zero-frequency aggregates (A(0), B(0)).
    std::pair<double, double> j0_checks() const {
        return {cos_aggregate(0), sin_aggregate(0)};
    }

    // One-call summary for grid reporting; the exceptional classes are
    // excluded from the second statistic, matching the bound's hypotheses.
    LemmaStats stats() const {
        LemmaStats st;
        st.identity_residual = identity_residual_all();
        st.bound1_stat = bound1_stat();
        st.bound2_stat = bound2_stat(true);
        st.j_count = 2 * half_ + 1;
        return st;
    }

private:
    LemmaSample s_;
    i64 half_;
    std::vector<double> cos_t_, sin_t_; // arg 2 pi m / t
    std::vector<double> cos_a_, sin_a_; // arg 2 pi m / a
    std::vector<double> cos_at_, sin_at_; // arg 2 pi k / (a t), k <= t/2

    double progression_sum(i64 r, i64 j, bool use_sin) const {
        i64 r0 = mod_nonneg(r, s_.a);
        i64 k0 = (r0 == 0) ? s_.a : r0; // first k >= 1 in the class
        if (k0 > half_) return 0.0;
        i64 jt = mod_nonneg(j, s_.t);
        i64 step_t = i64(i128(jt) * s_.a % s_.t);
        i64 idx_t = i64(i128(jt) * k0 % s_.t);
        KahanSum sum;
        for (i64 k = k0; k <= half_; k += s_.a) {
            double base = use_sin ? sin_at_[size_t(k)] : (cos_at_[size_t(k)] - 1.0);
            sum.add(base * cos_t_[size_t(idx_t)]);
            idx_t += step_t; if (idx_t >= s_.t) idx_t -= s_.t;
        }
        return 2.0 * sum.value();
    }

    // G(j) = sum over J <= t/(2a) of sin(2 pi J / t) sin(2 pi j a J / t).
    double g_factor(i64 j) const {
        i64 step = i64(i128(mod_nonneg(j, s_.t)) * s_.a % s_.t);
        i64 idx = 0;
        KahanSum sum;
        for (i64 J = 1; J <= s_.t / (2 * s_.a); ++J) {
            idx += step; if (idx >= s_.t) idx -= s_.t;
            sum.add(sin_t_[size_t(J)] * sin_t_[size_t(idx)]);
        }
        return sum.value();
    }

    // Per-class weights accumulated over the signed range 0 <= |r| <= a/2.
    std::vector<double> cos_class_weights() const {
        std::vector<double> w(size_t(s_.a), 0.0);
        for (i64 r = -(s_.a / 2); r <= s_.a / 2; ++r)
            w[size_t(mod_nonneg(r, s_.a))] += cos_a_[size_t(mod_nonneg(r * s_.tbar_mod_a, s_.a))];
        return w;
    }
    std::vector<double> sin_class_weights() const {
        std::vector<double> w(size_t(s_.a), 0.0);
        for (i64 r = -(s_.a / 2); r <= s_.a / 2; ++r)
            w[size_t(mod_nonneg(r, s_.a))] += sin_a_[size_t(mod_nonneg(r * s_.tbar_mod_a, s_.a))];
        return w;
    }

    double weighted_pass(i64 j, const std::vector<double>& w, bool use_sin) const {
        i64 jt = mod_nonneg(j, s_.t);
        i64 idx_t = 0;
        i64 idx_a = 0;
        KahanSum sum;
        for (i64 k = 1; k <= half_; ++k) {
            idx_t += jt; if (idx_t >= s_.t) idx_t -= s_.t;
            ++idx_a; if (idx_a == s_.a) idx_a = 0;
            double base = use_sin ? sin_at_[size_t(k)] : (cos_at_[size_t(k)] - 1.0);
            sum.add(w[size_t(idx_a)] * base * cos_t_[size_t(idx_t)]);
        }
        return 2.0 * sum.value();
    }
};

} // namespace symlab
