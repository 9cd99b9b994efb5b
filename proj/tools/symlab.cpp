// Command-line front door. One subcommand per verification family; every
// emitted artifact is deterministic for a fixed config, including under
// different worker counts. Exit codes: 0 success, 1 validation error,
// 2 capacity error, 3 failed checks.
#include "symlab/acceptance.hpp"
#include "symlab/arith.hpp"
#include "symlab/expsums.hpp"
#include "symlab/integrals.hpp"
#include "symlab/lemma.hpp"
#include "symlab/parallel.hpp"
#include "symlab/report.hpp"
#include "symlab/selftest.hpp"
#include "symlab/sweep.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

using namespace symlab;

namespace {

constexpr int kOk = 0, kValidation = 1, kCapacity = 2, kChecksFailed = 3;

void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::fputs(content.c_str(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << content;
}

// Generic tabular artifact. Cells are pre-rendered; the column kind only
// decides JSON quoting ('i' integer, 'f' real, 's' string, 'b' bool as 1/0).
struct Column {
    std::string name;
    char kind;
};

struct Table {
    std::vector<Column> cols;
    std::vector<std::vector<std::string>> rows;

    std::string csv(const std::vector<std::string>& meta) const {
        std::ostringstream os;
        for (const auto& m : meta) os << "# " << m << "\n";
        for (size_t c = 0; c < cols.size(); ++c) os << (c ? "," : "") << cols[c].name;
        os << "\n";
        for (const auto& row : rows) {
            for (size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << row[c];
            os << "\n";
        }
        return os.str();
    }

    std::string json() const {
        std::ostringstream os;
        os << "[\n";
        for (size_t i = 0; i < rows.size(); ++i) {
            os << "  {";
            for (size_t c = 0; c < cols.size(); ++c) {
                if (c) os << ", ";
                os << '"' << cols[c].name << "\": ";
                if (cols[c].kind == 's')
                    os << '"' << rows[i][c] << '"';
                else if (cols[c].kind == 'b')
                    os << (rows[i][c] == "1" ? "true" : "false");
                else
                    os << rows[i][c];
            }
            os << '}' << (i + 1 < rows.size() ? "," : "") << "\n";
        }
        os << "]\n";
        return os.str();
    }

    std::string render(const std::string& format, const std::vector<std::string>& meta) const {
        return format == "json" ? json() : csv(meta);
    }
};

// Size lists accept plain values and doubling ranges like 1024..16384.
std::vector<i64> expand_sizes(const std::vector<std::string>& tokens) {
    std::vector<i64> out;
    for (const auto& tok : tokens) {
        size_t dots = tok.find("..");
        if (dots == std::string::npos) {
            out.push_back(i64(std::stoll(tok)));
        } else {
            i64 lo = i64(std::stoll(tok.substr(0, dots)));
            i64 hi = i64(std::stoll(tok.substr(dots + 2)));
            if (lo < 1 || hi < lo) throw std::invalid_argument("bad size range: " + tok);
            for (i64 n = lo; n <= hi; n *= 2) out.push_back(n);
        }
    }
    if (out.empty()) throw std::invalid_argument("no sizes given");
    return out;
}

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
    return s;
}

std::string join_reals(const std::vector<double>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + fmt_g12(v[i]);
    return s;
}

int run_sieve(const std::string& g_label, i64 Q, i64 lo, i64 hi, const std::string& format,
              const std::string& out) {
    SieveFunction g = catalog(g_label, Q);
    Segment f = dirichlet_convolve(g, lo, hi);
    Table tb;
    tb.cols = {{"n", 'i'}, {"f", 'i'}};
    for (i64 n = f.lo; n <= f.hi; ++n)
        tb.rows.push_back({std::to_string(n), std::to_string(f.at(n))});
    std::ostringstream meta;
    meta << "sieve g=" << g_label << " Q=" << Q << " lo=" << lo << " hi=" << hi;
    emit(out, tb.render(format, {meta.str()}));
    return kOk;
}

int run_correlate(const std::string& g_label, i64 Q, i64 N, i64 h, bool naive,
                  const std::string& format, const std::string& out) {
    SieveFunction g = catalog(g_label, Q);
    Segment f = dirichlet_convolve(g, std::max<i64>(1, N - 2 * h + 1), 2 * N + 2 * h);
    CorrelationTable ct = naive ? correlation_naive(f, N, h) : correlation_fast(f, N, h);
    Table tb;
    tb.cols = {{"a", 'i'}, {"C", 'i'}};
    for (i64 a = -2 * h; a <= 2 * h; ++a) {
        if (a == 0) continue;
        tb.rows.push_back({std::to_string(a), std::to_string(ct.at(a))});
    }
    std::ostringstream meta;
    meta << "correlate g=" << g_label << " Q=" << Q << " N=" << N << " h=" << h
         << " method=" << (naive ? "naive" : "fast");
    emit(out, tb.render(format, {meta.str()}));
    return kOk;
}

int run_symmetry(const std::string& g_label, i64 N, i64 h, double theta, i64 Q, double lambda,
                 bool selberg, bool naive, const std::string& format, const std::string& out) {
    i64 arm = h;
    if (arm <= 0) {
        if (!(theta > kThetaGuard && theta < 1 - kThetaGuard))
            throw std::invalid_argument("theta outside (0.05, 0.95)");
        arm = floor_power(N, theta);
    }
    i64 support = Q;
    if (support <= 0) {
        if (!(lambda > 0 && lambda < 1)) throw std::invalid_argument("lambda outside (0, 1)");
        support = floor_power(N, lambda);
    }
    ExperimentRecord rec = run_explicit(g_label, N, arm, support, selberg, !naive);
    std::ostringstream meta;
    meta << "symmetry g=" << g_label << " N=" << N << " h=" << rec.h << " Q=" << rec.Q
         << " theta=" << fmt_g12(rec.theta) << " lambda=" << fmt_g12(rec.lambda);
    if (format == "json")
        emit(out, write_json({rec}));
    else
        emit(out, write_csv({rec}, {meta.str()}));
    return kOk;
}

int run_expsum_ramanujan(i64 tmax, i64 nmax, const std::string& format, const std::string& out) {
    Table tb;
    tb.cols = {{"t", 'i'}, {"n", 'i'}, {"direct", 'f'}, {"closed", 'i'}, {"deviation", 'f'}};
    i64 bad = 0;
    for (i64 t = 1; t <= tmax; ++t)
        for (i64 n = 0; n <= nmax; ++n) {
            double direct = ramanujan_sum_direct(t, n);
            i64 closed = ramanujan_sum_closed(t, n);
            double dev = std::abs(direct - double(closed));
            if (dev > 1e-6) ++bad;
            tb.rows.push_back({std::to_string(t), std::to_string(n), fmt_g12(direct),
                               std::to_string(closed), fmt_g12(dev)});
        }
    std::ostringstream meta;
    meta << "expsum ramanujan tmax=" << tmax << " nmax=" << nmax << " mismatches=" << bad;
    emit(out, tb.render(format, {meta.str()}));
    return bad == 0 ? kOk : kChecksFailed;
}

int run_expsum_kloosterman(i64 a, i64 b, i64 cmax, const std::string& format,
                           const std::string& out) {
    Table tb;
    tb.cols = {{"c", 'i'}, {"S", 'f'}, {"bound", 'f'}, {"slack", 'f'}, {"ok", 'b'}};
    i64 bad = 0;
    for (i64 c = 1; c <= cmax; ++c) {
        WeilCheck w = weil_estermann_check(a, b, c);
        if (!w.ok) ++bad;
        tb.rows.push_back({std::to_string(c), fmt_g12(kloosterman_sum(a, b, c)), fmt_g12(w.rhs),
                           fmt_g12(w.slack), w.ok ? "1" : "0"});
    }
    std::ostringstream meta;
    meta << "expsum kloosterman a=" << a << " b=" << b << " cmax=" << cmax
         << " violations=" << bad;
    emit(out, tb.render(format, {meta.str()}));
    return bad == 0 ? kOk : kChecksFailed;
}

int run_expsum_weil(i64 cmax, i64 amax, i64 bmax, const std::string& format,
                    const std::string& out) {
    Table tb;
    tb.cols = {{"c", 'i'}, {"min_slack", 'f'}, {"worst_a", 'i'}, {"worst_b", 'i'}, {"ok", 'b'}};
    i64 bad = 0;
    for (i64 c = 1; c <= cmax; ++c) {
        double min_slack = 1e300;
        i64 wa = 0, wb = 0;
        bool ok = true;
        for (i64 a = 0; a <= amax; ++a)
            for (i64 b = 0; b <= bmax; ++b) {
                WeilCheck w = weil_estermann_check(a, b, c);
                if (w.slack < min_slack) {
                    min_slack = w.slack;
                    wa = a;
                    wb = b;
                }
                ok = ok && w.ok;
            }
        if (!ok) ++bad;
        tb.rows.push_back({std::to_string(c), fmt_g12(min_slack), std::to_string(wa),
                           std::to_string(wb), ok ? "1" : "0"});
    }
    std::ostringstream meta;
    meta << "expsum weil cmax=" << cmax << " amax=" << amax << " bmax=" << bmax
         << " violating_moduli=" << bad;
    emit(out, tb.render(format, {meta.str()}));
    return bad == 0 ? kOk : kChecksFailed;
}

int run_lemma(i64 a, i64 t, i64 amin, i64 amax, i64 tmin, i64 tmax, i64 tstep,
              const std::string& format, const std::string& out) {
    Table tb;
    tb.cols = {{"a", 'i'},           {"t", 'i'},           {"identity_residual", 'f'},
               {"bound1_stat", 'f'}, {"bound2_stat", 'f'}, {"j0_cos", 'f'},
               {"j0_sin", 'f'},      {"j_count", 'i'}};
    auto add_row = [&](i64 aa, i64 tt) {
        LemmaSession ses(LemmaSample::make(aa, tt));
        LemmaStats st = ses.stats();
        auto [j0c, j0s] = ses.j0_checks();
        tb.rows.push_back({std::to_string(aa), std::to_string(tt), fmt_g12(st.identity_residual),
                           fmt_g12(st.bound1_stat), fmt_g12(st.bound2_stat), fmt_g12(j0c),
                           fmt_g12(j0s), std::to_string(st.j_count)});
    };
    std::ostringstream meta;
    if (a > 0 || t > 0) {
        if (a <= 0 || t <= 0) throw std::invalid_argument("single pair needs both --a and --t");
        add_row(a, t);
        meta << "lemma a=" << a << " t=" << t;
    } else {
        if (amin < 1 || amax < amin || tmin < 2 || tmax < tmin || tstep < 1)
            throw std::invalid_argument("bad lemma grid ranges");
        for (i64 aa = amin; aa <= amax; ++aa)
            for (i64 tt = tmin; tt <= tmax; tt += tstep)
                if (aa < tt && std::gcd(aa, tt) == 1) add_row(aa, tt);
        meta << "lemma grid a=" << amin << ".." << amax << " t=" << tmin << ".." << tmax
             << " step=" << tstep;
    }
    emit(out, tb.render(format, {meta.str()}));
    return kOk;
}

int run_sweep(const std::vector<std::string>& gs, const std::vector<double>& thetas,
              const std::vector<double>& lambdas, const std::vector<std::string>& n_tokens,
              bool selberg, int threads, const std::string& format, const std::string& out) {
    std::vector<i64> Ns = expand_sizes(n_tokens);
    auto records = sweep_grid(gs, thetas, lambdas, Ns, selberg, threads);
    std::ostringstream meta;
    meta << "sweep g=" << join(gs) << " theta=" << join_reals(thetas)
         << " lambda=" << join_reals(lambdas) << " N=" << join(n_tokens)
         << " selberg=" << (selberg ? 1 : 0);
    if (format == "json")
        emit(out, write_json(records));
    else
        emit(out, write_csv(records, {meta.str()}));
    return kOk;
}

int run_selftest(int threads, const std::string& out) {
    auto results = run_all_criteria();
    bool all_ok = true;
    for (const auto& r : results) {
        std::fprintf(stderr, "criterion %2d %-28s %s (%s; %.2f s)\n", r.id, r.name.c_str(),
                     r.ok ? "PASS" : "FAIL", r.detail.c_str(), r.elapsed);
        all_ok = all_ok && r.ok;
    }
    emit(out, selftest_report(threads));
    return all_ok ? kOk : kChecksFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symlab: symmetry of sieve functions in short intervals, exactly"};
    // --h is a real option below, so help must not claim the -h shorthand.
    app.set_help_flag("--help", "Print help and exit");
    app.set_config("--config", "", "TOML-like config file; command-line flags win");
    app.require_subcommand(1);

    const std::vector<std::string> formats{"csv", "json"};

    // sieve
    std::string sv_g = "moebius", sv_format = "csv", sv_out = "-";
    i64 sv_Q = 0, sv_lo = 1, sv_hi = 0;
    auto* sieve = app.add_subcommand("sieve", "Dump a sieved segment of f = g*1");
    sieve->set_help_flag("--help", "Print help and exit");
    sieve->configurable();
    sieve->add_option("--g", sv_g, "Catalog transform label");
    sieve->add_option("--Q", sv_Q, "Support bound of g")->required()->check(CLI::PositiveNumber);
    sieve->add_option("--lo", sv_lo, "Segment start (default 1)");
    sieve->add_option("--hi", sv_hi, "Segment end")->required()->check(CLI::PositiveNumber);
    sieve->add_option("--format", sv_format, "Output format")->check(CLI::IsMember(formats));
    sieve->add_option("--out", sv_out, "Output path, - for stdout");

    // correlate
    std::string co_g = "moebius", co_format = "csv", co_out = "-";
    i64 co_Q = 0, co_N = 0, co_h = 0;
    bool co_naive = false;
    auto* correlate = app.add_subcommand("correlate", "Shifted autocorrelation table of f");
    correlate->set_help_flag("--help", "Print help and exit");
    correlate->configurable();
    correlate->add_option("--g", co_g, "Catalog transform label");
    correlate->add_option("--Q", co_Q, "Support bound of g")
        ->required()
        ->check(CLI::PositiveNumber);
    correlate->add_option("--N", co_N, "Window base")->required()->check(CLI::PositiveNumber);
    correlate->add_option("--h", co_h, "Window arm")->required()->check(CLI::PositiveNumber);
    correlate->add_flag("--naive", co_naive, "Use the direct quadratic path");
    correlate->add_option("--format", co_format, "Output format")->check(CLI::IsMember(formats));
    correlate->add_option("--out", co_out, "Output path, - for stdout");

    // symmetry
    std::string sy_g = "moebius", sy_format = "json", sy_out = "-";
    i64 sy_N = 0, sy_h = 0, sy_Q = 0;
    double sy_theta = 0, sy_lambda = 0;
    bool sy_selberg = false, sy_naive = false;
    auto* symmetry =
        app.add_subcommand("symmetry", "Symmetry integral, dispersion residual, bound terms");
    symmetry->set_help_flag("--help", "Print help and exit");
    symmetry->configurable();
    symmetry->add_option("--g", sy_g, "Catalog transform label");
    symmetry->add_option("--N", sy_N, "Window base")->required()->check(CLI::PositiveNumber);
    auto* sy_oh = symmetry->add_option("--h", sy_h, "Window arm")->check(CLI::PositiveNumber);
    auto* sy_oth = symmetry->add_option("--theta", sy_theta, "Width exponent, h = floor(N^theta)");
    sy_oh->excludes(sy_oth);
    sy_oth->excludes(sy_oh);
    auto* sy_oq = symmetry->add_option("--Q", sy_Q, "Support bound")->check(CLI::PositiveNumber);
    auto* sy_ola =
        symmetry->add_option("--lambda", sy_lambda, "Level exponent, Q = floor(N^lambda)");
    sy_oq->excludes(sy_ola);
    sy_ola->excludes(sy_oq);
    symmetry->add_flag("--selberg", sy_selberg, "Also compute the window-variance integral J_f");
    symmetry->add_flag("--naive", sy_naive, "Use the direct quadratic correlation path");
    symmetry->add_option("--format", sy_format, "Output format")->check(CLI::IsMember(formats));
    symmetry->add_option("--out", sy_out, "Output path, - for stdout");

    // expsum
    std::string ex_format = "csv", ex_out = "-";
    bool ex_ramanujan = false, ex_kloosterman = false, ex_weil = false;
    i64 ex_tmax = 50, ex_nmax = 50, ex_a = 1, ex_b = 1, ex_cmax = 100, ex_amax = 10, ex_bmax = 10;
    auto* expsum = app.add_subcommand("expsum", "Exponential-sum tables and bound checks");
    expsum->set_help_flag("--help", "Print help and exit");
    expsum->configurable();
    expsum->add_flag("--ramanujan", ex_ramanujan, "Direct vs closed-form Ramanujan sums");
    expsum->add_flag("--kloosterman", ex_kloosterman, "Kloosterman sums for fixed a, b");
    expsum->add_flag("--weil", ex_weil, "Divisor-bound envelope over a, b, c grid");
    expsum->add_option("--tmax", ex_tmax, "Ramanujan modulus limit")->check(CLI::PositiveNumber);
    expsum->add_option("--nmax", ex_nmax, "Ramanujan argument limit")
        ->check(CLI::NonNegativeNumber);
    expsum->add_option("--a", ex_a, "Kloosterman first argument")->check(CLI::NonNegativeNumber);
    expsum->add_option("--b", ex_b, "Kloosterman second argument")->check(CLI::NonNegativeNumber);
    expsum->add_option("--cmax", ex_cmax, "Modulus limit")->check(CLI::PositiveNumber);
    expsum->add_option("--amax", ex_amax, "Weil grid limit for a")->check(CLI::NonNegativeNumber);
    expsum->add_option("--bmax", ex_bmax, "Weil grid limit for b")->check(CLI::NonNegativeNumber);
    expsum->add_option("--format", ex_format, "Output format")->check(CLI::IsMember(formats));
    expsum->add_option("--out", ex_out, "Output path, - for stdout");

    // lemma
    std::string le_format = "csv", le_out = "-";
    i64 le_a = 0, le_t = 0, le_amin = 2, le_amax = 5, le_tmin = 10, le_tmax = 150, le_tstep = 1;
    auto* lemma = app.add_subcommand("lemma", "Residue-class decomposition statistics");
    lemma->set_help_flag("--help", "Print help and exit");
    lemma->configurable();
    lemma->add_option("--a", le_a, "Single pair: class modulus");
    lemma->add_option("--t", le_t, "Single pair: frequency modulus");
    lemma->add_option("--amin", le_amin, "Grid: smallest a");
    lemma->add_option("--amax", le_amax, "Grid: largest a");
    lemma->add_option("--tmin", le_tmin, "Grid: smallest t");
    lemma->add_option("--tmax", le_tmax, "Grid: largest t");
    lemma->add_option("--tstep", le_tstep, "Grid: step in t");
    lemma->add_option("--format", le_format, "Output format")->check(CLI::IsMember(formats));
    lemma->add_option("--out", le_out, "Output path, - for stdout");

    // sweep
    std::vector<std::string> sw_g{"moebius"}, sw_N;
    std::vector<double> sw_theta, sw_lambda;
    bool sw_selberg = false;
    int sw_threads = default_thread_count();
    std::string sw_format = "csv", sw_out = "-";
    auto* sweep = app.add_subcommand("sweep", "Experiment grid over (g, theta, lambda, N)");
    sweep->set_help_flag("--help", "Print help and exit");
    sweep->configurable();
    sweep->add_option("--g", sw_g, "Catalog transform labels");
    sweep->add_option("--theta", sw_theta, "Width exponents")->required();
    sweep->add_option("--lambda", sw_lambda, "Level exponents")->required();
    sweep->add_option("--N", sw_N, "Window bases; ranges like 1024..16384 double")->required();
    sweep->add_flag("--selberg", sw_selberg, "Also compute J_f per record");
    sweep->add_option("--threads", sw_threads, "Worker count (default SYMLAB_THREADS)")
        ->check(CLI::Range(1, 4096));
    sweep->add_option("--format", sw_format, "Output format")->check(CLI::IsMember(formats));
    sweep->add_option("--out", sw_out, "Output path, - for stdout");

    // selftest
    int st_threads = default_thread_count();
    std::string st_out = "-";
    auto* selftest =
        app.add_subcommand("selftest", "Run every release criterion and emit the canonical report");
    selftest->set_help_flag("--help", "Print help and exit");
    selftest->configurable();
    selftest->add_option("--threads", st_threads, "Worker count (default SYMLAB_THREADS)")
        ->check(CLI::Range(1, 4096));
    selftest->add_option("--out", st_out, "Report path, - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kValidation;
    }

    std::string params;
    try {
        if (sieve->parsed()) {
            params = "sieve g=" + sv_g + " Q=" + std::to_string(sv_Q) +
                     " lo=" + std::to_string(sv_lo) + " hi=" + std::to_string(sv_hi);
            return run_sieve(sv_g, sv_Q, sv_lo, sv_hi, sv_format, sv_out);
        }
        if (correlate->parsed()) {
            params = "correlate g=" + co_g + " Q=" + std::to_string(co_Q) +
                     " N=" + std::to_string(co_N) + " h=" + std::to_string(co_h);
            return run_correlate(co_g, co_Q, co_N, co_h, co_naive, co_format, co_out);
        }
        if (symmetry->parsed()) {
            params = "symmetry g=" + sy_g + " N=" + std::to_string(sy_N) +
                     (sy_oh->count() ? " h=" + std::to_string(sy_h)
                                     : " theta=" + fmt_g12(sy_theta)) +
                     (sy_oq->count() ? " Q=" + std::to_string(sy_Q)
                                     : " lambda=" + fmt_g12(sy_lambda));
            if (sy_oh->count() == 0 && sy_oth->count() == 0)
                throw std::invalid_argument("need --h or --theta");
            if (sy_oq->count() == 0 && sy_ola->count() == 0)
                throw std::invalid_argument("need --Q or --lambda");
            return run_symmetry(sy_g, sy_N, sy_oh->count() ? sy_h : 0, sy_theta,
                                sy_oq->count() ? sy_Q : 0, sy_lambda, sy_selberg, sy_naive,
                                sy_format, sy_out);
        }
        if (expsum->parsed()) {
            int modes = int(ex_ramanujan) + int(ex_kloosterman) + int(ex_weil);
            if (modes != 1)
                throw std::invalid_argument(
                    "pick exactly one of --ramanujan, --kloosterman, --weil");
            if (ex_ramanujan) {
                params = "expsum ramanujan tmax=" + std::to_string(ex_tmax) +
                         " nmax=" + std::to_string(ex_nmax);
                return run_expsum_ramanujan(ex_tmax, ex_nmax, ex_format, ex_out);
            }
            if (ex_kloosterman) {
                params = "expsum kloosterman a=" + std::to_string(ex_a) +
                         " b=" + std::to_string(ex_b) + " cmax=" + std::to_string(ex_cmax);
                return run_expsum_kloosterman(ex_a, ex_b, ex_cmax, ex_format, ex_out);
            }
            params = "expsum weil cmax=" + std::to_string(ex_cmax) +
                     " amax=" + std::to_string(ex_amax) + " bmax=" + std::to_string(ex_bmax);
            return run_expsum_weil(ex_cmax, ex_amax, ex_bmax, ex_format, ex_out);
        }
        if (lemma->parsed()) {
            params = "lemma a=" + std::to_string(le_a) + " t=" + std::to_string(le_t) +
                     " grid=" + std::to_string(le_amin) + ".." + std::to_string(le_amax) + "/" +
                     std::to_string(le_tmin) + ".." + std::to_string(le_tmax);
            return run_lemma(le_a, le_t, le_amin, le_amax, le_tmin, le_tmax, le_tstep, le_format,
                             le_out);
        }
        if (sweep->parsed()) {
            params = "sweep g=" + join(sw_g) + " theta=" + join_reals(sw_theta) +
                     " lambda=" + join_reals(sw_lambda) + " N=" + join(sw_N);
            return run_sweep(sw_g, sw_theta, sw_lambda, sw_N, sw_selberg, sw_threads, sw_format,
                             sw_out);
        }
        if (selftest->parsed()) {
            params = "selftest threads=" + std::to_string(st_threads);
            return run_selftest(st_threads, st_out);
        }
    } catch (const capacity_error& e) {
        std::fprintf(stderr, "capacity error: %s [%s]\n", e.what(), params.c_str());
        return kCapacity;
    } catch (const std::bad_alloc&) {
        std::fprintf(stderr, "capacity error: request exceeds available memory [%s]\n",
                     params.c_str());
        return kCapacity;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s [%s]\n", e.what(), params.c_str());
        return kValidation;
    }
    return kOk;
}
