// End-to-end checks of the command-line tool: exit codes, output artifacts,
// config handling, and thread-count invariance. The binary path comes from
// the SYMLAB_CLI environment variable, set by the test registration.
#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string cli_path() {
    const char* p = std::getenv("SYMLAB_CLI");
    return p ? p : "";
}

int run_cli(const std::string& args, const std::string& out_path = "/dev/null",
            const std::string& env_prefix = "") {
    std::string cmd = env_prefix + (env_prefix.empty() ? "" : " ") + cli_path() + " " + args +
                      " >" + out_path + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spit(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

} // namespace

TEST(Cli, BinaryConfigured) {
    ASSERT_FALSE(cli_path().empty()) << "SYMLAB_CLI environment variable not set";
}

TEST(Cli, HelpExitsCleanly) { EXPECT_EQ(run_cli("--help"), 0); }

TEST(Cli, MissingSubcommandIsValidationError) { EXPECT_EQ(run_cli(""), 1); }

TEST(Cli, MissingRequiredFlagIsValidationError) {
    EXPECT_EQ(run_cli("symmetry --N 1024"), 1);
    EXPECT_EQ(run_cli("correlate --g moebius --N 100"), 1);
}

TEST(Cli, UnknownTransformIsValidationError) {
    EXPECT_EQ(run_cli("sieve --g nosuch --Q 5 --hi 10"), 1);
}

TEST(Cli, BadSizeRangeIsValidationError) {
    EXPECT_EQ(run_cli("sweep --theta 0.45 --lambda 0.6 --N 50..10"), 1);
    EXPECT_EQ(run_cli("sweep --theta 0.45 --lambda 0.6 --N abc"), 1);
}

TEST(Cli, NonCoprimePairIsValidationError) { EXPECT_EQ(run_cli("lemma --a 4 --t 8"), 1); }

TEST(Cli, MissingConfigFileIsValidationError) {
    EXPECT_EQ(run_cli("--config /tmp/symlab_no_such_config.toml sweep --theta 0.45 "
                      "--lambda 0.6 --N 1024"),
              1);
}

TEST(Cli, SieveMatchesHandComputedDivisorCounts) {
    std::string out = "/tmp/symlab_cli_sieve.csv";
    ASSERT_EQ(run_cli("sieve --g ones --Q 4 --lo 1 --hi 6 --out " + out), 0);
    EXPECT_EQ(slurp(out),
              "# sieve g=ones Q=4 lo=1 hi=6\n"
              "n,f\n"
              "1,1\n2,2\n3,2\n4,3\n5,1\n6,3\n");
}

TEST(Cli, SymmetryFastAndNaivePathsEmitIdenticalJson) {
    std::string fast = "/tmp/symlab_cli_sym_fast.json";
    std::string naive = "/tmp/symlab_cli_sym_naive.json";
    ASSERT_EQ(run_cli("symmetry --g moebius --N 1024 --h 16 --Q 32 --selberg --out " + fast), 0);
    ASSERT_EQ(run_cli("symmetry --g moebius --N 1024 --h 16 --Q 32 --selberg --naive --out " +
                      naive),
              0);
    std::string a = slurp(fast);
    EXPECT_EQ(a, slurp(naive));
    EXPECT_NE(a.find("\"I_f\": "), std::string::npos);
    EXPECT_NE(a.find("\"residual_normalized\": "), std::string::npos);
}

TEST(Cli, SymmetryAcceptsExponentForm) {
    std::string by_hq = "/tmp/symlab_cli_sym_hq.json";
    std::string by_exp = "/tmp/symlab_cli_sym_exp.json";
    // 1024^0.45 floors to 22 and 1024^0.6 floors to 64.
    ASSERT_EQ(run_cli("symmetry --g moebius --N 1024 --h 22 --Q 64 --out " + by_hq), 0);
    ASSERT_EQ(run_cli("symmetry --g moebius --N 1024 --theta 0.45 --lambda 0.6 --out " + by_exp),
              0);
    EXPECT_EQ(slurp(by_hq), slurp(by_exp));
}

TEST(Cli, WeilGridSucceeds) { EXPECT_EQ(run_cli("expsum --weil --cmax 400"), 0); }

TEST(Cli, RamanujanTableSucceeds) {
    std::string out = "/tmp/symlab_cli_ram.csv";
    ASSERT_EQ(run_cli("expsum --ramanujan --tmax 12 --nmax 12 --out " + out), 0);
    EXPECT_NE(slurp(out).find("mismatches=0"), std::string::npos);
}

TEST(Cli, ExpsumNeedsExactlyOneMode) {
    EXPECT_EQ(run_cli("expsum"), 1);
    EXPECT_EQ(run_cli("expsum --weil --ramanujan"), 1);
}

TEST(Cli, LemmaGridEmitsCoprimePairsOnly) {
    std::string out = "/tmp/symlab_cli_lemma.csv";
    ASSERT_EQ(run_cli("lemma --amin 2 --amax 3 --tmin 4 --tmax 9 --out " + out), 0);
    // Coprime pairs with a < t: (2,5), (2,7), (2,9), (3,4), (3,5), (3,7), (3,8).
    std::string got = slurp(out);
    int rows = 0;
    for (char ch : got)
        if (ch == '\n') ++rows;
    EXPECT_EQ(rows, 2 + 7); // metadata + header + 7 pairs
    EXPECT_NE(got.find("\n2,5,"), std::string::npos);
    EXPECT_NE(got.find("\n3,8,"), std::string::npos);
    EXPECT_EQ(got.find("\n2,4,"), std::string::npos);
}

TEST(Cli, SweepOutputIsThreadCountInvariant) {
    std::string one = "/tmp/symlab_cli_sweep_1.csv";
    std::string three = "/tmp/symlab_cli_sweep_3.csv";
    std::string grid = "sweep --g moebius ones --theta 0.45 --lambda 0.6 --N 1024..4096 "
                       "--selberg --out ";
    ASSERT_EQ(run_cli(grid + one + " --threads 1"), 0);
    ASSERT_EQ(run_cli(grid + three, "/dev/null", "SYMLAB_THREADS=3"), 0);
    std::string a = slurp(one);
    EXPECT_EQ(a, slurp(three));
    EXPECT_NE(a.find("g_label,N,h,Q,theta,lambda,I_f,J_f,"), std::string::npos);
}

TEST(Cli, ConfigFileFillsFlagsAndFlagsWin) {
    std::string cfg = "/tmp/symlab_cli_cfg.toml";
    spit(cfg, "[sweep]\ntheta = 0.45\nlambda = \"0.6\"\nN = \"1024..2048\"\ng = \"ones\"\n");
    std::string from_cfg = "/tmp/symlab_cli_cfg_run.csv";
    std::string from_flags = "/tmp/symlab_cli_flag_run.csv";
    ASSERT_EQ(run_cli("--config " + cfg + " sweep --out " + from_cfg), 0);
    ASSERT_EQ(run_cli("sweep --g ones --theta 0.45 --lambda 0.6 --N 1024..2048 --out " +
                      from_flags),
              0);
    EXPECT_EQ(slurp(from_cfg), slurp(from_flags));

    // A flag on the command line beats the config value.
    std::string overridden = "/tmp/symlab_cli_cfg_override.csv";
    ASSERT_EQ(run_cli("--config " + cfg + " sweep --g moebius --out " + overridden), 0);
    std::string got = slurp(overridden);
    EXPECT_NE(got.find("moebius,1024,"), std::string::npos);
    EXPECT_EQ(got.find("ones,1024,"), std::string::npos);
}

TEST(Cli, SelftestReportIsThreadCountInvariant) {
    std::string a = "/tmp/symlab_cli_selftest_1.csv";
    std::string b = "/tmp/symlab_cli_selftest_3.csv";
    ASSERT_EQ(run_cli("selftest --threads 1 --out " + a), 0);
    ASSERT_EQ(run_cli("selftest --threads 3 --out " + b), 0);
    std::string one = slurp(a);
    EXPECT_FALSE(one.empty());
    EXPECT_EQ(one, slurp(b));
}
