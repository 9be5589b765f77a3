// Black-box checks of the command-line contract: exit codes 0 (pass),
// 1 (verification failure), 2 (usage/config), 3 (internal); byte-stable
// table output against a golden file. argv[1] = CLI binary, argv[2] =
// golden directory.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

int g_failures = 0;
std::string g_cli;

int run(const std::string& args) {
    const std::string cmd = g_cli + " " + args;
    const int raw = std::system(cmd.c_str());
    if (raw == -1 || !WIFEXITED(raw)) return -1;
    return WEXITSTATUS(raw);
}

void expect_exit(const std::string& args, int want) {
    const int got = run(args);
    if (got != want) {
        std::fprintf(stderr, "FAIL: '%s' exited %d, want %d\n", args.c_str(),
                     got, want);
        ++g_failures;
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in.good()) {
        std::fprintf(stderr, "FAIL: cannot read %s\n", path.c_str());
        ++g_failures;
        return {};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: %s <cli-binary> <golden-dir>\n", argv[0]);
        return 2;
    }
    g_cli = argv[1];
    const std::string golden_dir = argv[2];
    const std::string quiet = " >/dev/null 2>&1";

    // clean verification passes
    expect_exit("verify theorem1 --n-max 3 --k-max 3" + quiet, 0);
    expect_exit("verify norms --n-max 3 --k-max 3 --threads 2" + quiet, 0);
    expect_exit("density --mu 0 --t 1 --x 0.5 --y 0.5" + quiet, 0);
    expect_exit("eigen --mu 0 --k-max 3" + quiet, 0);
    expect_exit("density-grid --mu 1 --t 0.5 --nx 3 --ny 3" + quiet, 0);

    // usage and configuration errors
    expect_exit("verify no-such-suite" + quiet, 2);
    expect_exit("verify theorem1 --n-max 11" + quiet, 2);    // guard
    expect_exit("verify theorem1 --n-max 0" + quiet, 2);
    expect_exit("verify theorem1 --format yaml" + quiet, 2);
    expect_exit("bogus-subcommand" + quiet, 2);
    expect_exit("density --mu 0 --x 1.5" + quiet, 2);        // outside (0,1)
    expect_exit("verify" + quiet, 2);                        // missing suite
    expect_exit("table theorem1 --n-max 2 --out /proc/nope/x.csv" + quiet, 2);

    // a genuine verification failure (injected) must exit 1, not 2 or 3
    expect_exit("verify theorem1 --n-max 2 --k-max 2" + quiet, 0);
    {
        const std::string cmd = "WRON_FAULT_INJECT=1 " + g_cli +
                                " verify theorem1 --n-max 2 --k-max 2" + quiet;
        const int raw = std::system(cmd.c_str());
        const int got = (raw == -1 || !WIFEXITED(raw)) ? -1 : WEXITSTATUS(raw);
        if (got != 1) {
            std::fprintf(stderr, "FAIL: fault-injected verify exited %d, want 1\n",
                         got);
            ++g_failures;
        }
    }

    // table output is byte-stable
    const std::string tmp = "cli_table_out.csv";
    expect_exit("table theorem1 --n-max 3 --k-max 4 --out " + tmp + quiet, 0);
    const std::string got = slurp(tmp);
    const std::string want = slurp(golden_dir + "/theorem1_n3_k4.csv");
    std::remove(tmp.c_str());
    if (!want.empty() && got != want) {
        std::fprintf(stderr, "FAIL: table output differs from golden bytes\n");
        ++g_failures;
    }

    if (g_failures == 0) std::printf("cli exit-code contract: all checks passed\n");
    return g_failures == 0 ? 0 : 1;
}
