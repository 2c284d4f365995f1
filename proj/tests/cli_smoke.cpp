// Drives the installed CLI binary end to end: argv[1] is the binary path,
// argv[2] the data directory. Checks exit codes and output reproducibility.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

int failures = 0;

int run(const std::string& cmd) {
    int status = std::system(cmd.c_str());
    if (status < 0) return -1;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void expect_exit(const std::string& cmd, int want, const char* what) {
    int got = run(cmd);
    if (got != want) {
        std::cerr << "FAIL " << what << ": exit " << got << " want " << want << "\n  " << cmd
                  << "\n";
        ++failures;
    } else {
        std::cout << "ok " << what << "\n";
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: cli_smoke <legalsys-binary> <data-dir>\n";
        return 2;
    }
    std::string bin = argv[1];
    std::string data = argv[2];
    std::string tmp = "cli_smoke_tmp";
    if (std::system(("mkdir -p " + tmp).c_str()) != 0) return 2;

    expect_exit(bin + " search --in " + data + "/cherry.txt --json " + tmp + "/cherry.json", 0,
                "search cherry says yes");
    expect_exit(bin + " search --in " + data + "/bowtie.txt --json " + tmp + "/bowtie.json", 1,
                "search bowtie says no");
    expect_exit(bin + " search --in " + data + "/garbage.txt --json " + tmp + "/g.json", 64,
                "garbage input is a usage error");
    expect_exit(bin + " search --in " + data + "/does_not_exist.txt", 64,
                "missing file is a usage error");

    expect_exit(bin + " gen --model gnp --n 40 --p 0.2 --seed 3 --out " + tmp + "/g1.txt", 0,
                "gen gnp");
    expect_exit(bin + " gen --model gnp --n 40 --p 0.2 --seed 3 --out " + tmp + "/g2.txt", 0,
                "gen gnp again");
    if (slurp(tmp + "/g1.txt") != slurp(tmp + "/g2.txt")) {
        std::cerr << "FAIL gen output not reproducible\n";
        ++failures;
    }

    expect_exit(bin + " construct --in " + data + "/k4_minus_edge.txt --method dense --seed 1" +
                    " --verify exhaustive --transcript " + tmp + "/t.json --certificate " + tmp +
                    "/c.json",
                0, "dense construct on K4 minus an edge is legal");
    expect_exit(bin + " verify --graph " + data + "/k4_minus_edge.txt --transcript " + tmp +
                    "/t.json --mode exhaustive --json " + tmp + "/c2.json",
                0, "transcript replay verifies");
    if (slurp(tmp + "/c.json") != slurp(tmp + "/c2.json")) {
        std::cerr << "FAIL replayed certificate differs\n";
        ++failures;
    }

    expect_exit(bin + " construct --gen gnp --n 30 --p 1.0 --seed 2 --method dense" +
                    " --transcript " + tmp + "/tc.json --certificate " + tmp + "/cc.json",
                1, "dense construct on a complete graph is a definite no");

    expect_exit(bin + " gen --model gnp --n 120 --p 0.08 --seed 9 --out " + tmp + "/pr.txt", 0,
                "gen check input");
    (void)run(bin + " check-pseudorandom --in " + tmp + "/pr.txt --json " + tmp + "/pr.json");
    if (slurp(tmp + "/pr.json").find("pseudorandom-report/1") == std::string::npos) {
        std::cerr << "FAIL pseudorandom report missing schema\n";
        ++failures;
    }

    expect_exit(bin + " prob-verify --max-m 16 --coupling-sum 8 --out " + tmp + "/prob.csv", 0,
                "probability tables all hold");

    expect_exit(bin +
                    " experiment success-curve --n 40 --p-grid 0.5,1.0 --trials 4 --samples 100"
                    " --method colouring --seed 4 --out " +
                    tmp + "/curve1.csv",
                0, "success curve runs");
    expect_exit(bin +
                    " experiment success-curve --n 40 --p-grid 0.5,1.0 --trials 4 --samples 100"
                    " --method colouring --seed 4 --out " +
                    tmp + "/curve2.csv",
                0, "success curve reruns");
    if (slurp(tmp + "/curve1.csv") != slurp(tmp + "/curve2.csv")) {
        std::cerr << "FAIL success curve not byte-identical across reruns\n";
        ++failures;
    }

    expect_exit(bin + " experiment hitting-time --n 30 --trials 3 --samples 100 --seed 6 --out " +
                    tmp + "/ht.csv",
                0, "hitting time runs");

    expect_exit(bin + " nonsense", 64, "unknown subcommand is a usage error");

    if (failures == 0) {
        std::cout << "cli_smoke: all checks passed\n";
        return 0;
    }
    std::cerr << "cli_smoke: " << failures << " failures\n";
    return 1;
}
