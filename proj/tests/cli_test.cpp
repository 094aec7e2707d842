#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef LH_CLI_PATH
#error "LH_CLI_PATH must point at the latticehull binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() / "latticehull-cli-test";
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const TempDir& tmp, const std::string& args) {
    const std::string out_file = tmp.file("stdout.txt");
    const std::string err_file = tmp.file("stderr.txt");
    const std::string cmd =
        std::string(LH_CLI_PATH) + " " + args + " >" + out_file + " 2>" + err_file;
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = status == -1 ? -1 : WEXITSTATUS(status);
    r.out = slurp(out_file);
    r.err = slurp(err_file);
    return r;
}

}  // namespace

TEST_CASE("cli: version and help") {
    TempDir tmp;
    CHECK(run_cli(tmp, "--version").exit_code == 0);
    const RunResult help = run_cli(tmp, "--help");
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("width-diff") != std::string::npos);
}

TEST_CASE("cli: usage errors exit with 2") {
    TempDir tmp;
    CHECK(run_cli(tmp, "width-diff --no-such-flag 1").exit_code == 2);
    CHECK(run_cli(tmp, "width-diff --lambda -3").exit_code == 2);
    CHECK(run_cli(tmp, "width-diff --body no/such/file.poly --lambda 2 --n-lattices 50").exit_code == 2);
    // cap-integral below the lambda threshold names the precondition
    const RunResult low = run_cli(
        tmp, "width-diff --body disk --lambda 1.5 --estimator cap-integral --n-lattices 50");
    CHECK(low.exit_code == 2);
    CHECK(low.err.find("lambda") != std::string::npos);
}

TEST_CASE("cli: numeric failures exit with 1") {
    TempDir tmp;
    // the enumeration guard trips on an absurdly large candidate box
    const RunResult r =
        run_cli(tmp, "width-diff --body disk-r5000 --lambda 1 --n-lattices 2 --n-dirs 16");
    CHECK(r.exit_code == 1);
    CHECK(!r.err.empty());
}

TEST_CASE("cli: width-diff emits the stable schema") {
    TempDir tmp;
    const RunResult r = run_cli(
        tmp, "width-diff --body disk --lambda 8 --n-lattices 100 --n-dirs 64 --seed 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("body,functional,lambda,estimator,value,std_error,n_samples,n_dirs,seed,flags",
                      0) == 0);
    CHECK(r.out.find("disk,width-diff,8,direct,") != std::string::npos);
    CHECK(r.err.empty());
}

TEST_CASE("cli: serial reruns are byte-identical; workers change nothing") {
    TempDir tmp;
    const std::string a = tmp.file("a.csv");
    const std::string b = tmp.file("b.csv");
    const std::string c = tmp.file("c.csv");
    const std::string base =
        "width-diff --body disk --lambda 6 --n-lattices 120 --n-dirs 64 --seed 99 --threads ";
    CHECK(run_cli(tmp, base + "1 --out " + a).exit_code == 0);
    CHECK(run_cli(tmp, base + "1 --out " + b).exit_code == 0);
    CHECK(run_cli(tmp, base + "8 --out " + c).exit_code == 0);
    const std::string ca = slurp(a);
    CHECK(!ca.empty());
    CHECK(ca == slurp(b));
    CHECK(ca == slurp(c));  // per-sample buffers: identical for any worker count
    CHECK(std::filesystem::exists(a + ".manifest.json"));
}

TEST_CASE("cli: seed comes from the environment when not given") {
    TempDir tmp;
    const std::string a = tmp.file("env.csv");
    const std::string cmd = "LATTICEHULL_SEED=1234 " + std::string(LH_CLI_PATH) +
                            " count-check --body disk --n-lattices 64 --out " + a + " >/dev/null 2>&1";
    REQUIRE(std::system(cmd.c_str()) == 0);
    const std::string content = slurp(a);
    CHECK(content.find(",1234,") != std::string::npos);
}

TEST_CASE("cli: scaling writes rows, summary and svg") {
    TempDir tmp;
    const std::string csv = tmp.file("scaling.csv");
    const std::string svg = tmp.file("scaling.svg");
    const RunResult r = run_cli(tmp,
                                "scaling --body disk --lambda-grid 4,8,16 --n-lattices 200 "
                                "--n-dirs 64 --seed 3 --out " +
                                    csv + " --svg " + svg);
    CHECK(r.exit_code == 0);
    const std::string content = slurp(csv);
    CHECK(content.find("disk,width-diff,4,") != std::string::npos);
    CHECK(content.find("disk,width-diff,16,") != std::string::npos);
    CHECK(content.find("# fit exponent=") != std::string::npos);
    const std::string plot = slurp(svg);
    CHECK(plot.find("<svg") != std::string::npos);
    CHECK(plot.find("<path") != std::string::npos);

    // malformed grid is a usage error
    CHECK(run_cli(tmp, "scaling --body disk --lambda-grid 8,8,16 --n-lattices 200").exit_code == 2);
}

TEST_CASE("cli: config file supplies defaults, flags override") {
    TempDir tmp;
    const std::string cfg = tmp.file("study.cfg");
    {
        std::ofstream out(cfg);
        out << "# width-diff study defaults\n"
            << "body=disk\n"
            << "lambda=8\n"
            << "n-lattices=100\n"
            << "n-dirs=64\n"
            << "seed=7\n";
    }
    const std::string a = tmp.file("from-config.csv");
    const RunResult r1 = run_cli(tmp, "width-diff --config " + cfg + " --out " + a);
    CHECK(r1.exit_code == 0);
    CHECK(slurp(a).find("disk,width-diff,8,") != std::string::npos);

    // flag overrides the config value
    const std::string b = tmp.file("override.csv");
    const RunResult r2 = run_cli(tmp, "width-diff --config " + cfg + " --lambda 4 --out " + b);
    CHECK(r2.exit_code == 0);
    CHECK(slurp(b).find("disk,width-diff,4,") != std::string::npos);
}

TEST_CASE("cli: tau reports raw and adjusted constants") {
    TempDir tmp;
    const RunResult r = run_cli(tmp, "tau --body disk");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("tau-raw") != std::string::npos);
    CHECK(r.out.find("tau-adjusted") != std::string::npos);
    CHECK(r.out.find("1.7071067811865") != std::string::npos);
    CHECK(r.out.find("2.1338834764831") != std::string::npos);  // 1.25 * raw
    CHECK(run_cli(tmp, "tau --body disk --grid-size 32").exit_code == 2);
}

TEST_CASE("cli: gamma and count-check wrappers") {
    TempDir tmp;
    const RunResult g = run_cli(tmp, "gamma --body square --n-lattices 100 --n-dirs-per-cone 12 --n-t 16 --seed 2");
    CHECK(g.exit_code == 0);
    CHECK(g.out.find("square,gamma,") != std::string::npos);
    CHECK(run_cli(tmp, "gamma --body disk --n-lattices 100").exit_code == 2);

    const RunResult c = run_cli(tmp, "count-check --body disk-r2 --n-lattices 400 --seed 6");
    CHECK(c.exit_code == 0);
    CHECK(c.out.find("disk-r2,lattice-count,") != std::string::npos);
    CHECK(c.out.find("# target volume=12.56637") != std::string::npos);
}

TEST_CASE("cli: polygon file bodies work end to end") {
    TempDir tmp;
    const std::string poly = tmp.file("tri.poly");
    {
        std::ofstream out(poly);
        out << "0 0\n5 0\n0 5\n";
    }
    const RunResult r = run_cli(tmp, "count-check --body " + poly + " --n-lattices 500 --seed 8");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("# target volume=12.5") != std::string::npos);
}
