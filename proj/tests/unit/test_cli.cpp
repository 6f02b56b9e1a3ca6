#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "ivr/cli.hpp"
#include "ivr/csv.hpp"
#include "ivr/dgp.hpp"
#include "ivr/estimate.hpp"
#include "support/golden.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = ivr::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("ivr_cli_" + std::to_string(::getpid()))) {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    [[nodiscard]] std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("cli analytic") {
    auto r = run({"analytic", "--model", "rw", "--sigma2", "1", "--s", "4", "--variant", "interpolated"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["vr"].get<double>() == doctest::Approx(2.75).epsilon(1e-14));
    CHECK(j["source"] == "analytic");
    CHECK(j["k"] == 4);

    r = run({"analytic", "--model", "arma11", "--alpha", "0.5", "--theta", "0.5", "--s", "4", "--variant", "original"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["vr"].get<double>() == doctest::Approx(0.796875).epsilon(1e-14));

    r = run({"analytic", "--model", "rw", "--s", "2", "--variant", "interpolated", "--phase", "1", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("source,model,alpha,theta,mu,sigma2,variant,s,k,short_var,long_var,vr,phase,long_var_phase\n", 0) == 0);
    CHECK(r.out.find(",1.5,1,1\n") != std::string::npos);
}

TEST_CASE("cli analytic: domain errors exit with 2 and one line") {
    auto r = run({"analytic", "--model", "ar1", "--alpha", "1.0", "--s", "4"});
    CHECK(r.code == 2);
    CHECK(r.err.find("alpha") != std::string::npos);
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
    CHECK(run({"analytic", "--model", "ar1", "--s", "4", "--phase", "1"}).code == 2);
    CHECK(run({"analytic", "--model", "nope", "--s", "4"}).code == 2);
    CHECK(run({"analytic", "--model", "rw", "--s", "4", "--bogus"}).code == 2);
    CHECK(run({"analytic", "--model", "rw"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli simulate: zero-noise drift line") {
    auto r = run({"simulate", "--model", "rw", "--mu", "1", "--sigma2", "0", "--s", "4", "--segments", "2", "--seed", "7"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "t,i,value\n1,1,1\n1,2,2\n1,3,3\n1,4,4\n2,1,5\n2,2,6\n2,3,7\n2,4,8\n");
    CHECK(run({"simulate", "--model", "rw", "--s", "4", "--segments", "1"}).code == 4);
}

TEST_CASE("cli: simulate -> file -> estimate matches the in-process pipeline") {
    TempDir tmp;
    const auto path = tmp.file("path.csv");
    REQUIRE(run({"simulate", "--model", "rw-arma11", "--alpha", "0.3", "--theta", "-0.6", "--mu", "0.2", "--s", "5",
                 "--segments", "400", "--seed", "11", "--out", path})
                .code == 0);
    auto r = run({"estimate", "--in", path, "--phase-report"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);

    const auto x = ivr::simulate(ivr::DgpSpec::rw_arma11(0.3, -0.6, 0.2), 5, 400, 11);
    CHECK(j["vr"].get<double>() == ivr::vr_hat(x, 5));
    CHECK(j["short_var"].get<double>() == ivr::diff_var(x, 1));
    CHECK(j["phase_vars"].size() == 5);
    CHECK(j["n"] == 2000);

    // Byte-identical reruns.
    const auto again = tmp.file("again.csv");
    REQUIRE(run({"simulate", "--model", "rw-arma11", "--alpha", "0.3", "--theta", "-0.6", "--mu", "0.2", "--s", "5",
                 "--segments", "400", "--seed", "11", "--out", again})
                .code == 0);
    CHECK(slurp(path) == slurp(again));
}

TEST_CASE("cli interpolate") {
    TempDir tmp;
    const auto in = tmp.file("bench.csv");
    {
        std::ofstream f(in);
        f << "value\n2\n6\n4\n";
    }
    auto r = run({"interpolate", "--in", in, "--s", "2", "--benchmarks"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "t,i,value\n2,1,4\n2,2,6\n3,1,5\n3,2,4\n");

    const auto series = tmp.file("series.csv");
    REQUIRE(run({"simulate", "--model", "ar1", "--alpha", "0.5", "--s", "3", "--segments", "6", "--out", series}).code == 0);
    r = run({"interpolate", "--in", series});
    REQUIRE(r.code == 0);
    std::istringstream back(r.out);
    const auto y = ivr::csv::read_series(back);
    CHECK(y.s() == 3);
    CHECK(y.origin_segment() == 2);
    CHECK(y.size() == 15);
    CHECK(run({"interpolate", "--in", series, "--s", "2"}).code == 2);
}

TEST_CASE("cli estimate: exit codes for data problems") {
    TempDir tmp;
    const auto flat = tmp.file("flat.csv");
    {
        std::ofstream f(flat);
        f << "t,i,value\n";
        for (int t = 1; t <= 5; ++t) {
            for (int i = 1; i <= 2; ++i) f << t << ',' << i << ",3\n";
        }
    }
    CHECK(run({"estimate", "--in", flat}).code == 4);
    CHECK(run({"estimate", "--in", tmp.file("missing.csv")}).code == 3);
    const auto garbage = tmp.file("garbage.csv");
    {
        std::ofstream f(garbage);
        f << "t,i,value\n1,1,x\n";
    }
    CHECK(run({"estimate", "--in", garbage}).code == 3);
    CHECK(run({"simulate", "--model", "rw", "--s", "2", "--segments", "3", "--out", tmp.file("no/such/dir.csv")}).code == 3);
}

TEST_CASE("cli table reproduces the reference grid layout") {
    TempDir tmp;
    const auto vy = tmp.file("vy.csv");
    const auto vx = tmp.file("vx.csv");
    REQUIRE(run({"table", "--family", "stationary", "--s", "4", "--out-vy", vy, "--out-vx", vx}).code == 0);
    for (auto [path, which] : {std::pair{vy, "vy"}, std::pair{vx, "vx"}}) {
        std::ifstream in(path);
        const auto got = ivr::csv::read_grid(in);
        const auto want = golden::load(1, which);
        REQUIRE(got.size() == want.size());
        for (std::size_t k = 0; k < got.size(); ++k) {
            CHECK(got[k].alpha == want[k].alpha);
            CHECK(got[k].theta == want[k].theta);
            CHECK(got[k].na == want[k].na);
            if (!want[k].na) CHECK(std::abs(got[k].value - want[k].value) < 0.01);
        }
    }
    const auto r = run({"table", "--family", "nonstationary", "--s", "10", "--decimals", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("\n0,0,6.7\n") != std::string::npos);
    CHECK(run({"table", "--family", "stationary", "--s", "3"}).code == 2);
}

TEST_CASE("cli surface") {
    const auto r = run({"surface", "--family", "nonstationary", "--variant", "interpolated", "--s", "2", "--grid-n", "5",
                        "--margin", "0.1"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    const auto rows = ivr::csv::read_grid(in);
    REQUIRE(rows.size() == 25);
    CHECK(rows.front().alpha == doctest::Approx(-0.9));
    for (const auto& row : rows) CHECK(row.value > 1.0);
    CHECK(run({"surface", "--family", "stationary", "--s", "2", "--grid-n", "2"}).code == 2);
}

TEST_CASE("cli mc") {
    const auto r = run({"mc", "--model", "rw-arma11", "--alpha", "0.5", "--theta", "0.5", "--s", "4", "--variant",
                        "original", "--reps", "100", "--segments", "10000", "--seed", "1"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["vr_analytic"].get<double>() == doctest::Approx(2.5179).epsilon(5e-5));
    CHECK(std::abs(j["z_score"].get<double>()) <= 4.0);
    CHECK(run({"mc", "--model", "rw", "--s", "4", "--reps", "1"}).code == 2);
}

TEST_CASE("cli config file presets flags; the command line wins") {
    TempDir tmp;
    const auto cfg = tmp.file("run.conf");
    {
        std::ofstream f(cfg);
        f << "# defaults\nmodel = arma11\nalpha = 0.5\ntheta = 0.5\ns = 4\nvariant = interpolated\n"
             "segments = 10   # used by simulate only\n";
    }
    auto r = run({"analytic", "--config", cfg});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["vr"].get<double>() == doctest::Approx(14247.0 / 6528.0).epsilon(1e-14));

    r = run({"analytic", "--config", cfg, "--variant", "original"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["vr"].get<double>() == doctest::Approx(0.796875).epsilon(1e-14));

    r = run({"--config=" + cfg, "analytic", "--theta", "0"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["theta"].get<double>() == 0.0);

    {
        std::ofstream f(tmp.file("bad.conf"));
        f << "colour = blue\n";
    }
    CHECK(run({"analytic", "--config", tmp.file("bad.conf"), "--model", "rw", "--s", "4"}).code == 2);
    CHECK(run({"analytic", "--config", tmp.file("none.conf"), "--model", "rw", "--s", "4"}).code == 3);
}
