#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cplxinfo/distributions.hpp"
#include "subprocess.hpp"

using json = nlohmann::json;
using doctest::Approx;

namespace {

void write_sample_file(const std::string& path, const cplxinfo::SampleSet& s) {
    std::ofstream out(path);
    out.precision(17);
    for (double v : s.values) out << v << "\n";
}

} // namespace

TEST_CASE("cli ce") {
    const auto r = run_cli(R"(ce --dist '{"kind":"uniform","a":0,"b":1}' --beta 3 --json)");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["value"].get<double>() == Approx(1.0).epsilon(1e-9));
    CHECK(j["method"] == "quadrature");
    CHECK(j["beta"].get<double>() == 3.0);

    SUBCASE("monte-carlo path echoes its sampling config") {
        const auto mc = run_cli("ce --dist 'normal(0,1)' --beta 1 --method mc "
                                "--samples 2000 --seed 11 --json");
        REQUIRE(mc.exit_code == 0);
        const json jm = json::parse(mc.out);
        CHECK(jm["method"] == "monte-carlo");
        CHECK(jm["samples"].get<int>() == 2000);
        CHECK(jm["seed"].get<int>() == 11);
        CHECK(jm["stderr"].get<double>() > 0.0);
    }
    SUBCASE("degenerate-ce flag") {
        const auto one = run_cli(R"(ce --dist '{"kind":"pmf","atoms":[[0,1]]}' --beta 2 --json)");
        CHECK(json::parse(one.out)["value"].get<double>() == 1.0);
        const auto zero = run_cli(
            R"(ce --dist '{"kind":"pmf","atoms":[[0,1]]}' --beta 2 --degenerate-ce zero --json)");
        CHECK(json::parse(zero.out)["value"].get<double>() == 0.0);
    }
}

TEST_CASE("cli pair commands") {
    const auto r = run_cli("tv --p 'bern(0.5)' --q 'bern(0.5)' --json");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out)["value"].get<double>() == 0.0);

    const auto cd = run_cli("cd --p 'uniform(0,2)' --q 'uniform(0,1)' --beta 1 --json");
    REQUIRE(cd.exit_code == 0);
    const json jcd = json::parse(cd.out);
    CHECK(jcd["value"].get<double>() == Approx(0.13058424).epsilon(1e-6));
    CHECK(jcd["amplitude_modulus"].get<double>() == Approx(std::cos(0.5)).epsilon(1e-8));
    CHECK(jcd["infinite"] == false);

    const auto cm = run_cli("cm --p 'bern(0.5)' --q 'bern(0.3)' --beta 0 --json");
    CHECK(json::parse(cm.out)["value"].get<double>() == Approx(0.2).epsilon(1e-12));
}

TEST_CASE("cli exit codes") {
    CHECK(run_cli("no-such-command").exit_code == 1);
    CHECK(run_cli("ce --beta 1").exit_code == 1);          // missing required --dist
    CHECK(run_cli("ce --dist 'bern(2)' --beta 1").exit_code == 2); // bad data
    CHECK(run_cli("ce --dist 'bern(0.5)' --beta -1").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("cli human and json modes report the same numbers") {
    const auto h = run_cli("ce --dist 'normal(0,1)' --beta 1");
    const auto j = run_cli("ce --dist 'normal(0,1)' --beta 1 --json");
    REQUIRE(h.exit_code == 0);
    REQUIRE(j.exit_code == 0);
    const double jv = json::parse(j.out)["value"].get<double>();
    // fish the value line out of the aligned text
    std::istringstream lines(h.out);
    std::string line;
    double hv = -1;
    while (std::getline(lines, line))
        if (line.rfind("value", 0) == 0) hv = std::stod(line.substr(5));
    CHECK(hv == jv);
}

TEST_CASE("cli runs are byte-reproducible") {
    const std::string cmd = "ce --dist 'normal(0,1)' --beta 2 --method mc --samples 500 --seed 3 --json";
    const auto a = run_cli(cmd);
    const auto b = run_cli(cmd);
    CHECK(a.out == b.out);
    CHECK(a.exit_code == b.exit_code);
}

TEST_CASE("cli twosample") {
    const std::string xp = "/tmp/cplxinfo_cli_x.txt";
    const std::string yp = "/tmp/cplxinfo_cli_y.txt";
    write_sample_file(xp, cplxinfo::draw_samples(cplxinfo::Density(cplxinfo::Uniform{0, 1}), 30, 1));
    auto shifted = cplxinfo::draw_samples(cplxinfo::Density(cplxinfo::Uniform{0, 1}), 30, 2);
    for (double& v : shifted.values) v += 5.0;
    write_sample_file(yp, shifted);

    SUBCASE("disjoint samples exit 3 and dump the null") {
        const std::string null_path = "/tmp/cplxinfo_cli_null.csv";
        const auto r = run_cli("twosample --x " + xp + " --y " + yp +
                               " --permutations 100 --seed 4 --null-out " + null_path + " --json");
        CHECK(r.exit_code == 3);
        const json j = json::parse(r.out);
        CHECK(j["reject"] == true);
        CHECK(j["p_value"].get<double>() <= 0.01);
        std::ifstream null_file(null_path);
        REQUIRE(null_file.good());
        std::string line;
        int rows = 0;
        while (std::getline(null_file, line))
            if (!line.empty()) ++rows;
        CHECK(rows == 101); // header + K
        std::remove(null_path.c_str());
    }
    SUBCASE("identical files exit 0") {
        const auto r = run_cli("twosample --x " + xp + " --y " + xp +
                               " --permutations 100 --seed 4 --json");
        CHECK(r.exit_code == 0);
        CHECK(json::parse(r.out)["p_value"].get<double>() == 1.0);
    }
    SUBCASE("bad sample file exits 2") {
        CHECK(run_cli("twosample --x /no/such.txt --y " + yp).exit_code == 2);
    }
    std::remove(xp.c_str());
    std::remove(yp.c_str());
}

TEST_CASE("cli table2 smoke") {
    const auto r = run_cli("table2 --samples 100 --seed 2");
    REQUIRE(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int rows = 0;
    bool header_seen = false;
    while (std::getline(lines, line)) {
        if (line.rfind('#', 0) == 0) continue;
        if (line.rfind("beta,", 0) == 0) {
            header_seen = true;
            continue;
        }
        if (!line.empty()) ++rows;
    }
    CHECK(header_seen);
    CHECK(rows == 42);
}

TEST_CASE("cli table2 landmark cells at the default seed") {
    const auto r = run_cli("table2 --samples 1000");
    REQUIRE(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string line;
    double wide = -1, narrow = -1, mid = -1;
    while (std::getline(lines, line)) {
        double beta, sigma, mc, se, quad;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf", &beta, &sigma, &mc, &se, &quad) != 5)
            continue;
        if (beta == 0.01 && sigma == 100) wide = mc;
        if (beta == 10 && sigma == 0.01) narrow = mc;
        if (beta == 10 && sigma == 1) mid = mc;
    }
    CHECK(wide >= 0.9999999);
    CHECK(std::abs(narrow - 0.07081759) < 0.03);
    CHECK(std::abs(mid - 0.5282781) < 0.05);
}
