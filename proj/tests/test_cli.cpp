#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "phpos/cli.hpp"
#include "phpos/types.hpp"

using namespace phpos;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "phpos");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(int(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> v;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);) v.push_back(l);
    return v;
}

std::string slurp(const fs::path& p)
{
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), {}};
}

fs::path scratch_dir()
{
    const fs::path d = fs::temp_directory_path() / "phpos_cli_test";
    fs::create_directories(d);
    return d;
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("number formatting round-trips")
    {
        CHECK(cli::format_number(0.1) == "0.10000000000000001");
        CHECK(std::stod(cli::format_number(pi)) == pi);
    }

    TEST_CASE("profiles csv")
    {
        const auto r = run({"profiles", "--family", "LP"});
        REQUIRE(r.code == 0);
        const auto l = lines(r.out);
        REQUIRE(l.size() == 722);
        CHECK(l[0] == "theta,family,P_rho,P_psi_regular,P_z,delta_psi_coeff");
        CHECK(l[1].rfind("0,LP,", 0) == 0);
        CHECK(l[361].find("nan") != std::string::npos); // theta = pi/2 carries only the delta part
    }

    TEST_CASE("usage errors exit with 2")
    {
        CHECK(run({"profiles", "--bogus"}).code == 2);
        CHECK(run({}).code == 2);
        CHECK(run({"profiles", "--family", "Debierre"}).code == 2);
        CHECK(run({"field", "--sigma", "3", "--grid=-1,1,3,-1,1,3"}).code == 2);
        CHECK(run({"field", "--grid=-1,1,1,-1,1,3"}).code == 2);
        CHECK(run({"verify", "nosuch"}).code == 2);
        CHECK(run({"verify", "specfun", "--epsilon-list", "0.1,0.2"}).code == 2);
        CHECK(run({"profiles", "--config", "/nonexistent/phpos.cfg"}).code == 2);
    }

    TEST_CASE("config file with flag override")
    {
        const fs::path cfg = scratch_dir() / "run.cfg";
        std::ofstream(cfg) << "family=RS\nsamples=5\ntheta-lo=0.1\n";
        auto r = run({"profiles", "--config", cfg.string()});
        REQUIRE(r.code == 0);
        auto l = lines(r.out);
        REQUIRE(l.size() == 6);
        CHECK(l[1].find(",RS,") != std::string::npos);
        r = run({"profiles", "--config", cfg.string(), "--samples", "3"});
        CHECK(lines(r.out).size() == 4);
        std::ofstream(cfg) << "famly=RS\n";
        CHECK(run({"profiles", "--config", cfg.string()}).code == 2);
    }

    TEST_CASE("field json, metadata and determinism")
    {
        const fs::path a = scratch_dir() / "a.json", b = scratch_dir() / "b.json";
        for (const auto& p : {a, b})
            REQUIRE(run({"field", "--family", "Debierre", "--sigma", "-1", "--grid=-1,1,5,-1,1,5", "--format", "json",
                         "--out", p.string()})
                        .code
                    == 0);
        CHECK(slurp(a) == slurp(b));
        const auto rows = nlohmann::json::parse(slurp(a));
        REQUIRE(rows.size() == 25);
        CHECK(rows[0].contains("comp_z_im"));
        CHECK(rows[12]["mask_flag"] == "origin");
        CHECK(rows[12]["comp_rho"].is_null());
        const auto meta = nlohmann::json::parse(slurp(a.string() + ".meta.json"));
        CHECK(meta["command"] == "field");
        CHECK(meta["delta_terms"].size() == 4);
    }

    TEST_CASE("unit scaling and clamp")
    {
        const auto base = lines(run({"profiles", "--family", "RS", "--samples", "3", "--theta-hi", "1"}).out);
        const auto scaled =
            lines(run({"profiles", "--family", "RS", "--samples", "3", "--theta-hi", "1", "--hbar-c", "4"}).out);
        auto pz = [](const std::string& l) {
            std::istringstream is(l);
            std::string c;
            for (int i = 0; i < 5; ++i) std::getline(is, c, ',');
            return std::stod(c);
        };
        CHECK(pz(scaled[2]) == doctest::Approx(2.0 * pz(base[2])));
        const auto clamped = lines(run({"field", "--family", "RS", "--grid=0.05,1,3,0.05,1,3", "--apply-clamp"}).out);
        for (std::size_t i = 1; i < clamped.size(); ++i) {
            std::istringstream is(clamped[i]);
            std::string c;
            for (int j = 0; j < 5; ++j) {
                std::getline(is, c, ',');
                if (j >= 2) CHECK(std::abs(std::stod(c)) <= 1.5);
            }
        }
    }

    TEST_CASE("hertz table")
    {
        const auto r = run({"hertz", "--rho-over-r", "0.6", "--n-max", "4", "--format", "json"});
        REQUIRE(r.code == 0);
        const auto rows = nlohmann::json::parse(r.out);
        REQUIRE(rows.size() == 8);
        CHECK(rows[0]["kind"] == "coefficient");
        CHECK(rows[2]["max_diff"].get<double>() < 1e-8);
        const auto& t0 = rows[5];
        CHECK(t0["t_over_r"].get<double>() == 0.0);
        CHECK(t0["Z_z_static"].get<double>()
              == doctest::Approx(-std::sqrt(pi) * t0["zeta_re"].get<double>()).epsilon(1e-13));
        CHECK(run({"hertz", "--rho-over-r", "0.9", "--t-over-r", "0.5"}).code == 2);
    }

    TEST_CASE("verify writes a report")
    {
        const fs::path p = scratch_dir() / "report.json";
        const auto r = run({"verify", "hertz", "--out", p.string()});
        CHECK(r.code == 0);
        const auto rep = nlohmann::json::parse(slurp(p));
        REQUIRE(rep.is_array());
        for (const auto& x : rep) {
            CHECK(x.contains("check_name"));
            CHECK(x.contains("max_rel_err"));
            CHECK(x.contains("tolerance"));
            CHECK(x["passed"] == true);
        }
    }
}
