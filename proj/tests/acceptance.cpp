// Acceptance run: drives the phpos executable, reads its JSON reports and
// CSV tables, and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const double pi = 3.14159265358979323846;

struct Run {
    int code = -1;
    double seconds = 0.0;
};

fs::path work_dir() { return fs::current_path() / "acceptance_out"; }

Run phpos(const std::string& args, const std::string& log)
{
    const std::string cmd = std::string("\"") + PHPOS_EXE + "\" " + args + " > \"" + (work_dir() / log).string()
                          + "\" 2>&1";
    const auto t0 = std::chrono::steady_clock::now();
    const int status = std::system(cmd.c_str());
    Run r;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json read_json(const fs::path& p)
{
    std::ifstream f(p);
    if (!f) return json::array();
    try {
        return json::parse(f);
    } catch (const json::exception&) {
        return json::array();
    }
}

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    int col(const std::string& name) const
    {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return int(i);
        return -1;
    }
    double num(std::size_t row, const std::string& name) const { return std::stod(rows[row][std::size_t(col(name))]); }
};

std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> out;
    std::istringstream is(line);
    for (std::string c; std::getline(is, c, ',');) out.push_back(c);
    return out;
}

Csv read_csv(const fs::path& p)
{
    Csv c;
    std::ifstream f(p);
    std::string line;
    if (std::getline(f, line)) c.header = split(line);
    while (std::getline(f, line)) c.rows.push_back(split(line));
    return c;
}

struct Verdict {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

// Every check tagged with the criterion must exist and pass.
void require_checks(Verdict& v, const json& reports, int criterion, int& count)
{
    for (const auto& r : reports) {
        if (r.value("criterion", 0) != criterion) continue;
        ++count;
        char buf[200];
        std::snprintf(buf, sizeof buf, "%s failed (rel %.2e, tol %.1e)", r["check_name"].get<std::string>().c_str(),
                      r["max_rel_err"].get<double>(), r["tolerance"].get<double>());
        v.require(r["passed"].get<bool>(), buf);
    }
}

bool close(double a, double b, double tol)
{
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

void profile_structure(Verdict& v, const Csv& c, const std::string& fam)
{
    const std::size_t n = c.rows.size();
    if (n != 721) {
        v.require(false, fam + " profile table has " + std::to_string(n) + " rows");
        return;
    }
    const bool lp = fam == "LP";
    bool sym = true;
    for (std::size_t i = 0; i < n / 2; ++i) {
        const std::size_t j = n - 1 - i;
        sym &= close(c.num(i, "theta") + c.num(j, "theta"), pi, 1e-14);
        sym &= close(c.num(j, "P_rho"), -c.num(i, "P_rho"), 1e-12);
        sym &= close(c.num(j, "P_z"), c.num(i, "P_z"), 1e-12);
        if (!lp) sym &= close(c.num(j, "P_psi_regular"), c.num(i, "P_psi_regular"), 1e-12);
    }
    v.require(sym, fam + " profiles violate the parity about pi/2");
    const std::size_t mid = n / 2;
    v.require(std::isnan(c.num(mid, "P_rho")), fam + " regular part not withheld at pi/2");
    v.require(c.num(mid - 1, "P_rho") * c.num(mid + 1, "P_rho") < 0, fam + " P_rho does not change sign at pi/2");
    const std::string div = lp ? "P_rho" : "P_psi_regular";
    v.require(std::abs(c.num(mid - 1, div)) > 10 * std::abs(c.num(mid - 40, div))
                  && std::abs(c.num(mid + 1, div)) > 10 * std::abs(c.num(mid + 40, div)),
              fam + " " + div + " does not diverge towards pi/2 from both sides");
    if (lp) {
        v.require(close(c.num(0, "P_z"), -std::sqrt(pi) / 2, 1e-14) && close(c.num(n - 1, "P_z"), -std::sqrt(pi) / 2, 1e-14),
                  "LP P_z end values differ from -sqrt(pi)/2");
        bool delta = true;
        for (std::size_t i = 0; i < n; ++i) delta &= close(c.num(i, "delta_psi_coeff"), -std::sqrt(pi), 1e-15);
        v.require(delta, "LP delta coefficient column not constant -sqrt(pi)");
    }
}

void field_structure(Verdict& v, const Csv& c)
{
    const int nx = 201;
    if (c.rows.size() != std::size_t(nx) * nx) {
        v.require(false, "field table has " + std::to_string(c.rows.size()) + " rows");
        return;
    }
    bool sym = true;
    int valid = 0;
    const int mask = c.col("mask_flag");
    for (int iz = 0; iz < nx; ++iz)
        for (int ix = 0; ix < nx; ++ix) {
            const std::size_t a = std::size_t(iz * nx + ix), b = std::size_t(iz * nx + nx - 1 - ix);
            sym &= c.rows[a][std::size_t(mask)] == c.rows[b][std::size_t(mask)];
            if (c.rows[a][std::size_t(mask)] != "valid") continue;
            ++valid;
            for (const char* k : {"comp_rho", "comp_psi", "comp_z"}) sym &= close(c.num(a, k), c.num(b, k), 1e-12);
        }
    v.require(sym, "RS field not symmetric about the z axis");
    v.require(valid > 30000, "too few valid field samples");
}

} // namespace

int main()
{
    fs::create_directories(work_dir());
    std::map<std::string, Run> runs;
    std::map<std::string, json> reports;
    for (const char* s : {"specfun", "operators", "eigenfield", "hertz", "oracle"}) {
        const std::string out = std::string("report_") + s + ".json";
        runs[s] = phpos(std::string("verify ") + s + " --out \"" + (work_dir() / out).string() + "\"",
                        std::string("verify_") + s + ".log");
        reports[s] = read_json(work_dir() / out);
    }
    auto merged = [&](std::initializer_list<const char*> names) {
        json all = json::array();
        for (const char* n : names)
            for (const auto& r : reports[n]) all.push_back(r);
        return all;
    };

    std::vector<Verdict> v(10);
    std::vector<std::string> title(10);
    int count = 0;

    title[1] = "special-function identity suite";
    count = 0;
    require_checks(v[1], reports["specfun"], 1, count);
    for (const char* id : {"EK2F1.K", "EK2F1.E", "GaK", "2F1id", "2F1tr1", "2F1tr2", "2F1ap1", "gammar", "JKintbe0"}) {
        bool found = false;
        for (const auto& r : reports["specfun"])
            found |= r["check_name"] == std::string("specfun.") + id && r["criterion"] == 1;
        v[1].require(found, std::string("identity ") + id + " missing");
    }
    v[1].require(runs["specfun"].seconds < 30.0, "runtime above 30 s");

    title[2] = "position operator suite";
    count = 0;
    require_checks(v[2], reports["operators"], 2, count);
    v[2].require(count >= 4, "operator checks missing");

    title[3] = "closed forms against finite differences and the damped Fourier oracle";
    count = 0;
    require_checks(v[3], merged({"eigenfield", "oracle"}), 3, count);
    v[3].require(count == 4, "expected 4 certification checks, found " + std::to_string(count));
    v[3].require(runs["eigenfield"].seconds + runs["oracle"].seconds < 300.0, "runtime above 5 min");

    title[4] = "plane and axis asymptotics";
    count = 0;
    require_checks(v[4], reports["eigenfield"], 4, count);
    v[4].require(count == 3, "asymptotic checks missing");

    title[5] = "rotated frame, parity and sign resolution";
    count = 0;
    require_checks(v[5], merged({"eigenfield", "oracle"}), 5, count);
    v[5].require(count == 3, "rotated-frame checks missing");

    title[6] = "normalization integral, overlaps and orthogonality";
    count = 0;
    require_checks(v[6], merged({"eigenfield", "oracle"}), 6, count);
    v[6].require(count == 4, "normalization checks missing");

    title[7] = "Hertz superpotential series";
    count = 0;
    require_checks(v[7], reports["hertz"], 7, count);
    v[7].require(count == 4, "Hertz checks missing");

    title[8] = "figure data structure from the CLI";
    count = 0;
    require_checks(v[8], reports["eigenfield"], 8, count);
    for (const char* fam : {"LP", "RS"}) {
        const fs::path p = work_dir() / (std::string("profiles_") + fam + ".csv");
        const Run r = phpos(std::string("profiles --family ") + fam + " --out \"" + p.string() + "\"",
                            std::string("profiles_") + fam + ".log");
        v[8].require(r.code == 0, std::string("profiles ") + fam + " exit " + std::to_string(r.code));
        profile_structure(v[8], read_csv(p), fam);
    }
    {
        const fs::path p = work_dir() / "field_RS.csv";
        const Run r = phpos("field --family RS --sigma 1 --grid=-2,2,201,-2,2,201 --out \"" + p.string() + "\"",
                            "field_RS.log");
        v[8].require(r.code == 0, "field exit " + std::to_string(r.code));
        field_structure(v[8], read_csv(p));
    }

    title[9] = "full verify run";
    runs["all"] = phpos("verify all --out \"" + (work_dir() / "report_all.json").string() + "\"", "verify_all.log");
    v[9].require(runs["all"].code == 0, "exit code " + std::to_string(runs["all"].code));
    v[9].require(runs["all"].seconds < 600.0, "runtime above 10 min");

    bool all = true;
    for (int c = 1; c <= 9; ++c) {
        char t[64] = "";
        if (c == 1) std::snprintf(t, sizeof t, " [%.1f s]", runs["specfun"].seconds);
        if (c == 3) std::snprintf(t, sizeof t, " [%.1f s]", runs["eigenfield"].seconds + runs["oracle"].seconds);
        if (c == 9) std::snprintf(t, sizeof t, " [%.1f s]", runs["all"].seconds);
        std::printf("criterion %d %s: %s%s%s%s\n", c, v[c].pass ? "PASS" : "FAIL", title[c].c_str(), t,
                    v[c].detail.empty() ? "" : ": ", v[c].detail.c_str());
        all &= v[c].pass;
    }
    return all ? 0 : 1;
}
