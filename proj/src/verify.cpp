#include "phpos/verify.hpp"

#include <algorithm>

namespace phpos::verify {

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"specfun", "operators", "eigenfield", "hertz", "oracle", "all"};
    return names;
}

std::vector<OracleReport> run_suite(const std::string& name, const QuadratureConfig& cfg)
{
    if (name == "specfun") return specfun_suite(cfg);
    if (name == "operators") return operators_suite();
    if (name == "eigenfield") return eigenfield_suite();
    if (name == "hertz") return hertz_suite();
    if (name == "oracle") return oracle_suite(cfg);
    if (name != "all") throw DomainError("unknown suite '" + name + "'");
    std::vector<OracleReport> all;
    for (const auto& n : suite_names()) {
        if (n == "all") continue;
        auto part = run_suite(n, cfg);
        all.insert(all.end(), part.begin(), part.end());
    }
    std::stable_sort(all.begin(), all.end(),
                     [](const OracleReport& a, const OracleReport& b) { return a.check_name < b.check_name; });
    return all;
}

bool all_passed(const std::vector<OracleReport>& reports)
{
    return !reports.empty()
        && std::all_of(reports.begin(), reports.end(), [](const OracleReport& r) { return r.passed; });
}

} // namespace phpos::verify
