#pragma once

// Property and oracle suites behind `verify`. Every suite returns one
// OracleReport per check; `run_suite("all")` merges them sorted by name.

#include <string>
#include <vector>

#include "phpos/oracle.hpp"

namespace phpos::verify {

using oracle::OracleReport;
using oracle::QuadratureConfig;

std::vector<OracleReport> specfun_suite(const QuadratureConfig& cfg = {});
std::vector<OracleReport> operators_suite();
std::vector<OracleReport> eigenfield_suite();
std::vector<OracleReport> hertz_suite();
std::vector<OracleReport> oracle_suite(const QuadratureConfig& cfg = {});

const std::vector<std::string>& suite_names(); // including "all"

// Throws DomainError for an unknown suite name.
std::vector<OracleReport> run_suite(const std::string& name, const QuadratureConfig& cfg = {});

bool all_passed(const std::vector<OracleReport>& reports);

} // namespace phpos::verify
