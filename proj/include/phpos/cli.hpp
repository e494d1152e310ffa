#pragma once

// The `phpos` command line: profiles, field, verify and hertz subcommands,
// flat key=value configuration files and CSV/JSON table output.

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace phpos::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_usage = 2;

// NaN doubles are written as "nan" in CSV and null in JSON.
using Cell = std::variant<double, long, bool, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

enum class Format { csv, json };

// 17 significant digits, round-trip safe.
std::string format_number(double v);
void write_table(std::ostream& os, const Table& t, Format f);

// Entry point behind the executable; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace phpos::cli
