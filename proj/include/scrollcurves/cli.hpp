#pragma once

// Command-line frontend. Each command builds a Report; run() parses
// arguments, renders the report and maps errors to exit codes:
// 0 success, 2 invalid input, 3 violated precondition, 4 internal
// consistency failure.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "scrollcurves/checked.hpp"
#include "scrollcurves/report.hpp"

namespace scrollcurves::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitConsistency = 4;

/// |a|, |b|, |c|, |d| and m must not exceed this.
inline constexpr Int kInputBound = 1'000'000;
/// Largest number of rows in a curve table.
inline constexpr Int kMaxTableRows = 100'000;
/// Largest c_max and d_max accepted by the cubic scan.
inline constexpr Int kMaxScanBound = 200;

Report cmd_surface(Int a, Int b);
Report cmd_cohomology(Int a, Int b, Int c, Int d);
Report cmd_curve(Int a, Int b, Int c, Int d, std::optional<Int> m, std::optional<Int> n_max);
Report cmd_cubic_scan(Int c_max, Int d_max, bool include_rulings);
/// alpha_entries are joined with ',' and parsed as one point divisor.
Report cmd_cubic_apic(Int c, Int d, const std::vector<std::string>& alpha_entries);
Report cmd_cubic_link(const std::string& t1, const std::string& t2, Int m);
Report cmd_cubic_residual(const std::string& t);

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scrollcurves::cli
