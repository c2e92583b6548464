#ifndef DELBOUND_CLI_HPP
#define DELBOUND_CLI_HPP

#include <optional>
#include <string>
#include <vector>

namespace delbound::cli {

enum ExitCode : int { ok = 0, validation = 2, not_certified = 3, numeric = 4 };

struct RunConfig {
    std::string space;
    std::string method = "lev";            ///< mrrw, lev, spectral, lp or all
    std::vector<std::string> methods;      ///< table only; empty means every applicable one
    std::optional<int> d;
    std::optional<double> s;
    std::optional<int> k;
    std::string basis = "base";            ///< pinned-degree spectral runs
    std::string sign = "subtractive";
    std::optional<std::string> tolerances; ///< DELBOUND_TOL syntax, applied over the environment
    std::string format;                    ///< json, csv or text; empty picks the subcommand default
    std::string lp_mode = "float";
    int max_k = 40;

    // table over a sphere: s-grid
    double s_min = -0.5;
    double s_max = 0.5;
    int steps = 11;

    // verify
    std::string input;

    // nrt
    int r = 1;
    int n = 1;
    int q = 2;
};

struct RunOutcome {
    int exit_code = ok;
    std::string output;
};

RunOutcome run_bound(const RunConfig& config);
RunOutcome run_table(const RunConfig& config);
RunOutcome run_verify(const RunConfig& config);
RunOutcome run_lp(const RunConfig& config);
RunOutcome run_nrt(const RunConfig& config);

/// RFC 4180 field quoting.
std::string csv_field(const std::string& text);

}  // namespace delbound::cli

#endif
