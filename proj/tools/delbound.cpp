#include <CLI11.hpp>

#include <iostream>

#include "delbound/cli.hpp"

namespace {

void add_common(CLI::App* cmd, delbound::cli::RunConfig& cfg)
{
    cmd->add_option("--format", cfg.format, "json, csv or text");
    cmd->add_option("--tol", cfg.tolerances, "tolerance overrides, e.g. coeff=1e-9,pos=1e-12,sign=1e-9,grid=2048");
}

void add_bound_options(CLI::App* cmd, delbound::cli::RunConfig& cfg)
{
    cmd->add_option("--space", cfg.space, "hamming:N or sphere:D")->required();
    cmd->add_option("--k", cfg.k, "pin the kernel degree");
    cmd->add_option("--basis", cfg.basis, "basis for a pinned spectral run: base, minus or plusminus");
    cmd->add_option("--sign", cfg.sign, "corner-term sign of the fixed operator: subtractive or additive");
    cmd->add_option("--max-k", cfg.max_k, "largest degree scanned on the sphere");
    cmd->add_option("--lp-mode", cfg.lp_mode, "float or exact");
}

}  // namespace

int main(int argc, char** argv)
{
    using namespace delbound::cli;
    CLI::App app{"Delsarte linear programming bounds via orthogonal polynomials"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* bound = app.add_subcommand("bound", "certified bound for one distance or inner product");
    add_bound_options(bound, cfg);
    add_common(bound, cfg);
    bound->add_option("--method", cfg.method, "mrrw, lev, spectral, lp or all");
    auto* d_opt = bound->add_option("--d", cfg.d, "minimum distance (Hamming)");
    bound->add_option("--s", cfg.s, "maximal inner product")->excludes(d_opt);

    auto* table = app.add_subcommand("table", "sweep over d (Hamming) or an s-grid (sphere)");
    add_bound_options(table, cfg);
    add_common(table, cfg);
    table->add_option("--methods", cfg.methods, "subset of mrrw, lev, spectral, lp (default: all)")->delimiter(',');
    table->add_option("--s-min", cfg.s_min, "first s of the sphere grid (default -0.5)");
    table->add_option("--s-max", cfg.s_max, "last s of the sphere grid (default 0.5)");
    table->add_option("--steps", cfg.steps, "number of grid points (default 11)");

    auto* verify = app.add_subcommand("verify", "audit a polynomial against the cone conditions");
    add_common(verify, cfg);
    verify->add_option("input", cfg.input, "JSON polynomial file")->required();
    verify->add_option("--space", cfg.space, "space, if the file does not name one");

    auto* lp = app.add_subcommand("lp", "Delsarte LP optimum for binary codes (n <= 14)");
    add_common(lp, cfg);
    lp->add_option("--space", cfg.space, "hamming:N")->required();
    lp->add_option("--d", cfg.d, "minimum distance (default: every d)");
    lp->add_option("--mode", cfg.lp_mode, "float or exact");

    auto* nrt = app.add_subcommand("nrt", "ordered Hamming shape table");
    add_common(nrt, cfg);
    nrt->add_option("--r", cfg.r, "block length")->required();
    nrt->add_option("--n", cfg.n, "number of blocks")->required();
    nrt->add_option("--q", cfg.q, "alphabet size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : ExitCode::validation;
    }

    RunOutcome out;
    if (bound->parsed()) {
        out = run_bound(cfg);
    } else if (table->parsed()) {
        out = run_table(cfg);
    } else if (verify->parsed()) {
        out = run_verify(cfg);
    } else if (lp->parsed()) {
        out = run_lp(cfg);
    } else {
        out = run_nrt(cfg);
    }
    std::cout << out.output;
    return out.exit_code;
}
