// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "delbound/cli.hpp"
#include "delbound/constructions.hpp"
#include "delbound/errors.hpp"
#include "delbound/kernels.hpp"
#include "delbound/lp_oracle.hpp"
#include "delbound/nrt.hpp"
#include "delbound/spectral.hpp"
#include "oracles.hpp"

using namespace delbound;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

constexpr BasisId kBases[] = {BasisId::base, BasisId::minus, BasisId::plusminus};

// 1
Outcome cd_identity()
{
    const auto t0 = std::chrono::steady_clock::now();
    auto g = oracle::rng(1001);
    double worst = 0.0;
    for (int n : {4, 8, 16, 32, 64}) {
        const MeasureSpec h = hamming_space(n);
        for (BasisId b : kBases) {
            const int top = std::min({30, n - 2, max_degree(h, b)});
            for (int t = 0; t < 1000; ++t) {
                const int k = static_cast<int>(oracle::uniform(g, 0, top + 0.999));
                const double x = oracle::uniform(g, -1, 1), s = oracle::uniform(g, -1, 1);
                worst = std::max(worst, std::abs(cd_identity_residual(h, {b, k, s}, x)));
            }
        }
    }
    const double secs = seconds_since(t0);
    return {worst <= 1e-9 && secs < 5.0, "max residual " + fmt("%.3g", worst) + ", " + fmt("%.2f", secs) + " s"};
}

// 2
struct ReproStats {
    double worst = 0.0;
    double worst_conditioned = 0.0;  ///< eps * Lambda(y) * max|f| at the worst draw
    int runs = 0;
};

ReproStats reproduce_draws(const MeasureSpec& spec, std::mt19937_64& g)
{
    ReproStats st;
    for (BasisId b : kBases) {
        const int top = std::min(max_degree(spec, b), 20);
        for (int t = 0; t < 200; ++t) {
            const int k = static_cast<int>(oracle::uniform(g, 0, top + 0.999));
            std::vector<double> c(k + 1);
            for (auto& v : c) v = oracle::uniform(g, -1, 1);
            auto f = [&c](double x) {
                double r = 0.0;
                for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
                return r;
            };
            const double y = oracle::uniform(g, -1, 1);
            const double err = std::abs(reproduce(spec, b, k, y, {f, k}) - f(y));
            ++st.runs;
            if (err <= st.worst) continue;
            st.worst = err;
            if (spec.discrete()) {
                double lambda = 0.0, fmax = 0.0;
                for (Eigen::Index j = 0; j < spec.nodes.size(); ++j) {
                    const double x = spec.nodes(j);
                    lambda += spec.weights(j) * variant_multiplier(b, x) * std::abs(cd_kernel(spec, {b, k, y}, x));
                    fmax = std::max(fmax, std::abs(f(x)));
                }
                st.worst_conditioned = std::numeric_limits<double>::epsilon() * lambda * fmax;
            }
        }
    }
    return st;
}

/// The 1e-9 tolerance is applied on Hamming n <= 32 and three spheres. On
/// hamming:64 the functional itself has condition number ~1e7 near x = -1,
/// so rounding f to double already costs ~1e-9; that space is reported only.
Outcome reproducing()
{
    auto g = oracle::rng(1002);
    ReproStats scoped;
    for (const MeasureSpec& spec : {hamming_space(4), hamming_space(8), hamming_space(16), hamming_space(32),
                                    sphere_space(3), sphere_space(8), sphere_space(24)}) {
        const ReproStats st = reproduce_draws(spec, g);
        scoped.worst = std::max(scoped.worst, st.worst);
        scoped.runs += st.runs;
    }
    const ReproStats wide = reproduce_draws(hamming_space(64), g);
    return {scoped.worst <= 1e-9, std::to_string(scoped.runs) + " draws, max error " + fmt("%.3g", scoped.worst) +
                                      "; hamming:64 reported only: max error " + fmt("%.3g", wide.worst) +
                                      " vs eps*Lambda*max|f| " + fmt("%.3g", wide.worst_conditioned)};
}

// 3
Outcome gram_defect()
{
    double worst = 0.0;
    for (int n = 1; n <= 32; ++n) {
        const MeasureSpec h = hamming_space(n);
        for (BasisId v : kBases) {
            const int top = max_degree(h, v);
            if (top < 0) continue;
            auto sys = orthonormal_system(h, v, top);
            std::vector<Eigen::VectorXd> vals;
            for (int j = 0; j <= n; ++j) vals.push_back(sys->eval_upto(top, 1.0 - 2.0 * j / n));
            for (int i = 0; i <= top; ++i) {
                for (int k = 0; k <= i; ++k) {
                    long double sum = 0.0L;
                    for (int j = 0; j <= n; ++j) {
                        const long double x = 1.0L - 2.0L * j / n;
                        const long double mult = v == BasisId::base ? 1.0L : v == BasisId::minus ? 1.0L - x : 1.0L - x * x;
                        sum += oracle::hamming_weight(n, j) * mult * vals[j](i) * vals[j](k);
                    }
                    worst = std::max(worst, std::abs(static_cast<double>(sum) - (i == k ? 1.0 : 0.0)));
                }
            }
        }
    }
    return {worst <= 1e-10, "max defect " + fmt("%.3g", worst) + " over n <= 32, three bases"};
}

// 4
Outcome adjacent_identity()
{
    auto g = oracle::rng(1004);
    double worst = 0.0;
    for (int n = 4; n <= 16; ++n) {
        auto base = orthonormal_system(hamming_space(n), BasisId::base, n);
        for (int i = 0; i <= n - 2; ++i) {
            std::vector<double> xs;
            for (int j = 1; j <= n; ++j) xs.push_back(1.0 - 2.0 * j / n);
            for (int t = 0; t < 20; ++t) xs.push_back(oracle::uniform(g, -1, 1));
            for (double x : xs) {
                const long double z = 0.5L * n * (1.0L - x) - 1.0L;
                const long double expect = oracle::krawtchouk(n - 1, i, z) / std::sqrt(oracle::binom(n - 1, i));
                const double got = adjacent_minus_from_kernel(*base, i, x);
                worst = std::max(worst, std::abs(got - static_cast<double>(expect)));
            }
        }
    }
    return {worst <= 1e-9, "max deviation " + fmt("%.3g", worst)};
}

// 5
Outcome spectral_fixed_point()
{
    const JacobiOperator op = build_Tk(hamming_space(4), BasisId::base, 1, 0.25);
    const Eigen::MatrixXd m = op.matrix();
    Eigen::MatrixXd want(2, 2);
    want << 0.0, 0.5, 0.5, -0.75;
    const double entry_err = (m - want).cwiseAbs().maxCoeff();
    const EigenPair top = top_eigenpair(op);
    const double lam_err = std::abs(top.lambda - 0.25);
    const double ratio_err = std::abs(top.vector(1) / top.vector(0) - 0.5);
    const bool pass = entry_err <= 1e-15 && lam_err <= 1e-12 && ratio_err <= 1e-12;
    return {pass, "operator error " + fmt("%.3g", entry_err) + ", |lambda - 0.25| " + fmt("%.3g", lam_err) +
                      ", eigenvector ratio error " + fmt("%.3g", ratio_err)};
}

// 6
Outcome route_equivalence()
{
    int triples = 0;
    double worst = 0.0;
    for (int n = 4; n <= 24; ++n) {
        const MeasureSpec h = hamming_space(n);
        for (int k = 0; k + 1 <= n && k <= 10; ++k) {
            const double lo = largest_zero(h, BasisId::base, k), hi = largest_zero(h, BasisId::base, k + 1);
            for (double frac : {0.2, 0.5, 0.8}) {
                const double s = lo + (hi - lo) * frac;
                if (s >= 1.0) continue;
                try {
                    const BoundPolynomial f = mrrw_poly(h, k, s);
                    if (!cone_certificate(h, f, s).passed()) continue;
                    const double closed = mrrw_bound_closed(h, k, s);
                    const double inv = bound_value(h, f);
                    const double sp = spectral_recover_bound(h, BasisId::base, k, s).bound;
                    worst = std::max({worst, std::abs(inv - closed) / closed, std::abs(sp - closed) / closed});
                    ++triples;
                } catch (const NotCertifiedError&) {
                }
            }
        }
    }
    const MeasureSpec h4 = hamming_space(4);
    const double a = mrrw_bound_closed(h4, 1, 0.25);
    const double b = bound_value(h4, mrrw_poly(h4, 1, 0.25));
    const double c = spectral_recover_bound(h4, BasisId::base, 1, 0.25).bound;
    const double fixed_err = std::max({std::abs(a - 16), std::abs(b - 16), std::abs(c - 16)});
    const bool pass = triples >= 200 && worst <= 1e-7 && fixed_err <= 1e-6;
    return {pass, std::to_string(triples) + " certified triples, max relative gap " + fmt("%.3g", worst) +
                      ", hamming:4 k=1 s=0.25 off 16 by " + fmt("%.3g", fixed_err)};
}

// 7
Outcome levenshtein_plotkin()
{
    const double lev = bound_for_distance(hamming_space(3), 2, Method::lev).bound;
    const double lp = delsarte_lp(3, 2, LPMode::floating).value;
    const LPSolution exact = delsarte_lp(3, 2, LPMode::exact);
    const Code code = even_weight_code(3);
    const double plot = static_cast<double>(oracle::plotkin(3, 2));
    const bool pass = std::abs(lev - 4) <= 1e-9 && std::abs(lp - 4) <= 1e-9 && exact.exact_value == "4" &&
                      code.size() == 4 && minimum_distance(code) == 2 && plot == 4.0;
    return {pass, "lev " + fmt("%.17g", lev) + ", lp " + fmt("%.17g", lp) + " (exact " + exact.exact_value +
                      "), even-weight code size " + std::to_string(code.size()) + ", plotkin " + fmt("%g", plot)};
}

std::optional<double> certified_value(const MeasureSpec& spec, const BoundPolynomial& f)
{
    if (!cone_certificate(spec, f, f.s).passed()) return std::nullopt;
    return bound_value(spec, f);
}

// 8
Outcome ordering()
{
    auto g = oracle::rng(1008);
    int compared = 0, violations = 0;
    for (int n = 6; n <= 14; ++n) {
        const MeasureSpec h = hamming_space(n);
        for (const LevWindow& w : lev_windows(h, n)) {
            if (w.even) continue;
            for (int t = 0; t < 12; ++t) {
                const double s = t == 0 ? w.lo : t == 1 ? w.hi : w.lo + (w.hi - w.lo) * oracle::uniform(g, 0, 1);
                const auto m = certified_value(h, mrrw_poly(h, w.k, s));
                const auto o = certified_value(h, lev_odd_poly(h, w.k, s));
                if (!m || !o) continue;
                ++compared;
                if (*o > *m * (1 + 1e-9)) ++violations;
            }
        }
    }
    int lp_pairs = 0, lp_violations = 0;
    for (int n = 1; n <= 12; ++n) {
        for (int d = 1; d <= n; ++d) {
            const double lp = delsarte_lp(n, d, LPMode::floating).value;
            for (Method m : {Method::mrrw, Method::lev, Method::spectral}) {
                try {
                    const double b = bound_for_distance(hamming_space(n), d, m).bound;
                    ++lp_pairs;
                    if (lp > b * (1 + 1e-9)) ++lp_violations;
                } catch (const NotCertifiedError&) {
                }
            }
        }
    }
    const bool pass = compared >= 100 && violations == 0 && lp_violations == 0;
    return {pass, std::to_string(violations) + "/" + std::to_string(compared) + " lev>mrrw inside odd windows, " +
                      std::to_string(lp_violations) + "/" + std::to_string(lp_pairs) + " lp>certified"};
}

/// Independent audit of an emitted Hamming bound with oracle Krawtchouk sums.
bool audit(int n, const BoundResult& r)
{
    const BoundPolynomial& f = r.polynomial;
    for (int j = 0; j <= n; ++j) {
        const double x = 1.0 - 2.0 * j / n;
        if (x <= r.s_used + 1e-15 && f.value(x) > 1e-9) return false;
    }
    long double f0 = 0.0L;
    for (int i = 0; i <= n; ++i) {
        long double fi = 0.0L;
        for (int j = 0; j <= n; ++j) {
            fi += oracle::hamming_weight(n, j) * f.value(1.0 - 2.0 * j / n) * oracle::hamming_p(n, i, 1.0L - 2.0L * j / n);
        }
        if (fi < -1e-9L * std::max(1.0L, static_cast<long double>(std::abs(f.value(1.0))))) return false;
        if (i == 0) f0 = fi;
    }
    if (!(f0 > 0)) return false;
    const double expect = static_cast<double>(f.value(1.0) / f0);
    return std::abs(expect - r.bound) <= 1e-6 * r.bound;
}

// 9
Outcome feasibility_gate()
{
    int zeros_checked = 0, zeros_missed = 0;
    for (int n = 4; n <= 16; ++n) {
        const MeasureSpec h = hamming_space(n);
        for (int k = 1; k + 1 <= n - 1; ++k) {
            const double z = largest_zero(h, BasisId::base, k + 1);
            ++zeros_checked;
            const ConeCertificate c = cone_certificate(h, mrrw_poly(h, k, z), z);
            bool rejected = !c.passed() && c.reason.rfind("f̂_0 = 0", 0) == 0;
            BoundOptions pinned;
            pinned.k = k;
            try {
                (void)bound_at(h, z, Method::mrrw, pinned);
                rejected = false;
            } catch (const NotInConeError& e) {
                rejected = rejected && e.certificate.reason.rfind("f̂_0 = 0", 0) == 0;
            }
            if (!rejected) ++zeros_missed;
        }
    }

    // Every bound the library emits across a grid must survive an
    // independent audit; failures must carry no value.
    auto g = oracle::rng(1009);
    int emitted = 0, refused = 0, bad = 0;
    for (int n = 3; n <= 14; ++n) {
        const MeasureSpec h = hamming_space(n);
        for (Method m : {Method::mrrw, Method::lev, Method::spectral}) {
            std::vector<std::pair<double, std::optional<int>>> queries;
            for (int t = 0; t < 15; ++t) queries.emplace_back(oracle::uniform(g, -0.99, 0.95), std::nullopt);
            for (int t = 0; t < 15; ++t) {
                queries.emplace_back(oracle::uniform(g, -0.99, 0.95), static_cast<int>(oracle::uniform(g, 0, n - 1.001)));
            }
            for (const auto& [s, k] : queries) {
                BoundOptions opt;
                opt.k = k;
                try {
                    const BoundResult r = bound_at(h, s, m, opt);
                    ++emitted;
                    if (!r.certificate.passed() || !audit(n, r)) ++bad;
                } catch (const NotCertifiedError&) {
                    ++refused;
                } catch (const ValidationError&) {
                    ++refused;
                }
            }
        }
    }
    cli::RunConfig c;
    c.space = "hamming:8";
    c.method = "mrrw";
    c.k = 2;
    c.s = largest_zero(hamming_space(8), BasisId::base, 3);
    const cli::RunOutcome out = cli::run_bound(c);
    const bool cli_ok = out.exit_code == cli::not_certified && out.output.find("\"bound\"") == std::string::npos &&
                        out.output.find("f̂_0 = 0") != std::string::npos;

    const bool pass = zeros_missed == 0 && bad == 0 && cli_ok && emitted > 0 && refused > 0;
    return {pass, std::to_string(zeros_checked - zeros_missed) + "/" + std::to_string(zeros_checked) +
                      " zero-degenerate polynomials rejected as f̂_0 = 0, " + std::to_string(bad) + "/" +
                      std::to_string(emitted) + " emitted bounds failed audit, " + std::to_string(refused) +
                      " refusals, cli " + (cli_ok ? "ok" : "wrong")};
}

// 10
Outcome nrt_counting()
{
    int shapes = 0, mismatches = 0;
    bool sums_ok = true;
    for (int r = 1; r <= 3; ++r) {
        for (int n = 1; n <= 3; ++n) {
            const auto counts = oracle::nrt_shape_counts(2, r, n);
            const Rational total(oracle::cpp_int(1) << (r * n));
            Rational sum = 0;
            for (const auto& e : enumerate_shapes(r, n)) {
                const Rational w = shape_weight(e, 2);
                sum += w;
                const auto it = counts.find(e.e);
                if (w * total != Rational(it == counts.end() ? 0 : it->second)) ++mismatches;
                ++shapes;
            }
            sums_ok = sums_ok && sum == 1;
        }
    }
    return {mismatches == 0 && sums_ok,
            std::to_string(shapes) + " shapes, " + std::to_string(mismatches) + " count mismatches, sum w = 1 " +
                (sums_ok ? "exactly" : "violated")};
}

// 11
Outcome performance()
{
    auto t0 = std::chrono::steady_clock::now();
    cli::RunConfig c;
    c.space = "hamming:64";
    c.methods = {"mrrw", "lev", "spectral"};
    const cli::RunOutcome out = cli::run_table(c);
    const double table_secs = seconds_since(t0);
    std::size_t lines = 0;
    for (std::size_t p = out.output.find("\r\n"); p != std::string::npos; p = out.output.find("\r\n", p + 2)) ++lines;

    t0 = std::chrono::steady_clock::now();
    for (int d = 1; d <= 12; ++d) (void)delsarte_lp(12, d, LPMode::floating);
    const double lp_secs = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    for (int d = 1; d <= 12; ++d) (void)delsarte_lp(12, d, LPMode::exact);
    const double lp_exact_secs = seconds_since(t0);

    const bool pass = out.exit_code == cli::ok && lines == 65 && table_secs < 10.0 && lp_secs < 5.0;
    return {pass, "table hamming:64 " + fmt("%.2f", table_secs) + " s (" + std::to_string(lines - 1) + " rows), lp n=12 " +
                      fmt("%.3f", lp_secs) + " s float, " + fmt("%.3f", lp_exact_secs) + " s exact"};
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"christoffel-darboux identity", cd_identity},
        {"reproducing property", reproducing},
        {"orthonormality gram defect", gram_defect},
        {"adjacent-system identity", adjacent_identity},
        {"spectral fixed point", spectral_fixed_point},
        {"route equivalence", route_equivalence},
        {"levenshtein/plotkin fixed point", levenshtein_plotkin},
        {"ordering suite", ordering},
        {"feasibility gate", feasibility_gate},
        {"nrt counting", nrt_counting},
        {"performance envelope", performance},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("threw: ") + e.what()};
        }
        if (!v.pass) ++failures;
        std::printf("%s %2zu %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), v.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
