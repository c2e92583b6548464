#include "delbound/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "delbound/errors.hpp"
#include "delbound/nrt.hpp"
#include "delbound/serialize.hpp"

namespace delbound::cli {

namespace {

std::string fmt(double v)
{
    if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string kind_name(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::validation: return "validation";
    case ErrorKind::not_certified: return "not_certified";
    case ErrorKind::numeric: return "numeric";
    }
    return "numeric";
}

int exit_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::validation: return validation;
    case ErrorKind::not_certified: return not_certified;
    case ErrorKind::numeric: return numeric;
    }
    return numeric;
}

struct Failure {
    ErrorKind kind = ErrorKind::numeric;
    std::string message;
    std::optional<ConeCertificate> certificate;
};

/// Runs `fn`, turning library and parser exceptions into a Failure.
template <typename Fn>
std::optional<Failure> capture(Fn&& fn)
{
    try {
        fn();
        return std::nullopt;
    } catch (const NotInConeError& e) {
        return Failure{e.kind(), e.what(), e.certificate};
    } catch (const Error& e) {
        return Failure{e.kind(), e.what(), std::nullopt};
    } catch (const nlohmann::json::exception& e) {
        return Failure{ErrorKind::validation, e.what(), std::nullopt};
    } catch (const std::exception& e) {
        return Failure{ErrorKind::numeric, e.what(), std::nullopt};
    }
}

Json failure_json(const Failure& f)
{
    Json err{{"kind", kind_name(f.kind)}, {"message", f.message}};
    if (f.certificate) err["certificate"] = to_json(*f.certificate);
    return err;
}

RunOutcome failure_outcome(const Failure& f, const std::string& format)
{
    if (format == "text" || format == "csv") return {exit_for(f.kind), "error (" + kind_name(f.kind) + "): " + f.message + "\n"};
    Json j{{"schema", kSchemaVersion}, {"error", failure_json(f)}};
    return {exit_for(f.kind), j.dump(2) + "\n"};
}

std::string pick_format(const RunConfig& config, const std::string& fallback)
{
    const std::string f = config.format.empty() ? fallback : config.format;
    if (f != "json" && f != "csv" && f != "text") {
        throw ValidationError("unknown format '" + f + "' (expected json, csv or text)");
    }
    return f;
}

Tolerances tolerances_for(const RunConfig& config)
{
    Tolerances tol = default_tolerances();
    if (config.tolerances) tol = parse_tolerances(*config.tolerances, tol);
    return tol;
}

/// Placeholder that does not consult DELBOUND_TOL; a malformed value must
/// surface inside capture() rather than escape from a default initializer.
BoundOptions unread_options() { return {Tolerances{}, SignVariant::subtractive, std::nullopt, BasisId::base, 40}; }

BoundOptions options_for(const RunConfig& config)
{
    BoundOptions opt;
    opt.tolerances = tolerances_for(config);
    opt.sign = parse_sign_variant(config.sign);
    opt.k = config.k;
    opt.spectral_basis = parse_variant(config.basis);
    opt.max_k = config.max_k;
    return opt;
}

std::string csv_join(const std::vector<std::string>& fields)
{
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) line += ',';
        line += csv_field(fields[i]);
    }
    return line + "\r\n";
}

const std::vector<std::string> kBoundColumns = {"space", "method", "n", "d", "s", "k", "degree", "bound", "certificate_id",
                                                "status", "message"};

std::vector<std::string> bound_row(const std::string& space, const std::string& method, const RunConfig& config,
                                   const BoundResult* r, const LPSolution* lp, const Failure* f)
{
    std::vector<std::string> row{space, method};
    row.push_back(r && r->n ? std::to_string(*r->n) : std::string());
    row.push_back(config.d ? std::to_string(*config.d) : std::string());
    if (r) {
        row.insert(row.end(), {fmt(r->s), std::to_string(r->k), std::to_string(r->degree), fmt(r->bound),
                               r->certificate.id, "ok", ""});
    } else if (lp) {
        row.insert(row.end(), {"", "", "", fmt(lp->value), "", to_string(lp->status), lp->exact_value});
    } else {
        row.insert(row.end(), {config.s ? fmt(*config.s) : "", "", "", "", "", kind_name(f->kind), f->message});
    }
    return row;
}

std::string bound_text(const BoundResult& r)
{
    std::ostringstream os;
    os << "space=" << r.space << " method=" << to_string(r.method);
    if (r.n) os << " n=" << *r.n;
    if (r.d) os << " d=" << *r.d;
    os << " s=" << fmt(r.s) << " k=" << r.k << " degree=" << r.degree << " bound=" << fmt(r.bound)
       << " certificate=" << r.certificate.id << "\n";
    return os.str();
}

LPSolution lp_for(const MeasureSpec& spec, const RunConfig& config)
{
    if (spec.kind != SpaceKind::hamming) throw ValidationError("the LP oracle runs on Hamming spaces only");
    if (!config.d) throw ValidationError("the LP oracle needs --d");
    return delsarte_lp(spec.dimension, *config.d, parse_lp_mode(config.lp_mode));
}

BoundResult polynomial_bound(const MeasureSpec& spec, Method method, const RunConfig& config,
                             const BoundOptions& options)
{
    if (config.d) return bound_for_distance(spec, *config.d, method, options);
    return bound_at(spec, *config.s, method, options);
}

}  // namespace

std::string csv_field(const std::string& text)
{
    if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

RunOutcome run_bound(const RunConfig& config)
{
    std::string format = "json";
    MeasureSpec spec;
    BoundOptions options = unread_options();
    std::vector<std::string> methods;
    if (auto f = capture([&] {
            format = pick_format(config, "json");
            spec = parse_space(config.space);
            if (config.d.has_value() == config.s.has_value()) {
                throw ValidationError("give exactly one of --d or --s");
            }
            if (config.d && spec.kind != SpaceKind::hamming) {
                throw ValidationError("--d applies to Hamming spaces only; use --s on " + spec.descriptor());
            }
            if (config.d && (*config.d < 1 || *config.d > spec.dimension)) {
                throw ValidationError("d = " + std::to_string(*config.d) + " out of range: need 1 <= d <= n = " +
                                      std::to_string(spec.dimension));
            }
            options = options_for(config);
            if (config.method == "all") {
                methods = {"mrrw", "lev", "spectral"};
                if (spec.kind == SpaceKind::hamming && config.d && spec.dimension <= 14) methods.push_back("lp");
            } else if (config.method == "lp") {
                methods = {"lp"};
            } else {
                parse_method(config.method);
                methods = {config.method};
            }
        })) {
        return failure_outcome(*f, format);
    }

    Json results = Json::array();
    std::string csv = csv_join(kBoundColumns);
    std::string text;
    int best_exit = -1;
    int worst_failure = ok;
    for (const auto& name : methods) {
        std::optional<BoundResult> result;
        std::optional<LPSolution> lp;
        auto f = capture([&] {
            if (name == "lp") {
                lp = lp_for(spec, config);
            } else {
                result = polynomial_bound(spec, parse_method(name), config, options);
            }
        });
        if (f) {
            worst_failure = std::max(worst_failure, exit_for(f->kind));
            Json entry{{"schema", kSchemaVersion}, {"space", spec.descriptor()}, {"method", name}};
            entry["error"] = failure_json(*f);
            results.push_back(std::move(entry));
            csv += csv_join(bound_row(spec.descriptor(), name, config, nullptr, nullptr, &*f));
            text += "space=" + spec.descriptor() + " method=" + name + " error (" + kind_name(f->kind) + "): " +
                    f->message + "\n";
            if (methods.size() == 1) return failure_outcome(*f, format);
            continue;
        }
        best_exit = ok;
        if (lp) {
            Json entry = to_json(*lp);
            entry["space"] = spec.descriptor();
            entry["method"] = "lp";
            entry["bound"] = number(lp->value);
            results.push_back(std::move(entry));
            csv += csv_join(bound_row(spec.descriptor(), name, config, nullptr, &*lp, nullptr));
            text += "space=" + spec.descriptor() + " method=lp n=" + std::to_string(lp->n) + " d=" +
                    std::to_string(lp->d) + " bound=" + fmt(lp->value) + " status=" + to_string(lp->status) + "\n";
        } else {
            results.push_back(to_json(*result));
            csv += csv_join(bound_row(spec.descriptor(), name, config, &*result, nullptr, nullptr));
            text += bound_text(*result);
        }
    }

    RunOutcome out;
    out.exit_code = best_exit == ok ? ok : worst_failure;
    if (format == "csv") {
        out.output = csv;
    } else if (format == "text") {
        out.output = text;
    } else if (methods.size() == 1) {
        out.output = results[0].dump(2) + "\n";
    } else {
        out.output = Json{{"schema", kSchemaVersion}, {"results", results}}.dump(2) + "\n";
    }
    return out;
}

RunOutcome run_table(const RunConfig& config)
{
    std::string format = "csv";
    MeasureSpec spec;
    BoundOptions options = unread_options();
    std::vector<std::string> methods;
    if (auto f = capture([&] {
            format = pick_format(config, "csv");
            if (format == "text") throw ValidationError("table supports csv or json output");
            spec = parse_space(config.space);
            options = options_for(config);
            methods = config.methods;
            if (methods.empty() || (methods.size() == 1 && methods[0] == "all")) {
                methods = {"mrrw", "lev", "spectral"};
                if (spec.kind == SpaceKind::hamming && spec.dimension <= 14) methods.push_back("lp");
            }
            for (const auto& m : methods) {
                if (m != "lp") parse_method(m);
            }
            if (spec.kind != SpaceKind::hamming && config.steps < 2) throw ValidationError("--steps must be at least 2");
        })) {
        return failure_outcome(*f, format == "text" ? "json" : format);
    }

    const bool hamming = spec.kind == SpaceKind::hamming;
    struct Point {
        std::optional<int> d;
        double s;
    };
    std::vector<Point> points;
    if (hamming) {
        for (int d = 1; d <= spec.dimension; ++d) points.push_back({d, inner_product_for_distance(spec.dimension, d)});
    } else {
        for (int i = 0; i < config.steps; ++i) {
            points.push_back({std::nullopt, config.s_min + (config.s_max - config.s_min) * i / (config.steps - 1)});
        }
    }

    std::vector<std::string> header = {"space", "d", "s"};
    for (const auto& m : methods) {
        header.push_back(m);
        if (m != "lp") {
            header.push_back(m + "_degree");
            header.push_back(m + "_certificate");
        }
    }
    if (hamming) header.insert(header.end(), {"singleton", "hamming", "plotkin"});
    header.push_back("notes");

    std::string csv = csv_join(header);
    Json rows = Json::array();
    bool any_failure = false;
    for (const auto& p : points) {
        RunConfig row_config = config;
        row_config.d = p.d;
        row_config.s = p.d ? std::nullopt : std::optional<double>(p.s);
        std::vector<std::string> row = {spec.descriptor(), p.d ? std::to_string(*p.d) : "", fmt(p.s)};
        Json jrow{{"space", spec.descriptor()}};
        if (p.d) jrow["d"] = *p.d;
        jrow["s"] = number(p.s);
        std::vector<std::string> notes;
        for (const auto& m : methods) {
            std::optional<BoundResult> result;
            std::optional<LPSolution> lp;
            auto f = capture([&] {
                if (m == "lp") {
                    lp = lp_for(spec, row_config);
                } else {
                    result = polynomial_bound(spec, parse_method(m), row_config, options);
                }
            });
            if (f) {
                any_failure = true;
                notes.push_back(m + ": " + kind_name(f->kind) + ": " + f->message);
                row.push_back("");
                if (m != "lp") row.insert(row.end(), {"", ""});
                jrow[m] = Json{{"error", failure_json(*f)}};
            } else if (lp) {
                row.push_back(fmt(lp->value));
                jrow[m] = Json{{"bound", number(lp->value)}, {"status", to_string(lp->status)}};
            } else {
                row.insert(row.end(), {fmt(result->bound), std::to_string(result->degree), result->certificate.id});
                jrow[m] = Json{{"bound", number(result->bound)},
                               {"k", result->k},
                               {"degree", result->degree},
                               {"certificate_id", result->certificate.id}};
            }
        }
        if (hamming) {
            const Baselines b = classical_baselines(spec.dimension, *p.d);
            row.push_back(b.singleton ? fmt(*b.singleton) : "");
            row.push_back(b.hamming ? fmt(*b.hamming) : "");
            row.push_back(b.plotkin ? fmt(*b.plotkin) : "");
            jrow["baselines"] = to_json(b);
        }
        std::string joined;
        for (std::size_t i = 0; i < notes.size(); ++i) joined += (i ? "; " : "") + notes[i];
        row.push_back(joined);
        if (!notes.empty()) jrow["notes"] = notes;
        csv += csv_join(row);
        rows.push_back(std::move(jrow));
    }
    (void)any_failure;  // failures are annotated per row; the sweep itself succeeded

    if (format == "json") return {ok, Json{{"schema", kSchemaVersion}, {"rows", rows}}.dump(2) + "\n"};
    return {ok, csv};
}

namespace {

struct VerifyInput {
    MeasureSpec spec;
    BoundPolynomial poly;
    double s = 0.0;
    Tolerances tol;
};

double resolve_s(const MeasureSpec& spec, const Json& value, const std::string& field)
{
    if (value.is_number()) return value.get<double>();
    if (!value.is_string()) throw ValidationError("field '" + field + "' must be a number or a zero name like x_2");
    // x_j, x_j^- and x_j^+- name the largest zero of p_j in the matching system.
    std::string text = value.get<std::string>();
    Variant variant = Variant::base;
    if (text.size() > 3 && text.compare(text.size() - 3, 3, "^+-") == 0) {
        variant = Variant::plusminus;
        text.resize(text.size() - 3);
    } else if (text.size() > 2 && text.compare(text.size() - 2, 2, "^-") == 0) {
        variant = Variant::minus;
        text.resize(text.size() - 2);
    }
    if (text.rfind("x_", 0) != 0) throw ValidationError("field '" + field + "': cannot read '" + value.get<std::string>() + "'");
    int j = 0;
    const char* begin = text.data() + 2;
    const char* end = text.data() + text.size();
    const auto res = std::from_chars(begin, end, j);
    if (res.ec != std::errc() || res.ptr != end || j < 0) {
        throw ValidationError("field '" + field + "': malformed zero index in '" + value.get<std::string>() + "'");
    }
    return largest_zero(spec, variant, j);
}

VerifyInput read_verify_input(const RunConfig& config)
{
    std::ifstream in(config.input);
    if (!in) throw ValidationError("cannot open polynomial file '" + config.input + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError("malformed JSON in '" + config.input + "': " + e.what());
    }
    if (!j.is_object()) throw ValidationError("'" + config.input + "' must hold a JSON object");
    VerifyInput v;
    if (!j.contains("space")) {
        if (config.space.empty()) throw ValidationError("field 'space' missing (or pass --space)");
        v.spec = parse_space(config.space);
    } else {
        v.spec = measure_from_json(j["space"]);
    }

    v.tol = tolerances_for(config);
    if (j.contains("tolerances")) {
        const Json& t = j["tolerances"];
        if (t.is_string()) {
            v.tol = parse_tolerances(t.get<std::string>(), v.tol);
        } else if (t.is_object()) {
            if (t.contains("coeff")) v.tol.coeff = t["coeff"].get<double>();
            if (t.contains("pos")) v.tol.positive = t["pos"].get<double>();
            if (t.contains("sign")) v.tol.sign = t["sign"].get<double>();
            if (t.contains("grid")) v.tol.grid = t["grid"].get<int>();
        } else {
            throw ValidationError("field 'tolerances' must be a string or an object");
        }
    }

    if (!j.contains("polynomial") || !j["polynomial"].is_object()) {
        throw ValidationError("field 'polynomial' missing or not an object");
    }
    const Json& p = j["polynomial"];
    std::optional<double> s;
    if (j.contains("s")) s = resolve_s(v.spec, j["s"], "s");
    if (p.contains("fourier")) {
        const Json& c = p["fourier"];
        if (!c.is_array() || c.empty()) throw ValidationError("field 'polynomial.fourier' must be a nonempty array");
        Eigen::VectorXd coeffs(static_cast<Eigen::Index>(c.size()));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (!c[i].is_number()) {
                throw ValidationError("field 'polynomial.fourier[" + std::to_string(i) + "]' must be a number");
            }
            coeffs(static_cast<Eigen::Index>(i)) = c[i].get<double>();
        }
        if (!s) throw ValidationError("field 's' is required with a Fourier polynomial");
        v.poly = make_fourier_polynomial(v.spec, coeffs, *s);
    } else {
        const std::string family = p.contains("family") ? p["family"].get<std::string>()
                                   : p.contains("method") ? p["method"].get<std::string>()
                                                          : std::string();
        if (family.empty()) throw ValidationError("field 'polynomial' needs 'fourier' or 'family'");
        if (!p.contains("k") || !p["k"].is_number_integer()) throw ValidationError("field 'polynomial.k' must be an integer");
        if (!p.contains("s")) throw ValidationError("field 'polynomial.s' missing");
        const int k = p["k"].get<int>();
        if (k < 0) throw ValidationError("field 'polynomial.k' must be nonnegative");
        const double ps = resolve_s(v.spec, p["s"], "polynomial.s");
        if (family == "mrrw") {
            v.poly = mrrw_poly(v.spec, k, ps);
        } else if (family == "lev_odd" || family == "lev") {
            v.poly = lev_odd_poly(v.spec, k, ps);
        } else if (family == "lev_even") {
            v.poly = lev_even_poly(v.spec, k, ps);
        } else {
            throw ValidationError("field 'polynomial.family' has unknown value '" + family +
                                  "' (expected mrrw, lev_odd or lev_even)");
        }
        if (!s) s = ps;
    }
    v.s = *s;
    return v;
}

std::string certificate_text(const VerifyInput& v, const ConeCertificate& cert)
{
    std::ostringstream os;
    os << "space: " << v.spec.descriptor() << "\n";
    os << "polynomial: family=" << to_string(v.poly.family) << " k=" << v.poly.k << " degree=" << v.poly.degree
       << " s=" << fmt(v.poly.s) << "\n";
    os << "interval: [-1, " << fmt(cert.s) << "]\n";
    os << "coefficients:\n";
    for (Eigen::Index i = 0; i < cert.coefficients.size(); ++i) {
        os << "  f_" << i << " = " << fmt(cert.coefficients(i)) << "\n";
    }
    os << "max f on interval: " << fmt(cert.max_on_interval) << " at x = " << fmt(cert.argmax) << " ("
       << cert.audit_points << " audit points)\n";
    os << "certificate: " << cert.id << "\n";
    os << "verdict: " << (cert.passed() ? "PASS" : "FAIL");
    if (!cert.passed()) os << " (" << cert.reason << ")";
    os << "\n";
    if (cert.passed()) os << "bound: " << fmt(1.0 / cert.coefficients(0)) << "\n";
    return os.str();
}

}  // namespace

RunOutcome run_verify(const RunConfig& config)
{
    std::string format = "json";
    RunOutcome out;
    if (auto f = capture([&] {
            format = pick_format(config, "json");
            const VerifyInput v = read_verify_input(config);
            const ConeCertificate cert = cone_certificate(v.spec, v.poly, v.s, v.tol);
            out.exit_code = cert.passed() ? ok : not_certified;
            if (format == "text") {
                out.output = certificate_text(v, cert);
            } else if (format == "csv") {
                std::string csv = csv_join({"index", "coefficient"});
                for (Eigen::Index i = 0; i < cert.coefficients.size(); ++i) {
                    csv += csv_join({std::to_string(i), fmt(cert.coefficients(i))});
                }
                out.output = csv;
            } else {
                Json j{{"schema", kSchemaVersion}, {"space", to_json(v.spec)}};
                j["polynomial"] = {{"family", to_string(v.poly.family)},
                                   {"k", v.poly.k},
                                   {"degree", v.poly.degree},
                                   {"s", number(v.poly.s)}};
                j["verdict"] = cert.passed() ? "pass" : "fail";
                if (cert.passed()) j["bound"] = number(1.0 / cert.coefficients(0));
                j["certificate"] = to_json(cert);
                out.output = j.dump(2) + "\n";
            }
        })) {
        return failure_outcome(*f, format);
    }
    return out;
}

RunOutcome run_lp(const RunConfig& config)
{
    std::string format = "json";
    RunOutcome out;
    if (auto f = capture([&] {
            format = pick_format(config, "json");
            const MeasureSpec spec = parse_space(config.space);
            if (spec.kind != SpaceKind::hamming) throw ValidationError("the LP oracle runs on Hamming spaces only");
            const LPMode mode = parse_lp_mode(config.lp_mode);
            std::vector<int> ds;
            if (config.d) {
                ds.push_back(*config.d);
            } else {
                for (int d = 1; d <= spec.dimension; ++d) ds.push_back(d);
            }
            std::vector<LPSolution> sols;
            for (int d : ds) sols.push_back(delsarte_lp(spec.dimension, d, mode));
            if (format == "csv") {
                std::string csv = csv_join({"n", "d", "mode", "status", "value", "exact"});
                for (const auto& s : sols) {
                    csv += csv_join({std::to_string(s.n), std::to_string(s.d), to_string(s.mode), to_string(s.status),
                                     fmt(s.value), s.exact_value});
                }
                out.output = csv;
            } else if (format == "text") {
                for (const auto& s : sols) {
                    out.output += "n=" + std::to_string(s.n) + " d=" + std::to_string(s.d) + " status=" +
                                  to_string(s.status) + " value=" + fmt(s.value) +
                                  (s.exact_value.empty() ? "" : " exact=" + s.exact_value) + "\n";
                }
            } else if (sols.size() == 1) {
                out.output = to_json(sols[0]).dump(2) + "\n";
            } else {
                Json arr = Json::array();
                for (const auto& s : sols) arr.push_back(to_json(s));
                out.output = Json{{"schema", kSchemaVersion}, {"results", arr}}.dump(2) + "\n";
            }
            const bool all_optimal = std::all_of(sols.begin(), sols.end(),
                                                 [](const LPSolution& s) { return s.status == LPStatus::optimal; });
            out.exit_code = all_optimal ? ok : numeric;
        })) {
        return failure_outcome(*f, format);
    }
    return out;
}

RunOutcome run_nrt(const RunConfig& config)
{
    std::string format = "csv";
    RunOutcome out;
    if (auto f = capture([&] {
            format = pick_format(config, "csv");
            const auto shapes = enumerate_shapes(config.r, config.n);
            boost::multiprecision::cpp_int total = 1;
            for (int i = 0; i < config.r * config.n; ++i) total *= config.q;
            std::vector<std::string> header;
            for (int i = 1; i <= config.r; ++i) header.push_back("e_" + std::to_string(i));
            header.insert(header.end(), {"e_0", "nrt_weight", "w", "count"});
            std::string csv = csv_join(header);
            Json rows = Json::array();
            std::string text;
            for (const auto& e : shapes) {
                const Rational w = shape_weight(e, config.q);
                const Rational count = w * Rational(total);
                std::vector<std::string> row;
                for (int v : e.e) row.push_back(std::to_string(v));
                row.insert(row.end(), {std::to_string(e.e0()), std::to_string(e.weight()), w.str(), count.str()});
                csv += csv_join(row);
                rows.push_back({{"e", e.e}, {"e_0", e.e0()}, {"nrt_weight", e.weight()}, {"w", w.str()},
                                {"count", count.str()}});
                text += e.str() + " e_0=" + std::to_string(e.e0()) + " weight=" + std::to_string(e.weight()) +
                        " w=" + w.str() + " count=" + count.str() + "\n";
            }
            if (format == "csv") {
                out.output = csv;
            } else if (format == "text") {
                out.output = text;
            } else {
                out.output = Json{{"schema", kSchemaVersion}, {"r", config.r}, {"n", config.n}, {"q", config.q},
                                  {"shapes", rows}}
                                 .dump(2) +
                             "\n";
            }
        })) {
        return failure_outcome(*f, format);
    }
    return out;
}

}  // namespace delbound::cli
