#include "delbound/serialize.hpp"

#include <charconv>
#include <cmath>

#include "delbound/errors.hpp"

namespace delbound {

Json number(double v)
{
    if (!std::isfinite(v)) return nullptr;
    return v;
}

namespace {

Json vector_json(const Eigen::VectorXd& v)
{
    Json arr = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(number(v(i)));
    return arr;
}

Eigen::VectorXd vector_from(const Json& j, const std::string& field)
{
    if (!j.is_array()) throw ValidationError("field '" + field + "' must be an array of numbers");
    Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number()) {
            throw ValidationError("field '" + field + "[" + std::to_string(i) + "]' must be a number");
        }
        v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
    }
    return v;
}

int parse_int_param(const std::string& text, const std::string& what)
{
    int value = 0;
    const auto* end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, value);
    if (res.ec != std::errc() || res.ptr != end) {
        throw ValidationError("malformed " + what + " '" + text + "'");
    }
    return value;
}

}  // namespace

MeasureSpec parse_space(const std::string& descriptor)
{
    const auto colon = descriptor.find(':');
    if (colon == std::string::npos) {
        throw ValidationError("space must look like hamming:N or sphere:D, got '" + descriptor + "'");
    }
    const std::string kind = descriptor.substr(0, colon);
    const int param = parse_int_param(descriptor.substr(colon + 1), "space parameter");
    if (kind == "hamming") return hamming_space(param);
    if (kind == "sphere") return sphere_space(param);
    throw ValidationError("unknown space kind '" + kind + "' (expected hamming or sphere)");
}

Json to_json(const MeasureSpec& spec)
{
    Json j;
    j["kind"] = to_string(spec.kind);
    switch (spec.kind) {
    case SpaceKind::hamming: j["params"] = {{"n", spec.dimension}}; break;
    case SpaceKind::sphere: j["params"] = {{"d", spec.dimension}}; break;
    case SpaceKind::custom:
        if (spec.discrete()) {
            j["params"] = Json::object();
        } else {
            j["params"] = {{"a", vector_json(spec.recurrence.a)}, {"b", vector_json(spec.recurrence.b)}};
        }
        break;
    }
    if (spec.kind == SpaceKind::custom && spec.discrete()) {
        j["nodes"] = vector_json(spec.nodes);
        j["weights"] = vector_json(spec.weights);
    }
    return j;
}

MeasureSpec measure_from_json(const Json& j)
{
    if (j.is_string()) return parse_space(j.get<std::string>());
    if (!j.is_object()) throw ValidationError("field 'space' must be a string or an object");
    if (!j.contains("kind") || !j["kind"].is_string()) throw ValidationError("field 'space.kind' missing");
    const std::string kind = j["kind"].get<std::string>();
    const Json params = j.value("params", Json::object());
    auto int_param = [&](const char* name) {
        if (!params.contains(name) || !params[name].is_number_integer()) {
            throw ValidationError(std::string("field 'space.params.") + name + "' must be an integer");
        }
        return params[name].get<int>();
    };
    if (kind == "hamming") return hamming_space(int_param("n"));
    if (kind == "sphere") return sphere_space(int_param("d"));
    if (kind == "custom") {
        if (j.contains("nodes")) {
            if (!j.contains("weights")) throw ValidationError("field 'space.weights' missing");
            return custom_discrete(vector_from(j["nodes"], "space.nodes"), vector_from(j["weights"], "space.weights"));
        }
        if (!params.contains("a") || !params.contains("b")) {
            throw ValidationError("custom space needs nodes/weights or params.a/params.b");
        }
        return custom_recurrence(vector_from(params["a"], "space.params.a"), vector_from(params["b"], "space.params.b"));
    }
    throw ValidationError("field 'space.kind' has unknown value '" + kind + "'");
}

Json to_json(const Tolerances& tol)
{
    return {{"coeff", tol.coeff}, {"pos", tol.positive}, {"sign", tol.sign}, {"grid", tol.grid}};
}

Json to_json(const ConeCertificate& cert)
{
    Json j;
    j["id"] = cert.id;
    j["verdict"] = cert.passed() ? "pass" : "fail";
    j["reason"] = cert.reason;
    j["s"] = number(cert.s);
    j["coefficients"] = vector_json(cert.coefficients);
    j["min_coeff_index"] = cert.min_coeff_index;
    j["min_coeff_value"] = number(cert.min_coeff_value);
    j["max_on_interval"] = number(cert.max_on_interval);
    j["argmax"] = number(cert.argmax);
    j["audit_points"] = cert.audit_points;
    j["tolerances"] = to_json(cert.tolerances);
    return j;
}

Json to_json(const Baselines& baselines)
{
    Json j = Json::object();
    if (baselines.singleton) j["singleton"] = number(*baselines.singleton);
    if (baselines.hamming) j["hamming"] = number(*baselines.hamming);
    if (baselines.plotkin) j["plotkin"] = number(*baselines.plotkin);
    return j;
}

Json to_json(const BoundResult& result)
{
    Json j;
    j["schema"] = kSchemaVersion;
    j["space"] = result.space;
    j["method"] = to_string(result.method);
    if (result.n) j["n"] = *result.n;
    if (result.d) j["d"] = *result.d;
    j["s"] = number(result.s);
    j["s_used"] = number(result.s_used);
    j["k"] = result.k;
    j["degree"] = result.degree;
    j["family"] = to_string(result.polynomial.family);
    j["route"] = to_string(result.polynomial.route);
    j["bound"] = number(result.bound);
    if (result.closed_form) j["closed_form"] = number(*result.closed_form);
    j["certificate_id"] = result.certificate.id;
    j["baselines"] = to_json(result.baselines);
    return j;
}

Json to_json(const JacobiOperator& op)
{
    const Eigen::MatrixXd m = op.matrix();
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(number(m(i, c)));
        rows.push_back(std::move(row));
    }
    Json j;
    j["basis"] = to_string(op.basis);
    j["k"] = op.k;
    j["rho"] = op.rho ? number(*op.rho) : Json(nullptr);
    j["matrix"] = std::move(rows);
    return j;
}

Json to_json(const LPSolution& solution)
{
    Json j;
    j["schema"] = kSchemaVersion;
    j["n"] = solution.n;
    j["d"] = solution.d;
    j["mode"] = to_string(solution.mode);
    j["status"] = to_string(solution.status);
    j["value"] = number(solution.value);
    if (solution.mode == LPMode::exact) j["exact"] = solution.exact_value;
    Json b = Json::array();
    for (double v : solution.B) b.push_back(number(v));
    j["B"] = std::move(b);
    if (!solution.B_exact.empty()) j["B_exact"] = solution.B_exact;
    j["iterations"] = solution.iterations;
    return j;
}

}  // namespace delbound
