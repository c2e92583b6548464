#ifndef DELBOUND_SERIALIZE_HPP
#define DELBOUND_SERIALIZE_HPP

#include <json.hpp>

#include "delbound/constructions.hpp"
#include "delbound/lp_oracle.hpp"
#include "delbound/spectral.hpp"

namespace delbound {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

/// {kind, params{...}, nodes?, weights?}
Json to_json(const MeasureSpec& spec);
/// Accepts the object form above or a "hamming:N" / "sphere:D" string.
MeasureSpec measure_from_json(const Json& j);
/// "hamming:N" or "sphere:D"
MeasureSpec parse_space(const std::string& descriptor);

Json to_json(const Tolerances& tol);
Json to_json(const ConeCertificate& cert);
Json to_json(const Baselines& baselines);
/// {schema, space, method, n?, d?, s, degree, bound, certificate_id, baselines{}, ...}
Json to_json(const BoundResult& result);
Json to_json(const JacobiOperator& op);
Json to_json(const LPSolution& solution);

/// Non-finite doubles become null.
Json number(double v);

}  // namespace delbound

#endif
