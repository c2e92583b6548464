#include "delbound/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <sstream>
#include <vector>

#include "delbound/errors.hpp"

namespace delbound {

namespace {

void hash_bytes(std::uint64_t& h, const void* data, std::size_t size)
{
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < size; ++i) {
        h ^= bytes[i];
        h *= 1099511628211ULL;
    }
}

void hash_double(std::uint64_t& h, double x) { hash_bytes(h, &x, sizeof x); }

std::string certificate_id(const ConeCertificate& cert)
{
    std::uint64_t h = 14695981039346656037ULL;
    hash_double(h, cert.s);
    for (Eigen::Index i = 0; i < cert.coefficients.size(); ++i) hash_double(h, cert.coefficients(i));
    hash_double(h, cert.max_on_interval);
    hash_double(h, cert.tolerances.coeff);
    hash_double(h, cert.tolerances.positive);
    hash_double(h, cert.tolerances.sign);
    hash_bytes(h, &cert.tolerances.grid, sizeof cert.tolerances.grid);
    hash_bytes(h, cert.reason.data(), cert.reason.size());
    std::ostringstream os;
    os << "cert-" << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

// Expansion against an explicit rule (nodes, weights) of the base measure.
Eigen::VectorXd expand_on_rule(const OrthonormalSystem& base, const Eigen::VectorXd& nodes,
                               const Eigen::VectorXd& weights, const std::function<double(double)>& f, int n)
{
    Eigen::VectorXd coeffs = Eigen::VectorXd::Zero(n + 1);
    for (Eigen::Index j = 0; j < nodes.size(); ++j) {
        const double wf = weights(j) * f(nodes(j));
        coeffs += wf * base.eval_upto(n, nodes(j));
    }
    if (!coeffs.allFinite()) throw NumericError("Fourier expansion overflowed");
    return coeffs;
}

}  // namespace

Tolerances parse_tolerances(const std::string& text, Tolerances base)
{
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ValidationError("tolerance entry '" + item + "' is not key=value");
        const std::string key = item.substr(0, eq);
        const std::string val = item.substr(eq + 1);
        char* end = nullptr;
        const double v = std::strtod(val.c_str(), &end);
        if (end == val.c_str() || *end != '\0' || !(v > 0.0)) {
            throw ValidationError("tolerance '" + key + "' needs a positive number, got '" + val + "'");
        }
        if (key == "coeff")
            base.coeff = v;
        else if (key == "pos")
            base.positive = v;
        else if (key == "sign")
            base.sign = v;
        else if (key == "grid")
            base.grid = static_cast<int>(v);
        else
            throw ValidationError("unknown tolerance key '" + key + "' (coeff, pos, sign, grid)");
    }
    if (base.grid < 2) throw ValidationError("audit grid needs at least two points");
    return base;
}

Tolerances default_tolerances()
{
    if (const char* env = std::getenv("DELBOUND_TOL")) return parse_tolerances(env);
    return {};
}

Eigen::VectorXd fourier_expand(const MeasureSpec& spec, const PolynomialFn& f, int n)
{
    if (n < 0) throw ValidationError("fourier_expand needs a nonnegative degree");
    const int top = max_degree(spec, Variant::base);
    if (n > top) {
        throw ValidationError("fourier_expand: degree " + std::to_string(n) + " exceeds what the " +
                              std::to_string(top + 1) + "-point support of " + spec.descriptor() + " determines");
    }
    auto base = orthonormal_system(spec, Variant::base, n);
    if (spec.discrete()) return expand_on_rule(*base, spec.nodes, spec.weights, f.eval, n);
    const QuadratureRule rule = quadrature(spec, Variant::base, (std::max(f.degree, n) + n) / 2 + 1);
    return expand_on_rule(*base, rule.nodes, rule.weights, f.eval, n);
}

Eigen::VectorXd delsarte_coefficients(const MeasureSpec& spec, const PolynomialFn& f)
{
    const int n = spec.discrete() ? std::min(f.degree, max_degree(spec, Variant::base)) : f.degree;
    return fourier_expand(spec, f, n);
}

ConeCertificate cone_certificate(const MeasureSpec& spec, const BoundPolynomial& f, double s, const Tolerances& tol)
{
    if (!(s >= -1.0 && s < 1.0)) throw ValidationError("cone certificate needs s in [-1, 1)");
    ConeCertificate cert;
    cert.s = s;
    cert.tolerances = tol;
    cert.coefficients = f.fourier;

    // Coefficient conditions.
    for (Eigen::Index i = 1; i < cert.coefficients.size(); ++i) {
        if (cert.min_coeff_index < 0 || cert.coefficients(i) < cert.min_coeff_value) {
            cert.min_coeff_index = static_cast<int>(i);
            cert.min_coeff_value = cert.coefficients(i);
        }
    }

    // Sign audit on [-1, s]: support nodes, a uniform grid, and the critical
    // points of f located by bisection on sign changes of f'.
    std::vector<double> audit;
    if (spec.discrete()) {
        for (Eigen::Index j = 0; j < spec.nodes.size(); ++j) {
            if (spec.nodes(j) <= s) audit.push_back(spec.nodes(j));
        }
    }
    const double width = s + 1.0;
    for (int i = 0; i < tol.grid; ++i) audit.push_back(-1.0 + width * i / (tol.grid - 1));

    const int fine = 4 * tol.grid;
    double prev_x = -1.0;
    double prev_d = f.derivative(prev_x);
    for (int i = 1; i < fine; ++i) {
        const double x = -1.0 + width * i / (fine - 1);
        const double d = f.derivative(x);
        if ((prev_d < 0.0 && d > 0.0) || (prev_d > 0.0 && d < 0.0)) {
            double lo = prev_x, hi = x, dlo = prev_d;
            for (int it = 0; it < 200; ++it) {
                const double mid = lo + (hi - lo) / 2;
                if (mid <= lo || mid >= hi) break;
                const double dm = f.derivative(mid);
                if ((dm < 0.0) == (dlo < 0.0)) {
                    lo = mid;
                    dlo = dm;
                } else {
                    hi = mid;
                }
            }
            audit.push_back(lo);
            audit.push_back(hi);
        }
        prev_x = x;
        prev_d = d;
    }

    cert.audit_points = static_cast<int>(audit.size());
    cert.max_on_interval = -INFINITY;
    for (double x : audit) {
        const double v = f.value(x);
        if (std::isnan(v)) throw NumericError("polynomial evaluated to NaN during the sign audit");
        if (v > cert.max_on_interval) {
            cert.max_on_interval = v;
            cert.argmax = x;
        }
    }

    const double f0 = cert.coefficients(0);
    if (!(f0 > tol.positive)) {
        // Separate a vanishing f_0 from one that is merely below tol.positive
        // by comparing it with the rounding level of the expansion.
        const double noise = 1024.0 * std::numeric_limits<double>::epsilon() * cert.coefficients.cwiseAbs().sum();
        if (std::abs(f0) <= noise) {
            cert.reason = "f̂_0 = 0 (|f̂_0| at rounding level)";
        } else if (f0 < 0.0) {
            cert.reason = "f̂_0 < 0";
        } else {
            std::ostringstream os;
            os.precision(17);
            os << "f̂_0 = " << f0 << " does not exceed the positivity tolerance " << tol.positive;
            cert.reason = os.str();
        }
    } else if (cert.min_coeff_index >= 1 && cert.min_coeff_value < -tol.coeff) {
        cert.reason = "f̂_" + std::to_string(cert.min_coeff_index) + " < 0";
    } else if (cert.max_on_interval > tol.sign) {
        std::ostringstream os;
        os.precision(17);
        os << "sign condition: f(" << cert.argmax << ") = " << cert.max_on_interval << " > 0 on [-1, s]";
        cert.reason = os.str();
    }
    cert.verdict = cert.reason.empty() ? Verdict::pass : Verdict::fail;
    cert.id = certificate_id(cert);
    return cert;
}

}  // namespace delbound
