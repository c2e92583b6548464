#include "delbound/spaces.hpp"

#include <climits>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <tuple>

#include "delbound/errors.hpp"

namespace delbound {

namespace {

std::uint64_t fnv1a(std::uint64_t h, const Eigen::VectorXd& v)
{
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        unsigned char bytes[sizeof(double)];
        const double x = v(i);
        std::memcpy(bytes, &x, sizeof(double));
        for (unsigned char c : bytes) {
            h ^= c;
            h *= 1099511628211ULL;
        }
    }
    return h;
}

std::string hex(std::uint64_t h)
{
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

int positive_support(const MeasureSpec& spec, Variant variant)
{
    int count = 0;
    for (Eigen::Index j = 0; j < spec.nodes.size(); ++j) {
        if (spec.weights(j) * variant_multiplier(variant, spec.nodes(j)) > 0.0) ++count;
    }
    return count;
}

RecurrenceCoeffs base_closed_form(const MeasureSpec& spec, int m)
{
    RecurrenceCoeffs rc;
    rc.a = Eigen::VectorXd::Zero(m + 1);
    rc.b = Eigen::VectorXd::Zero(m + 1);
    if (spec.kind == SpaceKind::hamming) {
        const double n = spec.dimension;
        for (int i = 0; i <= m; ++i) rc.a(i) = std::sqrt((n - i) * (i + 1.0)) / n;
    } else {
        // Normalized Gegenbauer polynomials for the weight (1-x^2)^((d-3)/2).
        const double d = spec.dimension;
        for (int i = 0; i <= m; ++i) {
            rc.a(i) = std::sqrt((i + 1.0) * (i + d - 2.0) / ((2.0 * i + d - 2.0) * (2.0 * i + d)));
        }
    }
    return rc;
}

/// Read-mostly memo for Gauss rules; population is idempotent.
class RuleCache {
public:
    template <typename Build>
    QuadratureRule get(const std::string& key, Variant v, int m, Build build)
    {
        const auto k = std::make_tuple(key, static_cast<int>(v), m);
        {
            std::shared_lock lock(mutex_);
            if (auto it = rules_.find(k); it != rules_.end()) return it->second;
        }
        QuadratureRule rule = build();
        std::unique_lock lock(mutex_);
        return rules_.emplace(k, std::move(rule)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<std::tuple<std::string, int, int>, QuadratureRule> rules_;
};

RuleCache& rule_cache()
{
    static RuleCache cache;
    return cache;
}

}  // namespace

std::string to_string(SpaceKind kind)
{
    switch (kind) {
    case SpaceKind::hamming: return "hamming";
    case SpaceKind::sphere: return "sphere";
    case SpaceKind::custom: return "custom";
    }
    return "custom";
}

std::string to_string(Variant variant)
{
    switch (variant) {
    case Variant::base: return "base";
    case Variant::minus: return "minus";
    case Variant::plusminus: return "plusminus";
    }
    return "base";
}

Variant parse_variant(const std::string& name)
{
    if (name == "base") return Variant::base;
    if (name == "minus") return Variant::minus;
    if (name == "plusminus") return Variant::plusminus;
    throw ValidationError("unknown basis '" + name + "' (expected base, minus or plusminus)");
}

int multiplier_degree(Variant variant)
{
    switch (variant) {
    case Variant::base: return 0;
    case Variant::minus: return 1;
    case Variant::plusminus: return 2;
    }
    return 0;
}

double variant_multiplier(Variant variant, double x)
{
    switch (variant) {
    case Variant::base: return 1.0;
    case Variant::minus: return 1.0 - x;
    case Variant::plusminus: return (1.0 - x) * (1.0 + x);
    }
    return 1.0;
}

std::string MeasureSpec::descriptor() const
{
    if (kind == SpaceKind::hamming) return "hamming:" + std::to_string(dimension);
    if (kind == SpaceKind::sphere) return "sphere:" + std::to_string(dimension);
    std::uint64_t h = 14695981039346656037ULL;
    h = fnv1a(h, nodes);
    h = fnv1a(h, weights);
    h = fnv1a(h, recurrence.a);
    h = fnv1a(h, recurrence.b);
    return "custom:" + hex(h);
}

const std::string& MeasureSpec::key() const
{
    if (key_.empty()) key_ = descriptor();
    return key_;
}

MeasureSpec hamming_space(int n)
{
    if (n < 1) throw ValidationError("Hamming space needs n >= 1, got " + std::to_string(n));
    MeasureSpec spec;
    spec.kind = SpaceKind::hamming;
    spec.dimension = n;
    spec.nodes.resize(n + 1);
    spec.weights.resize(n + 1);
    double binom = 1.0;  // C(n, j)
    const double scale = std::ldexp(1.0, -n);
    for (int j = 0; j <= n; ++j) {
        spec.nodes(j) = 1.0 - 2.0 * j / n;
        spec.weights(j) = binom * scale;
        binom = binom * (n - j) / (j + 1.0);
    }
    return spec;
}

MeasureSpec sphere_space(int d)
{
    if (d < 3) throw ValidationError("sphere space needs d >= 3, got " + std::to_string(d));
    MeasureSpec spec;
    spec.kind = SpaceKind::sphere;
    spec.dimension = d;
    return spec;
}

MeasureSpec custom_discrete(Eigen::VectorXd nodes, Eigen::VectorXd weights)
{
    if (nodes.size() == 0 || nodes.size() != weights.size()) {
        throw ValidationError("custom discrete measure needs matching, non-empty node and weight lists");
    }
    double total = 0.0;
    for (Eigen::Index j = 0; j < nodes.size(); ++j) {
        if (!(nodes(j) >= -1.0 && nodes(j) <= 1.0)) {
            throw ValidationError("node " + std::to_string(j) + " lies outside [-1,1]");
        }
        if (!(weights(j) > 0.0)) throw ValidationError("weight " + std::to_string(j) + " is not positive");
        total += weights(j);
    }
    if (std::abs(total - 1.0) > 1e-12) throw ValidationError("weights must sum to 1 within 1e-12");
    MeasureSpec spec;
    spec.kind = SpaceKind::custom;
    spec.nodes = std::move(nodes);
    spec.weights = std::move(weights);
    return spec;
}

MeasureSpec custom_recurrence(Eigen::VectorXd a, Eigen::VectorXd b)
{
    if (b.size() < 2 || a.size() != b.size()) {
        throw ValidationError("custom recurrence needs equally long a and b with at least two entries");
    }
    for (Eigen::Index i = 0; i + 1 < a.size(); ++i) {
        if (!(a(i) > 0.0)) throw ValidationError("custom recurrence a_" + std::to_string(i) + " is not positive");
    }
    MeasureSpec spec;
    spec.kind = SpaceKind::custom;
    spec.recurrence.a = std::move(a);
    spec.recurrence.b = std::move(b);
    return spec;
}

int max_degree(const MeasureSpec& spec, Variant variant)
{
    if (spec.discrete()) return positive_support(spec, variant) - 1;
    if (spec.kind == SpaceKind::custom) {
        const int last = spec.recurrence.degree();
        return variant == Variant::base ? last : last - 3;
    }
    return INT_MAX;
}

RecurrenceCoeffs measure_recurrence(const MeasureSpec& spec, Variant variant, int m)
{
    const int top = max_degree(spec, variant);
    if (m < 0 || m > top) {
        throw ValidationError("degree " + std::to_string(m) + " exceeds the maximal degree " + std::to_string(top) +
                              " of the " + to_string(variant) + " system on " + spec.descriptor());
    }
    if (variant == Variant::base) {
        if (spec.kind == SpaceKind::hamming || spec.kind == SpaceKind::sphere) return base_closed_form(spec, m);
        if (!spec.discrete()) {
            RecurrenceCoeffs rc;
            rc.a = spec.recurrence.a.head(m + 1);
            rc.b = spec.recurrence.b.head(m + 1);
            return rc;
        }
    }
    if (spec.discrete()) {
        Eigen::VectorXd w(spec.nodes.size());
        for (Eigen::Index j = 0; j < w.size(); ++j) w(j) = spec.weights(j) * variant_multiplier(variant, spec.nodes(j));
        return discrete_stieltjes(spec.nodes, w, m);
    }
    // Continuous adjacent measure: an (m+3)-point base Gauss rule reproduces
    // every moment the Stieltjes procedure touches up to index m.
    const QuadratureRule rule = quadrature(spec, Variant::base, m + 3);
    Eigen::VectorXd w(rule.nodes.size());
    for (Eigen::Index j = 0; j < w.size(); ++j) w(j) = rule.weights(j) * variant_multiplier(variant, rule.nodes(j));
    return discrete_stieltjes(rule.nodes, w, m);
}

double variant_mass(const MeasureSpec& spec, Variant variant)
{
    return moment_functional(spec, Variant::base, [variant](double x) { return variant_multiplier(variant, x); },
                             multiplier_degree(variant));
}

QuadratureRule quadrature(const MeasureSpec& spec, Variant variant, int m)
{
    if (m < 1) throw ValidationError("quadrature order must be positive");
    return rule_cache().get(spec.key(), variant, m, [&] {
        const RecurrenceCoeffs rc = measure_recurrence(spec, variant, m - 1);
        const double mass = variant == Variant::base && !spec.discrete() ? 1.0 : variant_mass(spec, variant);
        return gauss_rule(rc, mass, m);
    });
}

double moment_functional(const MeasureSpec& spec, Variant variant, const std::function<double(double)>& f,
                         int degree)
{
    if (degree < 0) throw ValidationError("moment functional needs a nonnegative degree bound");
    double total = 0.0;
    if (spec.discrete()) {
        for (Eigen::Index j = 0; j < spec.nodes.size(); ++j) {
            const double x = spec.nodes(j);
            total += spec.weights(j) * variant_multiplier(variant, x) * f(x);
        }
    } else {
        const int m = (degree + multiplier_degree(variant)) / 2 + 1;
        const QuadratureRule rule = quadrature(spec, Variant::base, m);
        for (Eigen::Index j = 0; j < rule.nodes.size(); ++j) {
            const double x = rule.nodes(j);
            total += rule.weights(j) * variant_multiplier(variant, x) * f(x);
        }
    }
    if (!std::isfinite(total)) throw NumericError("moment functional overflowed on " + spec.descriptor());
    return total;
}

}  // namespace delbound
