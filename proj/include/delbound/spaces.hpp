#ifndef DELBOUND_SPACES_HPP
#define DELBOUND_SPACES_HPP

#include <Eigen/Core>

#include <functional>
#include <string>

#include "delbound/tridiagonal.hpp"

namespace delbound {

enum class SpaceKind { hamming, sphere, custom };

/// Which measure the inner product is taken against: dmu, (1-x)dmu or
/// (1-x^2)dmu. The adjacent measures are left unnormalized.
enum class Variant { base, minus, plusminus };

std::string to_string(SpaceKind kind);
std::string to_string(Variant variant);
Variant parse_variant(const std::string& name);

/// Polynomial degree of the variant's multiplier.
int multiplier_degree(Variant variant);
double variant_multiplier(Variant variant, double x);

/// A probability measure on [-1,1]: a discrete support (nodes + weights) or a
/// continuous measure known through its orthonormal recurrence.
struct MeasureSpec {
    SpaceKind kind = SpaceKind::custom;
    int dimension = 0;          ///< n for Hamming(n), d for Sphere(d)
    Eigen::VectorXd nodes;      ///< discrete support, descending for Hamming
    Eigen::VectorXd weights;
    RecurrenceCoeffs recurrence;  ///< base recurrence of a continuous custom measure

    bool discrete() const { return nodes.size() > 0; }
    /// "hamming:4", "sphere:3", "custom:<hash>"
    std::string descriptor() const;
    /// Stable identity used as cache key.
    const std::string& key() const;

private:
    mutable std::string key_;
};

MeasureSpec hamming_space(int n);
MeasureSpec sphere_space(int d);
MeasureSpec custom_discrete(Eigen::VectorXd nodes, Eigen::VectorXd weights);
MeasureSpec custom_recurrence(Eigen::VectorXd a, Eigen::VectorXd b);

/// Highest degree of an orthonormal polynomial the variant measure carries;
/// INT_MAX for continuous built-ins.
int max_degree(const MeasureSpec& spec, Variant variant);

/// Recurrence coefficients of the (possibly adjacent) measure, indices 0..m.
/// Built-in base systems use their closed forms; everything else goes through
/// the discretized Stieltjes procedure.
RecurrenceCoeffs measure_recurrence(const MeasureSpec& spec, Variant variant, int m);

/// F(multiplier) for the variant, i.e. the unnormalized total mass.
double variant_mass(const MeasureSpec& spec, Variant variant);

/// m-point Gauss rule of the variant measure (exact through degree 2m-1).
QuadratureRule quadrature(const MeasureSpec& spec, Variant variant, int m);

/// F(f), F^-(f) = F((1-x)f) or F^+-(f) = F((1-x^2)f); `degree` bounds deg f
/// so a continuous rule of exact order can be chosen.
double moment_functional(const MeasureSpec& spec, Variant variant, const std::function<double(double)>& f,
                         int degree);

}  // namespace delbound

#endif
