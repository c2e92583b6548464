#ifndef DELBOUND_FEASIBILITY_HPP
#define DELBOUND_FEASIBILITY_HPP

#include <Eigen/Core>

#include <string>

#include "delbound/bound_polynomial.hpp"

namespace delbound {

/// Acceptance thresholds of the cone test. Defaults can be overridden with
/// DELBOUND_TOL="coeff=1e-9,pos=1e-12,sign=1e-9,grid=2048".
struct Tolerances {
    double coeff = 1e-9;     ///< f_i >= -coeff counts as nonnegative (i >= 1)
    double positive = 1e-12; ///< f_0 must exceed this
    double sign = 1e-9;      ///< f <= sign on the audit set of [-1, s]
    int grid = 2048;
};

Tolerances default_tolerances();
/// Parses the DELBOUND_TOL syntax on top of `base`.
Tolerances parse_tolerances(const std::string& text, Tolerances base = {});

/// Fourier coefficients f_0..f_n of f in the base orthonormal system. On
/// discrete spaces n may not exceed the space's maximal degree.
Eigen::VectorXd fourier_expand(const MeasureSpec& spec, const PolynomialFn& f, int n);

/// Coefficients that decide the Delsarte conditions for f as a function on
/// the space: all deg f + 1 of them on continuous spaces; on discrete spaces
/// the expansion of f's restriction to the support (at most n_space + 1).
Eigen::VectorXd delsarte_coefficients(const MeasureSpec& spec, const PolynomialFn& f);

enum class Verdict { pass, fail };

/// Evidence for (or against) membership of f in the cone of s.
struct ConeCertificate {
    Eigen::VectorXd coefficients;
    int min_coeff_index = -1;        ///< index >= 1 of the smallest coefficient, -1 if none
    double min_coeff_value = 0.0;
    double max_on_interval = 0.0;    ///< max of f over the audit set
    double argmax = -1.0;
    int audit_points = 0;
    double s = 0.0;
    Tolerances tolerances;
    Verdict verdict = Verdict::fail;
    std::string reason;              ///< first violated condition; empty on pass
    std::string id;                  ///< content hash, "cert-<16 hex>"

    bool passed() const { return verdict == Verdict::pass; }
};

ConeCertificate cone_certificate(const MeasureSpec& spec, const BoundPolynomial& f, double s,
                                 const Tolerances& tol = default_tolerances());

}  // namespace delbound

#endif
