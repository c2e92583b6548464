#ifndef DELBOUND_CONSTRUCTIONS_HPP
#define DELBOUND_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "delbound/bound_polynomial.hpp"
#include "delbound/feasibility.hpp"

namespace delbound {

enum class Method { mrrw, lev, spectral };

/// Sign of the corner term in the s-independent operator J_k + sigma rho_k(1) e_k e_k^T.
enum class SignVariant { subtractive, additive };

std::string to_string(Method method);
Method parse_method(const std::string& name);
std::string to_string(SignVariant variant);
SignVariant parse_sign_variant(const std::string& name);

struct BoundOptions {
    Tolerances tolerances = default_tolerances();
    SignVariant sign = SignVariant::subtractive;
    /// Pin the kernel degree instead of scanning / selecting it.
    std::optional<int> k;
    /// Basis for a pinned-degree spectral run (base, minus or plusminus).
    BasisId spectral_basis = BasisId::base;
    /// Largest kernel degree tried on continuous spaces.
    int max_k = 40;
};

/// Classical bounds, reported next to the polynomial ones (Hamming only).
struct Baselines {
    std::optional<double> singleton;
    std::optional<double> hamming;
    std::optional<double> plotkin;
};

Baselines classical_baselines(int n, int d);

/// A certified bound. `s` is the requested maximal inner product; the
/// polynomial may have been built for some s_used >= s, which is what the
/// certificate audits.
struct BoundResult {
    Method method = Method::lev;
    std::string space;
    std::optional<int> n;
    std::optional<int> d;
    double s = 0.0;
    double s_used = 0.0;
    int k = 0;
    int degree = 0;
    double bound = 0.0;
    std::optional<double> closed_form;
    BoundPolynomial polynomial;
    ConeCertificate certificate;
    Baselines baselines;
};

/// Raised by bound_value when f_0 <= 0.
class NotInConeError : public NotCertifiedError {
public:
    NotInConeError(const std::string& what, ConeCertificate cert) : NotCertifiedError(what), certificate(std::move(cert)) {}
    ConeCertificate certificate;
};

BoundPolynomial mrrw_poly(const MeasureSpec& spec, int k, double s);
/// -(1-s) K_k(1,s)^2 / (a_k p_{k+1}(s) p_k(s)), for x_k < s < x_{k+1}.
double mrrw_bound_closed(const MeasureSpec& spec, int k, double s);
BoundPolynomial lev_odd_poly(const MeasureSpec& spec, int k, double s);
BoundPolynomial lev_even_poly(const MeasureSpec& spec, int k, double s);

/// One Levenshtein validity window: [x_k^+-, x_{k+1}^-] (odd) or
/// (x_{k+1}^-, x_{k+1}^+-) (even), with x_0^+- = -1.
struct LevWindow {
    int k = 0;
    bool even = false;
    double lo = -1.0;
    double hi = -1.0;
};

std::vector<LevWindow> lev_windows(const MeasureSpec& spec, int max_k = 40);

struct LevSelection {
    int k = 0;
    bool even = false;
};

LevSelection lev_degree_select(const MeasureSpec& spec, double s, int max_k = 40);

/// f(1)/f_0 = 1/f_0; throws NotInConeError when f_0 <= 0.
double bound_value(const MeasureSpec& spec, const BoundPolynomial& f);

/// Certify f on [-1, f.s] and package it; throws NotCertifiedError on a failed certificate.
BoundResult certify(const MeasureSpec& spec, Method method, BoundPolynomial f, double s_target,
                    const Tolerances& tol);

/// Best certified bound for codes with inner products in [-1, s].
BoundResult bound_at(const MeasureSpec& spec, double s, Method method, const BoundOptions& options = {});

/// Hamming-space wrapper: s = 1 - 2d/n, with classical baselines attached.
BoundResult bound_for_distance(const MeasureSpec& spec, int d, Method method, const BoundOptions& options = {});

/// 1 - 2d/n
double inner_product_for_distance(int n, int d);

}  // namespace delbound

#endif
