#include "delbound/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "delbound/errors.hpp"

namespace delbound {

namespace {

constexpr double kResidualContract = 1e-9;
constexpr double kTie = 1e-12;

std::string dump(const Eigen::MatrixXd& m)
{
    std::ostringstream os;
    os.precision(17);
    os << m;
    return os.str();
}

Family family_for(BasisId basis)
{
    switch (basis) {
    case BasisId::base: return Family::mrrw;
    case BasisId::minus: return Family::lev_odd;
    case BasisId::plusminus: return Family::lev_even;
    }
    return Family::mrrw;
}

bool strictly_positive(const Eigen::VectorXd& v) { return (v.array() > 0.0).all(); }

void normalize_sign(Eigen::VectorXd& v)
{
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v(i) != 0.0) {
            if (v(i) < 0.0) v = -v;
            return;
        }
    }
}

}  // namespace

Eigen::MatrixXd JacobiOperator::matrix() const
{
    Eigen::MatrixXd m = jacobi;
    if (rho) m(k, k) += *rho;
    return m;
}

JacobiOperator build_Tk(const MeasureSpec& spec, BasisId basis, int k, double s)
{
    if (k < 0) throw ValidationError("operator degree must be nonnegative");
    auto system = orthonormal_system(spec, basis, k);
    const Eigen::VectorXd p = system->eval_upto(k, s);
    if (std::abs(p(k)) <= 1e-12) {
        throw ValidationError("singular rho_k: s = " + std::to_string(s) + " is a zero of p_" + std::to_string(k) +
                              " in the " + to_string(basis) + " basis");
    }
    JacobiOperator op;
    op.jacobi = system->jacobi(k);
    op.rho = system->scaled_next(k, s) / p(k);
    op.basis = basis;
    op.k = k;
    return op;
}

EigenPair top_eigenpair(const JacobiOperator& op)
{
    const Eigen::MatrixXd t = op.matrix();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(t);
    if (solver.info() != Eigen::Success) {
        throw NumericError("symmetric eigensolver did not converge on\n" + dump(t));
    }
    const Eigen::Index top = t.rows() - 1;
    EigenPair pair;
    pair.lambda = solver.eigenvalues()(top);
    pair.vector = solver.eigenvectors().col(top);
    if (top >= 1 && std::abs(solver.eigenvalues()(top - 1) - pair.lambda) <= kTie) {
        pair.tied_lambda = solver.eigenvalues()(top - 1);
        Eigen::VectorXd other = solver.eigenvectors().col(top - 1);
        normalize_sign(other);
        if (strictly_positive(other)) {
            pair.lambda = *pair.tied_lambda;
            pair.tied_lambda = solver.eigenvalues()(top);
            pair.vector = other;
        }
    }
    normalize_sign(pair.vector);
    pair.vector.normalize();
    pair.residual = (t * pair.vector - pair.lambda * pair.vector).norm();
    if (!(pair.residual <= kResidualContract)) {
        throw NumericError("eigenpair residual " + std::to_string(pair.residual) + " exceeds 1e-9 for\n" + dump(t));
    }
    return pair;
}

KernelEigenCheck verify_kernel_eigen(const MeasureSpec& spec, BasisId basis, int k, double s)
{
    const JacobiOperator op = build_Tk(spec, basis, k, s);
    auto system = orthonormal_system(spec, basis, k);
    const Eigen::VectorXd v = system->eval_upto(k, s);
    KernelEigenCheck check;
    check.residual = (op.matrix() * v - s * v).norm();
    check.in_window = system->largest_zero(k) < s && s < system->largest_zero(k + 1);
    const EigenPair top = top_eigenpair(op);
    check.top_lambda = top.lambda;
    const double alignment = std::abs(top.vector.dot(v.normalized()));
    check.kernel_is_top = std::abs(top.lambda - s) <= 1e-10 && alignment >= 1.0 - 1e-12 && strictly_positive(top.vector);
    if (check.in_window && !check.kernel_is_top) {
        throw NumericError("Perron-Frobenius check failed: K_k(., s) is not the positive top eigenvector of T_k(s) at s = " +
                           std::to_string(s));
    }
    return check;
}

BoundResult spectral_recover_bound(const MeasureSpec& spec, BasisId basis, int k, double s, const Tolerances& tol)
{
    const JacobiOperator op = build_Tk(spec, basis, k, s);
    const EigenPair top = top_eigenpair(op);
    if (std::abs(top.lambda - s) > 1e-9 * std::max(1.0, std::abs(s))) {
        throw ValidationError("s = " + std::to_string(s) + " is outside the window where K_k(., s) is the top " +
                              "eigenfunction of T_k(s) (top eigenvalue " + std::to_string(top.lambda) + ")");
    }
    const Family family = family_for(basis);
    BoundPolynomial f = make_kernel_square(spec, family, Route::spectral, basis, k, s, s, top.vector);
    BoundResult result = certify(spec, Method::spectral, std::move(f), s, tol);

    double analytic = 0.0;
    if (basis == BasisId::base) {
        try {
            analytic = mrrw_bound_closed(spec, k, s);
        } catch (const ValidationError&) {
            analytic = bound_value(spec, mrrw_poly(spec, k, s));
        }
    } else {
        const BoundPolynomial g = basis == BasisId::minus ? lev_odd_poly(spec, k, s) : lev_even_poly(spec, k, s);
        analytic = bound_value(spec, g);
    }
    if (std::abs(result.bound - analytic) > 1e-7 * std::abs(analytic)) {
        throw NumericError("spectral and analytic routes disagree: " + std::to_string(result.bound) + " vs " +
                           std::to_string(analytic));
    }
    result.closed_form = analytic;
    return result;
}

namespace {

struct FixedKey {
    std::string space;
    int k;
    int sign;
    double coeff, positive, sign_tol;
    int grid;
    auto tie() const { return std::tie(space, k, sign, coeff, positive, sign_tol, grid); }
    bool operator<(const FixedKey& o) const { return tie() < o.tie(); }
};

struct FixedOutcome {
    std::optional<BoundResult> result;
    std::string error;
};

std::mutex fixed_mutex;
std::map<FixedKey, FixedOutcome> fixed_cache;

FixedOutcome compute_fixed(const MeasureSpec& spec, int k, SignVariant sign, const Tolerances& tol)
{
    auto base = orthonormal_system(spec, BasisId::base, k);
    const Eigen::VectorXd p1 = base->eval_upto(k, 1.0);
    const double next1 = base->scaled_next(k, 1.0);  // a_k p_{k+1}(1)
    const double rho1 = next1 / p1(k);
    JacobiOperator op;
    op.jacobi = base->jacobi(k);
    op.rho = sign == SignVariant::subtractive ? -rho1 : rho1;
    op.basis = BasisId::base;
    op.k = k;
    const EigenPair top = top_eigenpair(op);
    if (!(1.0 - top.lambda > 1e-9)) {
        return {std::nullopt, "degenerate denominator: 1 - lambda_k = " + std::to_string(1.0 - top.lambda) +
                                  " for the " + to_string(sign) + " operator at k = " + std::to_string(k)};
    }
    const double eq10 = 4.0 * next1 * p1(k) / (1.0 - top.lambda);
    BoundPolynomial f = make_kernel_square(spec, Family::mrrw, Route::spectral, BasisId::base, k, top.lambda,
                                           top.lambda, top.vector);
    ConeCertificate cert = cone_certificate(spec, f, f.s, tol);
    if (!cert.passed()) {
        return {std::nullopt, "fixed-operator polynomial at k = " + std::to_string(k) + " failed: " + cert.reason};
    }
    BoundResult r = certify(spec, Method::spectral, std::move(f), top.lambda, tol);
    r.closed_form = eq10;
    r.bound = std::min(eq10, r.bound);
    return {std::move(r), {}};
}

}  // namespace

BoundResult spectral_bound_fixed(const MeasureSpec& spec, int k, SignVariant sign, const Tolerances& tol)
{
    if (k < 1) throw ValidationError("fixed-operator bound needs k >= 1");
    const FixedKey key{spec.key(), k, static_cast<int>(sign), tol.coeff, tol.positive, tol.sign, tol.grid};
    {
        std::lock_guard lock(fixed_mutex);
        if (auto it = fixed_cache.find(key); it != fixed_cache.end()) {
            if (it->second.result) return *it->second.result;
            throw NotCertifiedError(it->second.error);
        }
    }
    FixedOutcome outcome = compute_fixed(spec, k, sign, tol);
    {
        std::lock_guard lock(fixed_mutex);
        fixed_cache.emplace(key, outcome);
    }
    if (outcome.result) return *outcome.result;
    throw NotCertifiedError(outcome.error);
}

}  // namespace delbound
