#include "delbound/orthopoly.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>

#include "delbound/errors.hpp"

namespace delbound {

OrthonormalSystem::OrthonormalSystem(Variant variant, RecurrenceCoeffs coeffs, double mass, int max_degree)
    : variant_(variant), coeffs_(std::move(coeffs)), mass_(mass), p0_(1.0 / std::sqrt(mass)), max_degree_(max_degree)
{
    if (!(mass > 0.0)) throw NumericError("orthonormal system needs a positive mass");
    for (int i = 0; i < std::min(degree(), max_degree_); ++i) {
        if (!(coeffs_.a(i) > 0.0)) {
            throw NumericError("recurrence coefficient a_" + std::to_string(i) + " is not positive");
        }
    }
}

void OrthonormalSystem::require_degree(int k, const char* what) const
{
    if (k < 0 || k > degree()) {
        throw ValidationError(std::string(what) + ": degree " + std::to_string(k) + " outside 0.." +
                              std::to_string(degree()) + " for the " + to_string(variant_) + " system");
    }
}

double OrthonormalSystem::eval(int i, double x) const
{
    require_degree(i, "eval_basis");
    return evaluate_recurrence<double>(coeffs_, p0_, x, i).back();
}

Eigen::VectorXd OrthonormalSystem::eval_upto(int k, double x) const
{
    require_degree(k, "eval_basis");
    const auto p = evaluate_recurrence<double>(coeffs_, p0_, x, k);
    return Eigen::Map<const Eigen::VectorXd>(p.data(), k + 1);
}

void OrthonormalSystem::eval_upto_with_derivative(int k, double x, Eigen::VectorXd& p, Eigen::VectorXd& dp) const
{
    require_degree(k, "eval_basis");
    evaluate_recurrence_with_derivative(coeffs_, p0_, x, k, p, dp);
}

double OrthonormalSystem::scaled_next(int k, double x) const
{
    require_degree(k, "scaled_next");
    const auto p = evaluate_recurrence<double>(coeffs_, p0_, x, k);
    return scaled_next_term<double>(coeffs_, p, x, k);
}

Eigen::MatrixXd OrthonormalSystem::jacobi(int k) const
{
    require_degree(k, "jacobi_matrix");
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(k + 1, k + 1);
    for (int i = 0; i <= k; ++i) {
        j(i, i) = coeffs_.b(i);
        if (i < k) j(i, i + 1) = j(i + 1, i) = coeffs_.a(i);
    }
    return j;
}

Eigen::VectorXd OrthonormalSystem::zeros(int k) const
{
    if (k < 0 || k > degree() + 1) {
        throw ValidationError("zeros: degree " + std::to_string(k) + " outside 0.." + std::to_string(degree() + 1));
    }
    if (k == 0) return Eigen::VectorXd();
    Eigen::VectorXd diag = coeffs_.b.head(k);
    Eigen::VectorXd off = coeffs_.a.head(k - 1);
    return tridiagonal_eigenvalues<double>(diag, off);
}

double OrthonormalSystem::largest_zero(int k) const
{
    if (k == 0) return -1.0;
    if (k < 0 || k > degree() + 1) {
        throw ValidationError("largest_zero: degree " + std::to_string(k) + " outside 0.." +
                              std::to_string(degree() + 1));
    }
    Eigen::VectorXd diag = coeffs_.b.head(k);
    Eigen::VectorXd off = coeffs_.a.head(k - 1);
    return tridiagonal_largest_eigenvalue<double>(diag, off);
}

namespace {

class SystemCache {
public:
    std::shared_ptr<const OrthonormalSystem> get(const MeasureSpec& spec, Variant variant, int degree)
    {
        const auto key = std::make_pair(spec.key(), static_cast<int>(variant));
        {
            std::shared_lock lock(mutex_);
            if (auto it = systems_.find(key); it != systems_.end() && it->second->degree() >= degree) return it->second;
        }
        const int top = max_degree(spec, variant);
        // Continuous systems grow in blocks so repeated requests stay cheap.
        int want = degree;
        if (top == INT_MAX) want = ((degree + 16) / 16) * 16;
        want = std::min(want, top);
        auto system = std::make_shared<const OrthonormalSystem>(variant, measure_recurrence(spec, variant, want),
                                                                variant_mass(spec, variant), top);
        std::unique_lock lock(mutex_);
        auto& slot = systems_[key];
        if (!slot || slot->degree() < system->degree()) slot = system;
        return slot;
    }

private:
    std::shared_mutex mutex_;
    std::map<std::pair<std::string, int>, std::shared_ptr<const OrthonormalSystem>> systems_;
};

SystemCache& system_cache()
{
    static SystemCache cache;
    return cache;
}

}  // namespace

std::shared_ptr<const OrthonormalSystem> orthonormal_system(const MeasureSpec& spec, Variant variant, int degree)
{
    const int top = max_degree(spec, variant);
    if (top < 0) {
        throw ValidationError("the " + to_string(variant) + " measure on " + spec.descriptor() + " has no support");
    }
    if (degree < 0) throw ValidationError("negative degree requested");
    if (degree > top) {
        throw ValidationError("degree " + std::to_string(degree) + " exceeds the maximal degree " +
                              std::to_string(top) + " of the " + to_string(variant) + " system on " +
                              spec.descriptor());
    }
    return system_cache().get(spec, variant, degree);
}

RecurrenceCoeffs recurrence_coeffs(const MeasureSpec& spec, BasisId basis, int m)
{
    auto system = orthonormal_system(spec, basis, m);
    RecurrenceCoeffs rc;
    rc.a = system->coeffs().a.head(m + 1);
    rc.b = system->coeffs().b.head(m + 1);
    return rc;
}

double eval_basis(const MeasureSpec& spec, BasisId basis, int i, double x)
{
    return orthonormal_system(spec, basis, i)->eval(i, x);
}

Eigen::MatrixXd jacobi_matrix(const MeasureSpec& spec, BasisId basis, int k)
{
    return orthonormal_system(spec, basis, k)->jacobi(k);
}

Eigen::VectorXd zeros(const MeasureSpec& spec, BasisId basis, int k)
{
    if (k == 0) return Eigen::VectorXd();
    return orthonormal_system(spec, basis, k - 1)->zeros(k);
}

double largest_zero(const MeasureSpec& spec, BasisId basis, int k)
{
    if (k == 0) return -1.0;
    return orthonormal_system(spec, basis, k - 1)->largest_zero(k);
}

}  // namespace delbound
