#include <doctest.h>

#include "delbound/errors.hpp"
#include "delbound/kernels.hpp"
#include "oracles.hpp"

using namespace delbound;

TEST_CASE("kernel values")
{
    auto g = oracle::rng(21);
    for (int t = 0; t < 20; ++t) {
        const double x = oracle::uniform(g, -1, 1), s = oracle::uniform(g, -1, 1);
        CHECK(cd_kernel(hamming_space(6), {BasisId::base, 0, s}, x) == 1.0);
        CHECK(cd_kernel(sphere_space(4), {BasisId::base, 0, s}, x) == 1.0);
    }
    CHECK(cd_kernel(hamming_space(4), {BasisId::base, 1, 0.25}, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("kernel symmetry and diagonal positivity")
{
    auto g = oracle::rng(22);
    for (const MeasureSpec& spec : {hamming_space(9), sphere_space(3), sphere_space(12)}) {
        for (BasisId b : {BasisId::base, BasisId::minus, BasisId::plusminus}) {
            const int k = std::min(max_degree(spec, b), 7);
            for (int t = 0; t < 50; ++t) {
                const double x = oracle::uniform(g, -1, 1), s = oracle::uniform(g, -1, 1);
                const double kxs = cd_kernel(spec, {b, k, s}, x);
                const double ksx = cd_kernel(spec, {b, k, x}, s);
                CHECK(std::abs(kxs - ksx) <= 1e-12 * std::max(1.0, std::abs(kxs)));
                CHECK(cd_kernel(spec, {b, k, x}, x) > 0.0);
            }
        }
    }
}

TEST_CASE("christoffel-darboux residual on hamming(8), k = 3")
{
    auto g = oracle::rng(23);
    for (int t = 0; t < 100; ++t) {
        const double x = oracle::uniform(g, -1, 1), s = oracle::uniform(g, -1, 1);
        CHECK(std::abs(cd_identity_residual(hamming_space(8), {BasisId::base, 3, s}, x)) <= 1e-10);
    }
    for (double s : {-0.7, 0.1, 0.9}) CHECK(cd_identity_residual(hamming_space(8), {BasisId::base, 3, s}, s) == 0.0);
}

TEST_CASE("kernel at a zero of p_{k+1} is an eigenfunction of X_k")
{
    const MeasureSpec h = hamming_space(10);
    auto sys = orthonormal_system(h, BasisId::base, 10);
    auto g = oracle::rng(24);
    for (int k = 1; k <= 6; ++k) {
        const Eigen::VectorXd z = sys->zeros(k + 1);
        for (Eigen::Index i = 0; i < z.size(); ++i) {
            const double s = z(i);
            for (int t = 0; t < 10; ++t) {
                const double x = oracle::uniform(g, -1, 1);
                const double lhs = (x - s) * cd_kernel(*sys, k, s, x);
                const double rhs = sys->scaled_next(k, x) * sys->eval(k, s);
                CHECK(std::abs(lhs - rhs) <= 1e-10);
            }
        }
    }
}

TEST_CASE("christoffel-darboux residual sweep")
{
    auto g = oracle::rng(25);
    for (int n : {4, 8, 16, 32, 64}) {
        const MeasureSpec h = hamming_space(n);
        for (BasisId b : {BasisId::base, BasisId::minus, BasisId::plusminus}) {
            const int top = std::min(30, max_degree(h, b));
            for (int t = 0; t < 200; ++t) {
                const int k = static_cast<int>(oracle::uniform(g, 0, top + 0.999));
                const double x = oracle::uniform(g, -1, 1), s = oracle::uniform(g, -1, 1);
                CHECK(std::abs(cd_identity_residual(h, {b, k, s}, x)) <= 1e-9);
            }
        }
    }
    for (int d : {3, 8, 32}) {
        for (BasisId b : {BasisId::base, BasisId::minus, BasisId::plusminus}) {
            for (int t = 0; t < 200; ++t) {
                const int k = static_cast<int>(oracle::uniform(g, 0, 30.999));
                const double x = oracle::uniform(g, -1, 1), s = oracle::uniform(g, -1, 1);
                CHECK(std::abs(cd_identity_residual(sphere_space(d), {b, k, s}, x)) <= 1e-9);
            }
        }
    }
}

TEST_CASE("reproducing property")
{
    const MeasureSpec h4 = hamming_space(4);
    CHECK(reproduce(h4, BasisId::base, 2, 0.3, {[](double) { return 1.0; }, 0}) == doctest::Approx(1.0));
    auto p1 = [&](double x) { return eval_basis(h4, BasisId::base, 1, x); };
    CHECK(reproduce(h4, BasisId::base, 1, 0.25, {p1, 1}) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK_THROWS_AS(reproduce(h4, BasisId::base, 1, 0.25, {[](double x) { return x * x; }, 2}), ValidationError);

    auto g = oracle::rng(26);
    for (const MeasureSpec& spec : {hamming_space(7), hamming_space(20), sphere_space(3), sphere_space(11)}) {
        for (BasisId b : {BasisId::base, BasisId::minus, BasisId::plusminus}) {
            for (int t = 0; t < 40; ++t) {
                const int k = static_cast<int>(oracle::uniform(g, 0, std::min(max_degree(spec, b), 12) + 0.999));
                std::vector<double> c(k + 1);
                for (auto& v : c) v = oracle::uniform(g, -1, 1);
                auto f = [&c](double x) {
                    double r = 0.0;
                    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
                    return r;
                };
                const double y = oracle::uniform(g, -1, 1);
                CHECK(std::abs(reproduce(spec, b, k, y, {f, k}) - f(y)) <= 1e-9);
            }
        }
    }
}

TEST_CASE("adjacent systems from the base kernel")
{
    auto g = oracle::rng(27);
    for (const MeasureSpec& spec : {hamming_space(12), sphere_space(3), sphere_space(7)}) {
        auto base = orthonormal_system(spec, BasisId::base, 12);
        const int top = std::min(max_degree(spec, BasisId::plusminus), 9);
        for (int i = 0; i <= top; ++i) {
            // The plus-minus formula only fixes the polynomial up to a factor.
            const double x0 = 0.123;
            const double scale = eval_basis(spec, BasisId::plusminus, i, x0) / adjacent_plusminus_from_kernel(*base, i, x0);
            for (int t = 0; t < 20; ++t) {
                const double x = oracle::uniform(g, -1, 1);
                CHECK(std::abs(adjacent_minus_from_kernel(*base, i, x) - eval_basis(spec, BasisId::minus, i, x)) <= 1e-9);
                CHECK(std::abs(scale * adjacent_plusminus_from_kernel(*base, i, x) -
                               eval_basis(spec, BasisId::plusminus, i, x)) <= 1e-8);
            }
        }
    }
}
