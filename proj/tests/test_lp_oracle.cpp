#include <doctest.h>

#include <cmath>

#include "delbound/errors.hpp"
#include "delbound/lp_oracle.hpp"
#include "oracles.hpp"

using namespace delbound;

TEST_CASE("simplex on small programs")
{
    const SimplexResult<double> r = simplex_maximize<double>({{1, 0}, {0, 1}}, {1, 2}, {1, 1});
    CHECK(r.status == LPStatus::optimal);
    CHECK(r.value == doctest::Approx(3.0));
    CHECK(r.x[0] == doctest::Approx(1.0));
    CHECK(r.x[1] == doctest::Approx(2.0));

    CHECK(simplex_maximize<double>({{-1.0}}, {1.0}, {1.0}).status == LPStatus::unbounded);
    CHECK_THROWS_AS(simplex_maximize<double>({{1.0}}, {-1.0}, {1.0}), ValidationError);
    CHECK_THROWS_AS(simplex_maximize<double>({{1.0, 2.0}}, {1.0}, {1.0}), ValidationError);

    // Beale's degenerate program cycles under Dantzig's rule.
    const std::vector<std::vector<Rational>> a = {
        {Rational(1, 4), -8, -1, 9}, {Rational(1, 2), -12, Rational(-1, 2), 3}, {0, 0, 1, 0}};
    const SimplexResult<Rational> beale =
        simplex_maximize<Rational>(a, {0, 0, 1}, {Rational(3, 4), -20, Rational(1, 2), -6});
    CHECK(beale.status == LPStatus::optimal);
    CHECK(beale.value == Rational(5, 4));
    CHECK_THROWS_AS(simplex_maximize<Rational>(a, {0, 0, 1}, {Rational(3, 4), -20, Rational(1, 2), -6}, 1),
                    NumericError);
}

TEST_CASE("krawtchouk values")
{
    for (int n = 1; n <= 14; ++n) {
        for (int i = 0; i <= n; ++i) {
            for (int j = 0; j <= n; ++j) {
                CHECK(krawtchouk(n, i, j) == oracle::krawtchouk_exact(n, i, j).convert_to<long long>());
                // C(n,j) K_i(j) = C(n,i) K_j(i)
                CHECK(oracle::binom_exact(n, j) * krawtchouk(n, i, j) ==
                      oracle::binom_exact(n, i) * krawtchouk(n, j, i));
            }
        }
    }
}

TEST_CASE("delsarte lp examples")
{
    CHECK(delsarte_lp(3, 2, LPMode::floating).value == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(delsarte_lp(3, 3, LPMode::floating).value == doctest::Approx(2.0).epsilon(1e-12));
    const LPSolution exact = delsarte_lp(3, 2, LPMode::exact);
    CHECK(exact.exact_value == "4");
    CHECK(exact.status == LPStatus::optimal);
    for (int n = 1; n <= 12; ++n) CHECK(delsarte_lp(n, 1, LPMode::floating).value == doctest::Approx(std::ldexp(1.0, n)));
    CHECK(delsarte_lp(7, 3, LPMode::exact).exact_value == "16");
    CHECK(delsarte_lp(8, 4, LPMode::exact).exact_value == "16");
}

TEST_CASE("lp validation")
{
    CHECK_THROWS_AS(delsarte_lp(15, 3, LPMode::floating), ValidationError);
    CHECK_THROWS_AS(delsarte_lp(0, 1, LPMode::floating), ValidationError);
    CHECK_THROWS_AS(delsarte_lp(5, 0, LPMode::floating), ValidationError);
    CHECK_THROWS_AS(delsarte_lp(5, 6, LPMode::floating), ValidationError);
    CHECK(parse_lp_mode("exact") == LPMode::exact);
    CHECK(parse_lp_mode("float") == LPMode::floating);
    CHECK_THROWS_AS(parse_lp_mode("fast"), ValidationError);
}

TEST_CASE("float and exact agree and the optimum is feasible")
{
    for (int n = 1; n <= 12; ++n) {
        for (int d = 1; d <= n; ++d) {
            const LPSolution f = delsarte_lp(n, d, LPMode::floating);
            const LPSolution e = delsarte_lp(n, d, LPMode::exact);
            REQUIRE(e.status == LPStatus::optimal);
            const Rational ev(e.exact_value);
            CHECK(std::abs(f.value - ev.convert_to<double>()) <= 1e-9 * std::max(1.0, f.value));

            // Feasibility of the exact point.
            REQUIRE(e.B_exact.size() == static_cast<std::size_t>(n));
            std::vector<Rational> B;
            for (const auto& s : e.B_exact) B.emplace_back(s);
            Rational total = 1;
            for (int j = 1; j <= n; ++j) {
                CHECK(B[j - 1] >= 0);
                if (j < d) CHECK(B[j - 1] == 0);
                total += B[j - 1];
            }
            CHECK(total == ev);
            for (int i = 1; i <= n; ++i) {
                Rational lhs = krawtchouk(n, i, 0);
                for (int j = 1; j <= n; ++j) lhs += B[j - 1] * krawtchouk(n, i, j);
                CHECK(lhs >= 0);
            }
        }
    }
}

TEST_CASE("built-in codes")
{
    CHECK(hamming_7_4().size() == 16);
    CHECK(minimum_distance(hamming_7_4()) == 3);
    CHECK(extended_hamming_8_4().size() == 16);
    CHECK(minimum_distance(extended_hamming_8_4()) == 4);
    CHECK(minimum_distance(repetition_code(5)) == 5);
    CHECK(even_weight_code(6).size() == 32);
    CHECK(minimum_distance(even_weight_code(6)) == 2);
    CHECK(minimum_distance(whole_space(4)) == 1);
}

TEST_CASE("lp dominates codes and exhaustive optima")
{
    for (int n = 1; n <= 12; ++n) {
        for (const Code& c : code_zoo(n)) {
            const int d = minimum_distance(c);
            if (d < 1 || d > n) continue;
            CHECK(delsarte_lp(n, d, LPMode::floating).value >= static_cast<double>(c.size()) - 1e-9);
        }
    }
    for (int n = 1; n <= 6; ++n) {
        for (int d = 1; d <= n; ++d) {
            CHECK(delsarte_lp(n, d, LPMode::floating).value >= oracle::max_code_size(n, d) - 1e-9);
        }
    }
}

TEST_CASE("lp is nonincreasing in d and respects plotkin")
{
    for (int n = 2; n <= 12; ++n) {
        double prev = INFINITY;
        for (int d = 1; d <= n; ++d) {
            const double v = delsarte_lp(n, d, LPMode::floating).value;
            CHECK(v <= prev + 1e-9);
            prev = v;
            if (2 * d > n) CHECK(v <= static_cast<double>(oracle::plotkin(n, d)) + 1e-9);
        }
    }
}
