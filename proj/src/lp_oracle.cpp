#include "delbound/lp_oracle.hpp"

#include <bit>
#include <limits>

#include "delbound/errors.hpp"

namespace delbound {

namespace {

std::int64_t binomial(int n, int k)
{
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

template <typename Scalar>
SimplexResult<Scalar> solve(int n, int d)
{
    std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n - d + 1));
    std::vector<Scalar> b(n), c(n - d + 1, Scalar(1));
    for (int i = 1; i <= n; ++i) {
        for (int j = d; j <= n; ++j) a[i - 1][j - d] = Scalar(-krawtchouk(n, i, j));
        b[i - 1] = Scalar(binomial(n, i));
    }
    return simplex_maximize<Scalar>(a, b, c);
}

}  // namespace

std::string to_string(LPStatus status)
{
    switch (status) {
    case LPStatus::optimal: return "optimal";
    case LPStatus::infeasible: return "infeasible";
    case LPStatus::unbounded: return "unbounded";
    }
    return "infeasible";
}

LPMode parse_lp_mode(const std::string& name)
{
    if (name == "float") return LPMode::floating;
    if (name == "exact") return LPMode::exact;
    throw ValidationError("unknown LP mode '" + name + "' (expected float or exact)");
}

std::string to_string(LPMode mode) { return mode == LPMode::exact ? "exact" : "float"; }

std::int64_t krawtchouk(int n, int i, int j)
{
    std::int64_t sum = 0;
    for (int l = 0; l <= i; ++l) {
        const std::int64_t term = binomial(j, l) * binomial(n - j, i - l);
        sum += (l % 2 == 0) ? term : -term;
    }
    return sum;
}

LPSolution delsarte_lp(int n, int d, LPMode mode)
{
    if (n < 1 || n > 14) throw ValidationError("LP oracle supports 1 <= n <= 14, got n = " + std::to_string(n));
    if (d < 1 || d > n) throw ValidationError("LP oracle needs 1 <= d <= n, got d = " + std::to_string(d));
    LPSolution sol;
    sol.mode = mode;
    sol.n = n;
    sol.d = d;
    sol.B.assign(n, 0.0);
    if (mode == LPMode::exact) {
        const auto r = solve<Rational>(n, d);
        sol.status = r.status;
        sol.iterations = r.iterations;
        if (r.status == LPStatus::optimal) {
            const Rational value = Rational(1) + r.value;
            sol.value = value.convert_to<double>();
            sol.exact_value = value.str();
            sol.B_exact.assign(n, "0");
            for (int j = d; j <= n; ++j) {
                sol.B[j - 1] = r.x[j - d].convert_to<double>();
                sol.B_exact[j - 1] = r.x[j - d].str();
            }
        }
    } else {
        const auto r = solve<double>(n, d);
        sol.status = r.status;
        sol.iterations = r.iterations;
        if (r.status == LPStatus::optimal) {
            sol.value = 1.0 + r.value;
            for (int j = d; j <= n; ++j) sol.B[j - 1] = r.x[j - d];
        }
    }
    return sol;
}

int minimum_distance(const Code& code)
{
    int best = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < code.words.size(); ++i) {
        for (std::size_t j = i + 1; j < code.words.size(); ++j) {
            best = std::min(best, std::popcount(code.words[i] ^ code.words[j]));
        }
    }
    return best;
}

Code repetition_code(int n)
{
    return {"repetition", n, {0u, (1u << n) - 1u}};
}

Code even_weight_code(int n)
{
    Code code{"even_weight", n, {}};
    for (std::uint32_t w = 0; w < (1u << n); ++w) {
        if (std::popcount(w) % 2 == 0) code.words.push_back(w);
    }
    return code;
}

Code whole_space(int n)
{
    Code code{"whole_space", n, {}};
    for (std::uint32_t w = 0; w < (1u << n); ++w) code.words.push_back(w);
    return code;
}

Code hamming_7_4()
{
    // Rows of a generator matrix in systematic form.
    const std::uint32_t gen[4] = {0b1000110, 0b0100101, 0b0010011, 0b0001111};
    Code code{"hamming_7_4", 7, {}};
    for (std::uint32_t m = 0; m < 16; ++m) {
        std::uint32_t w = 0;
        for (int i = 0; i < 4; ++i) {
            if (m & (1u << i)) w ^= gen[i];
        }
        code.words.push_back(w);
    }
    return code;
}

Code extended_hamming_8_4()
{
    Code code = hamming_7_4();
    code.name = "extended_hamming_8_4";
    code.n = 8;
    for (auto& w : code.words) {
        if (std::popcount(w) % 2 == 1) w |= 1u << 7;
    }
    return code;
}

std::vector<Code> code_zoo(int n)
{
    std::vector<Code> zoo;
    if (n <= 20) zoo.push_back(whole_space(n));
    if (n >= 2) zoo.push_back(repetition_code(n));
    if (n >= 2 && n <= 20) zoo.push_back(even_weight_code(n));
    if (n == 7) zoo.push_back(hamming_7_4());
    if (n == 8) zoo.push_back(extended_hamming_8_4());
    return zoo;
}

}  // namespace delbound
