#ifndef DELBOUND_LP_ORACLE_HPP
#define DELBOUND_LP_ORACLE_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "delbound/simplex.hpp"

namespace delbound {

using Rational = boost::multiprecision::cpp_rational;

enum class LPMode { floating, exact };

LPMode parse_lp_mode(const std::string& name);
std::string to_string(LPMode mode);

/// Binary Krawtchouk value K_i(j) = sum_l (-1)^l C(j,l) C(n-j,i-l), exact.
std::int64_t krawtchouk(int n, int i, int j);

struct LPSolution {
    LPStatus status = LPStatus::infeasible;
    LPMode mode = LPMode::floating;
    int n = 0;
    int d = 0;
    double value = 0.0;
    std::string exact_value;         ///< "p/q" in exact mode, empty otherwise
    std::vector<double> B;           ///< B_1..B_n (index 0 is B_1)
    std::vector<std::string> B_exact;
    int iterations = 0;
};

/// Delsarte LP for binary codes of length n and minimum distance d:
/// maximize 1 + sum_j B_j over B_j >= 0 (B_j = 0 for 0 < j < d) with
/// sum_j B_j K_i(j) >= -K_i(0) for i = 1..n.
LPSolution delsarte_lp(int n, int d, LPMode mode);

/// A binary code given by its codewords as bit masks.
struct Code {
    std::string name;
    int n = 0;
    std::vector<std::uint32_t> words;

    std::size_t size() const { return words.size(); }
};

int minimum_distance(const Code& code);

Code repetition_code(int n);
Code even_weight_code(int n);
Code whole_space(int n);
Code hamming_7_4();
Code extended_hamming_8_4();

/// Every built-in code of length n.
std::vector<Code> code_zoo(int n);

}  // namespace delbound

#endif
