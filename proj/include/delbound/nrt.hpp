#ifndef DELBOUND_NRT_HPP
#define DELBOUND_NRT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace delbound {

using Rational = boost::multiprecision::cpp_rational;

/// Block counts e_1..e_r by rightmost nonzero in-block position; e_0 is derived.
struct ShapeVector {
    int r = 0;
    int n = 0;
    std::vector<int> e;  ///< e[i-1] = e_i

    int e0() const;
    int weight() const;  ///< sum_i i e_i
    std::string str() const;
    bool operator==(const ShapeVector&) const = default;
};

/// Entries in Z_q laid out as n consecutive blocks of length r.
struct NRTVector {
    int r = 0;
    int n = 0;
    std::vector<int> entries;
};

constexpr std::size_t kShapeBudget = 1'000'000;

/// Shapes of Delta_{r,n}, ordered by comparing e_r first, then e_{r-1}, and so on.
std::vector<ShapeVector> enumerate_shapes(int r, int n, std::size_t budget = kShapeBudget);

/// Exact C(n+r, r), or throws if it does not fit in 64 bits.
unsigned long long shape_count(int r, int n);

ShapeVector shape_of(const NRTVector& x);

/// n! prod_{i=0}^r p_i^{e_i} / e_i! with p_0 = q^{-r}, p_i = q^{i-r-1}(q-1).
Rational shape_weight(const ShapeVector& e, int q);

int nrt_distance(const NRTVector& x, const NRTVector& y, int q);

}  // namespace delbound

#endif
