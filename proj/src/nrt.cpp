#include "delbound/nrt.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "delbound/errors.hpp"

namespace delbound {

int ShapeVector::e0() const { return n - std::accumulate(e.begin(), e.end(), 0); }

int ShapeVector::weight() const
{
    int w = 0;
    for (int i = 0; i < r; ++i) w += (i + 1) * e[i];
    return w;
}

std::string ShapeVector::str() const
{
    std::string out = "(";
    for (int i = 0; i < r; ++i) {
        if (i) out += ",";
        out += std::to_string(e[i]);
    }
    return out + ")";
}

unsigned long long shape_count(int r, int n)
{
    if (r < 1 || n < 1) throw ValidationError("shape enumeration needs r >= 1 and n >= 1");
    unsigned long long c = 1;
    for (int i = 1; i <= r; ++i) {
        const unsigned long long num = static_cast<unsigned long long>(n + i);
        if (c > std::numeric_limits<unsigned long long>::max() / num) {
            throw ValidationError("shape count C(n+r, r) overflows");
        }
        c = c * num / i;
    }
    return c;
}

std::vector<ShapeVector> enumerate_shapes(int r, int n, std::size_t budget)
{
    const unsigned long long count = shape_count(r, n);
    if (count > budget) {
        throw ValidationError("shape enumeration budget exceeded: C(" + std::to_string(n + r) + ", " +
                              std::to_string(r) + ") = " + std::to_string(count) + " > " + std::to_string(budget));
    }
    std::vector<ShapeVector> shapes;
    shapes.reserve(count);
    // Odometer with e_1 as the fastest digit, carrying whenever the sum exceeds n.
    std::vector<int> e(r, 0);
    for (;;) {
        shapes.push_back({r, n, e});
        int pos = 0;
        for (; pos < r; ++pos) {
            ++e[pos];
            if (std::accumulate(e.begin(), e.end(), 0) <= n) break;
            e[pos] = 0;
        }
        if (pos == r) break;
    }
    return shapes;
}

ShapeVector shape_of(const NRTVector& x)
{
    if (x.r < 1 || x.n < 1 || x.entries.size() != static_cast<std::size_t>(x.r) * x.n) {
        throw ValidationError("NRT vector must have exactly r*n entries");
    }
    ShapeVector s{x.r, x.n, std::vector<int>(x.r, 0)};
    for (int block = 0; block < x.n; ++block) {
        for (int i = x.r; i >= 1; --i) {
            if (x.entries[block * x.r + i - 1] != 0) {
                ++s.e[i - 1];
                break;
            }
        }
    }
    return s;
}

Rational shape_weight(const ShapeVector& e, int q)
{
    if (q < 2) throw ValidationError("alphabet size q must be at least 2");
    if (static_cast<int>(e.e.size()) != e.r || e.e0() < 0 ||
        std::any_of(e.e.begin(), e.e.end(), [](int v) { return v < 0; })) {
        throw ValidationError("invalid shape " + e.str());
    }
    using boost::multiprecision::cpp_int;
    auto qpow = [q](int k) {
        cpp_int v = 1;
        for (int i = 0; i < k; ++i) v *= q;
        return v;
    };
    auto factorial = [](int k) {
        cpp_int v = 1;
        for (int i = 2; i <= k; ++i) v *= i;
        return v;
    };
    // p_i = q^{i-1}(q-1) / q^r and p_0 = 1 / q^r, so the common factor is q^{-rn}.
    cpp_int num = factorial(e.n);
    cpp_int den = factorial(e.e0()) * qpow(e.r * e.n);
    for (int i = 1; i <= e.r; ++i) {
        const int ei = e.e[i - 1];
        cpp_int pi = qpow(i - 1) * (q - 1);
        for (int t = 0; t < ei; ++t) num *= pi;
        den *= factorial(ei);
    }
    return Rational(num, den);
}

int nrt_distance(const NRTVector& x, const NRTVector& y, int q)
{
    if (x.r != y.r || x.n != y.n || x.entries.size() != y.entries.size()) {
        throw ValidationError("NRT distance needs vectors of equal dimensions");
    }
    if (q < 2) throw ValidationError("alphabet size q must be at least 2");
    NRTVector diff{x.r, x.n, std::vector<int>(x.entries.size())};
    for (std::size_t i = 0; i < x.entries.size(); ++i) {
        diff.entries[i] = (((x.entries[i] - y.entries[i]) % q) + q) % q;
    }
    return shape_of(diff).weight();
}

}  // namespace delbound
