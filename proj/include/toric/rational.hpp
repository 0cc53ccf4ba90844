#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <vector>

namespace toric {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

inline Int int_of(const Rat& r) {
    if (denominator(r) != 1)
        throw std::invalid_argument("int_of: value is not integral");
    return numerator(r);
}

inline bool is_integral(const Rat& r) { return denominator(r) == 1; }

inline QVec to_qvec(const IVec& v) {
    QVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

inline IVec to_ivec(const QVec& v) {
    IVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = int_of(v[i]);
    return out;
}

inline Int dot(const IVec& a, const IVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const QVec& a, const IVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
    return s;
}

inline Rat dot(const QVec& a, const QVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero(const IVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline bool is_zero(const QVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline Int gcd_of(const IVec& v) {
    Int g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
    return g;
}

// Scales a nonzero integer vector to its primitive representative (gcd 1,
// direction preserved).
inline IVec primitive(IVec v) {
    Int g = gcd_of(v);
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

inline bool is_primitive(const IVec& v) { return gcd_of(v) == 1; }

// Clears denominators of a rational vector and reduces to a primitive
// integer vector pointing the same way.
inline IVec primitive_of_rational(const QVec& v) {
    Int l = 1;
    for (const auto& x : v) l = boost::multiprecision::lcm(l, denominator(x));
    IVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = int_of(v[i] * Rat(l));
    if (is_zero(out)) return out;
    return primitive(out);
}

// Binomial coefficient with the convention C(n, m) = 0 for m < 0 or m > n.
inline long long binom(long long n, long long m) {
    if (m < 0 || m > n) return 0;
    if (m > n - m) m = n - m;
    long long r = 1;
    for (long long t = 1; t <= m; ++t) {
        r = r * (n - m + t) / t;
    }
    return r;
}

// Enumerates all size-k subsets of {0, ..., n-1} in lexicographic order.
inline std::vector<std::vector<int>> subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

}  // namespace toric
