#pragma once

// Test-only oracles, deliberately independent of the library implementation:
// naive carry-less polynomial arithmetic, brute-force projective enumeration
// and zero counting, and combinatorial counting formulas. Expected values in
// the test files are frozen from these.

#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

// GF(2^e) by direct polynomial arithmetic, no tables
struct NaiveField {
    int e;
    uint32_t poly;

    uint32_t mul(uint32_t a, uint32_t b) const {
        uint32_t r = 0;
        while (b) {
            if (b & 1u) r ^= a;
            b >>= 1;
            a <<= 1;
            if (a & (1u << e)) a ^= poly;
        }
        return r;
    }
    uint32_t pow(uint32_t a, uint64_t k) const {
        uint32_t r = 1;
        for (uint64_t i = 0; i < k; ++i) r = mul(r, a);
        return r;
    }
    uint32_t inv(uint32_t a) const {
        for (uint32_t b = 1; b < (1u << e); ++b)
            if (mul(a, b) == 1) return b;
        return 0;
    }
};

inline bool poly_irreducible(uint32_t poly, int deg) {
    auto degree_of = [](uint32_t p) {
        int k = -1;
        while (p) {
            ++k;
            p >>= 1;
        }
        return k;
    };
    for (int d = 1; d < deg; ++d)
        for (uint32_t f = (1u << d); f < (2u << d); ++f) {
            uint32_t rem = poly;
            int rd;
            while ((rd = degree_of(rem)) >= d) rem ^= f << (rd - d);
            if (rem == 0) return false;
        }
    return true;
}

// all normalized projective points of PG(n,q), built by set-deduplication of
// scalar classes rather than by first-nonzero normalization
inline std::set<std::vector<uint32_t>> projective_points(const NaiveField& f, int n) {
    uint32_t q = 1u << f.e;
    size_t dim = static_cast<size_t>(n) + 1;
    uint64_t total = 1;
    for (size_t i = 0; i < dim; ++i) total *= q;
    std::set<std::vector<uint32_t>> reps;
    for (uint64_t code = 1; code < total; ++code) {
        std::vector<uint32_t> v(dim);
        uint64_t c = code;
        for (size_t i = 0; i < dim; ++i) {
            v[i] = static_cast<uint32_t>(c % q);
            c /= q;
        }
        // canonical scalar representative: the smallest multiple
        std::vector<uint32_t> best = v;
        for (uint32_t s = 2; s < q; ++s) {
            std::vector<uint32_t> w(dim);
            for (size_t i = 0; i < dim; ++i) w[i] = f.mul(s, v[i]);
            if (w < best) best = w;
        }
        reps.insert(best);
    }
    return reps;
}

// projective zero count of an arbitrary evaluation callback
template <typename F>
uint64_t projective_zero_count(const NaiveField& f, int n, F&& eval) {
    uint32_t q = 1u << f.e;
    uint64_t zeros = 0;
    for (const auto& v : projective_points(f, n))
        if (eval(v) == 0) ++zeros;
    return zeros;
}

inline uint64_t gaussian_points(uint64_t q, int projective_dim) {
    uint64_t s = 0, p = 1;
    for (int i = 0; i <= projective_dim; ++i) {
        s += p;
        p *= q;
    }
    return s;
}

// number of k-dimensional projective subspaces of PG(n,q)
inline uint64_t gaussian_binomial(uint64_t q, int n_plus_1, int k_plus_1) {
    // [n+1 choose k+1]_q = prod (q^(n+1-i) - 1)/(q^(k+1-i) - 1)
    long double num = 1, den = 1;
    for (int i = 0; i < k_plus_1; ++i) {
        uint64_t a = 1, b = 1;
        for (int t = 0; t < n_plus_1 - i; ++t) a *= q;
        for (int t = 0; t < k_plus_1 - i; ++t) b *= q;
        num *= static_cast<long double>(a - 1);
        den *= static_cast<long double>(b - 1);
    }
    return static_cast<uint64_t>(num / den + 0.5L);
}

} // namespace oracle
