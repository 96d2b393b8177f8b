#pragma once

// Exact arithmetic in GF(2^e), e <= 8, over a fixed per-degree reduction
// polynomial, plus subfield embeddings GF(q) -> GF(q^2).
//
// Elements are integer-encoded coefficient vectors: bit i of the encoding is
// the coefficient of x^i. Addition is XOR; 0 and 1 are the identities.

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace movoid {

struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};
struct construction_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// Carry-less multiply mod a monic degree-e polynomial.
inline uint32_t clmul_mod(uint32_t a, uint32_t b, uint32_t poly, int e) {
    uint32_t r = 0;
    const uint32_t top = 1u << e;
    while (b) {
        if (b & 1u) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a & top) a ^= poly;
    }
    return r;
}

// Trial division over GF(2); adequate for degree <= 8.
inline bool poly_irreducible(uint32_t poly, int deg) {
    if (deg <= 0) return false;
    for (int d = 1; d < deg; ++d) {
        for (uint32_t f = (1u << d); f < (2u << d); ++f) {
            // long division of poly by f
            uint32_t rem = poly;
            int rd;
            auto degree_of = [](uint32_t p) {
                int k = -1;
                while (p) { ++k; p >>= 1; }
                return k;
            };
            while ((rd = degree_of(rem)) >= d) rem ^= f << (rd - d);
            if (rem == 0) return false;
        }
    }
    return true;
}

} // namespace detail

// One field per supported degree; instances are interned and immutable, so
// raw pointers to them remain valid for the program lifetime and value
// equality of fields is pointer equality.
class Field {
public:
    static constexpr int kMaxDegree = 8;

    static const Field& gf(int degree) {
        if (degree < 1 || degree > kMaxDegree)
            throw usage_error("unsupported field degree " + std::to_string(degree));
        // fixed reduction polynomials, one per degree, for reproducible encodings
        static constexpr uint32_t polys[kMaxDegree + 1] = {
            0,          // unused
            0b10,       // x
            0b111,      // x^2+x+1
            0b1011,     // x^3+x+1
            0b10011,    // x^4+x+1
            0b100101,   // x^5+x^2+1
            0b1000011,  // x^6+x+1
            0b10000011, // x^7+x+1
            0b100011011 // x^8+x^4+x^3+x+1
        };
        static const std::vector<std::unique_ptr<const Field>> tbl = [] {
            std::vector<std::unique_ptr<const Field>> t;
            t.emplace_back(nullptr);
            for (int e = 1; e <= kMaxDegree; ++e)
                t.emplace_back(std::unique_ptr<const Field>(new Field(e, polys[static_cast<size_t>(e)])));
            return t;
        }();
        return *tbl[static_cast<size_t>(degree)];
    }
    static const Field& of_order(uint32_t q) {
        int e = 0;
        while ((1u << e) < q && e <= kMaxDegree) ++e;
        if ((1u << e) != q) throw usage_error("field order must be a power of 2");
        return gf(e);
    }

    int degree() const { return degree_; }
    uint32_t order() const { return order_; }
    uint32_t modulus() const { return modulus_; }

    uint32_t add(uint32_t a, uint32_t b) const { return a ^ b; }
    uint32_t mul(uint32_t a, uint32_t b) const { return mul_[a * order_ + b]; }
    uint32_t inv(uint32_t a) const {
        if (a == 0) throw domain_error("inversion of zero in GF(" + std::to_string(order_) + ")");
        return inv_[a];
    }
    uint32_t pow(uint32_t a, uint64_t k) const {
        if (a == 0) return k == 0 ? 1u : 0u;
        k %= order_ - 1;
        uint32_t r = 1, x = a;
        while (k) {
            if (k & 1) r = mul(r, x);
            x = mul(x, x);
            k >>= 1;
        }
        return r;
    }
    // Unique square root in characteristic 2: a^(2^(e-1)).
    uint32_t sqrt(uint32_t a) const { return pow(a, order_ / 2); }
    uint32_t fourth_root(uint32_t a) const { return sqrt(sqrt(a)); }
    // x -> x^q, q a power of 2 dividing the field order compatibly.
    uint32_t frobenius(uint32_t a, uint32_t q) const { return pow(a, q); }
    // Trace onto GF(2): a + a^2 + a^4 + ...
    uint32_t absolute_trace(uint32_t a) const {
        uint32_t t = 0, x = a;
        for (int i = 0; i < degree_; ++i) {
            t ^= x;
            x = mul(x, x);
        }
        return t;
    }
    // Smallest primitive element (multiplicative generator).
    uint32_t generator() const { return generator_; }

    bool operator==(const Field& o) const { return this == &o; }

private:
    Field() = default;
    Field(int degree, uint32_t modulus) : degree_(degree), modulus_(modulus) {
        order_ = 1u << degree;
        if (!detail::poly_irreducible(modulus, degree))
            throw construction_error("reduction polynomial is reducible");
        mul_.resize(static_cast<size_t>(order_) * order_);
        for (uint32_t a = 0; a < order_; ++a)
            for (uint32_t b = 0; b < order_; ++b)
                mul_[a * order_ + b] = detail::clmul_mod(a, b, modulus, degree);
        inv_.assign(order_, 0);
        for (uint32_t a = 1; a < order_; ++a)
            for (uint32_t b = 1; b < order_; ++b)
                if (mul(a, b) == 1) { inv_[a] = b; break; }
        generator_ = 0;
        for (uint32_t g = 1; g < order_; ++g) {
            uint32_t x = 1;
            uint32_t seen = 0;
            for (uint32_t i = 0; i + 1 < order_; ++i) {
                x = mul(x, g);
                ++seen;
                if (x == 1) break;
            }
            if (x == 1 && seen == order_ - 1) { generator_ = g; break; }
        }
    }

    int degree_ = 0;
    uint32_t order_ = 0;
    uint32_t modulus_ = 0;
    uint32_t generator_ = 0;
    std::vector<uint32_t> mul_;
    std::vector<uint32_t> inv_;
};

// A field element carrying its field; arithmetic across distinct fields is a
// usage error rather than a silent reinterpretation.
struct FieldElement {
    uint32_t v = 0;
    const Field* f = nullptr;

    FieldElement() = default;
    FieldElement(uint32_t value, const Field& field) : v(value), f(&field) {
        if (value >= field.order()) throw usage_error("element encoding out of range");
    }

    friend FieldElement operator+(FieldElement a, FieldElement b) {
        check(a, b);
        return {a.f->add(a.v, b.v), *a.f};
    }
    friend FieldElement operator*(FieldElement a, FieldElement b) {
        check(a, b);
        return {a.f->mul(a.v, b.v), *a.f};
    }
    FieldElement inverse() const { return {f->inv(v), *f}; }
    FieldElement pow(uint64_t k) const { return {f->pow(v, k), *f}; }
    FieldElement sqrt() const { return {f->sqrt(v), *f}; }
    friend bool operator==(FieldElement a, FieldElement b) { return a.f == b.f && a.v == b.v; }

private:
    static void check(FieldElement a, FieldElement b) {
        if (a.f != b.f) throw usage_error("mixed field elements");
    }
};

// GF(q) inside GF(q^2), built by sending the class of x to the smallest root
// of the base reduction polynomial in the extension.
class ExtensionPair {
public:
    ExtensionPair(const Field& base, const Field& ext) : base_(&base), ext_(&ext) {
        if (ext.degree() != 2 * base.degree())
            throw usage_error("extension degree must be twice the base degree");
        uint32_t root = 0;
        bool found = false;
        for (uint32_t r = 0; r < ext.order(); ++r) {
            if (eval_base_poly(ext, base.modulus(), r) == 0) {
                root = r;
                found = true;
                break;
            }
        }
        if (!found) throw construction_error("base reduction polynomial has no root in extension");
        embed_.assign(base.order(), 0);
        for (uint32_t a = 0; a < base.order(); ++a) {
            uint32_t v = 0;
            for (int i = 0; i < base.degree(); ++i)
                if ((a >> i) & 1u) v ^= ext.pow(root, static_cast<uint64_t>(i));
            embed_[a] = v;
        }
        retract_.assign(ext.order(), kNotInBase);
        for (uint32_t a = 0; a < base.order(); ++a) {
            if (a && retract_[embed_[a]] != kNotInBase)
                throw construction_error("embedding not injective");
            retract_[embed_[a]] = a;
        }
        // image must be exactly the fixed field of x -> x^q
        for (uint32_t v = 0; v < ext.order(); ++v) {
            bool fixed = ext.frobenius(v, base.order()) == v;
            if (fixed != (retract_[v] != kNotInBase))
                throw construction_error("embedding image is not the Frobenius fixed field");
        }
    }

    const Field& base() const { return *base_; }
    const Field& ext() const { return *ext_; }
    uint32_t q() const { return base_->order(); }

    uint32_t embed(uint32_t a) const { return embed_.at(a); }
    bool in_base(uint32_t v) const { return retract_.at(v) != kNotInBase; }
    uint32_t retract(uint32_t v) const {
        uint32_t r = retract_.at(v);
        if (r == kNotInBase) throw domain_error("element not in embedded base field");
        return r;
    }
    // a + a^q, landed in the base field.
    uint32_t relative_trace(uint32_t a) const {
        return retract(ext_->add(a, ext_->frobenius(a, q())));
    }

private:
    static constexpr uint32_t kNotInBase = 0xffffffffu;
    static uint32_t eval_base_poly(const Field& ext, uint32_t poly, uint32_t x) {
        uint32_t v = 0;
        for (int i = 0; (poly >> i) != 0; ++i)
            if ((poly >> i) & 1u) v ^= ext.pow(x, static_cast<uint64_t>(i));
        return v;
    }

    const Field* base_;
    const Field* ext_;
    std::vector<uint32_t> embed_;
    std::vector<uint32_t> retract_;
};

// The constants the two constructions need:
//   delta in GF(q) with X^2+X+delta irreducible over GF(q),
//   omega in GF(q^2)\GF(q) with omega + omega^q = 1,
//   gamma in GF(q^2) with X^2+X+gamma irreducible over GF(q^2).
// Each is the smallest integer encoding satisfying its condition, re-verified
// on return, so two invocations always agree.
struct Constants {
    uint32_t q = 0;
    uint32_t delta = 0; // in GF(q)
    uint32_t omega = 0; // in GF(q^2)
    uint32_t gamma = 0; // in GF(q^2)
};

inline Constants pick_constants(uint32_t q) {
    const Field& base = Field::of_order(q);
    if (2 * base.degree() > Field::kMaxDegree)
        throw usage_error("unsupported q for pick_constants");
    const Field& ext = Field::gf(2 * base.degree());

    Constants c;
    c.q = q;
    bool have = false;
    for (uint32_t d = 0; d < base.order(); ++d)
        if (base.absolute_trace(d) == 1) { c.delta = d; have = true; break; }
    if (!have) throw construction_error("no delta with absolute trace 1");

    have = false;
    for (uint32_t w = 0; w < ext.order(); ++w)
        if (ext.add(w, ext.frobenius(w, q)) == 1) { c.omega = w; have = true; break; }
    if (!have) throw construction_error("no omega with omega + omega^q = 1");

    have = false;
    for (uint32_t g = 0; g < ext.order(); ++g)
        if (ext.absolute_trace(g) == 1) { c.gamma = g; have = true; break; }
    if (!have) throw construction_error("no gamma with absolute trace 1");

    // re-verify the defining conditions before returning
    if (base.absolute_trace(c.delta) != 1) throw construction_error("delta verification failed");
    if (ext.add(c.omega, ext.frobenius(c.omega, q)) != 1)
        throw construction_error("omega verification failed");
    if (ext.absolute_trace(c.gamma) != 1) throw construction_error("gamma verification failed");
    return c;
}

} // namespace movoid
