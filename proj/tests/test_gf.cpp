#include <catch2/catch_amalgamated.hpp>

#include "movoid/gf.hpp"
#include "oracle.hpp"

using namespace movoid;

TEST_CASE("prime field and GF(4) arithmetic") {
    const Field& f2 = Field::gf(1);
    CHECK(f2.mul(1, 1) == 1);

    const Field& f4 = Field::gf(2);
    const uint32_t w = 2; // class of x under x^2+x+1
    CHECK(f4.mul(w, w) == (w ^ 1)); // w^2 = w+1

    // exhaustive multiplication table of GF(4) pins the inverse
    uint32_t inv_w = 0;
    for (uint32_t b = 1; b < 4; ++b)
        if (oracle::NaiveField{2, 0b111}.mul(w, b) == 1) inv_w = b;
    CHECK(inv_w == (w ^ 1));
    CHECK(f4.inv(w) == inv_w);

    CHECK(f4.sqrt(w) == (w ^ 1)); // (w+1)^2 = w^2+1 = w
    CHECK(f4.mul(w ^ 1, w ^ 1) == w);
    CHECK(f4.frobenius(w, 2) == (w ^ 1));

    CHECK(f2.sqrt(1) == 1);
    CHECK_THROWS_AS(f4.inv(0), domain_error);

    // fourth roots: sqrt of sqrt, total in characteristic 2
    const Field& f16 = Field::gf(4);
    for (uint32_t a = 0; a < 16; ++a) {
        uint32_t r = f16.fourth_root(a);
        CHECK(f16.mul(f16.mul(r, r), f16.mul(r, r)) == a);
        CHECK(r == f16.sqrt(f16.sqrt(a)));
    }
}

TEST_CASE("field axioms agree with naive polynomial arithmetic, q <= 16") {
    for (int e : {1, 2, 3, 4}) {
        const Field& f = Field::gf(e);
        oracle::NaiveField nf{e, f.modulus()};
        uint32_t q = f.order();
        for (uint32_t a = 0; a < q; ++a) {
            CHECK(f.add(a, a) == 0); // characteristic 2
            for (uint32_t b = 0; b < q; ++b) {
                CHECK(f.mul(a, b) == nf.mul(a, b));
                CHECK(f.mul(a, b) == f.mul(b, a));
                CHECK(f.sqrt(f.mul(a, b)) == f.mul(f.sqrt(a), f.sqrt(b)));
                for (uint32_t c = 0; c < q; ++c) {
                    CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
            if (a) CHECK(f.mul(a, f.inv(a)) == 1);
            CHECK(f.mul(f.sqrt(a), f.sqrt(a)) == a);
        }
    }
}

TEST_CASE("reduction polynomial table is irreducible and fixed") {
    for (int e = 1; e <= Field::kMaxDegree; ++e) {
        const Field& f = Field::gf(e);
        CHECK(oracle::poly_irreducible(f.modulus(), e));
        CHECK(f.order() == (1u << e));
    }
    CHECK(Field::gf(2).modulus() == 0b111u);
    CHECK(Field::gf(4).modulus() == 0b10011u);
}

TEST_CASE("extension pairs: embedding, Frobenius fixed field, relative trace") {
    for (int e : {1, 2, 3, 4}) {
        const Field& base = Field::gf(e);
        const Field& ext = Field::gf(2 * e);
        ExtensionPair pair(base, ext);
        uint32_t q = base.order();

        CHECK(pair.embed(0) == 0);
        CHECK(pair.embed(1) == 1);
        for (uint32_t a = 0; a < q; ++a)
            for (uint32_t b = 0; b < q; ++b) {
                CHECK(pair.embed(base.mul(a, b)) == ext.mul(pair.embed(a), pair.embed(b)));
                CHECK(pair.embed(base.add(a, b)) == ext.add(pair.embed(a), pair.embed(b)));
            }
        // Frobenius fixes exactly the embedded base field
        for (uint32_t v = 0; v < ext.order(); ++v)
            CHECK((ext.frobenius(v, q) == v) == pair.in_base(v));
        // relative trace is GF(q)-linear and surjective onto GF(q)
        std::set<uint32_t> image;
        for (uint32_t v = 0; v < ext.order(); ++v) {
            uint32_t tv = pair.relative_trace(v);
            image.insert(tv);
            for (uint32_t lam = 0; lam < q; ++lam) {
                uint32_t lv = ext.mul(pair.embed(lam), v);
                CHECK(pair.relative_trace(lv) == base.mul(lam, tv));
            }
        }
        CHECK(image.size() == q);
    }
}

TEST_CASE("trace characterization of quadratic irreducibility") {
    // X^2+X+c is irreducible over GF(2^e) iff the absolute trace of c is 1;
    // pinned against a brute-force root search
    for (int e : {1, 2, 3, 4}) {
        const Field& f = Field::gf(e);
        for (uint32_t c = 0; c < f.order(); ++c) {
            bool has_root = false;
            for (uint32_t x = 0; x < f.order(); ++x)
                if (f.add(f.add(f.mul(x, x), x), c) == 0) has_root = true;
            CHECK((f.absolute_trace(c) == 1) == !has_root);
        }
    }
}

TEST_CASE("relative trace examples in GF(4)") {
    const Field& f4 = Field::gf(2);
    ExtensionPair pair(Field::gf(1), f4);
    CHECK(pair.relative_trace(2) == 1); // w + w^2 = 1
    CHECK(f4.absolute_trace(2) == 1);   // gamma = w works over GF(4)
    CHECK(Field::gf(1).absolute_trace(1) == 1);
}

TEST_CASE("pick_constants is deterministic with the expected encodings") {
    Constants c2 = pick_constants(2);
    CHECK(c2.delta == 1);
    CHECK(c2.omega == 2);
    CHECK(c2.gamma == 2);
    Constants again = pick_constants(2);
    CHECK(again.delta == c2.delta);
    CHECK(again.omega == c2.omega);
    CHECK(again.gamma == c2.gamma);

    Constants c4 = pick_constants(4);
    CHECK(c4.delta == 2);
    CHECK(c4.omega == 2);
    CHECK(c4.gamma == 8);

    Constants c8 = pick_constants(8);
    const Field& f8 = Field::gf(3);
    const Field& f64 = Field::gf(6);
    CHECK(f8.absolute_trace(c8.delta) == 1);
    CHECK(f64.add(c8.omega, f64.frobenius(c8.omega, 8)) == 1);
    CHECK(f64.absolute_trace(c8.gamma) == 1);

    CHECK_THROWS_AS(pick_constants(3), usage_error);
}

TEST_CASE("field elements carry their field") {
    const Field& f2 = Field::gf(1);
    const Field& f4 = Field::gf(2);
    FieldElement a(1, f2), b(2, f4);
    CHECK_THROWS_AS(a + b, usage_error);
    CHECK_THROWS_AS(a * b, usage_error);
    CHECK((FieldElement(2, f4) * FieldElement(2, f4)).v == 3);
    CHECK_THROWS_AS(FieldElement(4, f4), usage_error);
}
