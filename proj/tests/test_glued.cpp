#include <catch2/catch_amalgamated.hpp>

#include "movoid/glued.hpp"
#include "oracle.hpp"

using namespace movoid;

namespace {

const GluedGeometry& glued2() {
    static GluedGeometry g(GluedConfig::defaults(2));
    return g;
}

} // namespace

TEST_CASE("glued geometry at q=2: sizes and landmarks") {
    const GluedGeometry& g = glued2();
    CHECK(g.ambient().size() == 63);
    CHECK(g.group().size() == 60); // PSL(2,4)
    CHECK(g.quadric_points().size() == 15);
    CHECK(g.spread().size() == 5);
    CHECK(g.pi_mask().count() == 31);

    // the induced symplectic Gram on the fixed Baer basis, recomputed
    // independently from the Hermitian matrix by naive field arithmetic
    oracle::NaiveField nf{2, 0b111};
    uint32_t w = g.config().omega, wq = nf.mul(w, w);
    uint32_t t = g.t_generator(), tq = nf.mul(t, t);
    std::vector<std::vector<uint32_t>> basis = {{1, 1, 0, 0, 0, 0}, {t, tq, 0, 0, 0, 0},
                                                {0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 0},
                                                {0, 0, 0, t, tq, 0}, {0, 0, 0, 0, 0, 1}};
    uint32_t J[6][6] = {};
    J[0][3] = w; J[0][5] = wq; J[1][4] = wq; J[1][5] = w; J[2][5] = 1;
    J[3][0] = wq; J[4][1] = w; J[5][0] = w; J[5][1] = wq; J[5][2] = 1;
    auto herm = [&](const std::vector<uint32_t>& u, const std::vector<uint32_t>& v) {
        uint32_t s = 0;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                if (J[i][j]) s ^= nf.mul(nf.mul(u[i], J[i][j]), nf.mul(v[j], v[j]));
        return s;
    };
    uint32_t expect[6][6] = {{0, 0, 0, 1, 0, 1}, {0, 0, 0, 1, 1, 0}, {0, 0, 0, 0, 0, 1},
                             {1, 1, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {1, 0, 1, 0, 0, 0}};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            CHECK(herm(basis[i], basis[j]) == expect[i][j]); // values land in GF(2)
            CHECK(g.W().form().gram().at(i, j) == expect[i][j]);
        }
}

TEST_CASE("orbit of S_gamma at q=2") {
    const GluedGeometry& g = glued2();
    PointSet orb = g.orbit_s_gamma();
    CHECK(orb.size() == 12);
    // all off Pi
    for (uint32_t i : orb.indices) CHECK_FALSE(g.pi_mask().test(i));
}

TEST_CASE("glued m-ovoid at q=2 with independently recounted hyperplane values") {
    const GluedGeometry& g = glued2();
    PointSet O = g.movoid();
    CHECK(O.size() == 27);
    auto m = is_m_ovoid(O);
    REQUIRE(m.has_value());
    CHECK(*m == 3);
    CHECK(hyperplane_check(O, 3));

    // independent route: perps computed with the ambient Hermitian form
    // rather than the internal Gram
    for (uint32_t p = 0; p < g.internal_space().size(); ++p) {
        uint64_t cnt = 0;
        for (uint32_t x : O.indices)
            if (g.hermitian().eval(g.ambient()[p], g.ambient()[x]) == 0) ++cnt;
        CHECK(cnt == (O.contains(p) ? 11u : 15u));
    }
}

TEST_CASE("the named checks pass at q=2, except the strict quadric scan") {
    const GluedGeometry& g = glued2();
    Report rep = lemma_suite_glued(g);
    for (const auto& c : rep.checks) {
        INFO(c.name << ": " << c.detail);
        if (c.name == "quadric_complement_scan") {
            // the strict claim fails: exactly 32 forms match the orbit on
            // Sigma\Pi, although none has zero set equal to the glued set
            CHECK_FALSE(c.passed);
            CHECK(c.detail.find("32 meet") != std::string::npos);
            CHECK(c.detail.find("exactly the glued set: 0") != std::string::npos);
        } else {
            CHECK(c.passed);
        }
    }
    CHECK(rep.find("plane_orbits_through_nucleus")->detail.find("5 and 10") != std::string::npos);
    CHECK(rep.find("tangent_plane_orbit")->detail.find("30 planes") != std::string::npos);
    CHECK(rep.find("line_orbits_in_pi")->detail
          == "orbit sizes/profiles: 5/3, 15/1, 10/0, 30/2");
}

TEST_CASE("glued geometry at q=4: orbit and m-ovoid") {
    GluedGeometry g(GluedConfig::defaults(4));
    CHECK(g.ambient().size() == 1365);
    CHECK(g.group().size() == 4080); // PSL(2,16)
    CHECK(g.quadric_points().size() == 85);
    CHECK(g.spread().size() == 17);
    PointSet orb = g.orbit_s_gamma();
    CHECK(orb.size() == 240);
    PointSet O = g.movoid();
    CHECK(O.size() == 325);
    auto m = is_m_ovoid(O);
    REQUIRE(m.has_value());
    CHECK(*m == 5);
}

TEST_CASE("glued config validation") {
    GluedConfig range{2, 200, 2}; // encoding outside GF(4)
    CHECK_THROWS_AS(range.validate(), usage_error);
    GluedConfig bad{2, 1, 2}; // omega = 1 lies in GF(2)
    CHECK_THROWS_AS(bad.validate(), usage_error);
    GluedConfig bad2{2, 2, 1}; // gamma = 1 has absolute trace 0 in GF(4)
    CHECK_THROWS_AS(bad2.validate(), usage_error);
}

TEST_CASE("non-default constants still build a valid geometry at q=2") {
    // omega has two admissible encodings in GF(4); gamma likewise
    const Field& f4 = Field::gf(2);
    for (uint32_t w = 0; w < 4; ++w) {
        if (f4.add(w, f4.frobenius(w, 2)) != 1) continue;
        for (uint32_t gam = 0; gam < 4; ++gam) {
            if (f4.absolute_trace(gam) != 1) continue;
            GluedConfig cfg{2, w, gam};
            GluedGeometry g(cfg);
            PointSet O = g.movoid();
            auto m = is_m_ovoid(O);
            REQUIRE(m.has_value());
            CHECK(*m == 3);
            // the contained-line invariant pins the isomorphism class, so any
            // admissible constant choice lands in the same one
            CHECK(spectra(O).full_line_count == 5);
        }
    }
}
