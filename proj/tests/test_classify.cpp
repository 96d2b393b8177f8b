#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <set>

#include "movoid/classify.hpp"

using namespace movoid;

namespace {

struct SmallSpace {
    ProjectiveSpace s;
    PolarSpace w;
    SmallSpace(int e, int n)
        : s(Field::gf(e), 2 * n + 1),
          w(s, BilinearForm(Field::gf(e), antidiagonal_gram(2 * static_cast<size_t>(n) + 2))) {}
};

} // namespace

TEST_CASE("ovoids of W(3,2): the complete search against a brute-force oracle") {
    SmallSpace ss(1, 1);
    auto sols = enumerate_solutions(ss.w.incidence(), 1);

    // oracle: all 5-subsets of the 15 points meeting each of the 15 lines once
    size_t expect = 0;
    std::vector<uint32_t> idx(15);
    for (uint32_t i = 0; i < 15; ++i) idx[i] = i;
    std::vector<uint32_t> comb;
    std::function<void(uint32_t)> rec = [&](uint32_t from) {
        if (comb.size() == 5) {
            Bits m = Bits::from_indices(15, comb);
            for (const auto& g : ss.w.generator_masks())
                if (g.count_and(m) != 1) return;
            ++expect;
            return;
        }
        for (uint32_t i = from; i < 15; ++i) {
            comb.push_back(i);
            rec(i + 1);
            comb.pop_back();
        }
    };
    rec(0);
    CHECK(expect == 6);
    CHECK(sols.size() == expect);

    // ovoids of the rank-2 space are elliptic quadric sections: one class
    PermGroup G = symplectic_group(ss.w);
    CHECK(G.order == 720);
    auto classes = isomorphism_classes(sols, G, ss.w);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].orbit_size == 6);
    CHECK(classes[0].stabilizer_order == 120);
}

TEST_CASE("W(3,2): m=2 search and option equivalence") {
    SmallSpace ss(1, 1);
    auto base = enumerate_solutions(ss.w.incidence(), 2);
    SearchOptions heu;
    heu.most_constrained = true;
    CHECK(enumerate_solutions(ss.w.incidence(), 2, heu) == base);
    SearchOptions par;
    par.jobs = 3;
    par.split_depth = 4;
    CHECK(enumerate_solutions(ss.w.incidence(), 2, par) == base);
    // every solution is a verified 2-ovoid
    for (const auto& s : base) {
        auto m = is_m_ovoid(PointSet(ss.w, s));
        REQUIRE(m.has_value());
        CHECK(*m == 2);
    }
}

TEST_CASE("W(5,2): no 1-ovoids, no 2-ovoids") {
    SmallSpace ss(1, 2);
    CHECK(enumerate_solutions(ss.w.incidence(), 1).empty());
    CHECK(enumerate_solutions(ss.w.incidence(), 2).empty());
    SearchOptions par;
    par.jobs = 4;
    CHECK(enumerate_solutions(ss.w.incidence(), 2, par).empty());
}

TEST_CASE("group generators preserve the incidence structure") {
    SmallSpace ss(1, 1);
    PermGroup G = symplectic_group(ss.w);
    // identity is the first materialized element
    for (size_t i = 0; i < G.degree; ++i) CHECK(G.element(0)[i] == i);
    std::set<std::vector<uint32_t>> cols(ss.w.generators().begin(), ss.w.generators().end());
    for (const auto& gen : G.generators) {
        for (const auto& col : ss.w.generators()) {
            std::vector<uint32_t> img;
            for (uint32_t p : col) img.push_back(gen[p]);
            std::sort(img.begin(), img.end());
            CHECK(cols.count(img) == 1);
        }
    }
}

TEST_CASE("isomorphism witnesses on the W(3,2) ovoids") {
    SmallSpace ss(1, 1);
    auto sols = enumerate_solutions(ss.w.incidence(), 1);
    REQUIRE(sols.size() == 6);
    PermGroup G = symplectic_group(ss.w);
    PointSet X(ss.w, sols[0]), Y(ss.w, sols[3]);
    auto witness = are_isomorphic(X, Y, G);
    REQUIRE(witness.has_value());
    std::vector<uint32_t> img;
    for (uint32_t i : X.indices) img.push_back((*witness)[i]);
    std::sort(img.begin(), img.end());
    CHECK(img == Y.indices);

    // a non-solution of the same size quick-rejects or exhausts the orbit
    std::vector<uint32_t> other{0, 1, 2, 3, 4};
    if (std::find(sols.begin(), sols.end(), other) == sols.end()) {
        PointSet Z(ss.w, other);
        CHECK_FALSE(are_isomorphic(X, Z, G).has_value());
    }
}

TEST_CASE("desk-scale caps and refusals") {
    SmallSpace big(1, 3); // 255 points
    CHECK_THROWS_AS(enumerate_solutions(big.w.incidence(), 1), usage_error);
    CHECK_THROWS_AS(symplectic_group(big.w), usage_error);
}

TEST_CASE("symplectic group orders") {
    CHECK(symplectic_order(2, 1) == 720);
    CHECK(symplectic_order(2, 2) == 1451520);
    CHECK(symplectic_order(4, 2) == 262144ull * 15 * 255 * 4095); // q^9 (q^2-1)(q^4-1)(q^6-1)
}
