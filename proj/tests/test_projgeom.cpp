#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "movoid/projgeom.hpp"
#include "oracle.hpp"

using namespace movoid;

TEST_CASE("point enumeration counts and round trips") {
    struct Case {
        int e, n;
        size_t expect;
    };
    // expected counts frozen from the brute-force scalar-class oracle
    for (Case c : {Case{1, 5, 63}, Case{1, 1, 3}, Case{2, 5, 1365}, Case{1, 3, 15},
                   Case{2, 3, 85}, Case{1, 7, 255}}) {
        const Field& f = Field::gf(c.e);
        ProjectiveSpace s(f, c.n);
        CHECK(s.size() == c.expect);
        oracle::NaiveField nf{c.e, f.modulus()};
        if (c.expect <= 1500) CHECK(oracle::projective_points(nf, c.n).size() == c.expect);
        for (uint32_t i = 0; i < s.size(); ++i) CHECK(s.index_of(s.point(i)) == i);
        // canonical order is lexicographic on the coordinate encodings
        for (uint32_t i = 0; i + 1 < s.size(); ++i) CHECK(s.point(i) < s.point(i + 1));
    }
}

TEST_CASE("normalization and unnormalized lookups") {
    const Field& f4 = Field::gf(2);
    ProjectiveSpace s(f4, 1);
    // (2,2) ~ (1,1)
    CHECK(s.index_of({2, 2}) == s.index_of({1, 1}));
    CHECK_THROWS_AS(normalize_point(f4, {0, 0}), usage_error);
    ProjectiveSpace tiny(Field::gf(1), 1);
    CHECK_THROWS_AS(tiny.index_of({1, 1, 1}), usage_error);
}

TEST_CASE("point count cap") {
    CHECK_THROWS_AS(ProjectiveSpace(Field::gf(8), 7, 1000000), usage_error);
}

TEST_CASE("span, meet, contains") {
    const Field& f2 = Field::gf(1);
    ProjectiveSpace s(f2, 5);

    // Delta: X4 = X5 = 0 and ell = <e2, e3> with ell inside Delta
    Subspace delta(f2, 6, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
                           {0, 0, 0, 0, 0, 1}});
    Subspace ell(f2, 6, {{0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}});
    CHECK(meet(delta, ell) == ell);
    CHECK(delta.contains(ell));

    // span of two distinct points is a line with q+1 points
    Subspace line(f2, 6, {s.point(3), s.point(40)});
    CHECK(line.pdim() == 1);
    CHECK(line.point_indices(s).size() == 3);

    // meet of two distinct hyperplanes of PG(5,2) has projective dimension 3
    Subspace h1(f2, 6, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
                        {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}});
    Subspace h2(f2, 6, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
                        {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 1}});
    CHECK(meet(h1, h2).pdim() == 3);

    // projective dimension formula for spans and meets of random subspaces
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        auto random_subspace = [&] {
            std::vector<Vec> rows;
            int k = 1 + static_cast<int>(rng() % 4);
            for (int i = 0; i < k; ++i) rows.push_back(s.point(rng() % s.size()));
            return Subspace(f2, 6, rows);
        };
        Subspace a = random_subspace(), b = random_subspace();
        CHECK(span(a, b).pdim() + meet(a, b).pdim() == a.pdim() + b.pdim());
    }
}

TEST_CASE("echelon canonicalization is input-order independent") {
    const Field& f4 = Field::gf(2);
    std::vector<Vec> rows = {{1, 2, 0, 3}, {0, 1, 1, 2}, {2, 0, 1, 1}};
    Subspace a(f4, 4, rows);
    std::reverse(rows.begin(), rows.end());
    Subspace b(f4, 4, rows);
    CHECK(a == b);
    CHECK(a.basis() == b.basis());
}

TEST_CASE("subspace point enumeration lies in the subspace") {
    const Field& f4 = Field::gf(2);
    ProjectiveSpace s(f4, 3);
    Subspace plane(f4, 4, {s.point(1), s.point(10), s.point(30)});
    auto pts = plane.point_indices(s);
    CHECK(pts.size() == oracle::gaussian_points(4, plane.pdim()));
    for (uint32_t i : pts) CHECK(plane.contains(s.point(i)));
}

TEST_CASE("all subspaces of PG(3,2)") {
    const Field& f2 = Field::gf(1);
    ProjectiveSpace s(f2, 3);
    std::vector<uint32_t> all(s.size());
    for (uint32_t i = 0; i < s.size(); ++i) all[i] = i;
    auto subs = all_subspaces_within(s, all);
    // 15 points + 35 lines + 15 planes + the whole space
    size_t expect = oracle::gaussian_binomial(2, 4, 1) + oracle::gaussian_binomial(2, 4, 2) +
                    oracle::gaussian_binomial(2, 4, 3) + 1;
    CHECK(subs.size() == expect);
    CHECK(expect == 66);
}
