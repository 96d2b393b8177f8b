#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "movoid/polar.hpp"
#include "oracle.hpp"

using namespace movoid;

namespace {

PolarSpace make_w(int e, int n, const ProjectiveSpace& s) {
    const Field& f = Field::gf(e);
    return PolarSpace(s, BilinearForm(f, antidiagonal_gram(2 * static_cast<size_t>(n) + 2)));
}

} // namespace

TEST_CASE("W(5,2): 63 points, 135 generators of weight 7, 315 t.i. lines") {
    const Field& f2 = Field::gf(1);
    ProjectiveSpace s(f2, 5);
    PolarSpace w = make_w(1, 2, s);
    CHECK(w.num_points() == 63);
    CHECK(w.generators().size() == 135);
    for (const auto& g : w.generators()) CHECK(g.size() == 7);
    for (const auto& lst : w.generators_through()) CHECK(lst.size() == 15); // 135*7/63

    // brute-force oracle: count lines of PG(5,2) on which the form vanishes
    BilinearForm b(f2, antidiagonal_gram(6));
    std::set<std::vector<uint32_t>> lines;
    uint64_t all_lines = 0;
    for (uint32_t i = 0; i < s.size(); ++i)
        for (uint32_t j = i + 1; j < s.size(); ++j) {
            Subspace ln(f2, 6, {s.point(i), s.point(j)});
            auto pts = ln.point_indices(s);
            if (pts[0] != i || pts[1] != j) continue;
            ++all_lines;
            if (b.eval(s.point(i), s.point(j)) == 0) lines.insert(pts);
        }
    CHECK(all_lines == 651);
    CHECK(lines.size() == 315);
    std::set<std::vector<uint32_t>> got(w.ti_lines().begin(), w.ti_lines().end());
    CHECK(got == lines);
}

TEST_CASE("rank-2 and q=4 spaces") {
    {
        ProjectiveSpace s(Field::gf(1), 3);
        PolarSpace w = make_w(1, 1, s);
        CHECK(w.num_points() == 15);
        CHECK(w.generators().size() == 15);
        CHECK(w.ti_lines().size() == 15);
        for (const auto& lst : w.generators_through()) CHECK(lst.size() == 3);
    }
    {
        ProjectiveSpace s(Field::gf(2), 5);
        PolarSpace w = make_w(2, 2, s);
        CHECK(w.num_points() == 1365);
        CHECK(w.generators().size() == 5525); // (4+1)(4^2+1)(4^3+1)
        for (const auto& g : w.generators()) CHECK(g.size() == 21);
    }
}

TEST_CASE("every t.i. line extends to a generator; generator meets are t.i.") {
    ProjectiveSpace s(Field::gf(1), 5);
    PolarSpace w = make_w(1, 2, s);
    std::set<std::vector<uint32_t>> line_set(w.ti_lines().begin(), w.ti_lines().end());
    size_t covered = 0;
    for (const auto& ln : w.ti_lines()) {
        Bits lm = Bits::from_indices(w.num_points(), ln);
        for (const auto& gm : w.generator_masks())
            if (lm.subset_of(gm)) {
                ++covered;
                break;
            }
    }
    CHECK(covered == w.ti_lines().size());

    std::mt19937 rng(17);
    for (int t = 0; t < 50; ++t) {
        size_t a = rng() % w.generators().size(), b = rng() % w.generators().size();
        if (a == b) continue;
        std::vector<uint32_t> common;
        std::set_intersection(w.generators()[a].begin(), w.generators()[a].end(),
                              w.generators()[b].begin(), w.generators()[b].end(),
                              std::back_inserter(common));
        CHECK(w.totally_isotropic(common));
    }
}

TEST_CASE("incidence system and double counting") {
    ProjectiveSpace s(Field::gf(1), 5);
    PolarSpace w = make_w(1, 2, s);
    IncidenceSystem sys = w.incidence();
    CHECK(sys.rows == 63);
    CHECK(sys.cols == 135);
    uint64_t col_sum = 0;
    for (const auto& c : sys.column_points) col_sum += c.size();
    uint64_t row_sum = 0;
    for (const auto& lst : w.generators_through()) row_sum += lst.size();
    CHECK(col_sum == row_sum);
    CHECK(col_sum == 945);

    std::string txt = incidence_text(sys);
    CHECK(txt.substr(0, txt.find('\n')) == "63 135");
    // column entries ascending
    for (const auto& c : sys.column_points)
        CHECK(std::is_sorted(c.begin(), c.end()));
}

TEST_CASE("degenerate and non-alternating forms are rejected") {
    const Field& f2 = Field::gf(1);
    ProjectiveSpace s(f2, 3);
    Matrix g(4, 4);
    g.at(0, 1) = 1;
    g.at(1, 0) = 1;
    CHECK_THROWS_AS(PolarSpace(s, BilinearForm(f2, g)), domain_error);
    Matrix sym = Matrix::identity(4);
    CHECK_THROWS_AS(PolarSpace(s, BilinearForm(f2, sym)), usage_error);
}

TEST_CASE("totally singular generators of quadrics") {
    // lines on an elliptic quadric of PG(5,2): 45
    const Field& f2 = Field::gf(1);
    ProjectiveSpace s(f2, 5);
    Matrix c(6, 6);
    c.at(0, 0) = 1;
    c.at(0, 5) = 1;
    c.at(5, 5) = 1;
    c.at(1, 4) = 1;
    c.at(2, 3) = 1;
    QuadraticForm qf(f2, c);
    auto lines = singular_generators(qf, s, 1);
    CHECK(lines.size() == 45);
    for (const auto& ln : lines) {
        CHECK(ln.size() == 3);
        for (uint32_t p : ln) CHECK(qf.eval(s.point(p)) == 0);
    }
}
