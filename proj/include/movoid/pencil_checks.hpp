#pragma once

// Implementation of the named pencil checks; include via pencil.hpp.

#include <future>

namespace movoid {

namespace detail {

inline int pdim_from_point_count(uint64_t count, uint64_t q) {
    // (q^(d+1)-1)/(q-1) -> d ; count 0 -> -1
    int d = -1;
    uint64_t c = 0, p = 1;
    while (c < count) {
        c += p;
        p *= q;
        ++d;
        if (d > 32) throw construction_error("point count is not a subspace count");
    }
    if (c != count) throw construction_error("point count is not a subspace count");
    return d;
}

inline std::string joined(const std::vector<uint32_t>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "}";
}

} // namespace detail

inline CheckResult check_commuting_polarities(const PencilGeometry& g) {
    CheckResult r{"commuting_polarities", false, ""};
    const Field& f = g.field();
    const uint32_t mu = g.config().mu;
    if (mu == 0) {
        r.detail = "mu must be nonzero";
        return r;
    }
    Matrix a = mat_mul(f, inverse(f, transpose(g.j_gram(0))), g.j_gram(mu));
    Matrix b = mat_mul(f, inverse(f, transpose(g.j_gram(mu))), g.j_gram(0));
    if (!(a == b)) {
        r.detail = "(J0)^-t Jmu != (Jmu)^-t J0";
        return r;
    }
    Matrix pattern = Matrix::identity(g.dim());
    pattern.at(1, 2 * static_cast<size_t>(g.config().n) - 1) = mu;
    pattern.at(2, 2 * static_cast<size_t>(g.config().n)) = mu;
    if (!(a == pattern)) {
        r.detail = "product differs from identity-plus-mu pattern";
        return r;
    }
    if (!(mat_mul(f, a, a) == Matrix::identity(g.dim()))) {
        r.detail = "eta is not an involution";
        return r;
    }
    auto delta_pts = g.delta_space().point_indices(g.space());
    Bits delta_mask = Bits::from_indices(g.space().size(), delta_pts);
    size_t fixed = 0;
    for (uint32_t p = 0; p < g.space().size(); ++p) {
        Vec img = g.apply_matrix(a, p);
        bool fix = img == g.space().point(p);
        if (fix) ++fixed;
        if (fix != delta_mask.test(p)) {
            r.detail = "fixed-point set of eta differs from Delta at point " + std::to_string(p);
            return r;
        }
        if (!fix) {
            // center property: P^eta lies in <P, ell>
            std::vector<Vec> rows = g.ell().basis();
            rows.push_back(g.space().point(p));
            if (!Subspace(f, g.dim(), rows).contains(img)) {
                r.detail = "eta moves point " + std::to_string(p) + " off its plane through ell";
                return r;
            }
        }
    }
    r.passed = true;
    r.detail = "eta fixes exactly " + std::to_string(fixed) + " points (= |Delta|)";
    return r;
}

inline CheckResult check_perp_agreement_on_delta(const PencilGeometry& g) {
    CheckResult r{"perp_agreement_on_delta", false, ""};
    BilinearForm b0 = g.j_form(0), bmu = g.j_form(g.config().mu);
    auto delta_pts = g.delta_space().point_indices(g.space());
    auto subs = all_subspaces_within(g.space(), delta_pts);
    for (const Subspace& s : subs) {
        if (!(b0.perp(s) == bmu.perp(s))) {
            r.detail = "perps differ on a subspace of Delta of pdim " + std::to_string(s.pdim());
            return r;
        }
    }
    r.passed = true;
    r.detail = std::to_string(subs.size()) + " subspaces of Delta checked";
    return r;
}

namespace detail {

// pdim of the intersection with Delta, via the subspace point count
inline int meet_delta_pdim(const PencilGeometry& g, const std::vector<uint32_t>& gen_pts,
                           const Bits& delta_mask) {
    uint64_t c = 0;
    for (uint32_t p : gen_pts) c += delta_mask.test(p) ? 1 : 0;
    return pdim_from_point_count(c, g.config().q);
}

inline bool subspace_isotropic(const BilinearForm& B, const Subspace& s) {
    for (size_t i = 0; i < s.rank(); ++i)
        for (size_t j = i + 1; j < s.rank(); ++j)
            if (B.eval(s.basis()[i], s.basis()[j]) != 0) return false;
    return true;
}

} // namespace detail

inline CheckResult check_generators_meeting_vertex_line(const PencilGeometry& g) {
    CheckResult r{"generators_meeting_vertex_line", false, ""};
    const PolarSpace& wmu = g.w_mu();
    auto delta_pts = g.delta_space().point_indices(g.space());
    Bits delta_mask = Bits::from_indices(g.space().size(), delta_pts);
    auto ell_pts = g.ell().point_indices(g.space());
    Bits ell_mask = Bits::from_indices(g.space().size(), ell_pts);
    for (size_t i = 0; i < wmu.generators().size(); ++i) {
        const auto& gen = wmu.generators()[i];
        bool meets_ell = ell_mask.intersects(wmu.generator_masks()[i]);
        int d = detail::meet_delta_pdim(g, gen, delta_mask);
        if (meets_ell != (d >= g.config().n - 1)) {
            r.detail = "witness generator " + detail::joined(gen);
            return r;
        }
    }
    r.passed = true;
    r.detail = std::to_string(wmu.generators().size()) + " generators of W_mu checked";
    return r;
}

inline CheckResult check_common_generators(const PencilGeometry& g) {
    CheckResult r{"common_generators", false, ""};
    BilinearForm bmu = g.j_form(g.config().mu);
    auto delta_pts = g.delta_space().point_indices(g.space());
    Bits delta_mask = Bits::from_indices(g.space().size(), delta_pts);
    const PolarSpace& w0 = g.w0();
    for (size_t i = 0; i < w0.generators().size(); ++i) {
        Subspace s = w0.subspace_of_generator(i);
        bool gen_mu = detail::subspace_isotropic(bmu, s);
        int d = detail::meet_delta_pdim(g, w0.generators()[i], delta_mask);
        if (gen_mu != (d >= g.config().n - 1)) {
            r.detail = "witness generator " + detail::joined(w0.generators()[i]);
            return r;
        }
    }
    r.passed = true;
    r.detail = std::to_string(w0.generators().size()) + " generators of W_0 checked";
    return r;
}

inline CheckResult check_cone_sections(const PencilGeometry& g) {
    CheckResult r{"cone_sections", false, ""};
    const Field& f = g.field();
    const int n = g.config().n;
    const uint64_t q = g.config().q;
    QuadraticForm qf = g.quadric(g.config().mu);
    auto zeros = qf.zero_set(g.space());
    Bits zmask = Bits::from_indices(g.space().size(), zeros);
    auto delta_pts = g.delta_space().point_indices(g.space());
    Bits delta_mask = Bits::from_indices(g.space().size(), delta_pts);
    const PolarSpace& w0 = g.w0();
    uint64_t expect =
        (q + 1) * PencilGeometry::pow_u(q, n - 2) + (PencilGeometry::pow_u(q, n - 2) - 1) / (q - 1);
    size_t examined = 0;
    for (size_t i = 0; i < w0.generators().size(); ++i) {
        const auto& gen = w0.generators()[i];
        if (detail::meet_delta_pdim(g, gen, delta_mask) != n - 2) continue;
        ++examined;
        std::vector<uint32_t> zg;
        for (uint32_t p : gen)
            if (zmask.test(p)) zg.push_back(p);
        if (zg.size() != expect) {
            r.detail = "generator " + detail::joined(gen) + " meets quadric in " +
                       std::to_string(zg.size()) + " points, expected " + std::to_string(expect);
            return r;
        }
        // vertex: the quadric points in gen cap Delta span an (n-3)-space and
        // consist exactly of its points
        std::vector<uint32_t> vpts;
        for (uint32_t p : zg)
            if (delta_mask.test(p)) vpts.push_back(p);
        std::vector<Vec> vrows;
        for (uint32_t p : vpts) vrows.push_back(g.space().point(p));
        Subspace vertex(f, g.dim(), vrows);
        if (vertex.pdim() != n - 3 ||
            (vertex.rank() > 0 && vertex.point_indices(g.space()) != vpts)) {
            r.detail = "vertex of generator " + detail::joined(gen) + " is not an (n-3)-space";
            return r;
        }
        // cone property over the vertex
        if (vertex.rank() > 0) {
            for (uint32_t z : zg) {
                std::vector<Vec> rows = vertex.basis();
                rows.push_back(g.space().point(z));
                for (uint32_t p : Subspace(f, g.dim(), rows).point_indices(g.space()))
                    if (!zmask.test(p)) {
                        r.detail = "section of generator " + detail::joined(gen) + " is not a cone";
                        return r;
                    }
            }
        }
        // base: a complement of the vertex inside the generator meets the
        // quadric in a nondegenerate conic (a (q+1)-arc)
        Subspace gsub = w0.subspace_of_generator(i);
        std::vector<Vec> comp;
        Subspace cur = vertex;
        for (const Vec& b : gsub.basis()) {
            if (cur.contains(b)) continue;
            comp.push_back(b);
            std::vector<Vec> rows = cur.basis();
            rows.push_back(b);
            cur = Subspace(f, g.dim(), rows);
        }
        if (comp.size() != 3) {
            r.detail = "complement of the vertex is not a plane";
            return r;
        }
        Subspace plane(f, g.dim(), comp);
        std::vector<uint32_t> base;
        for (uint32_t p : plane.point_indices(g.space()))
            if (zmask.test(p)) base.push_back(p);
        if (!is_arc(g.space(), base, q)) {
            r.detail = "base of generator " + detail::joined(gen) + " is not a (q+1)-arc";
            return r;
        }
    }
    r.passed = true;
    r.detail = std::to_string(examined) + " generators with (n-2)-dimensional trace examined";
    return r;
}

inline CheckResult check_elliptic_quadric_movoid(const PencilGeometry& g) {
    CheckResult r{"elliptic_quadric_movoid", false, ""};
    const int n = g.config().n;
    const uint64_t q = g.config().q;
    PointSet X = g.movoid(); // throws with a witness if any generator misses m
    uint64_t m = (PencilGeometry::pow_u(q, n) - 1) / (q - 1);
    // the per-class intersection values behind the count
    auto delta_pts = g.delta_space().point_indices(g.space());
    Bits delta_mask = Bits::from_indices(g.space().size(), delta_pts);
    uint64_t small_class =
        (q + 1) * PencilGeometry::pow_u(q, n - 2) + (PencilGeometry::pow_u(q, n - 2) - 1) / (q - 1);
    const PolarSpace& w0 = g.w0();
    for (size_t i = 0; i < w0.generators().size(); ++i) {
        int d = detail::meet_delta_pdim(g, w0.generators()[i], delta_mask);
        uint64_t c = w0.generator_masks()[i].count_and(X.mask);
        uint64_t expect = d >= n - 1 ? m : small_class;
        if (c != expect) {
            r.detail = "generator " + detail::joined(w0.generators()[i]) + " has |g cap Q| = " +
                       std::to_string(c);
            return r;
        }
    }
    if (!hyperplane_check(X, m)) {
        r.detail = "two-intersection hyperplane values violated";
        return r;
    }
    r.passed = true;
    r.detail = "m=" + std::to_string(m) + ", |set|=" + std::to_string(X.size());
    return r;
}

inline CheckResult check_common_lines_meet_delta(const PencilGeometry& g) {
    CheckResult r{"common_lines_meet_delta", false, ""};
    BilinearForm bmu = g.j_form(g.config().mu);
    auto delta_pts = g.delta_space().point_indices(g.space());
    Bits delta_mask = Bits::from_indices(g.space().size(), delta_pts);
    const PolarSpace& w0 = g.w0();
    for (const auto& line : w0.ti_lines()) {
        bool ti_mu =
            bmu.eval(g.space().point(line[0]), g.space().point(line[1])) == 0;
        bool meets = false;
        for (uint32_t p : line) meets |= delta_mask.test(p);
        if (ti_mu != meets) {
            r.detail = "witness line " + detail::joined(line);
            return r;
        }
    }
    r.passed = true;
    r.detail = std::to_string(w0.ti_lines().size()) + " lines checked";
    return r;
}

inline CheckResult check_line_spectrum(const PencilGeometry& g) {
    CheckResult r{"line_spectrum", false, ""};
    const uint64_t q = g.config().q;
    QuadraticForm qf = g.quadric(g.config().mu);
    auto zeros = qf.zero_set(g.space());
    Bits zmask = Bits::from_indices(g.space().size(), zeros);
    auto delta_pts = g.delta_space().point_indices(g.space());
    Bits delta_mask = Bits::from_indices(g.space().size(), delta_pts);
    std::map<uint64_t, uint64_t> spectrum;
    for (const auto& line : g.w0().ti_lines()) {
        uint64_t c = 0;
        bool meets = false;
        for (uint32_t p : line) {
            c += zmask.test(p) ? 1 : 0;
            meets |= delta_mask.test(p);
        }
        ++spectrum[c];
        bool ok = meets ? (c == 1 || c == q + 1) : (c == 0 || c == 2);
        if (!ok) {
            r.detail = "witness line " + detail::joined(line) + " with " + std::to_string(c) +
                       " quadric points";
            return r;
        }
    }
    if (spectrum.size() != 4 || !spectrum.count(0) || !spectrum.count(1) || !spectrum.count(2) ||
        !spectrum.count(q + 1)) {
        r.detail = "spectrum is not {0,1,2,q+1} with all values realized";
        return r;
    }
    std::string s;
    for (auto [k, v] : spectrum) s += std::to_string(k) + ":" + std::to_string(v) + " ";
    r.passed = true;
    r.detail = "spectrum " + s;
    return r;
}

inline CheckResult check_isotropic_quadric_generators(const PencilGeometry& g) {
    CheckResult r{"isotropic_quadric_generators", false, ""};
    const int n = g.config().n;
    const uint64_t q = g.config().q;
    auto sing = singular_generators(g.quadric(g.config().mu), g.space(), n - 1);
    BilinearForm b0 = g.j_form(0);
    size_t count = 0;
    for (const auto& s : sing) {
        std::vector<Vec> rows;
        for (uint32_t p : s) rows.push_back(g.space().point(p));
        if (detail::subspace_isotropic(b0, Subspace(g.field(), g.dim(), rows))) ++count;
    }
    uint64_t expect = PencilGeometry::pow_u(q, n + 1) + PencilGeometry::pow_u(q, n) + 1;
    for (int i = 1; i <= n - 2; ++i) expect *= PencilGeometry::pow_u(q, n - i) + 1;
    if (count != expect) {
        r.detail = "found " + std::to_string(count) + ", expected " + std::to_string(expect);
        return r;
    }
    r.passed = true;
    r.detail = std::to_string(count) + " totally isotropic quadric generators";
    return r;
}

inline CheckResult check_disjoint_generator_bound(const PencilGeometry& g) {
    CheckResult r{"disjoint_generator_bound", false, ""};
    const int n = g.config().n;
    const uint64_t q = g.config().q;
    auto sing = singular_generators(g.quadric(g.config().mu), g.space(), n - 1);
    BilinearForm b0 = g.j_form(0);
    std::vector<Bits> masks;
    for (const auto& s : sing) {
        std::vector<Vec> rows;
        for (uint32_t p : s) rows.push_back(g.space().point(p));
        if (detail::subspace_isotropic(b0, Subspace(g.field(), g.dim(), rows)))
            masks.push_back(Bits::from_indices(g.space().size(), s));
    }
    // exhaustive maximum pairwise-disjoint subfamily (branch and bound)
    size_t best = 0;
    std::vector<size_t> chosen;
    std::function<void(size_t)> rec = [&](size_t from) {
        best = std::max(best, chosen.size());
        for (size_t i = from; i < masks.size(); ++i) {
            bool ok = true;
            for (size_t c : chosen)
                if (masks[c].intersects(masks[i])) { ok = false; break; }
            if (ok) {
                chosen.push_back(i);
                rec(i + 1);
                chosen.pop_back();
            }
        }
    };
    rec(0);
    if (best > q + 1) {
        r.detail = "found " + std::to_string(best) + " pairwise disjoint, bound is " +
                   std::to_string(q + 1);
        return r;
    }
    r.passed = true;
    r.detail = "maximum pairwise-disjoint family has size " + std::to_string(best);
    return r;
}

inline Report lemma_suite_pencil(const PencilGeometry& g, int jobs) {
    std::vector<std::function<CheckResult()>> tasks = {
        [&] { return check_commuting_polarities(g); },
        [&] { return check_perp_agreement_on_delta(g); },
        [&] { return check_generators_meeting_vertex_line(g); },
        [&] { return check_common_generators(g); },
        [&] { return check_cone_sections(g); },
        [&] { return check_elliptic_quadric_movoid(g); },
        [&] { return check_common_lines_meet_delta(g); },
        [&] { return check_line_spectrum(g); },
        [&] { return check_isotropic_quadric_generators(g); },
        [&] { return check_disjoint_generator_bound(g); },
    };
    Report rep;
    if (jobs > 1) {
        std::vector<std::future<CheckResult>> futs;
        for (auto& t : tasks) futs.push_back(std::async(std::launch::async, t));
        for (auto& fu : futs) rep.add(fu.get());
    } else {
        for (auto& t : tasks) rep.add(t());
    }
    return rep;
}

} // namespace movoid
