#pragma once

// A pencil of quadrics on PG(2n+1,q), q even:
//
//   Q_mu : X1^2 + X1 X_{2n+2} + delta X_{2n+2}^2
//          + sum_{i=2}^{n+1} X_i X_{2n+3-i}
//          + mu (X_{2n}^2 + X_{2n} X_{2n+1} + delta X_{2n+1}^2) = 0
//   Q_inf: X_{2n}^2 + X_{2n} X_{2n+1} + delta X_{2n+1}^2 = 0
//
// with X^2+X+delta irreducible over GF(q). Every Q_mu is elliptic; the zero
// set of Q_inf is the (2n-1)-space Delta: X_{2n} = X_{2n+1} = 0, and the base
// locus is the cone with vertex the line ell = <e_2, e_3> over an elliptic
// quadric of a (2n-3)-space of Delta (empty when n = 2). For mu != 0 the zero
// set of Q_mu is a ((q^n-1)/(q-1))-ovoid of the symplectic space W_0 of J_0,
// although its own polarity is J_mu != J_0.
//
// The composition of the two polarities is the involutory elation eta with
// axis Delta and center ell, realized here as the explicit matrix
// (J_0)^{-t} J_mu acting on points.

#include <cstdint>
#include <functional>
#include <sstream>

#include "movoid/polar.hpp"
#include "movoid/report.hpp"
#include "movoid/verify.hpp"

namespace movoid {

struct PencilConfig {
    int n = 2;
    uint32_t q = 2;
    uint32_t delta = 0; // absolute trace 1 in GF(q)
    uint32_t mu = 1;    // nonzero for the m-ovoid member

    void validate() const {
        if (n < 2) throw usage_error("pencil needs n >= 2");
        const Field& f = Field::of_order(q);
        if (delta >= q || f.absolute_trace(delta) != 1)
            throw usage_error("delta must have absolute trace 1 (X^2+X+delta irreducible)");
        if (mu >= q) throw usage_error("mu out of range");
    }
    static PencilConfig defaults(int n, uint32_t q, uint32_t mu) {
        PencilConfig c;
        c.n = n;
        c.q = q;
        c.mu = mu;
        c.delta = pick_constants(q).delta;
        c.validate();
        return c;
    }
};

// the pencil's forms, independent of the enumerated geometry so that large
// parameters (q = 8) remain usable at the form level
inline Matrix pencil_j_gram(int n, uint32_t mu) {
    size_t dim = 2 * static_cast<size_t>(n) + 2;
    Matrix g = antidiagonal_gram(dim);
    g.at(2 * static_cast<size_t>(n) - 1, 2 * static_cast<size_t>(n)) ^= mu;
    g.at(2 * static_cast<size_t>(n), 2 * static_cast<size_t>(n) - 1) ^= mu;
    return g;
}

inline QuadraticForm pencil_quadric_form(const Field& f, int n, uint32_t delta, uint32_t mu) {
    size_t dim = 2 * static_cast<size_t>(n) + 2;
    Matrix c(dim, dim);
    c.at(0, 0) = 1;
    c.at(0, dim - 1) = 1;
    c.at(dim - 1, dim - 1) = delta;
    for (int i = 2; i <= n + 1; ++i)
        c.at(static_cast<size_t>(i) - 1, 2 * static_cast<size_t>(n) + 2 - static_cast<size_t>(i)) = 1;
    if (mu) {
        size_t a = 2 * static_cast<size_t>(n) - 1, b = 2 * static_cast<size_t>(n);
        c.at(a, a) ^= mu;
        c.at(a, b) ^= mu;
        c.at(b, b) ^= f.mul(mu, delta);
    }
    return QuadraticForm(f, c);
}

inline QuadraticForm pencil_quadric_inf_form(const Field& f, int n, uint32_t delta) {
    size_t dim = 2 * static_cast<size_t>(n) + 2;
    Matrix c(dim, dim);
    size_t a = 2 * static_cast<size_t>(n) - 1, b = 2 * static_cast<size_t>(n);
    c.at(a, a) = 1;
    c.at(a, b) = 1;
    c.at(b, b) = delta;
    return QuadraticForm(f, c);
}

class PencilGeometry {
public:
    explicit PencilGeometry(const PencilConfig& cfg)
        : cfg_(validated(cfg)),
          field_(&Field::of_order(cfg.q)),
          space_(*field_, 2 * cfg.n + 1),
          w0_(space_, BilinearForm(*field_, j_gram(0))) {
        const Field& f = *field_;
        size_t N = dim();

        // Delta: X_{2n} = X_{2n+1} = 0 ; ell = <e_2, e_3>
        {
            std::vector<Vec> rows;
            for (size_t i = 0; i < N; ++i) {
                if (i == static_cast<size_t>(2 * cfg_.n - 1) || i == static_cast<size_t>(2 * cfg_.n))
                    continue;
                Vec e(N, 0);
                e[i] = 1;
                rows.push_back(e);
            }
            delta_space_ = std::make_unique<Subspace>(f, N, rows);
        }
        {
            Vec e2(N, 0), e3(N, 0);
            e2[1] = 1;
            e3[2] = 1;
            ell_ = std::make_unique<Subspace>(f, N, std::vector<Vec>{e2, e3});
        }

        // each member of the pencil is elliptic; the degenerate member's zero
        // set is exactly Delta
        for (uint32_t mu = 0; mu < cfg_.q; ++mu) {
            QuadricClassification cls = classify_quadric(quadric(mu));
            if (cls.degenerate || cls.base_type != QuadricType::elliptic)
                throw construction_error("pencil member mu=" + std::to_string(mu) +
                                         " is not a nondegenerate elliptic quadric");
        }
        {
            auto zinf = quadric_inf().zero_set(space_);
            auto dpts = delta_space_->point_indices(space_);
            if (zinf != dpts)
                throw construction_error("degenerate member's zero set is not Delta");
        }
        verify_base_locus();

        eta_ = compute_eta();
        if (cfg_.mu != 0) wmu_ = std::make_unique<PolarSpace>(space_, j_form(cfg_.mu));
    }

    PencilGeometry(const PencilGeometry&) = delete;
    PencilGeometry& operator=(const PencilGeometry&) = delete;

    const PencilConfig& config() const { return cfg_; }
    const Field& field() const { return *field_; }
    const ProjectiveSpace& space() const { return space_; }
    const PolarSpace& w0() const { return w0_; }
    const PolarSpace& w_mu() const {
        if (!wmu_) throw usage_error("W_mu requires mu != 0");
        return *wmu_;
    }
    const Subspace& delta_space() const { return *delta_space_; }
    const Subspace& ell() const { return *ell_; }
    const Matrix& eta() const { return eta_; }
    size_t dim() const { return 2 * static_cast<size_t>(cfg_.n) + 2; }

    Matrix j_gram(uint32_t mu) const { return pencil_j_gram(cfg_.n, mu); }
    BilinearForm j_form(uint32_t mu) const { return BilinearForm(*field_, j_gram(mu)); }

    QuadraticForm quadric(uint32_t mu) const {
        return pencil_quadric_form(*field_, cfg_.n, cfg_.delta, mu);
    }
    QuadraticForm quadric_inf() const {
        return pencil_quadric_inf_form(*field_, cfg_.n, cfg_.delta);
    }

    Vec apply_matrix(const Matrix& M, uint32_t point_idx) const {
        return normalize_point(*field_, mat_vec(*field_, M, space_.point(point_idx)));
    }

    // zero set of Q_mu as a verified m-ovoid of W_0
    PointSet movoid() const {
        if (cfg_.mu == 0) throw usage_error("the m-ovoid requires mu != 0");
        PointSet X(w0_, quadric(cfg_.mu).zero_set(space_));
        uint64_t m_expect = (pow_u(cfg_.q, cfg_.n) - 1) / (cfg_.q - 1);
        for (size_t g = 0; g < w0_.generator_masks().size(); ++g) {
            uint64_t c = w0_.generator_masks()[g].count_and(X.mask);
            if (c != m_expect) {
                std::ostringstream os;
                os << "generator " << g << " meets quadric in " << c << " points, expected "
                   << m_expect;
                throw construction_error(os.str());
            }
        }
        uint64_t size_expect = m_expect * (pow_u(cfg_.q, cfg_.n + 1) + 1);
        if (X.size() != size_expect) throw construction_error("m-ovoid size mismatch");
        return X;
    }

    static uint64_t pow_u(uint64_t b, int e) {
        uint64_t r = 1;
        while (e-- > 0) r *= b;
        return r;
    }

private:
    static PencilConfig validated(PencilConfig c) {
        c.validate();
        return c;
    }

    void verify_base_locus() {
        const Field& f = *field_;
        size_t N = dim();
        // common zeros of the whole pencil = zeros(Q_0) cap zeros(Q_inf)
        std::vector<uint32_t> base;
        {
            QuadraticForm q0 = quadric(0), qi = quadric_inf();
            for (uint32_t i = 0; i < space_.size(); ++i)
                if (q0.eval(space_.point(i)) == 0 && qi.eval(space_.point(i)) == 0)
                    base.push_back(i);
        }
        Bits base_mask = Bits::from_indices(space_.size(), base);
        auto ell_pts = ell_->point_indices(space_);
        for (uint32_t i : ell_pts)
            if (!base_mask.test(i)) throw construction_error("vertex line off the base locus");
        // cone property: the span of the vertex line and any base point stays
        // inside the base locus
        for (uint32_t z : base) {
            std::vector<Vec> rows = ell_->basis();
            rows.push_back(space_.point(z));
            Subspace cone_line(f, N, rows);
            for (uint32_t p : cone_line.point_indices(space_))
                if (!base_mask.test(p))
                    throw construction_error("base locus is not a cone over the vertex line");
        }
        // base: a complement of ell inside Delta meets the locus in an
        // elliptic quadric of the right size (empty when n = 2)
        std::vector<Vec> comp_rows;
        for (size_t i = 0; i < N; ++i) {
            if (i == 1 || i == 2) continue;
            if (i == static_cast<size_t>(2 * cfg_.n - 1) || i == static_cast<size_t>(2 * cfg_.n))
                continue;
            Vec e(N, 0);
            e[i] = 1;
            comp_rows.push_back(e);
        }
        Subspace comp(f, N, comp_rows);
        QuadraticForm base_form = quadric(0).restrict_to(comp_rows);
        uint64_t base_count = 0;
        for (uint32_t p : comp.point_indices(space_))
            if (base_mask.test(p)) ++base_count;
        uint64_t expect =
            cfg_.n == 2
                ? 0
                : (pow_u(cfg_.q, cfg_.n - 1) + 1) * (pow_u(cfg_.q, cfg_.n - 2) - 1) / (cfg_.q - 1);
        if (base_count != expect)
            throw construction_error("base-locus cross-section has wrong size");
        if (cfg_.n > 2) {
            QuadricClassification cls = classify_quadric(base_form);
            if (cls.degenerate || cls.base_type != QuadricType::elliptic)
                throw construction_error("base-locus cross-section is not elliptic");
        }
        uint64_t cone_expect = (cfg_.q + 1) + cfg_.q * cfg_.q * expect;
        if (base.size() != cone_expect) throw construction_error("base locus has wrong size");
    }

    Matrix compute_eta() const {
        const Field& f = *field_;
        Matrix j0t_inv = inverse(f, transpose(j_gram(0)));
        Matrix lhs = mat_mul(f, j0t_inv, j_gram(cfg_.mu));
        return lhs;
    }

    PencilConfig cfg_;
    const Field* field_;
    ProjectiveSpace space_;
    PolarSpace w0_;
    std::unique_ptr<PolarSpace> wmu_;
    std::unique_ptr<Subspace> delta_space_;
    std::unique_ptr<Subspace> ell_;
    Matrix eta_;
};

// ---- named lemma checks -------------------------------------------------

// (J_0)^{-t} J_mu = (J_mu)^{-t} J_0 = identity + mu(E_{2,2n} + E_{3,2n+1});
// the resulting projectivity is an involution fixing exactly Delta pointwise
// and moving every point inside its plane through ell.
CheckResult check_commuting_polarities(const PencilGeometry& g);

// For every t-subspace of Delta the two perps agree (exhaustive).
CheckResult check_perp_agreement_on_delta(const PencilGeometry& g);

// Generators of W_mu meet ell iff they meet Delta in at least an (n-1)-space.
CheckResult check_generators_meeting_vertex_line(const PencilGeometry& g);

// A generator of W_0 is one of W_mu iff it meets Delta in >= an (n-1)-space.
CheckResult check_common_generators(const PencilGeometry& g);

// Generators of W_0 meeting Delta in an (n-2)-space cut the quadric in a cone:
// an (n-3)-space vertex over a conic, (q+1)q^(n-2) + (q^(n-2)-1)/(q-1) points.
CheckResult check_cone_sections(const PencilGeometry& g);

// The quadric is a ((q^n-1)/(q-1))-ovoid of W_0.
CheckResult check_elliptic_quadric_movoid(const PencilGeometry& g);

// A line of W_0 is a line of W_mu iff it meets Delta.
CheckResult check_common_lines_meet_delta(const PencilGeometry& g);

// Line spectrum of the quadric against W_0-lines is exactly {0,1,2,q+1}, all
// realized; lines meeting Delta realize {1,q+1}, the others {0,2}.
CheckResult check_line_spectrum(const PencilGeometry& g);

// Count of quadric generators totally isotropic for J_0.
CheckResult check_isotropic_quadric_generators(const PencilGeometry& g);

// At most q+1 of those are pairwise disjoint.
CheckResult check_disjoint_generator_bound(const PencilGeometry& g);

Report lemma_suite_pencil(const PencilGeometry& g, int jobs = 1);

} // namespace movoid

#include "movoid/pencil_checks.hpp"
