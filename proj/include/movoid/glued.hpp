#pragma once

// The glued ovoid of W(5,q), q even: a Baer subgeometry Sigma of PG(5,q^2)
// lying on a Hermitian variety H(5,q^2), the symplectic space the Hermitian
// polarity induces on Sigma, a parabolic quadric Q inside the hyperplane
// Pi = N^perp, and a PSL(2,q^2)-subgroup G of the symplectic group. The set
// O = Q cup S_gamma^G, glueing the quadric with a point orbit of size
// q^2(q^2-1), is a (q+1)-ovoid of W(5,q) containing exactly q^2+1 lines of
// W(5,q) (the classical line-spread of Q).
//
// Sigma = {(a, a^q, d0, b, b^q, d1)} is coordinatized internally over GF(q)
// by the fixed basis
//   (1,1,0,0,0,0), (t,t^q,0,0,0,0), (0,0,1,0,0,0),
//   (0,0,0,1,1,0), (0,0,0,t,t^q,0), (0,0,0,0,0,1),
// t a fixed generator of GF(q^2). All symplectic computations happen in the
// internal PG(5,q); ambient coordinates are kept for the Baer involution tau,
// the Hermitian form and the quadric. The group is materialized as
// permutations of internal point indices; the defining matrix identities are
// checked once at build time.

#include <array>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "movoid/polar.hpp"
#include "movoid/report.hpp"
#include "movoid/verify.hpp"

namespace movoid {

struct GluedConfig {
    uint32_t q = 2;
    uint32_t omega = 0; // in GF(q^2), omega + omega^q = 1, not in GF(q)
    uint32_t gamma = 0; // in GF(q^2), X^2+X+gamma irreducible over GF(q^2)

    void validate() const {
        const Field& base = Field::of_order(q);
        const Field& ext = Field::gf(2 * base.degree());
        if (omega >= ext.order() || gamma >= ext.order())
            throw usage_error("constant encoding out of range for GF(q^2)");
        if (ext.add(omega, ext.frobenius(omega, q)) != 1)
            throw usage_error("omega must satisfy omega + omega^q = 1");
        if (ext.absolute_trace(gamma) != 1)
            throw usage_error("gamma must make X^2+X+gamma irreducible over GF(q^2)");
    }
    static GluedConfig defaults(uint32_t q) {
        Constants c = pick_constants(q);
        GluedConfig cfg{q, c.omega, c.gamma};
        cfg.validate();
        return cfg;
    }
};

class GluedGeometry {
public:
    explicit GluedGeometry(const GluedConfig& cfg)
        : cfg_(validated(cfg)),
          base_(&Field::of_order(cfg.q)),
          ext_(&Field::gf(2 * Field::of_order(cfg.q).degree())),
          pair_(*base_, *ext_),
          internal_(*base_, 5) {
        build_sigma();
        build_hermitian();
        check_tau_fixes_sigma();
        W_ = std::make_unique<PolarSpace>(internal_,
                                          induced_symplectic(*H_, pair_, sigma_basis_vectors()));
        build_landmarks();
        build_group();
        build_spread();
        build_s_gamma();
    }

    GluedGeometry(const GluedGeometry&) = delete;
    GluedGeometry& operator=(const GluedGeometry&) = delete;

    const GluedConfig& config() const { return cfg_; }
    uint32_t q() const { return cfg_.q; }
    const Field& base() const { return *base_; }
    const Field& ext() const { return *ext_; }
    const ExtensionPair& pair() const { return pair_; }
    const ProjectiveSpace& internal_space() const { return internal_; }
    const PolarSpace& W() const { return *W_; }
    const HermitianForm& hermitian() const { return *H_; }
    const std::vector<Vec>& ambient() const { return ambient_; }
    uint32_t nucleus_index() const { return N_idx_; }
    const Bits& pi_mask() const { return pi_mask_; }
    const Bits& quadric_mask() const { return q_mask_; }
    const std::vector<uint32_t>& quadric_points() const { return q_points_; }
    const std::vector<std::vector<uint32_t>>& spread() const { return spread_; }
    const std::vector<std::vector<uint32_t>>& group() const { return group_; }
    const std::vector<std::vector<uint32_t>>& group_generators() const { return group_gens_; }
    uint32_t s_gamma_index() const { return s_gamma_idx_; }
    uint32_t t_generator() const { return t_; }

    std::vector<Vec> sigma_basis_vectors() const {
        return {sigma_basis_.begin(), sigma_basis_.end()};
    }

    // ambient -> internal (throws if the point is off Sigma)
    uint32_t index_of_ambient(const Vec& v) const {
        Vec nv = normalize_point(*ext_, v);
        auto it = ambient_index_.find(pack(nv));
        if (it == ambient_index_.end()) throw usage_error("ambient point not on Sigma");
        return it->second;
    }
    bool ambient_on_sigma(const Vec& v) const {
        return ambient_index_.count(pack(normalize_point(*ext_, v))) != 0;
    }

    Vec tau(const Vec& v) const {
        const Field& e = *ext_;
        uint32_t qq = cfg_.q;
        return normalize_point(
            e, Vec{e.frobenius(v[1], qq), e.frobenius(v[0], qq), e.frobenius(v[2], qq),
                   e.frobenius(v[4], qq), e.frobenius(v[3], qq), e.frobenius(v[5], qq)});
    }

    uint32_t qbar_eval(const Vec& v) const {
        const Field& e = *ext_;
        return e.add(e.add(e.mul(v[2], v[2]), e.mul(v[0], v[4])), e.mul(v[1], v[3]));
    }

    // orbit of S_gamma under G, verified against the analytic parametrization
    //   P_{x,y} = (x^2/w, x^2q/w^q, (w^2 g^q + w^2q g + xy w^q + (xy)^q w + 1)/w^(q+1),
    //              f(x,y)^q, f(x,y), 1),  f(x,y) = (x^2 y^2 + xy + w^q x^2 + g)/(w x^2),
    // and the stabilizer order q^2+1.
    PointSet orbit_s_gamma() const {
        std::vector<uint32_t> orbit = orbit_of_point(s_gamma_idx_);
        uint64_t expect = static_cast<uint64_t>(cfg_.q) * cfg_.q * (cfg_.q * cfg_.q - 1);
        if (orbit.size() != expect)
            throw construction_error("orbit size " + std::to_string(orbit.size()) + " != " +
                                     std::to_string(expect));
        // analytic description must reproduce the orbit bijectively
        std::unordered_set<uint32_t> seen;
        for (uint32_t x = 1; x < ext_->order(); ++x)
            for (uint32_t y = 0; y < ext_->order(); ++y) {
                uint32_t idx = analytic_point(x, y);
                if (!seen.insert(idx).second)
                    throw construction_error("analytic parametrization is not injective at x=" +
                                             std::to_string(x) + " y=" + std::to_string(y));
            }
        for (uint32_t i : orbit)
            if (!seen.count(i))
                throw construction_error("orbit point missing from the analytic set");
        if (seen.size() != orbit.size())
            throw construction_error("analytic set differs from the orbit");
        // stabilizer by direct filtering
        size_t stab = 0;
        for (const auto& p : group_)
            if (p[s_gamma_idx_] == s_gamma_idx_) ++stab;
        if (stab != static_cast<size_t>(cfg_.q) * cfg_.q + 1)
            throw construction_error("stabilizer order != q^2+1");
        return PointSet(*W_, orbit);
    }

    // O = Q cup S_gamma^G, verified to meet every generator in exactly q+1 points
    PointSet movoid() const {
        PointSet orb = orbit_s_gamma();
        if (q_mask_.intersects(orb.mask))
            throw construction_error("quadric and orbit are not disjoint");
        std::vector<uint32_t> pts = q_points_;
        pts.insert(pts.end(), orb.indices.begin(), orb.indices.end());
        PointSet O(*W_, pts);
        uint64_t expect_size = static_cast<uint64_t>(cfg_.q + 1) * (pow3(cfg_.q) + 1);
        if (O.size() != expect_size) throw construction_error("glued set has wrong size");
        for (size_t g = 0; g < W_->generator_masks().size(); ++g) {
            uint64_t c = W_->generator_masks()[g].count_and(O.mask);
            if (c != cfg_.q + 1)
                throw construction_error("generator " + std::to_string(g) + " meets the set in " +
                                         std::to_string(c) + " points");
        }
        return O;
    }

    uint32_t analytic_point(uint32_t x, uint32_t y) const {
        const Field& e = *ext_;
        uint32_t w = cfg_.omega, g = cfg_.gamma;
        uint32_t wq = e.frobenius(w, cfg_.q), gq = e.frobenius(g, cfg_.q);
        uint32_t x2 = e.mul(x, x), xy = e.mul(x, y);
        uint32_t f = e.mul(e.add(e.add(e.mul(xy, xy), xy), e.add(e.mul(wq, x2), g)),
                           e.inv(e.mul(w, x2)));
        uint32_t third = e.add(
            e.add(e.mul(e.mul(w, w), gq), e.mul(e.mul(wq, wq), g)),
            e.add(e.add(e.mul(xy, wq), e.mul(e.frobenius(xy, cfg_.q), w)), 1u));
        third = e.mul(third, e.inv(e.mul(w, wq)));
        Vec v{e.mul(x2, e.inv(w)),
              e.mul(e.frobenius(x2, cfg_.q), e.inv(wq)),
              third,
              e.frobenius(f, cfg_.q),
              f,
              1};
        return index_of_ambient(v);
    }

    std::vector<uint32_t> orbit_of_point(uint32_t start) const {
        std::vector<uint32_t> orbit{start};
        std::unordered_set<uint32_t> seen{start};
        for (size_t head = 0; head < orbit.size(); ++head)
            for (const auto& p : group_gens_) {
                uint32_t img = p[orbit[head]];
                if (seen.insert(img).second) orbit.push_back(img);
            }
        std::sort(orbit.begin(), orbit.end());
        return orbit;
    }

    std::vector<std::vector<uint32_t>> orbit_of_set(const std::vector<uint32_t>& s) const {
        struct VecHash {
            size_t operator()(const std::vector<uint32_t>& v) const {
                uint64_t h = 1469598103934665603ull;
                for (uint32_t x : v) {
                    h ^= x;
                    h *= 1099511628211ull;
                }
                return static_cast<size_t>(h);
            }
        };
        std::vector<uint32_t> start = s;
        std::sort(start.begin(), start.end());
        std::vector<std::vector<uint32_t>> orbit{start};
        std::unordered_set<std::vector<uint32_t>, VecHash> seen{start};
        for (size_t head = 0; head < orbit.size(); ++head)
            for (const auto& p : group_gens_) {
                std::vector<uint32_t> img;
                img.reserve(orbit[head].size());
                for (uint32_t i : orbit[head]) img.push_back(p[i]);
                std::sort(img.begin(), img.end());
                if (seen.insert(img).second) orbit.push_back(std::move(img));
            }
        return orbit;
    }

    // group element M_{a,b,c,d}, a d + b c = 1, as an ambient matrix
    Matrix psl_matrix(uint32_t a, uint32_t b, uint32_t c, uint32_t d) const;

    static uint64_t pow3(uint64_t q) { return q * q * q; }

private:
    static GluedConfig validated(GluedConfig c) {
        c.validate();
        return c;
    }
    void build_sigma();
    void build_hermitian();
    void check_tau_fixes_sigma();
    void build_landmarks();
    void build_group();
    void build_spread();
    void build_s_gamma();

    uint64_t pack(const Vec& v) const {
        uint64_t k = 0;
        for (uint32_t c : v) k = (k << 8) | c;
        return k;
    }

    GluedConfig cfg_;
    const Field* base_;
    const Field* ext_;
    ExtensionPair pair_;
    ProjectiveSpace internal_;
    uint32_t t_ = 0;
    std::array<Vec, 6> sigma_basis_;
    std::vector<Vec> ambient_;
    std::unordered_map<uint64_t, uint32_t> ambient_index_;
    std::unique_ptr<HermitianForm> H_;
    std::unique_ptr<PolarSpace> W_;
    uint32_t N_idx_ = 0;
    Bits pi_mask_;
    Bits q_mask_;
    std::vector<uint32_t> q_points_;
    std::vector<std::vector<uint32_t>> spread_;
    std::vector<std::vector<uint32_t>> group_gens_;
    std::vector<std::vector<uint32_t>> group_;
    uint32_t s_gamma_idx_ = 0;
};

// ---- named checks --------------------------------------------------------

// build-time invariants, re-run: Sigma on the Hermitian variety, tau fixes
// exactly Sigma among all ambient points, group order, generator matrix
// identities, spread partitions the quadric.
CheckResult check_glued_build(const GluedGeometry& g);

// Pi cap S_gamma^perp cap Q is an elliptic-quadric section (q^2+1 points, cap);
// S_gamma^perp has the stated ambient equation; |S_gamma^G| = q^2(q^2-1) with
// stabilizer of order q^2+1.
CheckResult check_perp_section(const GluedGeometry& g);

// orbit equals the analytic parametrization, injectively
CheckResult check_analytic_orbit(const GluedGeometry& g);

// two G-orbits on planes of W through N, sizes q^2+1 (spread-line section)
// and q^3+q (conic section)
CheckResult check_plane_orbits(const GluedGeometry& g);

// three G-orbits on points of Pi: {N}, the quadric, the rest
CheckResult check_point_orbits(const GluedGeometry& g);

// four G-orbits on W-lines in Pi not through N, sizes q^2+1 / q^4-1 /
// q^2(q^2+1)(q-1)/2 / q^2(q^2+1)(q+1)/2 meeting Q in q+1 / 1 / 0 / 2 points
CheckResult check_line_orbits(const GluedGeometry& g);

// planes of W containing a spread line avoid the orbit
CheckResult check_spread_plane_avoidance(const GluedGeometry& g);

// a single G-orbit, of size q(q^4-1), on planes meeting Pi in exactly a
// tangent line of the q^4-1 orbit
CheckResult check_tangent_plane_orbit_size(const GluedGeometry& g);

// each tangent-orbit plane meets O in a (q+1)-arc; for q=2 the explicit
// representative plane and its conic equation are evaluated coordinatewise
CheckResult check_conic_sections_glued(const GluedGeometry& g);

// O is a (q+1)-ovoid with the two-intersection hyperplane values
// q(q^2+1)+1 and (q+1)(q^2+1)
CheckResult check_glued_movoid(const GluedGeometry& g);

// line spectrum of O within {0,1,2,q+1}; exactly q^2+1 contained lines and
// they are the spread
CheckResult check_prop_contained(const GluedGeometry& g);

// exhaustive scan of all 2^21 quadratic forms on the internal coordinates
// (q=2): the claim is that none has zero set meeting Sigma\Pi exactly in the
// orbit. The scan reports the actual number of matching forms and the number
// whose zero set equals O itself.
CheckResult check_quadric_complement_scan(const GluedGeometry& g);

Report lemma_suite_glued(const GluedGeometry& g, int jobs = 1);

} // namespace movoid

#include "movoid/glued_impl.hpp"
#include "movoid/glued_checks.hpp"
