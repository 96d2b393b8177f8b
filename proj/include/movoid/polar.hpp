#pragma once

// Symplectic polar space W(2n+1,q): totally isotropic lines and generators,
// point-generator incidence. Everything is enumerated once at build time,
// verified against the product formula, and immutable afterwards.

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "movoid/forms.hpp"
#include "movoid/projgeom.hpp"

namespace movoid {

// Fixed-size bitset sized at runtime; value-semantic.
class Bits {
public:
    Bits() = default;
    explicit Bits(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    size_t size() const { return n_; }
    void set(size_t i) { w_[i >> 6] |= 1ull << (i & 63); }
    void reset(size_t i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
    bool test(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1ull; }
    size_t count() const {
        size_t c = 0;
        for (uint64_t x : w_) c += static_cast<size_t>(__builtin_popcountll(x));
        return c;
    }
    size_t count_and(const Bits& o) const {
        size_t c = 0;
        for (size_t i = 0; i < w_.size(); ++i)
            c += static_cast<size_t>(__builtin_popcountll(w_[i] & o.w_[i]));
        return c;
    }
    bool intersects(const Bits& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool subset_of(const Bits& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    Bits operator|(const Bits& o) const {
        Bits r = *this;
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] |= o.w_[i];
        return r;
    }
    Bits operator&(const Bits& o) const {
        Bits r = *this;
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
        return r;
    }
    bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }
    const std::vector<uint64_t>& words() const { return w_; }

    std::vector<uint32_t> indices() const {
        std::vector<uint32_t> out;
        out.reserve(count());
        for (size_t wi = 0; wi < w_.size(); ++wi) {
            uint64_t x = w_[wi];
            while (x) {
                out.push_back(static_cast<uint32_t>(wi * 64 + static_cast<size_t>(__builtin_ctzll(x))));
                x &= x - 1;
            }
        }
        return out;
    }
    static Bits from_indices(size_t n, const std::vector<uint32_t>& idx) {
        Bits b(n);
        for (uint32_t i : idx) b.set(i);
        return b;
    }

private:
    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

struct IncidenceSystem {
    size_t rows = 0; // points
    size_t cols = 0; // generators
    std::vector<std::vector<uint32_t>> column_points; // ascending indices per generator
};

class PolarSpace {
public:
    PolarSpace(const ProjectiveSpace& space, BilinearForm form)
        : space_(&space), form_(std::move(form)) {
        if (!form_.is_alternating()) throw usage_error("polar space needs an alternating form");
        form_.require_nondegenerate();
        if (form_.dim() != space.dim()) throw usage_error("form/space dimension mismatch");
        if (space.dim() % 2 != 0) throw usage_error("symplectic space needs even vector dimension");
        n_ = static_cast<int>(space.dim() / 2) - 1; // ambient PG(2n+1, q)

        build_perp_masks();
        build_flags();
        verify_counts();
    }

    const ProjectiveSpace& space() const { return *space_; }
    const BilinearForm& form() const { return form_; }
    uint32_t q() const { return space_->q(); }
    int n() const { return n_; }
    size_t num_points() const { return space_->size(); }

    // sorted point-index sets, in canonical (lexicographic) order
    const std::vector<std::vector<uint32_t>>& generators() const { return generators_; }
    const std::vector<Bits>& generator_masks() const { return generator_masks_; }
    const std::vector<std::vector<uint32_t>>& ti_lines() const { return ti_lines_; }
    const std::vector<std::vector<uint32_t>>& generators_through() const { return gens_through_; }
    const Bits& perp_mask(uint32_t point) const { return perp_masks_[point]; }

    bool is_isotropic_pair(uint32_t i, uint32_t j) const { return perp_masks_[i].test(j); }

    // a set of points is totally isotropic iff pairwise orthogonal
    bool totally_isotropic(const std::vector<uint32_t>& pts) const {
        for (size_t a = 0; a < pts.size(); ++a)
            for (size_t b = a + 1; b < pts.size(); ++b)
                if (!is_isotropic_pair(pts[a], pts[b])) return false;
        return true;
    }

    IncidenceSystem incidence() const {
        IncidenceSystem sys;
        sys.rows = num_points();
        sys.cols = generators_.size();
        sys.column_points = generators_;
        return sys;
    }

    Subspace subspace_of_generator(size_t g) const {
        std::vector<Vec> rows;
        for (uint32_t i : generators_[g]) rows.push_back(space_->point(i));
        return Subspace(space_->field(), space_->dim(), rows);
    }

private:
    void build_perp_masks() {
        size_t np = space_->size();
        perp_masks_.assign(np, Bits(np));
        // B(p_i, p_j) = 0 is symmetric, so fill both triangles in one pass
        for (uint32_t i = 0; i < np; ++i) {
            Vec gp = mat_vec(space_->field(), form_.gram(), space_->point(i));
            for (uint32_t j = i; j < np; ++j) {
                uint32_t s = 0;
                const Vec& pj = space_->point(j);
                for (size_t k = 0; k < gp.size(); ++k)
                    if (gp[k] && pj[k]) s ^= space_->field().mul(gp[k], pj[k]);
                if (s == 0) {
                    perp_masks_[i].set(j);
                    perp_masks_[j].set(i);
                }
            }
        }
    }

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

    // Extend totally isotropic flags point by point, extension restricted to
    // the perp of the partial flag, with index-increasing pivots; dedup on the
    // sorted point set.
    void build_flags() {
        size_t np = space_->size();
        const Field& f = space_->field();
        size_t dim = space_->dim();

        struct Node {
            std::vector<uint32_t> pts; // all points, ascending
            std::vector<uint32_t> pivots;
            Bits perp;
        };
        std::vector<Node> level;
        level.reserve(np);
        for (uint32_t i = 0; i < np; ++i) level.push_back({{i}, {i}, perp_masks_[i]});

        for (int rank = 2; rank <= n_ + 1; ++rank) {
            std::vector<Node> next;
            std::unordered_set<std::vector<uint32_t>, VecHash> seen;
            for (const Node& nd : level) {
                uint32_t maxc = nd.pts.back();
                for (uint32_t j : nd.perp.indices()) {
                    if (j <= maxc) continue;
                    if (std::binary_search(nd.pts.begin(), nd.pts.end(), j)) continue;
                    std::vector<Vec> rows;
                    rows.reserve(nd.pivots.size() + 1);
                    for (uint32_t p : nd.pivots) rows.push_back(space_->point(p));
                    rows.push_back(space_->point(j));
                    Subspace sp(f, dim, rows);
                    auto pts = sp.point_indices(*space_);
                    if (!seen.insert(pts).second) continue;
                    Node nn;
                    nn.pivots = nd.pivots;
                    nn.pivots.push_back(j);
                    nn.perp = nd.perp & perp_masks_[j];
                    nn.pts = std::move(pts);
                    next.push_back(std::move(nn));
                }
            }
            if (rank == 2) {
                ti_lines_.reserve(next.size());
                for (const Node& nd : next) ti_lines_.push_back(nd.pts);
                std::sort(ti_lines_.begin(), ti_lines_.end());
            }
            level = std::move(next);
        }
        generators_.reserve(level.size());
        for (const Node& nd : level) generators_.push_back(nd.pts);
        std::sort(generators_.begin(), generators_.end());
        if (n_ == 1) {
            // rank-2 space: the generators are the lines
            ti_lines_ = generators_;
        }

        generator_masks_.reserve(generators_.size());
        for (const auto& g : generators_)
            generator_masks_.push_back(Bits::from_indices(np, g));
        gens_through_.assign(np, {});
        for (uint32_t g = 0; g < generators_.size(); ++g)
            for (uint32_t p : generators_[g]) gens_through_[p].push_back(g);
    }

    void verify_counts() {
        uint64_t expect_gens = 1;
        for (int i = 1; i <= n_ + 1; ++i) {
            uint64_t qi = 1;
            for (int k = 0; k < i; ++k) qi *= q();
            expect_gens *= qi + 1;
        }
        if (generators_.size() != expect_gens)
            throw construction_error("generator count " + std::to_string(generators_.size()) +
                                     " != product formula " + std::to_string(expect_gens));
        uint64_t gen_points = detail::projective_count(q(), static_cast<size_t>(n_) + 1);
        for (const auto& g : generators_)
            if (g.size() != gen_points)
                throw construction_error("generator with wrong point count");
        // flag-transitivity consequence: every point on equally many generators
        size_t per_point = gens_through_.empty() ? 0 : gens_through_[0].size();
        for (const auto& lst : gens_through_)
            if (lst.size() != per_point)
                throw construction_error("points lie on unequal generator counts");
    }

    const ProjectiveSpace* space_;
    BilinearForm form_;
    int n_ = 0;
    std::vector<Bits> perp_masks_;
    std::vector<std::vector<uint32_t>> ti_lines_;
    std::vector<std::vector<uint32_t>> generators_;
    std::vector<Bits> generator_masks_;
    std::vector<std::vector<uint32_t>> gens_through_;
};

// Maximal totally singular subspaces of a quadric (pdim = witt_index-1),
// enumerated like polar generators but with the quadric vanishing condition.
inline std::vector<std::vector<uint32_t>> singular_generators(const QuadraticForm& Q,
                                                              const ProjectiveSpace& space,
                                                              int target_pdim) {
    const Field& f = space.field();
    size_t dim = space.dim();
    BilinearForm polar = Q.polar_form();
    std::vector<uint32_t> zeros = Q.zero_set(space);
    size_t np = space.size();
    Bits zero_mask = Bits::from_indices(np, zeros);

    std::vector<Bits> perp(np);
    for (uint32_t i : zeros) {
        Bits b(np);
        Vec gp = mat_vec(f, polar.gram(), space.point(i));
        for (uint32_t j : zeros) {
            uint32_t s = 0;
            const Vec& pj = space.point(j);
            for (size_t k = 0; k < gp.size(); ++k)
                if (gp[k] && pj[k]) s ^= f.mul(gp[k], pj[k]);
            if (s == 0) b.set(j);
        }
        perp[i] = std::move(b);
    }

    struct Node {
        std::vector<uint32_t> pts;
        std::vector<uint32_t> pivots;
        Bits cand;
    };
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
    std::vector<Node> level;
    for (uint32_t i : zeros) level.push_back({{i}, {i}, perp[i]});
    for (int rank = 2; rank <= target_pdim + 1; ++rank) {
        std::vector<Node> next;
        std::unordered_set<std::vector<uint32_t>, VecHash> seen;
        for (const Node& nd : level) {
            uint32_t maxc = nd.pts.back();
            for (uint32_t j : nd.cand.indices()) {
                if (j <= maxc) continue;
                if (std::binary_search(nd.pts.begin(), nd.pts.end(), j)) continue;
                std::vector<Vec> rows;
                for (uint32_t p : nd.pivots) rows.push_back(space.point(p));
                rows.push_back(space.point(j));
                Subspace sp(f, dim, rows);
                auto pts = sp.point_indices(space);
                // a subspace lies on the quadric iff all its points do
                Bits m = Bits::from_indices(np, pts);
                if (!m.subset_of(zero_mask)) continue;
                if (!seen.insert(pts).second) continue;
                Node nn;
                nn.pivots = nd.pivots;
                nn.pivots.push_back(j);
                nn.cand = nd.cand & perp[j];
                nn.pts = std::move(pts);
                next.push_back(std::move(nn));
            }
        }
        level = std::move(next);
    }
    std::vector<std::vector<uint32_t>> out;
    out.reserve(level.size());
    for (const Node& nd : level) out.push_back(nd.pts);
    std::sort(out.begin(), out.end());
    return out;
}

// Plain-text incidence export: "rows cols" then one line per column with the
// incident point indices ascending; bit-exact across platforms.
inline std::string incidence_text(const IncidenceSystem& sys) {
    std::string out = std::to_string(sys.rows) + " " + std::to_string(sys.cols) + "\n";
    for (const auto& col : sys.column_points) {
        for (size_t i = 0; i < col.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(col[i]);
        }
        out += '\n';
    }
    return out;
}

} // namespace movoid
