#pragma once

// Construction-agnostic m-ovoid verification and numerical invariants:
// generator/line/hyperplane intersection spectra, counts of fully contained
// lines. m is always inferred from the set, never supplied.

#include <map>
#include <optional>
#include <vector>

#include "movoid/polar.hpp"

namespace movoid {

struct PointSet {
    const PolarSpace* space = nullptr;
    Bits mask;
    std::vector<uint32_t> indices; // ascending, duplicate-free

    PointSet() = default;
    PointSet(const PolarSpace& s, std::vector<uint32_t> idx) : space(&s), indices(std::move(idx)) {
        std::sort(indices.begin(), indices.end());
        indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
        for (uint32_t i : indices)
            if (i >= s.num_points()) throw usage_error("point index out of range");
        mask = Bits::from_indices(s.num_points(), indices);
    }
    size_t size() const { return indices.size(); }
    bool contains(uint32_t i) const { return mask.test(i); }
};

// m with |g cap X| = m for every generator, or nullopt. On success the size
// identity |X| = m(q^(n+1)+1) is asserted as an internal consistency check.
inline std::optional<uint64_t> is_m_ovoid(const PointSet& X) {
    const PolarSpace& W = *X.space;
    if (W.generators().empty()) return std::nullopt;
    uint64_t m = W.generator_masks()[0].count_and(X.mask);
    for (const Bits& g : W.generator_masks())
        if (g.count_and(X.mask) != m) return std::nullopt;
    uint64_t qn1 = 1;
    for (int i = 0; i <= W.n(); ++i) qn1 *= W.q();
    if (X.size() != m * (qn1 + 1))
        throw construction_error("m-ovoid size identity violated");
    return m;
}

// Two-intersection hyperplane characterization: for an m-ovoid X of
// W(2n+1,q), |X cap P^perp| = m(q^n+1) - q^n on X and m(q^n+1) off X.
inline bool hyperplane_check(const PointSet& X, uint64_t m) {
    const PolarSpace& W = *X.space;
    uint64_t qn = 1;
    for (int i = 0; i < W.n(); ++i) qn *= W.q();
    uint64_t on = m * (qn + 1) - qn;
    uint64_t off = m * (qn + 1);
    for (uint32_t p = 0; p < W.num_points(); ++p) {
        uint64_t c = W.perp_mask(p).count_and(X.mask);
        if (c != (X.contains(p) ? on : off)) return false;
    }
    return true;
}

struct SpectrumReport {
    std::map<uint64_t, uint64_t> generator_spectrum; // |g cap X| -> count
    std::map<uint64_t, uint64_t> line_spectrum;      // over t.i. lines
    uint64_t full_line_count = 0;                    // t.i. lines inside X
    std::map<uint64_t, uint64_t> hyperplane_spectrum_on;  // P in X
    std::map<uint64_t, uint64_t> hyperplane_spectrum_off; // P not in X
    // optional: spectrum over all projective lines (not just t.i.)
    std::map<uint64_t, uint64_t> all_line_spectrum;
};

inline SpectrumReport spectra(const PointSet& X, bool include_all_lines = false) {
    const PolarSpace& W = *X.space;
    SpectrumReport r;
    for (const Bits& g : W.generator_masks()) ++r.generator_spectrum[g.count_and(X.mask)];
    uint32_t qp1 = W.q() + 1;
    for (const auto& line : W.ti_lines()) {
        uint64_t c = 0;
        for (uint32_t i : line) c += X.contains(i) ? 1 : 0;
        ++r.line_spectrum[c];
        if (c == qp1) ++r.full_line_count;
    }
    for (uint32_t p = 0; p < W.num_points(); ++p) {
        uint64_t c = W.perp_mask(p).count_and(X.mask);
        if (X.contains(p)) ++r.hyperplane_spectrum_on[c];
        else ++r.hyperplane_spectrum_off[c];
    }
    if (include_all_lines) {
        // every projective line, totally isotropic or not
        const ProjectiveSpace& S = W.space();
        const Field& f = S.field();
        size_t np = S.size();
        for (uint32_t i = 0; i < np; ++i) {
            for (uint32_t j = i + 1; j < np; ++j) {
                Subspace ln(f, S.dim(), {S.point(i), S.point(j)});
                auto pts = ln.point_indices(S);
                if (pts[0] != i || pts[1] != j) continue; // count each line once
                uint64_t c = 0;
                for (uint32_t t : pts) c += X.contains(t) ? 1 : 0;
                ++r.all_line_spectrum[c];
            }
        }
    }
    return r;
}

} // namespace movoid
