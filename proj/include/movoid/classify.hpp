#pragma once

// Exhaustive enumeration of the m-ovoids of a desk-scale polar space by
// complete 0/1 backtracking over the point-generator incidence system,
// followed by isomorphism classification under the full symplectic group
// materialized as permutations.
//
// The search branches on point indices in canonical order and propagates the
// forced assignments of saturated or tight generators; there is no symmetry
// breaking, so the raw solution list is the complete set. An optional
// most-constrained-generator branching heuristic must (and does) produce the
// identical solution set; solutions are always reported sorted, so serial,
// parallel and heuristic runs are byte-identical.

#include <atomic>
#include <cstring>
#include <cstdint>
#include <future>
#include <optional>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "movoid/verify.hpp"

namespace movoid {

struct SearchOptions {
    bool most_constrained = false; // branching heuristic; same solution set
    int jobs = 1;                  // subtree parallelism at a fixed split depth
    int split_depth = 12;
    size_t point_cap = 128;
};

namespace detail {

struct SearchContext {
    const IncidenceSystem* sys;
    uint64_t m;
    uint64_t target_size;
    std::vector<std::vector<uint32_t>> gens_of_point;
    SearchOptions opt;
};

class SearchWorker {
public:
    SearchWorker(const SearchContext& ctx)
        : ctx_(&ctx),
          decided_(ctx.sys->rows, -1),
          cnt_(ctx.sys->cols, 0),
          avail_(ctx.sys->cols, 0) {
        for (size_t g = 0; g < ctx.sys->cols; ++g)
            avail_[g] = static_cast<uint32_t>(ctx.sys->column_points[g].size());
        undecided_ = ctx.sys->rows;
    }

    // replay a prefix of forced decisions (for subtree tasks)
    bool replay(const std::vector<std::pair<uint32_t, int8_t>>& prefix) {
        for (auto [p, val] : prefix)
            if (!assign(p, val) || !propagate()) return false;
        return true;
    }

    void run(std::vector<std::vector<uint32_t>>& out) { dfs(&out, nullptr, -1); }
    // collect subtree tasks instead of descending past the split depth
    void run_collect(std::vector<std::vector<std::pair<uint32_t, int8_t>>>& tasks, int depth_limit) {
        dfs(nullptr, &tasks, depth_limit);
    }

private:
    // updates are always applied in full, so the trail-based undo is exact
    // even when the assignment is rejected
    bool assign(uint32_t p, int8_t val) {
        if (decided_[p] != -1) return decided_[p] == val;
        decided_[p] = val;
        trail_.emplace_back(p, val);
        --undecided_;
        bool ok = true;
        for (uint32_t g : ctx_->gens_of_point[p]) {
            --avail_[g];
            if (val == 1) ++cnt_[g];
            if (cnt_[g] > ctx_->m || cnt_[g] + avail_[g] < ctx_->m) ok = false;
            else if (cnt_[g] == ctx_->m || cnt_[g] + avail_[g] == ctx_->m) dirty_.push_back(g);
        }
        if (val == 1) ++included_;
        if (included_ > ctx_->target_size) ok = false;
        if (included_ + undecided_ < ctx_->target_size) ok = false;
        return ok;
    }

    bool propagate() {
        while (!dirty_.empty()) {
            uint32_t g = dirty_.back();
            dirty_.pop_back();
            if (cnt_[g] == ctx_->m) {
                for (uint32_t p : ctx_->sys->column_points[g])
                    if (decided_[p] == -1 && !assign(p, 0)) return false;
            } else if (cnt_[g] + avail_[g] == ctx_->m) {
                for (uint32_t p : ctx_->sys->column_points[g])
                    if (decided_[p] == -1 && !assign(p, 1)) return false;
            }
        }
        return true;
    }

    uint32_t pick_branch_point() const {
        if (ctx_->opt.most_constrained) {
            // lowest undecided point on a generator with the fewest undecided points
            uint32_t best_avail = UINT32_MAX, best_point = UINT32_MAX;
            for (size_t g = 0; g < ctx_->sys->cols; ++g) {
                if (avail_[g] == 0 || avail_[g] >= best_avail) continue;
                for (uint32_t p : ctx_->sys->column_points[g])
                    if (decided_[p] == -1) {
                        best_avail = avail_[g];
                        best_point = p;
                        break;
                    }
            }
            if (best_point != UINT32_MAX) return best_point;
        }
        for (uint32_t p = 0; p < ctx_->sys->rows; ++p)
            if (decided_[p] == -1) return p;
        return UINT32_MAX;
    }

    void emit(std::vector<std::vector<uint32_t>>& out) {
        std::vector<uint32_t> sol;
        sol.reserve(ctx_->target_size);
        for (uint32_t p = 0; p < ctx_->sys->rows; ++p)
            if (decided_[p] == 1) sol.push_back(p);
        out.push_back(std::move(sol));
    }

    void dfs(std::vector<std::vector<uint32_t>>* out,
             std::vector<std::vector<std::pair<uint32_t, int8_t>>>* tasks, int depth_limit) {
        if (undecided_ == 0) {
            // avail is exhausted, so propagation has forced every generator to
            // exactly m; the cardinality identity then holds as well
            if (tasks) tasks->push_back(trail_);
            else if (included_ == ctx_->target_size) emit(*out);
            return;
        }
        if (tasks && depth_ >= depth_limit) {
            tasks->push_back(trail_);
            return;
        }
        uint32_t p = pick_branch_point();
        for (int8_t val : {int8_t(1), int8_t(0)}) {
            size_t mark = trail_.size();
            ++depth_;
            if (assign(p, val) && propagate()) dfs(out, tasks, depth_limit);
            --depth_;
            while (trail_.size() > mark) {
                auto [tp, tv] = trail_.back();
                trail_.pop_back();
                decided_[tp] = -1;
                ++undecided_;
                if (tv == 1) --included_;
                for (uint32_t g : ctx_->gens_of_point[tp]) {
                    ++avail_[g];
                    if (tv == 1) --cnt_[g];
                }
            }
            dirty_.clear();
        }
    }

    const SearchContext* ctx_;
    std::vector<int8_t> decided_;
    std::vector<uint32_t> cnt_, avail_;
    std::vector<uint32_t> dirty_;
    std::vector<std::pair<uint32_t, int8_t>> trail_;
    uint64_t included_ = 0, undecided_ = 0;
    int depth_ = 0;
};

} // namespace detail

// Complete, duplicate-free, canonically sorted list of all point sets meeting
// every column of the incidence system in exactly m points.
inline std::vector<std::vector<uint32_t>> enumerate_solutions(const IncidenceSystem& sys,
                                                              uint64_t m,
                                                              const SearchOptions& opt = {}) {
    if (sys.rows > opt.point_cap)
        throw usage_error("search refused: " + std::to_string(sys.rows) +
                          " points exceed the desk-scale cap of " + std::to_string(opt.point_cap));
    detail::SearchContext ctx;
    ctx.sys = &sys;
    ctx.m = m;
    ctx.opt = opt;
    ctx.gens_of_point.assign(sys.rows, {});
    for (uint32_t g = 0; g < sys.cols; ++g)
        for (uint32_t p : sys.column_points[g]) ctx.gens_of_point[p].push_back(g);
    // every point lies on the same number of generators, so the cardinality
    // is forced: |X| * (generators per point) = m * cols
    size_t per_point = ctx.gens_of_point.empty() ? 0 : ctx.gens_of_point[0].size();
    for (const auto& lst : ctx.gens_of_point)
        if (lst.size() != per_point) throw usage_error("incidence system is not point-regular");
    if (per_point == 0 || (m * sys.cols) % per_point != 0) return {};
    ctx.target_size = m * sys.cols / per_point;

    std::vector<std::vector<uint32_t>> solutions;
    if (opt.jobs <= 1) {
        detail::SearchWorker w(ctx);
        w.run(solutions);
    } else {
        std::vector<std::vector<std::pair<uint32_t, int8_t>>> tasks;
        {
            detail::SearchWorker collector(ctx);
            collector.run_collect(tasks, opt.split_depth);
        }
        std::vector<std::vector<std::vector<uint32_t>>> results(tasks.size());
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= tasks.size()) break;
                detail::SearchWorker w(ctx);
                if (w.replay(tasks[i])) w.run(results[i]);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < opt.jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        for (auto& rs : results)
            for (auto& s : rs) solutions.push_back(std::move(s));
    }
    std::sort(solutions.begin(), solutions.end());
    solutions.erase(std::unique(solutions.begin(), solutions.end()), solutions.end());
    return solutions;
}

// ---- the symplectic group as permutations ---------------------------------

struct PermGroup {
    size_t degree = 0;
    std::vector<std::vector<uint32_t>> generators;
    // flattened closure, stride = degree
    std::vector<uint8_t> elements;
    uint64_t order = 0;

    const uint8_t* element(uint64_t i) const { return elements.data() + i * degree; }
};

inline uint64_t symplectic_order(uint32_t q, int n) {
    // |Sp(2m, q)| with m = n+1
    int m = n + 1;
    uint64_t o = 1;
    for (int i = 0; i < m * m; ++i) o *= q;
    for (int i = 1; i <= m; ++i) {
        uint64_t p = 1;
        for (int k = 0; k < 2 * i; ++k) p *= q;
        o *= p - 1;
    }
    return o;
}

// The symplectic transvection x -> x + lambda B(x,v) v as a point permutation.
inline std::vector<uint32_t> transvection_perm(const PolarSpace& W, uint32_t v_idx,
                                               uint32_t lambda = 1) {
    const ProjectiveSpace& S = W.space();
    const Field& f = S.field();
    const Vec& v = S.point(v_idx);
    std::vector<uint32_t> perm(S.size());
    for (uint32_t i = 0; i < S.size(); ++i) {
        uint32_t b = f.mul(lambda, W.form().eval(S.point(i), v));
        if (b == 0) {
            perm[i] = i;
            continue;
        }
        Vec w = S.point(i);
        for (size_t k = 0; k < w.size(); ++k) w[k] ^= f.mul(b, v[k]);
        perm[i] = S.index_of(w);
    }
    return perm;
}

// Full symplectic group of the space, generated by all transvections; the
// closure order is asserted against the group-order formula before returning.
inline PermGroup symplectic_group(const PolarSpace& W, uint64_t closure_cap = 2'000'000) {
    if (W.num_points() > 255) throw usage_error("group materialization beyond desk scale");
    uint64_t expect = symplectic_order(W.q(), W.n());
    if (expect > closure_cap)
        throw usage_error("group order " + std::to_string(expect) + " exceeds the closure cap");

    PermGroup G;
    G.degree = W.num_points();
    for (uint32_t v = 0; v < W.num_points(); ++v)
        for (uint32_t lam = 1; lam < W.q(); ++lam)
            G.generators.push_back(transvection_perm(W, v, lam));

    const size_t deg = G.degree;
    // open-addressing index on element bytes
    size_t table_size = 1;
    while (table_size < expect * 2) table_size <<= 1;
    std::vector<uint32_t> table(table_size, UINT32_MAX);
    auto hash_elem = [&](const uint8_t* e) {
        uint64_t h = 1469598103934665603ull;
        for (size_t i = 0; i < deg; ++i) {
            h ^= e[i];
            h *= 1099511628211ull;
        }
        return h;
    };
    auto find_or_insert = [&](const uint8_t* e, uint64_t count) -> bool {
        // returns true if newly inserted (element count already appended)
        uint64_t h = hash_elem(e) & (table_size - 1);
        for (;;) {
            uint32_t slot = table[h];
            if (slot == UINT32_MAX) {
                table[h] = static_cast<uint32_t>(count);
                return true;
            }
            if (std::memcmp(G.elements.data() + static_cast<size_t>(slot) * deg, e, deg) == 0)
                return false;
            h = (h + 1) & (table_size - 1);
        }
    };

    G.elements.reserve((expect + 8) * deg);
    std::vector<uint8_t> ident(deg);
    for (size_t i = 0; i < deg; ++i) ident[i] = static_cast<uint8_t>(i);
    G.elements.insert(G.elements.end(), ident.begin(), ident.end());
    find_or_insert(G.elements.data(), 0);
    uint64_t count = 1;
    std::vector<uint8_t> prod(deg);
    for (uint64_t head = 0; head < count; ++head) {
        for (const auto& gen : G.generators) {
            const uint8_t* e = G.elements.data() + head * deg;
            for (size_t i = 0; i < deg; ++i) prod[i] = static_cast<uint8_t>(gen[e[i]]);
            if (find_or_insert(prod.data(), count)) {
                G.elements.insert(G.elements.end(), prod.begin(), prod.end());
                ++count;
                if (count > expect)
                    throw construction_error("closure exceeded the symplectic group order");
            }
        }
    }
    G.order = count;
    if (G.order != expect)
        throw construction_error("closure order " + std::to_string(G.order) +
                                 " != " + std::to_string(expect));
    return G;
}

// ---- isomorphism classification -------------------------------------------

struct IsoClass {
    std::vector<uint32_t> representative;
    uint64_t orbit_size = 0;
    uint64_t stabilizer_order = 0;
    uint64_t full_line_count = 0;
    std::map<uint64_t, uint64_t> hyperplane_spectrum_on;
    std::map<uint64_t, uint64_t> hyperplane_spectrum_off;
    uint64_t generator_intersection = 0; // the constant m
};

namespace detail {

inline uint64_t mask64_of(const std::vector<uint32_t>& pts) {
    uint64_t m = 0;
    for (uint32_t p : pts) m |= 1ull << p;
    return m;
}
inline uint64_t apply_perm64(const std::vector<uint32_t>& perm, uint64_t mask) {
    uint64_t out = 0;
    while (mask) {
        uint32_t i = static_cast<uint32_t>(__builtin_ctzll(mask));
        mask &= mask - 1;
        out |= 1ull << perm[i];
    }
    return out;
}
inline uint64_t apply_perm64(const uint8_t* perm, uint64_t mask) {
    uint64_t out = 0;
    while (mask) {
        uint32_t i = static_cast<uint32_t>(__builtin_ctzll(mask));
        mask &= mask - 1;
        out |= 1ull << perm[i];
    }
    return out;
}

} // namespace detail

// Partition the complete solution list into group orbits; orbits must cover
// the list exactly, and orbit size times (directly counted) stabilizer order
// must equal the group order.
inline std::vector<IsoClass> isomorphism_classes(const std::vector<std::vector<uint32_t>>& solutions,
                                                 const PermGroup& G, const PolarSpace& W) {
    if (W.num_points() > 64) throw usage_error("orbit masks require at most 64 points");
    std::unordered_set<uint64_t> unassigned;
    for (const auto& s : solutions) unassigned.insert(detail::mask64_of(s));
    if (unassigned.size() != solutions.size())
        throw construction_error("duplicate solutions in input");

    std::vector<IsoClass> classes;
    uint64_t covered = 0;
    for (const auto& s : solutions) {
        uint64_t start = detail::mask64_of(s);
        if (!unassigned.count(start)) continue;
        // orbit BFS over the generators
        std::vector<uint64_t> orbit{start};
        std::unordered_set<uint64_t> seen{start};
        for (size_t head = 0; head < orbit.size(); ++head)
            for (const auto& gen : G.generators) {
                uint64_t img = detail::apply_perm64(gen, orbit[head]);
                if (seen.insert(img).second) orbit.push_back(img);
            }
        for (uint64_t msk : orbit)
            if (!unassigned.erase(msk))
                throw construction_error(
                    "group image of a solution is missing from the solution list");
        covered += orbit.size();

        IsoClass cls;
        cls.representative = s;
        cls.orbit_size = orbit.size();
        // direct stabilizer count over the materialized group
        uint64_t stab = 0;
        for (uint64_t i = 0; i < G.order; ++i)
            if (detail::apply_perm64(G.element(i), start) == start) ++stab;
        cls.stabilizer_order = stab;
        if (cls.orbit_size * cls.stabilizer_order != G.order)
            throw construction_error("orbit-stabilizer identity violated");

        PointSet X(W, s);
        SpectrumReport rep = spectra(X);
        cls.full_line_count = rep.full_line_count;
        cls.hyperplane_spectrum_on = rep.hyperplane_spectrum_on;
        cls.hyperplane_spectrum_off = rep.hyperplane_spectrum_off;
        if (rep.generator_spectrum.size() != 1)
            throw construction_error("solution is not an m-ovoid");
        cls.generator_intersection = rep.generator_spectrum.begin()->first;
        classes.push_back(std::move(cls));
    }
    if (covered != solutions.size())
        throw construction_error("orbits do not partition the solution list");
    return classes;
}

// A group element mapping X onto Y, when one exists; quick-rejects on the
// line-count invariant first.
inline std::optional<std::vector<uint32_t>> are_isomorphic(const PointSet& X, const PointSet& Y,
                                                           const PermGroup& G) {
    const PolarSpace& W = *X.space;
    if (X.space != Y.space) throw usage_error("point sets live in different spaces");
    if (W.num_points() > 64) throw usage_error("orbit masks require at most 64 points");
    if (X.size() != Y.size()) return std::nullopt;
    if (spectra(X).full_line_count != spectra(Y).full_line_count) return std::nullopt;

    uint64_t start = detail::mask64_of(X.indices);
    uint64_t goal = detail::mask64_of(Y.indices);
    // BFS with parent tracking to reconstruct a witness permutation
    std::unordered_map<uint64_t, std::pair<uint64_t, size_t>> parent;
    std::vector<uint64_t> orbit{start};
    parent.emplace(start, std::make_pair(start, SIZE_MAX));
    for (size_t head = 0; head < orbit.size(); ++head) {
        for (size_t gi = 0; gi < G.generators.size(); ++gi) {
            uint64_t img = detail::apply_perm64(G.generators[gi], orbit[head]);
            if (parent.emplace(img, std::make_pair(orbit[head], gi)).second)
                orbit.push_back(img);
        }
    }
    if (!parent.count(goal)) return std::nullopt;
    // compose generators along the path start -> goal
    std::vector<uint32_t> element(W.num_points());
    for (uint32_t i = 0; i < element.size(); ++i) element[i] = i;
    std::vector<size_t> path;
    for (uint64_t cur = goal; cur != start;) {
        auto [prev, gi] = parent.at(cur);
        path.push_back(gi);
        cur = prev;
    }
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        const auto& gen = G.generators[*it];
        for (uint32_t i = 0; i < element.size(); ++i) element[i] = gen[element[i]];
    }
    if (detail::apply_perm64(element, start) != goal)
        throw construction_error("witness reconstruction failed");
    return element;
}

} // namespace movoid
