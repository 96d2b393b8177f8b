#pragma once

// Points and subspaces of PG(n,q). Points are normalized homogeneous
// coordinate vectors (first nonzero coordinate 1); the canonical point order
// is lexicographic on the integer-encoded coordinates, which keeps indices
// stable across runs and platforms. Subspaces are stored in reduced row
// echelon form, so subspace equality is syntactic.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "movoid/gf.hpp"
#include "movoid/linalg.hpp"

namespace movoid {

inline Vec normalize_point(const Field& f, Vec v) {
    for (uint32_t c : v)
        if (c) {
            if (c != 1) {
                uint32_t iv = f.inv(c);
                for (auto& x : v) x = f.mul(iv, x);
            }
            return v;
        }
    throw usage_error("cannot normalize the zero vector");
}

class ProjectiveSpace {
public:
    static constexpr uint64_t kDefaultPointCap = 10'000'000;

    ProjectiveSpace(const Field& f, int n, uint64_t point_cap = kDefaultPointCap)
        : field_(&f), n_(n) {
        if (n < 1) throw usage_error("projective dimension must be >= 1");
        size_t dim = static_cast<size_t>(n) + 1;
        uint64_t count = 0;
        {
            uint64_t p = 1;
            for (size_t i = 0; i < dim; ++i) p *= f.order();
            count = (p - 1) / (f.order() - 1);
        }
        if (count > point_cap)
            throw usage_error("point count " + std::to_string(count) + " exceeds cap");
        points_.reserve(count);
        // first nonzero coordinate is 1 at position p; suffix arbitrary
        Vec v(dim, 0);
        for (size_t p = 0; p < dim; ++p) {
            std::fill(v.begin(), v.end(), 0u);
            v[p] = 1;
            enumerate_suffix(v, p + 1);
        }
        std::sort(points_.begin(), points_.end());
        index_.reserve(points_.size() * 2);
        for (uint32_t i = 0; i < points_.size(); ++i) index_.emplace(key_of(points_[i]), i);
        if (points_.size() != count) throw construction_error("point enumeration count mismatch");
    }

    const Field& field() const { return *field_; }
    int n() const { return n_; }
    size_t dim() const { return static_cast<size_t>(n_) + 1; }
    uint32_t q() const { return field_->order(); }
    size_t size() const { return points_.size(); }

    const Vec& point(uint32_t idx) const { return points_[idx]; }
    uint32_t index_of(const Vec& coords) const {
        Vec nv = normalize_point(*field_, coords);
        auto it = index_.find(key_of(nv));
        if (it == index_.end()) throw usage_error("point not in enumeration");
        return it->second;
    }
    std::optional<uint32_t> try_index_of(const Vec& coords) const {
        Vec nv = normalize_point(*field_, coords);
        auto it = index_.find(key_of(nv));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

private:
    void enumerate_suffix(Vec& v, size_t from) {
        if (from == v.size()) {
            points_.push_back(v);
            return;
        }
        for (uint32_t c = 0; c < field_->order(); ++c) {
            v[from] = c;
            enumerate_suffix(v, from + 1);
        }
        v[from] = 0;
    }
    uint64_t key_of(const Vec& v) const {
        uint64_t k = 0;
        for (uint32_t c : v) k = (k << 8) | c;
        return k;
    }

    const Field* field_;
    int n_;
    std::vector<Vec> points_;
    std::unordered_map<uint64_t, uint32_t> index_;
};

// A projective subspace as a canonical RREF basis. pdim() == -1 is the empty
// subspace.
class Subspace {
public:
    Subspace(const Field& f, size_t ambient_dim) : field_(&f), ambient_(ambient_dim) {}
    Subspace(const Field& f, size_t ambient_dim, const std::vector<Vec>& spanning)
        : field_(&f), ambient_(ambient_dim) {
        if (!spanning.empty()) {
            Matrix M(spanning.size(), ambient_dim);
            for (size_t i = 0; i < spanning.size(); ++i) {
                if (spanning[i].size() != ambient_dim) throw usage_error("vector dimension mismatch");
                for (size_t j = 0; j < ambient_dim; ++j) M.at(i, j) = spanning[i][j];
            }
            size_t r = rref(f, M);
            basis_.reserve(r);
            for (size_t i = 0; i < r; ++i) basis_.push_back(M.row(i));
        }
    }

    const Field& field() const { return *field_; }
    size_t ambient_dim() const { return ambient_; }
    const std::vector<Vec>& basis() const { return basis_; }
    size_t rank() const { return basis_.size(); }
    int pdim() const { return static_cast<int>(basis_.size()) - 1; }

    bool contains(const Vec& v) const {
        Vec w = v;
        for (const Vec& b : basis_) {
            size_t lead = lead_col(b);
            if (w[lead]) {
                uint32_t c = w[lead];
                for (size_t j = 0; j < ambient_; ++j) w[j] ^= field_->mul(c, b[j]);
            }
        }
        return std::all_of(w.begin(), w.end(), [](uint32_t x) { return x == 0; });
    }
    bool contains(const Subspace& other) const {
        for (const Vec& b : other.basis_)
            if (!contains(b)) return false;
        return true;
    }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }

    // All projective points of the subspace, as indices of the ambient space.
    std::vector<uint32_t> point_indices(const ProjectiveSpace& space) const {
        std::vector<uint32_t> out;
        if (basis_.empty()) return out;
        size_t k = basis_.size();
        Vec coef(k, 0);
        // normalized coefficient tuples: first nonzero coefficient is 1
        for (size_t p = 0; p < k; ++p) {
            std::fill(coef.begin(), coef.end(), 0u);
            coef[p] = 1;
            emit_combinations(space, coef, p + 1, out);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    static size_t lead_col(const Vec& b) {
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j]) return j;
        throw construction_error("zero row in subspace basis");
    }
    void emit_combinations(const ProjectiveSpace& space, Vec& coef, size_t from,
                           std::vector<uint32_t>& out) const {
        if (from == coef.size()) {
            Vec v(ambient_, 0);
            for (size_t i = 0; i < coef.size(); ++i) {
                if (!coef[i]) continue;
                for (size_t j = 0; j < ambient_; ++j) v[j] ^= field_->mul(coef[i], basis_[i][j]);
            }
            out.push_back(space.index_of(v));
            return;
        }
        for (uint32_t c = 0; c < field_->order(); ++c) {
            coef[from] = c;
            emit_combinations(space, coef, from + 1, out);
        }
        coef[from] = 0;
    }

    const Field* field_;
    size_t ambient_;
    std::vector<Vec> basis_;
};

inline Subspace span(const Field& f, size_t ambient_dim, const std::vector<Vec>& vectors) {
    return Subspace(f, ambient_dim, vectors);
}

inline Subspace span(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || &a.field() != &b.field())
        throw usage_error("span of subspaces in different ambient spaces");
    std::vector<Vec> rows = a.basis();
    rows.insert(rows.end(), b.basis().begin(), b.basis().end());
    return Subspace(a.field(), a.ambient_dim(), rows);
}

// Zassenhaus intersection: row-reduce [A|A; B|0]; rows with zero left half
// carry a basis of the intersection in the right half.
inline Subspace meet(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || &a.field() != &b.field())
        throw usage_error("meet of subspaces in different ambient spaces");
    const Field& f = a.field();
    size_t n = a.ambient_dim();
    size_t ra = a.rank(), rb = b.rank();
    Matrix M(ra + rb, 2 * n);
    for (size_t i = 0; i < ra; ++i)
        for (size_t j = 0; j < n; ++j) {
            M.at(i, j) = a.basis()[i][j];
            M.at(i, n + j) = a.basis()[i][j];
        }
    for (size_t i = 0; i < rb; ++i)
        for (size_t j = 0; j < n; ++j) M.at(ra + i, j) = b.basis()[i][j];
    rref(f, M);
    std::vector<Vec> rows;
    for (size_t i = 0; i < M.rows; ++i) {
        bool left_zero = true;
        for (size_t j = 0; j < n; ++j)
            if (M.at(i, j)) { left_zero = false; break; }
        if (!left_zero) continue;
        Vec r(n);
        bool nonzero = false;
        for (size_t j = 0; j < n; ++j) {
            r[j] = M.at(i, n + j);
            nonzero |= r[j] != 0;
        }
        if (nonzero) rows.push_back(std::move(r));
    }
    return Subspace(f, n, rows);
}

// Every subspace (of every dimension >= 0) spanned by points of the given
// set. The set must be closed under spans (e.g. all points of a subspace, or
// of the whole space), so that intermediate spans stay inside it. Each
// subspace is reached by extending with a point of index strictly above the
// maximum point index it already contains; that threshold is path-independent,
// which makes the per-level deduplication safe.
inline std::vector<Subspace> all_subspaces_within(const ProjectiveSpace& space,
                                                  std::vector<uint32_t> point_indices) {
    std::sort(point_indices.begin(), point_indices.end());
    const Field& f = space.field();
    size_t dim = space.dim();
    std::vector<Subspace> result;
    struct Node {
        Subspace s;
        uint32_t max_contained;
    };
    std::vector<Node> level;
    for (uint32_t i : point_indices) {
        level.push_back({Subspace(f, dim, {space.point(i)}), i});
        result.push_back(level.back().s);
    }
    while (!level.empty()) {
        std::vector<Node> next;
        std::unordered_map<std::string, bool> seen;
        for (const Node& nd : level) {
            for (uint32_t i : point_indices) {
                if (i <= nd.max_contained) continue;
                std::vector<Vec> rows = nd.s.basis();
                rows.push_back(space.point(i));
                Subspace sp(f, dim, rows);
                std::string key;
                key.reserve(sp.rank() * dim);
                for (const Vec& r : sp.basis())
                    for (uint32_t c : r) key.push_back(static_cast<char>(c));
                if (seen.emplace(std::move(key), true).second) {
                    auto pts = sp.point_indices(space);
                    next.push_back({sp, pts.back()});
                    result.push_back(sp);
                }
            }
        }
        level = std::move(next);
    }
    return result;
}


inline bool collinear(const ProjectiveSpace& s, uint32_t a, uint32_t b, uint32_t c) {
    Matrix m(3, s.dim());
    const Vec *pa = &s.point(a), *pb = &s.point(b), *pc = &s.point(c);
    for (size_t j = 0; j < s.dim(); ++j) {
        m.at(0, j) = (*pa)[j];
        m.at(1, j) = (*pb)[j];
        m.at(2, j) = (*pc)[j];
    }
    return rank_of(s.field(), m) < 3;
}

// (q+1)-arc: right size and no 3 collinear (equivalently, a nondegenerate
// conic for q <= 4)
inline bool is_arc(const ProjectiveSpace& s, const std::vector<uint32_t>& pts, uint64_t q) {
    if (pts.size() != q + 1) return false;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            for (size_t k = j + 1; k < pts.size(); ++k)
                if (collinear(s, pts[i], pts[j], pts[k])) return false;
    return true;
}

} // namespace movoid
