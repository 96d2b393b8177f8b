#pragma once

// Alternating bilinear, quadratic and Hermitian forms; polarities, quadric
// classification by point count, nuclei, symplectic basis reduction.

#include <optional>
#include <string>
#include <vector>

#include "movoid/gf.hpp"
#include "movoid/linalg.hpp"
#include "movoid/projgeom.hpp"

namespace movoid {

class BilinearForm {
public:
    BilinearForm(const Field& f, Matrix gram) : field_(&f), gram_(std::move(gram)) {
        if (gram_.rows != gram_.cols) throw usage_error("Gram matrix must be square");
    }

    const Field& field() const { return *field_; }
    const Matrix& gram() const { return gram_; }
    size_t dim() const { return gram_.rows; }

    uint32_t eval(const Vec& u, const Vec& v) const {
        uint32_t s = 0;
        for (size_t i = 0; i < gram_.rows; ++i) {
            if (!u[i]) continue;
            for (size_t j = 0; j < gram_.cols; ++j)
                if (gram_.at(i, j) && v[j]) s ^= field_->mul(field_->mul(u[i], gram_.at(i, j)), v[j]);
        }
        return s;
    }

    bool is_alternating() const {
        for (size_t i = 0; i < gram_.rows; ++i) {
            if (gram_.at(i, i) != 0) return false;
            for (size_t j = 0; j < i; ++j)
                if (gram_.at(i, j) != gram_.at(j, i)) return false;
        }
        return true;
    }
    size_t radical_dim() const { return dim() - rank_of(*field_, gram_); }
    bool is_nondegenerate() const { return radical_dim() == 0; }

    // {v : B(v,s) = 0 for all s in S}
    Subspace perp(const Subspace& s) const {
        require_nondegenerate();
        if (s.rank() == 0) {
            // perp of the empty subspace is everything
            std::vector<Vec> rows;
            for (size_t i = 0; i < dim(); ++i) {
                Vec e(dim(), 0);
                e[i] = 1;
                rows.push_back(e);
            }
            return Subspace(*field_, dim(), rows);
        }
        Matrix constraints(s.rank(), dim());
        for (size_t k = 0; k < s.rank(); ++k) {
            // row k: (G s_k)^T, so the constraint is v . (G s_k) = 0
            Vec gs = mat_vec(*field_, gram_, s.basis()[k]);
            for (size_t j = 0; j < dim(); ++j) constraints.at(k, j) = gs[j];
        }
        Matrix ns = nullspace(*field_, constraints);
        std::vector<Vec> rows;
        for (size_t i = 0; i < ns.rows; ++i) rows.push_back(ns.row(i));
        return Subspace(*field_, dim(), rows);
    }
    Subspace perp_point(const Vec& p) const {
        return perp(Subspace(*field_, dim(), {p}));
    }

    void require_nondegenerate() const {
        size_t r = radical_dim();
        if (r != 0)
            throw domain_error("degenerate bilinear form (radical dimension " + std::to_string(r) + ")");
    }

private:
    const Field* field_;
    Matrix gram_;
};

inline Matrix antidiagonal_gram(size_t dim) {
    Matrix g(dim, dim);
    for (size_t i = 0; i < dim; ++i) g.at(i, dim - 1 - i) = 1;
    return g;
}

enum class QuadricType { elliptic, hyperbolic, parabolic };

inline const char* to_string(QuadricType t) {
    switch (t) {
        case QuadricType::elliptic: return "elliptic";
        case QuadricType::hyperbolic: return "hyperbolic";
        case QuadricType::parabolic: return "parabolic";
    }
    return "?";
}

struct QuadricClassification {
    bool degenerate = false;
    int radical_pdim = -1;   // projective dimension of the singular radical
    QuadricType base_type = QuadricType::parabolic;
    uint64_t point_count = 0; // zeros in the ambient projective space
};

class QuadraticForm {
public:
    // Upper-triangular coefficient storage; value at v is sum c[i][j] v_i v_j
    // over i <= j.
    QuadraticForm(const Field& f, Matrix coeffs) : field_(&f), coeffs_(std::move(coeffs)) {
        if (coeffs_.rows != coeffs_.cols) throw usage_error("coefficient matrix must be square");
        for (size_t i = 0; i < coeffs_.rows; ++i)
            for (size_t j = 0; j < i; ++j)
                if (coeffs_.at(i, j)) throw usage_error("coefficients must be upper-triangular");
    }
    static QuadraticForm zero(const Field& f, size_t dim) { return QuadraticForm(f, Matrix(dim, dim)); }

    const Field& field() const { return *field_; }
    const Matrix& coeffs() const { return coeffs_; }
    size_t dim() const { return coeffs_.rows; }

    uint32_t eval(const Vec& v) const {
        uint32_t s = 0;
        for (size_t i = 0; i < dim(); ++i) {
            if (!v[i]) continue;
            for (size_t j = i; j < dim(); ++j)
                if (coeffs_.at(i, j) && v[j]) s ^= field_->mul(field_->mul(v[i], coeffs_.at(i, j)), v[j]);
        }
        return s;
    }

    // Polar form B(u,v) = Q(u+v) + Q(u) + Q(v); alternating in characteristic 2.
    BilinearForm polar_form() const {
        Matrix g(dim(), dim());
        for (size_t i = 0; i < dim(); ++i)
            for (size_t j = i + 1; j < dim(); ++j) {
                g.at(i, j) = coeffs_.at(i, j);
                g.at(j, i) = coeffs_.at(i, j);
            }
        return BilinearForm(*field_, g);
    }

    std::vector<uint32_t> zero_set(const ProjectiveSpace& space) const {
        if (space.dim() != dim()) throw usage_error("space/form dimension mismatch");
        std::vector<uint32_t> out;
        for (uint32_t i = 0; i < space.size(); ++i)
            if (eval(space.point(i)) == 0) out.push_back(i);
        return out;
    }

    // Pull back along a basis: Q'(c) = Q(sum c_k b_k).
    QuadraticForm restrict_to(const std::vector<Vec>& basis) const {
        size_t k = basis.size();
        Matrix c(k, k);
        BilinearForm polar = polar_form();
        for (size_t i = 0; i < k; ++i) {
            c.at(i, i) = eval(basis[i]);
            for (size_t j = i + 1; j < k; ++j) c.at(i, j) = polar.eval(basis[i], basis[j]);
        }
        return QuadraticForm(*field_, c);
    }

private:
    const Field* field_;
    Matrix coeffs_;
};

namespace detail {

inline uint64_t projective_count(uint64_t q, size_t vec_dim) {
    uint64_t p = 1;
    for (size_t i = 0; i < vec_dim; ++i) p *= q;
    return (p - 1) / (q - 1);
}

// zeros of a quadratic form over all of F_q^k, projectively
inline uint64_t count_projective_zeros(const QuadraticForm& Q) {
    const Field& f = Q.field();
    size_t k = Q.dim();
    uint64_t total = 1;
    for (size_t i = 0; i < k; ++i) total *= f.order();
    uint64_t zeros = 0;
    Vec v(k, 0);
    for (uint64_t code = 1; code < total; ++code) {
        uint64_t c = code;
        for (size_t i = 0; i < k; ++i) {
            v[i] = static_cast<uint32_t>(c % f.order());
            c /= f.order();
        }
        if (Q.eval(v) == 0) ++zeros;
    }
    return zeros / (f.order() - 1);
}

} // namespace detail

// Classification by point count after splitting off the singular radical
// {v in rad(polar) : Q(v) = 0}; the count of the nondegenerate base is
// matched against the elliptic/parabolic/hyperbolic formulas.
inline QuadricClassification classify_quadric(const QuadraticForm& Q) {
    const Field& f = Q.field();
    size_t dim = Q.dim();
    uint64_t q = f.order();

    QuadricClassification out;
    out.point_count = detail::count_projective_zeros(Q);

    // radical of the polar form
    BilinearForm polar = Q.polar_form();
    Matrix ns = nullspace(f, polar.gram());
    // singular radical: kernel of the (additive, square-semilinear) map Q on it
    std::vector<Vec> sing;
    {
        // Q restricted to the radical: Q(sum c_i r_i) = sum c_i^2 Q(r_i); taking
        // square roots turns the vanishing condition into a linear system.
        size_t m = ns.rows;
        Matrix lin(1, m);
        for (size_t i = 0; i < m; ++i) lin.at(0, i) = f.sqrt(Q.eval(ns.row(i)));
        Matrix ker = nullspace(f, lin);
        for (size_t i = 0; i < ker.rows; ++i) {
            Vec v(dim, 0);
            for (size_t j = 0; j < m; ++j) {
                if (!ker.at(i, j)) continue;
                for (size_t t = 0; t < dim; ++t) v[t] ^= f.mul(ker.at(i, j), ns.row(j)[t]);
            }
            sing.push_back(v);
        }
    }
    Subspace rad0(f, dim, sing);
    out.degenerate = rad0.rank() > 0;
    out.radical_pdim = rad0.pdim();

    // complement basis: extend rad0 to a full basis and keep the added vectors
    std::vector<Vec> complement;
    {
        Subspace cur = rad0;
        for (size_t i = 0; i < dim && cur.rank() < dim; ++i) {
            Vec e(dim, 0);
            e[i] = 1;
            if (!cur.contains(e)) {
                complement.push_back(e);
                std::vector<Vec> rows = cur.basis();
                rows.push_back(e);
                cur = Subspace(f, dim, rows);
            }
        }
    }
    size_t base_dim = complement.size();
    if (base_dim == 0) {
        // zero form: every point is a zero
        out.base_type = QuadricType::parabolic;
        return out;
    }
    QuadraticForm base = Q.restrict_to(complement);
    uint64_t base_zeros = detail::count_projective_zeros(base);
    uint64_t theta = base_dim >= 2 ? detail::projective_count(q, base_dim - 1) : 0;
    if (base_dim % 2 == 1) {
        // odd vector dimension: parabolic count (q^(D-1)-1)/(q-1)
        if (base_zeros != theta)
            throw construction_error("quadric classification mismatch (parabolic count)");
        out.base_type = QuadricType::parabolic;
    } else {
        uint64_t half = 1;
        for (size_t i = 1; i < base_dim / 2; ++i) half *= q; // q^(D/2 - 1)
        if (base_zeros == theta + half) out.base_type = QuadricType::hyperbolic;
        else if (base_zeros == theta - half) out.base_type = QuadricType::elliptic;
        else throw construction_error("quadric classification mismatch (even-dimensional count)");
    }
    return out;
}

// The unique point of the polar radical off the quadric; defined for
// nondegenerate parabolic quadrics in characteristic 2.
inline Vec nucleus(const QuadraticForm& Q) {
    const Field& f = Q.field();
    Matrix ns = nullspace(f, Q.polar_form().gram());
    if (ns.rows != 1) throw domain_error("nucleus requires a one-dimensional polar radical");
    Vec n = ns.row(0);
    if (Q.eval(n) == 0) throw domain_error("nucleus candidate lies on the quadric");
    QuadricClassification cls = classify_quadric(Q);
    if (cls.degenerate || cls.base_type != QuadricType::parabolic)
        throw domain_error("nucleus requires a nondegenerate parabolic quadric");
    return normalize_point(f, n);
}

// Change of basis T with T^t J_std T = G where J_std is the anti-diagonal
// alternating form; x -> Tx then carries the polar space of G onto the
// standard one.
inline Matrix symplectic_basis(const BilinearForm& B) {
    const Field& f = B.field();
    B.require_nondegenerate();
    if (!B.is_alternating()) throw usage_error("symplectic basis requires an alternating form");
    size_t dim = B.dim();
    if (dim % 2 != 0) throw usage_error("alternating nondegenerate form needs even dimension");

    // hyperbolic pairs (u_k, v_k) with B(u_k, v_k) = 1, mutually orthogonal;
    // each pair is drawn from the perp of the pairs already chosen, on which
    // the form stays nondegenerate.
    std::vector<Vec> us, vs;
    std::vector<Vec> processed;
    for (size_t k = 0; k < dim / 2; ++k) {
        Subspace rest = B.perp(Subspace(f, dim, processed));
        Vec u = rest.basis().at(0);
        Vec v;
        for (const Vec& w : rest.basis()) {
            uint32_t b = B.eval(u, w);
            if (b == 0) continue;
            v = w;
            uint32_t iv = f.inv(b);
            for (auto& x : v) x = f.mul(iv, x);
            break;
        }
        if (v.empty()) throw construction_error("failed to find hyperbolic partner");
        us.push_back(u);
        vs.push_back(v);
        processed.push_back(u);
        processed.push_back(v);
    }
    // columns arranged to match the anti-diagonal convention:
    // col k = u_k, col (dim-1-k) = v_k
    Matrix C(dim, dim);
    for (size_t k = 0; k < dim / 2; ++k)
        for (size_t i = 0; i < dim; ++i) {
            C.at(i, k) = us[k][i];
            C.at(i, dim - 1 - k) = vs[k][i];
        }
    Matrix T = inverse(f, C);
    // verify T^t J_std T = G
    Matrix check = mat_mul(f, mat_mul(f, transpose(T), antidiagonal_gram(dim)), T);
    if (!(check == B.gram())) throw construction_error("symplectic basis verification failed");
    return T;
}

class HermitianForm {
public:
    // gram over GF(q^2) with gram = conjugate-transpose under x -> x^q;
    // h(u,v) = u^t . gram . v^(q).
    HermitianForm(const Field& ext, uint32_t q, Matrix gram)
        : ext_(&ext), q_(q), gram_(std::move(gram)) {
        if (gram_.rows != gram_.cols) throw usage_error("Gram matrix must be square");
        for (size_t i = 0; i < gram_.rows; ++i)
            for (size_t j = 0; j < gram_.cols; ++j)
                if (ext_->frobenius(gram_.at(j, i), q_) != gram_.at(i, j))
                    throw usage_error("matrix is not Hermitian");
    }

    const Field& ext() const { return *ext_; }
    uint32_t q() const { return q_; }
    const Matrix& gram() const { return gram_; }
    size_t dim() const { return gram_.rows; }

    uint32_t eval(const Vec& u, const Vec& v) const {
        uint32_t s = 0;
        for (size_t i = 0; i < gram_.rows; ++i) {
            if (!u[i]) continue;
            for (size_t j = 0; j < gram_.cols; ++j)
                if (gram_.at(i, j) && v[j])
                    s ^= ext_->mul(ext_->mul(u[i], gram_.at(i, j)), ext_->frobenius(v[j], q_));
        }
        return s;
    }

private:
    const Field* ext_;
    uint32_t q_;
    Matrix gram_;
};

// The symplectic form a Hermitian polarity induces on a Baer subgeometry all
// of whose points lie on the Hermitian variety. Gram entries must land in the
// embedded base field; the result must be alternating and nondegenerate.
inline BilinearForm induced_symplectic(const HermitianForm& H, const ExtensionPair& pair,
                                       const std::vector<Vec>& sigma_basis) {
    size_t dim = H.dim();
    if (sigma_basis.size() != dim) throw usage_error("need a full Baer basis");
    for (const Vec& b : sigma_basis)
        if (H.eval(b, b) != 0)
            throw construction_error("Baer basis vector off the Hermitian variety");
    Matrix g(dim, dim);
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) {
            uint32_t v = H.eval(sigma_basis[i], sigma_basis[j]);
            if (!pair.in_base(v))
                throw construction_error("induced Gram entry outside the base field");
            g.at(i, j) = pair.retract(v);
        }
    BilinearForm B(pair.base(), std::move(g));
    if (!B.is_alternating()) throw construction_error("induced form is not alternating");
    B.require_nondegenerate();
    return B;
}

} // namespace movoid
