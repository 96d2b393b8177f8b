#pragma once

// GluedGeometry construction; include via glued.hpp.

namespace movoid {

inline void GluedGeometry::build_sigma() {
    const Field& e = *ext_;
    t_ = e.generator();
    uint32_t tq = e.frobenius(t_, cfg_.q);
    sigma_basis_ = {Vec{1, 1, 0, 0, 0, 0},  Vec{t_, tq, 0, 0, 0, 0}, Vec{0, 0, 1, 0, 0, 0},
                    Vec{0, 0, 0, 1, 1, 0},  Vec{0, 0, 0, t_, tq, 0}, Vec{0, 0, 0, 0, 0, 1}};
    ambient_.reserve(internal_.size());
    for (uint32_t i = 0; i < internal_.size(); ++i) {
        const Vec& c = internal_.point(i);
        Vec v(6, 0);
        for (size_t k = 0; k < 6; ++k) {
            uint32_t ck = pair_.embed(c[k]);
            if (!ck) continue;
            for (size_t j = 0; j < 6; ++j) v[j] ^= e.mul(ck, sigma_basis_[k][j]);
        }
        Vec nv = normalize_point(e, v);
        if (!ambient_index_.emplace(pack(nv), i).second)
            throw construction_error("Baer coordinatization is not injective");
        ambient_.push_back(std::move(nv));
    }
}

inline void GluedGeometry::build_hermitian() {
    const Field& e = *ext_;
    uint32_t w = cfg_.omega, wq = e.frobenius(w, cfg_.q);
    Matrix J(6, 6);
    J.at(0, 3) = w;
    J.at(0, 5) = wq;
    J.at(1, 4) = wq;
    J.at(1, 5) = w;
    J.at(2, 5) = 1;
    J.at(3, 0) = wq;
    J.at(4, 1) = w;
    J.at(5, 0) = w;
    J.at(5, 1) = wq;
    J.at(5, 2) = 1;
    H_ = std::make_unique<HermitianForm>(e, cfg_.q, J);
    for (const Vec& v : ambient_)
        if (H_->eval(v, v) != 0)
            throw construction_error("Sigma is not contained in the Hermitian variety");
}

inline void GluedGeometry::check_tau_fixes_sigma() {
    for (const Vec& v : ambient_)
        if (tau(v) != v) throw construction_error("tau does not fix Sigma pointwise");
}

inline void GluedGeometry::build_landmarks() {
    N_idx_ = index_of_ambient(Vec{0, 0, 1, 0, 0, 0});
    pi_mask_ = Bits(internal_.size());
    for (uint32_t i = 0; i < internal_.size(); ++i)
        if (ambient_[i][5] == 0) pi_mask_.set(i);
    if (!(W_->perp_mask(N_idx_) == pi_mask_))
        throw construction_error("the perp of the nucleus is not Pi");
    q_mask_ = Bits(internal_.size());
    for (uint32_t i = 0; i < internal_.size(); ++i)
        if (ambient_[i][5] == 0 && qbar_eval(ambient_[i]) == 0) {
            q_mask_.set(i);
            q_points_.push_back(i);
        }
    uint64_t expect = static_cast<uint64_t>(cfg_.q + 1) * (cfg_.q * cfg_.q + 1);
    if (q_points_.size() != expect) throw construction_error("parabolic quadric has wrong size");
}

inline Matrix GluedGeometry::psl_matrix(uint32_t a, uint32_t b, uint32_t c, uint32_t d) const {
    const Field& e = *ext_;
    const uint32_t q = cfg_.q;
    if (e.add(e.mul(a, d), e.mul(b, c)) != 1) throw usage_error("ad + bc must be 1");
    uint32_t w = cfg_.omega, wq = e.frobenius(w, q);
    uint32_t iw = e.inv(w), iwq = e.inv(wq);
    uint32_t aq = e.frobenius(a, q), bq = e.frobenius(b, q), cq = e.frobenius(c, q),
             dq = e.frobenius(d, q);
    Matrix m(6, 6);
    m.at(0, 0) = e.mul(a, a);
    m.at(0, 4) = e.mul(c, c);
    m.at(0, 5) = e.mul(e.mul(c, e.add(a, e.mul(c, wq))), iw);
    m.at(1, 1) = e.mul(aq, aq);
    m.at(1, 3) = e.mul(cq, cq);
    m.at(1, 5) = e.mul(e.mul(cq, e.add(aq, e.mul(cq, w))), iwq);
    m.at(2, 0) = e.mul(a, b);
    m.at(2, 1) = e.mul(aq, bq);
    m.at(2, 2) = 1;
    m.at(2, 3) = e.mul(cq, dq);
    m.at(2, 4) = e.mul(c, d);
    m.at(2, 5) = e.add(e.add(e.mul(e.mul(d, e.add(a, e.mul(c, wq))), iw),
                             e.mul(e.mul(dq, e.add(aq, e.mul(cq, w))), iwq)),
                       e.inv(e.mul(w, wq)));
    m.at(3, 1) = e.mul(bq, bq);
    m.at(3, 3) = e.mul(dq, dq);
    m.at(3, 5) = e.mul(e.add(e.mul(dq, e.add(bq, e.mul(dq, w))), w), iwq);
    m.at(4, 0) = e.mul(b, b);
    m.at(4, 4) = e.mul(d, d);
    m.at(4, 5) = e.mul(e.add(e.mul(d, e.add(b, e.mul(d, wq))), wq), iw);
    m.at(5, 5) = 1;
    return m;
}

inline void GluedGeometry::build_group() {
    const Field& e = *ext_;
    // elementary SL(2,q^2) generators over an F_2-basis of GF(q^2)
    std::vector<std::array<uint32_t, 4>> tuples;
    for (int i = 0; i < e.degree(); ++i) {
        uint32_t lam = e.pow(t_, static_cast<uint64_t>(i));
        tuples.push_back({1, lam, 0, 1});
        tuples.push_back({1, 0, lam, 1});
    }
    for (const auto& [a, b, c, d] : tuples) {
        Matrix m = psl_matrix(a, b, c, d);
        // invariance of the Hermitian form: M^t J M^(q) = J
        Matrix mq(6, 6);
        for (size_t i = 0; i < 6; ++i)
            for (size_t j = 0; j < 6; ++j) mq.at(i, j) = e.frobenius(m.at(i, j), cfg_.q);
        if (!(mat_mul(e, mat_mul(e, transpose(m), H_->gram()), mq) == H_->gram()))
            throw construction_error("generator matrix does not fix the Hermitian form");
        std::vector<uint32_t> perm(internal_.size());
        for (uint32_t i = 0; i < internal_.size(); ++i) {
            Vec img = mat_vec(e, m, ambient_[i]);
            perm[i] = index_of_ambient(img); // throws if Sigma is not stabilized
        }
        if (perm[N_idx_] != N_idx_)
            throw construction_error("generator does not fix the nucleus");
        for (uint32_t i = 0; i < internal_.size(); ++i) {
            if (pi_mask_.test(i) != pi_mask_.test(perm[i]))
                throw construction_error("generator does not stabilize Pi");
            if (q_mask_.test(i) != q_mask_.test(perm[i]))
                throw construction_error("generator does not stabilize the quadric");
        }
        group_gens_.push_back(std::move(perm));
    }
    // closure
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
    std::vector<uint32_t> ident(internal_.size());
    for (uint32_t i = 0; i < internal_.size(); ++i) ident[i] = i;
    std::unordered_set<std::vector<uint32_t>, VecHash> seen{ident};
    group_.push_back(ident);
    for (size_t head = 0; head < group_.size(); ++head) {
        for (const auto& gen : group_gens_) {
            std::vector<uint32_t> prod(internal_.size());
            for (uint32_t i = 0; i < internal_.size(); ++i) prod[i] = gen[group_[head][i]];
            if (seen.insert(prod).second) group_.push_back(std::move(prod));
        }
    }
    uint64_t expect = static_cast<uint64_t>(cfg_.q) * cfg_.q *
                      (static_cast<uint64_t>(cfg_.q) * cfg_.q * cfg_.q * cfg_.q - 1);
    if (group_.size() != expect)
        throw construction_error("group order " + std::to_string(group_.size()) + " != " +
                                 std::to_string(expect));
}

inline void GluedGeometry::build_spread() {
    const Field& e = *ext_;
    // conic points of the plane pi: X2 = X4 = X6 = 0, X3^2 + X1 X5 = 0
    std::vector<Vec> conic;
    auto consider = [&](Vec v) {
        Vec nv = normalize_point(e, v);
        if (e.add(e.mul(nv[2], nv[2]), e.mul(nv[0], nv[4])) == 0) conic.push_back(nv);
    };
    // normalized points of pi, leading coordinate first among X1, X3, X5
    for (uint32_t x3 = 0; x3 < e.order(); ++x3)
        for (uint32_t x5 = 0; x5 < e.order(); ++x5) consider(Vec{1, 0, x3, 0, x5, 0});
    for (uint32_t x5 = 0; x5 < e.order(); ++x5) consider(Vec{0, 0, 1, 0, x5, 0});
    consider(Vec{0, 0, 0, 0, 1, 0});
    if (conic.size() != static_cast<size_t>(cfg_.q) * cfg_.q + 1)
        throw construction_error("conic of pi has wrong size");
    Bits covered(internal_.size());
    for (const Vec& p : conic) {
        Vec pt = tau(p);
        std::vector<uint32_t> line;
        for (uint32_t lam = 0; lam < e.order(); ++lam) {
            Vec v(6, 0);
            for (size_t j = 0; j < 6; ++j) v[j] = e.add(p[j], e.mul(lam, pt[j]));
            if (ambient_on_sigma(v)) line.push_back(index_of_ambient(v));
        }
        if (ambient_on_sigma(pt)) line.push_back(index_of_ambient(pt));
        std::sort(line.begin(), line.end());
        line.erase(std::unique(line.begin(), line.end()), line.end());
        if (line.size() != static_cast<size_t>(cfg_.q) + 1)
            throw construction_error("spread line has wrong point count");
        for (uint32_t i : line) {
            if (!q_mask_.test(i) || covered.test(i))
                throw construction_error("spread does not partition the quadric");
            covered.set(i);
        }
        spread_.push_back(std::move(line));
    }
    std::sort(spread_.begin(), spread_.end());
    if (spread_.size() != static_cast<size_t>(cfg_.q) * cfg_.q + 1 ||
        covered.count() != q_points_.size())
        throw construction_error("spread does not cover the quadric");
}

inline void GluedGeometry::build_s_gamma() {
    const Field& e = *ext_;
    uint32_t w = cfg_.omega, g = cfg_.gamma;
    uint32_t wq = e.frobenius(w, cfg_.q), gq = e.frobenius(g, cfg_.q);
    Vec s{e.mul(g, e.inv(w)),
          e.mul(gq, e.inv(wq)),
          e.add(e.mul(e.mul(wq, g), e.inv(w)), e.mul(e.mul(w, gq), e.inv(wq))),
          1,
          1,
          1};
    s_gamma_idx_ = index_of_ambient(s);
}

} // namespace movoid
