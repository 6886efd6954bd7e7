#include "cwlin/linalg.hpp"

#include <random>

namespace cwlin {

Coeff mat_det(const QMat& a, const CoeffField& F) {
    int n = static_cast<int>(a.size());
    QMat m = a;
    Coeff det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!CoeffField::is_zero(m[r][col])) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Coeff(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = F.neg(det);
        }
        det = F.mul(det, m[col][col]);
        Coeff inv = F.inv(m[col][col]);
        for (int r = col + 1; r < n; ++r) {
            if (CoeffField::is_zero(m[r][col])) continue;
            Coeff factor = F.mul(m[r][col], inv);
            for (int c = col; c < n; ++c)
                m[r][c] = F.sub(m[r][c], F.mul(factor, m[col][c]));
        }
    }
    return det;
}

QMat mat_identity(int n) {
    QMat id(n, std::vector<Coeff>(n, Coeff(0)));
    for (int i = 0; i < n; ++i) id[i][i] = Coeff(1);
    return id;
}

QMat mat_mul(const QMat& a, const QMat& b, const CoeffField& F) {
    int n = static_cast<int>(a.size());
    int k = static_cast<int>(b.size());
    int m = static_cast<int>(b.empty() ? 0 : b[0].size());
    QMat r(n, std::vector<Coeff>(m, Coeff(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            Coeff s(0);
            for (int t = 0; t < k; ++t) s = F.add(s, F.mul(a[i][t], b[t][j]));
            r[i][j] = std::move(s);
        }
    return r;
}

QMat mat_inverse(const QMat& a, const CoeffField& F) {
    int n = static_cast<int>(a.size());
    QMat m = a;
    QMat inv = mat_identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!CoeffField::is_zero(m[r][col])) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw input_error("singular matrix");
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        Coeff piv_inv = F.inv(m[col][col]);
        for (int c = 0; c < n; ++c) {
            m[col][c] = F.mul(m[col][c], piv_inv);
            inv[col][c] = F.mul(inv[col][c], piv_inv);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || CoeffField::is_zero(m[r][col])) continue;
            Coeff factor = m[r][col];
            for (int c = 0; c < n; ++c) {
                m[r][c] = F.sub(m[r][c], F.mul(factor, m[col][c]));
                inv[r][c] = F.sub(inv[r][c], F.mul(factor, inv[col][c]));
            }
        }
    }
    return inv;
}

LinearChange::LinearChange(QMat a, const CoeffField& F) : a_(std::move(a)) {
    for (const auto& row : a_)
        if (row.size() != a_.size()) throw input_error("change-of-basis matrix must be square");
    inv_ = mat_inverse(a_, F);  // throws on singular input
}

Poly LinearChange::form(int i, const RingCtx& ring, const MonomialOrder& ord) const {
    CoeffField F(ring.characteristic());
    std::vector<Term> ts;
    for (int k = 0; k < dim(); ++k)
        if (!CoeffField::is_zero(a_[i][k])) ts.push_back(Term{a_[i][k], mono_var(ring, k)});
    return Poly::make(std::move(ts), F, ord);
}

Poly apply_change(const Poly& f, const LinearChange& ch, const RingCtx& ring,
                  const MonomialOrder& ord) {
    CoeffField F(ring.characteristic());
    int n = ch.dim();
    if (n > ring.x_count()) throw input_error("change of basis larger than the x-block");
    std::vector<std::optional<Poly>> images(ring.nvars());
    for (int k = 0; k < n; ++k) {
        std::vector<Term> ts;
        for (int j = 0; j < n; ++j)
            if (!CoeffField::is_zero(ch.inverse()[k][j]))
                ts.push_back(Term{ch.inverse()[k][j], mono_var(ring, j)});
        images[k] = Poly::make(std::move(ts), F, ord);
    }
    return poly_substitute(f, images, ring, F, ord);
}

LinearChange random_basis(const RingCtx& ring, uint64_t seed, long bound) {
    if (bound <= 0) throw input_error("coefficient bound must be positive");
    unsigned long p = ring.characteristic();
    if (p != 0 && p <= static_cast<unsigned long>(bound))
        throw input_error("characteristic must exceed the coefficient bound");
    CoeffField F(p);
    int n = ring.x_count();
    std::mt19937_64 rng(seed);
    const unsigned long range = 2 * static_cast<unsigned long>(bound) + 1;
    for (int attempt = 0; attempt < 100; ++attempt) {
        QMat a(n, std::vector<Coeff>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                long v = static_cast<long>(rng() % range) - bound;
                a[i][j] = F.reduce(Coeff(v));
            }
        if (!CoeffField::is_zero(mat_det(a, F))) return LinearChange(std::move(a), F);
    }
    throw input_error("no invertible matrix found in 100 samples");
}

LinearChange basis_from_forms(const std::vector<Poly>& z, const RingCtx& ring) {
    CoeffField F(ring.characteristic());
    int n = ring.x_count();
    if (static_cast<int>(z.size()) != n)
        throw input_error("sequence length must equal the number of base variables");
    QMat a(n, std::vector<Coeff>(n, Coeff(0)));
    for (int i = 0; i < n; ++i) {
        if (z[i].is_zero() || !poly_is_linear_form(z[i], ring))
            throw input_error("sequence entries must be nonzero linear forms in the base variables");
        for (const Term& t : z[i].terms())
            for (int k = 0; k < n; ++k)
                if (t.m.exp(k) == 1) a[i][k] = t.c;
    }
    if (CoeffField::is_zero(mat_det(a, F))) throw input_error("not a basis of the linear forms");
    return LinearChange(std::move(a), F);
}

} // namespace cwlin
