#pragma once

#include <cstdint>
#include <vector>

#include "cwlin/poly.hpp"

namespace cwlin {

using QMat = std::vector<std::vector<Coeff>>;

Coeff mat_det(const QMat& a, const CoeffField& F);
// Throws input_error on a singular matrix.
QMat mat_inverse(const QMat& a, const CoeffField& F);
QMat mat_identity(int n);
QMat mat_mul(const QMat& a, const QMat& b, const CoeffField& F);

// An invertible change of coordinates on the x-block: z = A x (row i of A
// gives z_i), identity on the y-block.
class LinearChange {
public:
    LinearChange(QMat a, const CoeffField& F);

    int dim() const { return static_cast<int>(a_.size()); }
    const QMat& matrix() const { return a_; }
    const QMat& inverse() const { return inv_; }

    // The linear form z_i in the given ring.
    Poly form(int i, const RingCtx& ring, const MonomialOrder& ord) const;

private:
    QMat a_;
    QMat inv_;
};

// The ring automorphism with phi(z_i) = x_i, i.e. x_k -> (A^-1 row k) . x.
Poly apply_change(const Poly& f, const LinearChange& ch, const RingCtx& ring,
                  const MonomialOrder& ord);

// Invertible matrix with entries uniform in [-bound, bound]; deterministic in
// the seed, resampled on singularity (at most 100 retries).
LinearChange random_basis(const RingCtx& ring, uint64_t seed, long bound);

// Rows of `z` as a coefficient matrix over the x-block; throws input_error
// unless every entry is a linear form and the matrix is invertible.
LinearChange basis_from_forms(const std::vector<Poly>& z, const RingCtx& ring);

} // namespace cwlin
