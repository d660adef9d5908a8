#ifndef SYMCLASS_SLOCC_HPP
#define SYMCLASS_SLOCC_HPP

#include "symclass/common.hpp"
#include "symclass/rng.hpp"
#include "symclass/symmetric_state.hpp"

namespace symclass {

/// Invertible local operator, rows (a b), (c d). Applied identically to every
/// qubit of a symmetric state.
struct Ilo {
    Complex a{1, 0}, b{0, 0}, c{0, 0}, d{1, 0};

    Complex det() const { return a * d - b * c; }
    double condition_number() const;
    Ilo inverse() const;
};

Ilo operator*(const Ilo& lhs, const Ilo& rhs);

/// Restriction of A^{tensor N} to the symmetric subspace, an (N+1)x(N+1)
/// matrix in the Dicke basis.
struct SymmetricOperatorRep {
    int n = 0;
    MatrixXcd matrix;
};

/// M[l,k] = sqrt(C(N,l)/C(N,k)) * [u^k] (a + b u)^{N-l} (c + d u)^l, the
/// binomial convolution of the two transformed one-qubit columns.
SymmetricOperatorRep symmetric_power_rep(const Ilo& op, int n);

SymmetricState apply_ilo(const SymmetricState& state, const Ilo& op);

ProductPoint apply_ilo(const ProductPoint& p, const Ilo& op);

/// Random invertible 2x2 with condition number <= condition_cap, built as
/// U diag(s, 1/s) V with seeded angles. condition_cap = 1 yields a unitary.
Ilo random_ilo(Rng& rng, double condition_cap);

}  // namespace symclass

#endif
