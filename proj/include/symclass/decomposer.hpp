#ifndef SYMCLASS_DECOMPOSER_HPP
#define SYMCLASS_DECOMPOSER_HPP

#include <span>
#include <utility>
#include <vector>

#include "symclass/common.hpp"
#include "symclass/symmetric_state.hpp"

namespace symclass {

/// Moments m_a = d_a / sqrt(C(N,a)); equal to the dense amplitudes of the
/// weight-a bitstrings, and the right-hand side of the decomposition system.
struct MomentVector {
    int n = 0;
    VectorXcd moments;
};

/// D projective points and weights with
/// state = sum_k weights[k] |points[k]>^{tensor N}.
struct DiagonalDecomposition {
    int n = 0;
    std::vector<ProductPoint> points;  ///< unit norm, canonical phase, pairwise distinct
    VectorXcd weights;
    double residual = 0.0;   ///< relative resynthesis residual in moment space
    int infinity_index = -1; ///< index of the x = 0 point, or -1

    int bond_dimension() const { return static_cast<int>(points.size()); }
};

/// Diagonals of the site-independent MPS matrices A_0, A_1.
struct KrausPair {
    int bond_dim = 0;
    VectorXcd a0;
    VectorXcd a1;
};

/// Roots, with multiplicity, of p(w) = sum_a sqrt(C(N,a)) d_a w^a, plus the
/// multiplicity of the root at infinity (N - deg p).
struct MajoranaRoots {
    int n = 0;
    std::vector<std::pair<Complex, int>> finite_roots;
    int infinity_multiplicity = 0;

    /// Multiplicity partition of N, sorted descending.
    std::vector<int> degeneracy_configuration() const;
};

MomentVector moments(const SymmetricState& state);

/// Smallest D admitting a diagonal decomposition with pairwise-distinct
/// projective points (at most one at infinity). Throws ZeroStateError on an
/// all-zero input and IllConditionedError when no decomposition up to
/// D = N+1 can be certified within tol.
int optimal_bond_dimension(const SymmetricState& state, const ToleranceConfig& tol = {});

/// Hankel kernel search: smallest r whose kernel holds a polynomial with r
/// distinct projective roots (a vanishing leading coefficient encodes the
/// point at infinity), weights by Vandermonde least squares. The result is
/// certified by its resynthesis residual before being returned.
DiagonalDecomposition decompose(const SymmetricState& state, const ToleranceConfig& tol = {});

/// A_mu[k,k] = weights[k]^{1/N} <mu|x_k>, principal branch root.
KrausPair kraus_pair(const DiagonalDecomposition& dec);

/// Amplitude of a weight-w bitstring from the cyclic trace formula,
/// sum_k a0[k]^{N-w} a1[k]^w.
VectorXcd kraus_moments(const KrausPair& kraus, int n);

MajoranaRoots majorana_roots(const SymmetricState& state, const ToleranceConfig& tol = {});

/// Rank of the M | N-M bipartition map. Throws on M outside [1, N-1].
int schmidt_binary_rank(const SymmetricState& state, int m_cut,
                        const ToleranceConfig& tol = {});

/// State sum_k c_k |x_k>^{tensor (N+extra)} reusing the decomposition's
/// points and weights.
SymmetricState extend_nesting(const DiagonalDecomposition& dec, int extra);

/// True iff all pairwise 2x2 determinants x_j y_k - x_k y_j exceed
/// tol_sep * |p_j| * |p_k|.
bool pairwise_independent(std::span<const ProductPoint> points, double tol_sep = 1e-8);

/// Roots of sum_j coeffs[j] w^j as companion-matrix eigenvalues; the leading
/// coefficient must be nonzero.
std::vector<Complex> polynomial_roots(const VectorXcd& coeffs);

}  // namespace symclass

#endif
