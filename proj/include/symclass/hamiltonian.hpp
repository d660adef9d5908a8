#ifndef SYMCLASS_HAMILTONIAN_HPP
#define SYMCLASS_HAMILTONIAN_HPP

#include <map>
#include <string>
#include <vector>

#include "symclass/common.hpp"
#include "symclass/symmetric_state.hpp"

namespace symclass {

/// Psi_M: maps M-qubit symmetric bras to (N-M)-qubit symmetric kets.
/// Entry (l, k) = sqrt(C(M,k) C(N-M,l) / C(N,k+l)) * d_{k+l}.
struct BipartitionMap {
    int n = 0;
    int m_cut = 0;
    MatrixXcd matrix;  ///< (N-M+1) x (M+1)
};

/// rho^(M) restricted to the symmetric block, (M+1) x (M+1) Hermitian PSD.
struct ReducedDensityMatrix {
    int m_sites = 0;
    MatrixXcd matrix;
};

/// Projector onto the kernel of rho^(n) within the symmetric block.
struct LocalProjector {
    int n_sites = 0;
    int kernel_dim = 0;
    MatrixXcd symmetric_block;  ///< (n+1) x (n+1), Hermitian idempotent

    /// 2^n x 2^n extension T P T^dag through the Dicke isometry; zero on the
    /// orthogonal complement of the symmetric space.
    MatrixXcd full_matrix() const;
};

/// Ranks of rho^(M) for M = 1..N-1 and the minimal interaction length
/// n* = first M with a nontrivial symmetric kernel.
struct RankProfile {
    std::vector<int> ranks;  ///< ranks[M-1] = rank of rho^(M)
    int n_star = 0;

    int rank(int m_sites) const { return ranks.at(static_cast<size_t>(m_sites - 1)); }
};

/// One weighted Pauli string. sites are sorted ascending and paulis[i] in
/// {X,Y,Z} acts on sites[i]; an empty term is the identity.
struct PauliTerm {
    std::vector<int> sites;
    std::string paulis;
    Complex coeff;
};

/// Translated local terms on a periodic chain. Canonical Pauli strings for
/// inspection and serialization, dense per-window blocks for fast application.
struct ParentHamiltonian {
    struct LocalBlock {
        std::vector<int> sites;  ///< sorted ascending
        MatrixXcd block;         ///< 2^k x 2^k on those sites
    };

    int n_parties = 0;
    std::vector<PauliTerm> terms;
    std::vector<LocalBlock> blocks;
    std::map<std::string, double> couplings;
    bool positive_semidefinite = false;

    /// Sum of |coeff| over Pauli terms; each string has unit operator norm.
    double term_norm() const;
};

struct GroundReport {
    double residual = 0.0;       ///< |H psi - E_ref psi|
    double energy = 0.0;         ///< <psi|H|psi>
    bool has_spectrum = false;
    double e_min = 0.0;
    double ground_overlap = 0.0; ///< |P_ground psi|^2
    int ground_degeneracy = 0;
};

/// Isometry from the (n+1)-dim symmetric block into the full n-qubit space,
/// T[s,k] = delta_{|s|,k} / sqrt(C(n,k)).
MatrixXcd dicke_isometry(int n);

BipartitionMap bipartition_map(const SymmetricState& state, int m_cut);

/// rho^(M) = Psi_{N-M} Psi_{N-M}^dag on the normalized state.
ReducedDensityMatrix reduced_density(const SymmetricState& state, int m_sites);

RankProfile rank_profile(const SymmetricState& state, const ToleranceConfig& tol = {});

/// Throws NoKernelError (carrying n*) when rho^(n) is full rank in the
/// symmetric block.
LocalProjector kernel_projector(const SymmetricState& state, int n_sites,
                                const ToleranceConfig& tol = {});

/// Projector onto the Hamming-weight-k sector of n qubits as Pauli-Z strings;
/// restricted to the symmetric block it is |D_k^(n)><D_k^(n)|.
std::vector<PauliTerm> dicke_projector(int n_sites, int k);

/// H = sum_i h_i^(n) + lambda_sym sum_i (P_0)_{i,i+1} with h the full-space
/// extension of the symmetric kernel projector and P_0 the two-qubit singlet
/// projector; positive semidefinite and annihilating the source state.
ParentHamiltonian assemble_parent(const SymmetricState& state, int n_sites,
                                  double lambda_sym = 1.0, const ToleranceConfig& tol = {});

enum class PaperModel { Ghz, W, X };

/// The three explicit Hamiltonian families with their coupling conditions:
/// ghz needs J_z > 0 and J_z > 2J; w needs J > 0 and gamma > 0; x needs
/// J > 0 and J_z > 0. Violations throw std::invalid_argument naming the
/// inequality.
ParentHamiltonian paper_hamiltonian(PaperModel which, int n_parties, double j,
                                    double jz_or_gamma);

/// H x on dense 2^N amplitudes.
VectorXcd apply_dense(const ParentHamiltonian& h, const VectorXcd& amplitudes);

MatrixXcd dense_matrix(const ParentHamiltonian& h);

/// Residual via dense matvec (requires N <= n_full_cap); spectral fields are
/// filled when N <= spectral_cap. E_ref is the dense minimum when available,
/// zero for sum-of-projector Hamiltonians, the Rayleigh quotient otherwise.
GroundReport verify_ground(const ParentHamiltonian& h, const SymmetricState& state,
                           const ToleranceConfig& tol = {}, int spectral_cap = 10);

/// Merge duplicates, drop negligible coefficients, sort by (support size,
/// sites, paulis) with X < Y < Z.
std::vector<PauliTerm> canonicalize(std::vector<PauliTerm> terms);

}  // namespace symclass

#endif
