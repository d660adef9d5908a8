#ifndef SYMCLASS_SYMMETRIC_STATE_HPP
#define SYMCLASS_SYMMETRIC_STATE_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symclass/common.hpp"

namespace symclass {

/// Permutation-symmetric N-qubit pure state, stored as its N+1 Dicke
/// coefficients d_0..d_N. States are kept unnormalized; normalization is an
/// explicit step since most of the library works projectively.
struct SymmetricState {
    int n = 0;
    VectorXcd dicke;

    SymmetricState() = default;
    SymmetricState(int n_parties, VectorXcd coeffs);

    double norm() const { return dicke.norm(); }
    SymmetricState normalized() const;
    bool is_normalized(double tol_norm = 1e-9) const;
};

/// Dense amplitudes over all 2^N bitstrings, lexicographic order with site 0
/// on the most significant bit. Only used to cross-check the symmetric algebra.
struct FullStateVector {
    int n = 0;
    VectorXcd amplitudes;
};

/// Single-qubit state x|0> + y|1> with projective semantics.
struct ProductPoint {
    Complex x{1.0, 0.0};
    Complex y{0.0, 0.0};
};

/// Unit norm, phase fixed so the first component above 1e-14 is real positive.
ProductPoint normalize_point(const ProductPoint& p);

/// |x_p y_q - y_p x_q| for unit-normalized points; 0 iff projectively equal.
double chordal_distance(const ProductPoint& p, const ProductPoint& q);

SymmetricState make_separable0(int n);
SymmetricState make_dicke(int n, int k);
SymmetricState make_ghz(int n);
SymmetricState make_w(int n);
SymmetricState make_x(int n, Complex z);

/// Dispatch on a state family name: separable0, dicke (needs k), ghz, w,
/// x (needs z). Throws std::invalid_argument on unknown names or bad params.
SymmetricState build_named(const std::string& name, int n, std::optional<int> k = {},
                           std::optional<Complex> z = {});

/// Amplitude of any weight-k bitstring is d_k / sqrt(C(N,k)).
FullStateVector to_full_vector(const SymmetricState& state, int n_full_cap = 14);

/// d_a = sqrt(C(N,a)) * sum_k w_k x_k^{N-a} y_k^a. Exact resynthesis inverse
/// of decompose up to tolerance; output is unnormalized.
SymmetricState from_decomposition(std::span<const ProductPoint> points,
                                  const VectorXcd& weights, int n);

/// <a|b> in the Dicke representation. Throws on mismatched N.
Complex overlap(const SymmetricState& a, const SymmetricState& b);

/// |<a|b>| / (|a| |b|).
double fidelity(const SymmetricState& a, const SymmetricState& b);

}  // namespace symclass

#endif
