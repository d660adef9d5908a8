#ifndef SYMCLASS_CORPUS_HPP
#define SYMCLASS_CORPUS_HPP

#include <array>
#include <vector>

#include "symclass/common.hpp"
#include "symclass/rng.hpp"
#include "symclass/symmetric_state.hpp"

namespace symclass {

/// Normalized state with complex-Gaussian Dicke coefficients.
SymmetricState random_dicke_state(int n, Rng& rng);

/// D unit points with pairwise chordal separation >= min_sep.
std::vector<ProductPoint> random_separated_points(int count, Rng& rng, double min_sep = 0.2);

/// State built from a random D-point decomposition (weights of modulus in
/// [0.4, 1.6], random phase). The construction certifies D as an upper bound
/// on the bond dimension; minimality is generic, not guaranteed.
SymmetricState random_decomposed_state(int n, int bond_dim, Rng& rng, double min_sep = 0.2);

/// State whose dense amplitudes are small Gaussian integers: moment a + b i
/// with a, b drawn from [-max_entry, max_entry]. Holds the exact moments next
/// to the floating-point state so solver and exact oracle see the same input.
struct RationalStateSample {
    int n = 0;
    std::vector<std::array<long, 2>> moments;
    SymmetricState state;
};

RationalStateSample random_rational_state(int n, Rng& rng, long max_entry = 5);

}  // namespace symclass

#endif
