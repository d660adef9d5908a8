#ifndef SYMCLASS_ORACLE_HPP
#define SYMCLASS_ORACLE_HPP

#include <array>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace symclass::exact {

using Rational = boost::multiprecision::cpp_rational;

/// Complex number with exact rational components.
struct GaussRational {
    Rational re{0};
    Rational im{0};

    bool is_zero() const { return re == 0 && im == 0; }
};

GaussRational operator+(const GaussRational& a, const GaussRational& b);
GaussRational operator-(const GaussRational& a, const GaussRational& b);
GaussRational operator*(const GaussRational& a, const GaussRational& b);
GaussRational operator/(const GaussRational& a, const GaussRational& b);

/// Exact-arithmetic bond dimension of the state with the given moment vector
/// (size N+1). Runs the augmented-system rank criterion exactly: the smallest
/// r whose Hankel kernel holds a squarefree binary form gives D directly;
/// a repeated-root generator forces the complementary branch D = N + 2 - r.
/// This routine is independent of the floating-point solver by construction:
/// no SVD, no root finding, no tolerances.
int bond_dimension(const std::vector<GaussRational>& moment_vector);

/// Convenience overload for Gaussian-integer moments given as {re, im} pairs.
int bond_dimension(const std::vector<std::array<long, 2>>& integer_moments);

}  // namespace symclass::exact

#endif
