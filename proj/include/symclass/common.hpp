#ifndef SYMCLASS_COMMON_HPP
#define SYMCLASS_COMMON_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace symclass {

using Complex = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

/// Numerical knobs shared across the library. All thresholds are relative.
struct ToleranceConfig {
    double tol_rank = 1e-10;   ///< singular/eigenvalue cutoff for numerical rank
    double tol_sep = 1e-8;     ///< chordal separation below which projective points coincide
    double tol_resid = 1e-8;   ///< accepted relative resynthesis residual
    double tol_norm = 1e-9;    ///< normalization check slack
    int n_full_cap = 14;       ///< largest N for dense 2^N state vectors
    std::uint64_t seed = 1;    ///< seed for every internal random draw

    void validate() const {
        auto in_unit = [](double t) { return t > 0.0 && t < 1.0; };
        if (!in_unit(tol_rank) || !in_unit(tol_sep) || !in_unit(tol_resid) || !in_unit(tol_norm))
            throw std::invalid_argument("ToleranceConfig: tolerances must lie in (0,1)");
        if (n_full_cap < 1 || n_full_cap > 20)
            throw std::invalid_argument("ToleranceConfig: n_full_cap must lie in [1,20]");
    }
};

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input state has no component above tolerance.
struct ZeroStateError : Error {
    using Error::Error;
};

/// The solver could not certify any decomposition up to D = N+1.
struct IllConditionedError : Error {
    double condition_number;
    IllConditionedError(const std::string& what, double cond)
        : Error(what), condition_number(cond) {}
};

/// Requested reduced density matrix has no kernel in the symmetric block.
struct NoKernelError : Error {
    int n_star;
    NoKernelError(const std::string& what, int minimal_length)
        : Error(what), n_star(minimal_length) {}
};

/// Binomial coefficient as a double: exact table up to n = 60, log-gamma above.
double binomial(int n, int k);
double sqrt_binomial(int n, int k);

}  // namespace symclass

#endif
