#include "symclass/symmetric_state.hpp"

#include <bit>
#include <cstdint>

namespace symclass {

SymmetricState::SymmetricState(int n_parties, VectorXcd coeffs)
    : n(n_parties), dicke(std::move(coeffs)) {
    if (n < 1) throw std::invalid_argument("SymmetricState: need at least one party");
    if (dicke.size() != n + 1)
        throw std::invalid_argument("SymmetricState: expected N+1 Dicke coefficients");
    if (dicke.isZero(0.0)) throw std::invalid_argument("SymmetricState: all coefficients zero");
}

SymmetricState SymmetricState::normalized() const {
    SymmetricState s = *this;
    s.dicke /= norm();
    return s;
}

bool SymmetricState::is_normalized(double tol_norm) const {
    return std::abs(norm() - 1.0) <= tol_norm;
}

ProductPoint normalize_point(const ProductPoint& p) {
    double scale = std::sqrt(std::norm(p.x) + std::norm(p.y));
    if (scale == 0.0) throw std::invalid_argument("ProductPoint: (0, 0) is not projective");
    ProductPoint q{p.x / scale, p.y / scale};
    Complex lead = std::abs(q.x) > 1e-14 ? q.x : q.y;
    Complex phase = std::abs(lead) / lead;
    q.x *= phase;
    q.y *= phase;
    if (std::abs(q.x) <= 1e-14) q.x = 0.0;
    return q;
}

double chordal_distance(const ProductPoint& p, const ProductPoint& q) {
    return std::abs(p.x * q.y - p.y * q.x);
}

SymmetricState make_separable0(int n) {
    VectorXcd d = VectorXcd::Zero(n + 1);
    d(0) = 1.0;
    return {n, std::move(d)};
}

SymmetricState make_dicke(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("dicke: k must lie in [0, N]");
    VectorXcd d = VectorXcd::Zero(n + 1);
    d(k) = 1.0;
    return {n, std::move(d)};
}

SymmetricState make_ghz(int n) {
    VectorXcd d = VectorXcd::Zero(n + 1);
    d(0) = d(n) = 1.0 / std::sqrt(2.0);
    return {n, std::move(d)};
}

SymmetricState make_w(int n) { return make_dicke(n, 1); }

SymmetricState make_x(int n, Complex z) {
    if (n < 4) throw std::invalid_argument("x: defined for N >= 4");
    if (z == Complex{0.0, 0.0}) throw std::invalid_argument("x: z must be nonzero");
    VectorXcd d = VectorXcd::Zero(n + 1);
    d(n) = 1.0;
    d(1) = std::pow(z, n - 1) * std::sqrt(static_cast<double>(n));
    SymmetricState s{n, std::move(d)};
    return s.normalized();
}

SymmetricState build_named(const std::string& name, int n, std::optional<int> k,
                           std::optional<Complex> z) {
    if (n < 1) throw std::invalid_argument("build_named: N must be >= 1");
    if (name == "separable0") return make_separable0(n);
    if (name == "ghz") return make_ghz(n);
    if (name == "w") return make_w(n);
    if (name == "dicke") {
        if (!k) throw std::invalid_argument("dicke: excitation number k required");
        return make_dicke(n, *k);
    }
    if (name == "x") {
        if (!z) throw std::invalid_argument("x: parameter z required");
        return make_x(n, *z);
    }
    throw std::invalid_argument("unknown state name: " + name);
}

FullStateVector to_full_vector(const SymmetricState& state, int n_full_cap) {
    if (state.n > n_full_cap)
        throw std::invalid_argument("to_full_vector: N exceeds the dense cap");
    const int n = state.n;
    VectorXcd amp(std::int64_t{1} << n);
    for (std::int64_t idx = 0; idx < amp.size(); ++idx) {
        int w = std::popcount(static_cast<std::uint64_t>(idx));
        amp(idx) = state.dicke(w) / sqrt_binomial(n, w);
    }
    return {n, std::move(amp)};
}

namespace {
Complex ipow(Complex base, int e) {
    Complex r{1.0, 0.0};
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}
}  // namespace

SymmetricState from_decomposition(std::span<const ProductPoint> points,
                                  const VectorXcd& weights, int n) {
    if (points.empty()) throw std::invalid_argument("from_decomposition: no points");
    if (std::cmp_not_equal(weights.size(), points.size()))
        throw std::invalid_argument("from_decomposition: points/weights length mismatch");
    VectorXcd d = VectorXcd::Zero(n + 1);
    for (size_t k = 0; k < points.size(); ++k) {
        for (int a = 0; a <= n; ++a) {
            Complex term = ipow(points[k].x, n - a) * ipow(points[k].y, a);
            d(a) += sqrt_binomial(n, a) * weights(static_cast<Eigen::Index>(k)) * term;
        }
    }
    return {n, std::move(d)};
}

Complex overlap(const SymmetricState& a, const SymmetricState& b) {
    if (a.n != b.n) throw std::invalid_argument("overlap: mismatched N");
    return a.dicke.dot(b.dicke);
}

double fidelity(const SymmetricState& a, const SymmetricState& b) {
    return std::abs(overlap(a, b)) / (a.norm() * b.norm());
}

}  // namespace symclass
