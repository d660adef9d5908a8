#include "symclass/slocc.hpp"

#include <limits>
#include <vector>

namespace symclass {

double Ilo::condition_number() const {
    // Singular values from the 2x2 closed form.
    double t = std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d);
    double dd = std::abs(det());
    double disc = std::sqrt(std::max(t * t - 4.0 * dd * dd, 0.0));
    double smax = std::sqrt((t + disc) / 2.0);
    double smin2 = (t - disc) / 2.0;
    if (smin2 <= 0.0) return std::numeric_limits<double>::infinity();
    return smax / std::sqrt(smin2);
}

Ilo Ilo::inverse() const {
    Complex dt = det();
    if (std::abs(dt) == 0.0) throw std::invalid_argument("Ilo: singular matrix");
    return {d / dt, -b / dt, -c / dt, a / dt};
}

Ilo operator*(const Ilo& l, const Ilo& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
            l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
}

SymmetricOperatorRep symmetric_power_rep(const Ilo& op, int n) {
    if (std::abs(op.det()) <= 1e-14)
        throw std::invalid_argument("symmetric_power_rep: operator not invertible");
    MatrixXcd m(n + 1, n + 1);
    // Row l: coefficients of (a + b u)^{N-l} (c + d u)^l.
    std::vector<Complex> poly(n + 1);
    for (int l = 0; l <= n; ++l) {
        std::fill(poly.begin(), poly.end(), Complex{0.0, 0.0});
        poly[0] = 1.0;
        int deg = 0;
        auto mul_linear = [&](Complex p, Complex q) {
            // poly *= (p + q u)
            for (int j = deg + 1; j >= 1; --j) poly[j] = poly[j] * p + poly[j - 1] * q;
            poly[0] *= p;
            ++deg;
        };
        for (int i = 0; i < n - l; ++i) mul_linear(op.a, op.b);
        for (int i = 0; i < l; ++i) mul_linear(op.c, op.d);
        for (int k = 0; k <= n; ++k)
            m(l, k) = sqrt_binomial(n, l) / sqrt_binomial(n, k) * poly[k];
    }
    return {n, std::move(m)};
}

SymmetricState apply_ilo(const SymmetricState& state, const Ilo& op) {
    SymmetricOperatorRep rep = symmetric_power_rep(op, state.n);
    return {state.n, rep.matrix * state.dicke};
}

ProductPoint apply_ilo(const ProductPoint& p, const Ilo& op) {
    return {op.a * p.x + op.b * p.y, op.c * p.x + op.d * p.y};
}

Ilo random_ilo(Rng& rng, double condition_cap) {
    if (condition_cap < 1.0)
        throw std::invalid_argument("random_ilo: condition cap must be >= 1");
    auto unitary = [&rng]() -> Ilo {
        double theta = std::acos(std::sqrt(rng.uniform()));  // Haar-distributed mixing angle
        Complex ea = rng.unit_phase(), eb = rng.unit_phase(), eg = rng.unit_phase();
        double ct = std::cos(theta), st = std::sin(theta);
        return {eg * ea * ct, eg * eb * st, -eg * std::conj(eb) * st, eg * std::conj(ea) * ct};
    };
    // Singular values (s, 1/s) give condition number s^2; draw it log-uniform.
    double kappa = std::exp(rng.uniform() * std::log(condition_cap));
    double s = std::sqrt(kappa);
    double scale = rng.uniform(0.5, 2.0);
    Ilo u = unitary(), v = unitary();
    Ilo diag{scale * s, 0.0, 0.0, scale / s};
    return u * diag * v;
}

}  // namespace symclass
