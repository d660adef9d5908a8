#include "symclass/decomposer.hpp"

#include <algorithm>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "symclass/hamiltonian.hpp"
#include "symclass/rng.hpp"

namespace symclass {

MomentVector moments(const SymmetricState& state) {
    VectorXcd m(state.n + 1);
    for (int a = 0; a <= state.n; ++a) m(a) = state.dicke(a) / sqrt_binomial(state.n, a);
    return {state.n, std::move(m)};
}

std::vector<Complex> polynomial_roots(const VectorXcd& coeffs) {
    const Eigen::Index deg = coeffs.size() - 1;
    if (deg < 1) return {};
    if (coeffs(deg) == Complex{0.0, 0.0})
        throw std::invalid_argument("polynomial_roots: leading coefficient is zero");
    MatrixXcd companion = MatrixXcd::Zero(deg, deg);
    for (Eigen::Index i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
    for (Eigen::Index i = 0; i < deg; ++i) companion(i, deg - 1) = -coeffs(i) / coeffs(deg);
    Eigen::ComplexEigenSolver<MatrixXcd> solver(companion, false);
    std::vector<Complex> roots(solver.eigenvalues().begin(), solver.eigenvalues().end());
    // Deterministic order regardless of the eigensolver's internals.
    std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

namespace {

// Hankel matrix H[i][j] = m_{i+j} of shape (N-r+1) x (r+1).
MatrixXcd hankel(const VectorXcd& m, int r) {
    const int n = static_cast<int>(m.size()) - 1;
    MatrixXcd h(n - r + 1, r + 1);
    for (int i = 0; i <= n - r; ++i)
        for (int j = 0; j <= r; ++j) h(i, j) = m(i + j);
    return h;
}

// Basis of the numerical kernel (right singular vectors past the rank).
MatrixXcd numerical_kernel(const MatrixXcd& h, double tol_rank) {
    Eigen::JacobiSVD<MatrixXcd> svd(h, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const Eigen::Index cols = h.cols();
    Eigen::Index rank = 0;
    if (sv.size() > 0 && sv(0) > 0.0)
        while (rank < sv.size() && sv(rank) > tol_rank * sv(0)) ++rank;
    return svd.matrixV().rightCols(cols - rank);
}

struct Candidate {
    std::vector<ProductPoint> points;
    VectorXcd weights;
    double residual = std::numeric_limits<double>::infinity();
    double condition = 0.0;
    int infinity_index = -1;

    /// Finite-point solutions outrank point-at-infinity ones (matching the
    /// case order of the rank criterion), then smaller certified residual.
    bool better_than(const Candidate& other) const {
        bool inf_a = infinity_index >= 0, inf_b = other.infinity_index >= 0;
        if (inf_a != inf_b) return !inf_a;
        return residual < other.residual;
    }
};

// Turn one kernel polynomial into decomposition points: companion roots plus
// an explicit point at infinity when the leading coefficient vanishes. A
// degree drop of two or more would need a doubly-degenerate point at infinity,
// which no valid decomposition can use.
bool candidate_points(const VectorXcd& q, double lead_tol,
                      std::vector<ProductPoint>& points, int& infinity_index) {
    const Eigen::Index r = q.size() - 1;
    double scale = q.cwiseAbs().maxCoeff();
    Eigen::Index deg = r;
    while (deg >= 0 && std::abs(q(deg)) <= lead_tol * scale) --deg;
    if (r - deg > 1) return false;
    points.clear();
    infinity_index = -1;
    if (deg >= 1) {
        for (const Complex& z : polynomial_roots(q.head(deg + 1)))
            points.push_back(normalize_point({1.0, z}));
    }
    if (deg < r) {
        infinity_index = static_cast<int>(points.size());
        points.push_back(ProductPoint{0.0, 1.0});
    }
    return !points.empty();
}

// Least-squares weights for the fixed points; residual relative to |m|.
void fit_weights(const VectorXcd& m, Candidate& cand) {
    const int n = static_cast<int>(m.size()) - 1;
    const int d = static_cast<int>(cand.points.size());
    MatrixXcd v(n + 1, d);
    for (int k = 0; k < d; ++k) {
        const ProductPoint& p = cand.points[static_cast<size_t>(k)];
        std::vector<Complex> xpow(n + 1), ypow(n + 1);
        xpow[0] = ypow[0] = Complex{1.0, 0.0};
        for (int a = 1; a <= n; ++a) {
            xpow[a] = xpow[a - 1] * p.x;
            ypow[a] = ypow[a - 1] * p.y;
        }
        for (int a = 0; a <= n; ++a) v(a, k) = xpow[n - a] * ypow[a];
    }
    Eigen::JacobiSVD<MatrixXcd> svd(v, Eigen::ComputeThinU | Eigen::ComputeThinV);
    cand.weights = svd.solve(m);
    // Certified residual: the least-squares misfit plus the round-off a
    // resynthesis of this size must incur. Confluent near-duplicate points
    // fake a small misfit only through huge cancelling weights, which the
    // second term exposes (the border-rank escape hatch stays closed).
    double amplification = 0.0;
    for (int k = 0; k < d; ++k) amplification += std::abs(cand.weights(k)) * v.col(k).norm();
    cand.residual =
        (v * cand.weights - m).norm() / m.norm() + 1e-15 * amplification / m.norm();
    const auto& sv = svd.singularValues();
    cand.condition = sv(sv.size() - 1) > 0.0 ? sv(0) / sv(sv.size() - 1)
                                             : std::numeric_limits<double>::infinity();
}

bool points_separated(const std::vector<ProductPoint>& pts, double tol_sep) {
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            if (chordal_distance(pts[i], pts[j]) <= tol_sep) return false;
    return true;
}

}  // namespace

DiagonalDecomposition decompose(const SymmetricState& state, const ToleranceConfig& tol) {
    tol.validate();
    const int n = state.n;
    if (state.norm() <= 0.0 || !state.dicke.allFinite())
        throw ZeroStateError("decompose: zero or non-finite state");
    SymmetricState normed = state.normalized();
    VectorXcd m = moments(normed).moments;
    if (m.cwiseAbs().maxCoeff() <= tol.tol_rank)
        throw ZeroStateError("decompose: all moments below tolerance");

    Rng rng(tol.seed);
    double worst_condition = 0.0;
    double best_overall = std::numeric_limits<double>::infinity();

    for (int r = 1; r <= n + 1; ++r) {
        MatrixXcd kernel = r <= n ? numerical_kernel(hankel(m, r), tol.tol_rank)
                                  : MatrixXcd::Identity(n + 2, n + 2);
        const Eigen::Index dim = kernel.cols();
        if (dim == 0) continue;

        std::vector<VectorXcd> trials;
        for (Eigen::Index c = 0; c < dim; ++c) trials.push_back(kernel.col(c));
        if (dim > 1) {
            const int extra = std::min<int>(8 * static_cast<int>(dim), 40);
            for (int t = 0; t < extra; ++t) {
                VectorXcd mix = VectorXcd::Zero(r + 1);
                for (Eigen::Index c = 0; c < dim; ++c) mix += rng.gaussian() * kernel.col(c);
                if (mix.norm() > 0.0) trials.push_back(mix / mix.norm());
            }
        }

        Candidate best;
        bool found = false;
        for (const VectorXcd& q : trials) {
            Candidate cand;
            if (!candidate_points(q, tol.tol_sep, cand.points, cand.infinity_index)) continue;
            if (static_cast<int>(cand.points.size()) != r) continue;
            if (!points_separated(cand.points, tol.tol_sep)) continue;
            fit_weights(m, cand);
            worst_condition = std::max(worst_condition, cand.condition);
            best_overall = std::min(best_overall, cand.residual);
            if (cand.residual > tol.tol_resid) continue;
            if (!found || cand.better_than(best)) {
                best = std::move(cand);
                found = true;
            }
        }
        if (found) {
            DiagonalDecomposition dec;
            dec.n = n;
            dec.points = std::move(best.points);
            dec.weights = std::move(best.weights);
            dec.residual = best.residual;
            dec.infinity_index = best.infinity_index;
            // Weights were fit against the normalized state; rescale to the input.
            dec.weights *= state.norm();
            return dec;
        }
    }
    throw IllConditionedError(
        "decompose: no decomposition up to D = N+1 met the residual tolerance (best residual " +
            std::to_string(best_overall) + ")",
        worst_condition);
}

int optimal_bond_dimension(const SymmetricState& state, const ToleranceConfig& tol) {
    return decompose(state, tol).bond_dimension();
}

KrausPair kraus_pair(const DiagonalDecomposition& dec) {
    const int d = dec.bond_dimension();
    if (d == 0) throw std::invalid_argument("kraus_pair: empty decomposition");
    KrausPair k;
    k.bond_dim = d;
    k.a0.resize(d);
    k.a1.resize(d);
    for (int i = 0; i < d; ++i) {
        Complex root = std::pow(dec.weights(i), 1.0 / dec.n);
        k.a0(i) = root * dec.points[static_cast<size_t>(i)].x;
        k.a1(i) = root * dec.points[static_cast<size_t>(i)].y;
    }
    return k;
}

VectorXcd kraus_moments(const KrausPair& kraus, int n) {
    VectorXcd m = VectorXcd::Zero(n + 1);
    for (int k = 0; k < kraus.bond_dim; ++k) {
        std::vector<Complex> a0pow(n + 1), a1pow(n + 1);
        a0pow[0] = a1pow[0] = Complex{1.0, 0.0};
        for (int w = 1; w <= n; ++w) {
            a0pow[w] = a0pow[w - 1] * kraus.a0(k);
            a1pow[w] = a1pow[w - 1] * kraus.a1(k);
        }
        for (int w = 0; w <= n; ++w) m(w) += a0pow[n - w] * a1pow[w];
    }
    return m;
}

namespace {

// Taylor coefficients of p at c by repeated synthetic division.
std::vector<Complex> taylor_shift(const VectorXcd& p, Complex c) {
    std::vector<Complex> a(p.begin(), p.end());
    const size_t n = a.size();
    for (size_t k = 0; k < n; ++k)
        for (size_t j = n - 1; j > k; --j) a[j - 1] += c * a[j];
    return a;
}

// Validate an m-fold root near c: polish with Newton on the (m-1)-th
// derivative, then require the first m Taylor coefficients to be negligible
// against the largest one.
bool confirm_multiple_root(const VectorXcd& p, Complex& c, int mult, double rel_tol) {
    const int deg = static_cast<int>(p.size()) - 1;
    if (mult > deg) return false;
    for (int it = 0; it < 12; ++it) {
        std::vector<Complex> t = taylor_shift(p, c);
        Complex num = t[static_cast<size_t>(mult - 1)];
        Complex den = t[static_cast<size_t>(mult)] * static_cast<double>(mult);
        if (std::abs(den) == 0.0) break;
        Complex step = num / den;
        c -= step;
        if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(c))) break;
    }
    std::vector<Complex> t = taylor_shift(p, c);
    double scale_pow = std::max(1.0, std::abs(c));
    double biggest = 0.0, power = 1.0;
    std::vector<double> weighted(t.size());
    for (size_t j = 0; j < t.size(); ++j) {
        weighted[j] = std::abs(t[j]) * power;
        biggest = std::max(biggest, weighted[j]);
        power *= scale_pow;
    }
    for (int j = 0; j < mult; ++j)
        if (weighted[static_cast<size_t>(j)] > rel_tol * biggest) return false;
    return true;
}

}  // namespace

MajoranaRoots majorana_roots(const SymmetricState& state, const ToleranceConfig& tol) {
    const int n = state.n;
    SymmetricState normed = state.normalized();
    VectorXcd p(n + 1);
    for (int a = 0; a <= n; ++a) p(a) = sqrt_binomial(n, a) * normed.dicke(a);

    double scale = p.cwiseAbs().maxCoeff();
    int deg = n;
    while (deg >= 0 && std::abs(p(deg)) <= 1e-12 * scale) --deg;
    MajoranaRoots result;
    result.n = n;
    result.infinity_multiplicity = n - deg;
    if (deg < 1) return result;

    VectorXcd poly = p.head(deg + 1);
    std::vector<Complex> raw = polynomial_roots(poly);

    // Greedy multiplicity detection: grow clusters in chordal metric while the
    // polynomial confirms the hypothesized multiple root; otherwise keep the
    // roots simple.
    std::vector<bool> used(raw.size(), false);
    for (size_t i = 0; i < raw.size(); ++i) {
        if (used[i]) continue;
        std::vector<size_t> cluster{i};
        used[i] = true;
        Complex center = raw[i];
        bool grown = true;
        while (grown) {
            grown = false;
            size_t nearest = raw.size();
            double nearest_dist = std::numeric_limits<double>::infinity();
            for (size_t j = 0; j < raw.size(); ++j) {
                if (used[j]) continue;
                double dist = std::abs(raw[j] - center) / std::max(1.0, std::abs(center));
                if (dist < nearest_dist) {
                    nearest_dist = dist;
                    nearest = j;
                }
            }
            if (nearest == raw.size()) break;
            int mult = static_cast<int>(cluster.size()) + 1;
            // Roots of an m-fold zero scatter like eps^(1/m); beyond that
            // radius a merge can only be a false positive.
            double radius = 4.0 * std::pow(1e-13, 1.0 / mult);
            if (nearest_dist > radius) break;
            Complex trial_center = center;
            Complex mean{0.0, 0.0};
            for (size_t idx : cluster) mean += raw[idx];
            mean = (mean + raw[nearest]) / static_cast<double>(mult);
            trial_center = mean;
            if (confirm_multiple_root(poly, trial_center, mult, tol.tol_sep)) {
                cluster.push_back(nearest);
                used[nearest] = true;
                center = trial_center;
                grown = true;
            } else {
                break;
            }
        }
        result.finite_roots.emplace_back(center, static_cast<int>(cluster.size()));
    }
    std::sort(result.finite_roots.begin(), result.finite_roots.end(),
              [](const auto& a, const auto& b) {
                  if (a.first.real() != b.first.real()) return a.first.real() < b.first.real();
                  return a.first.imag() < b.first.imag();
              });
    return result;
}

std::vector<int> MajoranaRoots::degeneracy_configuration() const {
    std::vector<int> config;
    for (const auto& [root, mult] : finite_roots) config.push_back(mult);
    if (infinity_multiplicity > 0) config.push_back(infinity_multiplicity);
    std::sort(config.begin(), config.end(), std::greater<int>());
    return config;
}

int schmidt_binary_rank(const SymmetricState& state, int m_cut, const ToleranceConfig& tol) {
    BipartitionMap psi = bipartition_map(state, m_cut);
    Eigen::JacobiSVD<MatrixXcd> svd(psi.matrix);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) <= 0.0) return 0;
    // rho = Psi Psi^dag, so tol_rank on rho's spectrum is sqrt(tol_rank) here.
    double cut = std::sqrt(tol.tol_rank) * sv(0);
    int rank = 0;
    while (rank < sv.size() && sv(rank) > cut) ++rank;
    return rank;
}

SymmetricState extend_nesting(const DiagonalDecomposition& dec, int extra) {
    if (extra < 1) throw std::invalid_argument("extend_nesting: extra must be >= 1");
    return from_decomposition(dec.points, dec.weights, dec.n + extra);
}

bool pairwise_independent(std::span<const ProductPoint> points, double tol_sep) {
    if (points.empty()) throw std::invalid_argument("pairwise_independent: empty list");
    for (size_t i = 0; i < points.size(); ++i) {
        for (size_t j = i + 1; j < points.size(); ++j) {
            double ni = std::sqrt(std::norm(points[i].x) + std::norm(points[i].y));
            double nj = std::sqrt(std::norm(points[j].x) + std::norm(points[j].y));
            if (chordal_distance(points[i], points[j]) <= tol_sep * ni * nj) return false;
        }
    }
    return true;
}

}  // namespace symclass
