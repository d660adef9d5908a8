#include "symclass/corpus.hpp"

#include "symclass/decomposer.hpp"

namespace symclass {

SymmetricState random_dicke_state(int n, Rng& rng) {
    VectorXcd d(n + 1);
    for (int k = 0; k <= n; ++k) d(k) = rng.gaussian();
    SymmetricState s{n, std::move(d)};
    return s.normalized();
}

std::vector<ProductPoint> random_separated_points(int count, Rng& rng, double min_sep) {
    std::vector<ProductPoint> points;
    int attempts = 0;
    while (static_cast<int>(points.size()) < count) {
        if (++attempts > 10000)
            throw std::runtime_error("random_separated_points: separation unreachable");
        // Uniform on the projective sphere via two Gaussian components.
        ProductPoint p = normalize_point({rng.gaussian(), rng.gaussian()});
        bool ok = true;
        for (const ProductPoint& q : points)
            if (chordal_distance(p, q) < min_sep) ok = false;
        if (ok) points.push_back(p);
    }
    return points;
}

SymmetricState random_decomposed_state(int n, int bond_dim, Rng& rng, double min_sep) {
    std::vector<ProductPoint> points = random_separated_points(bond_dim, rng, min_sep);
    VectorXcd weights(bond_dim);
    for (int k = 0; k < bond_dim; ++k) weights(k) = rng.uniform(0.4, 1.6) * rng.unit_phase();
    return from_decomposition(points, weights, n).normalized();
}

RationalStateSample random_rational_state(int n, Rng& rng, long max_entry) {
    RationalStateSample sample;
    sample.n = n;
    VectorXcd d(n + 1);
    bool nonzero = false;
    do {
        nonzero = false;
        sample.moments.clear();
        for (int a = 0; a <= n; ++a) {
            long re = rng.uniform_int(-max_entry, max_entry);
            long im = rng.uniform_int(-max_entry, max_entry);
            sample.moments.push_back({re, im});
            nonzero = nonzero || re != 0 || im != 0;
            d(a) = sqrt_binomial(n, a) * Complex(static_cast<double>(re), static_cast<double>(im));
        }
    } while (!nonzero);
    sample.state = SymmetricState{n, std::move(d)};
    return sample;
}

}  // namespace symclass
