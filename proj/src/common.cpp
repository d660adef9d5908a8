#include "symclass/common.hpp"

#include <array>
#include <vector>

namespace symclass {

namespace {

// Pascal triangle up to n = 60; C(60,30) ~ 1.18e17 fits in long double exactly
// enough for the double conversion (relative error below 1e-16).
constexpr int kExactCap = 60;

const std::vector<std::vector<double>>& pascal_table() {
    static const std::vector<std::vector<double>> table = [] {
        std::vector<std::vector<double>> t(kExactCap + 1);
        for (int n = 0; n <= kExactCap; ++n) {
            t[n].resize(n + 1);
            t[n][0] = t[n][n] = 1.0;
            for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
        }
        return t;
    }();
    return table;
}

}  // namespace

double binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0.0;
    if (n <= kExactCap) return pascal_table()[n][k];
    return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

double sqrt_binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0.0;
    if (n <= kExactCap) return std::sqrt(pascal_table()[n][k]);
    return std::exp(0.5 * (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)));
}

}  // namespace symclass
