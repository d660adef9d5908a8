#include "symclass/oracle.hpp"

#include <stdexcept>
#include <utility>

namespace symclass::exact {

GaussRational operator+(const GaussRational& a, const GaussRational& b) {
    return {a.re + b.re, a.im + b.im};
}
GaussRational operator-(const GaussRational& a, const GaussRational& b) {
    return {a.re - b.re, a.im - b.im};
}
GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
GaussRational operator/(const GaussRational& a, const GaussRational& b) {
    Rational den = b.re * b.re + b.im * b.im;
    if (den == 0) throw std::domain_error("GaussRational: division by zero");
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

namespace {

using Matrix = std::vector<std::vector<GaussRational>>;
using Poly = std::vector<GaussRational>;

// Reduced row echelon form in place; returns pivot row of each column or -1.
std::vector<int> rref(Matrix& m) {
    const size_t rows = m.size();
    const size_t cols = rows ? m[0].size() : 0;
    std::vector<int> pivot_row(cols, -1);
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t p = row;
        while (p < rows && m[p][col].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[row]);
        GaussRational inv = GaussRational{1, 0} / m[row][col];
        for (size_t j = col; j < cols; ++j) m[row][j] = m[row][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            GaussRational f = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] = m[i][j] - f * m[row][j];
        }
        pivot_row[col] = static_cast<int>(row);
        ++row;
    }
    return pivot_row;
}

std::vector<Poly> kernel_basis(Matrix m) {
    const size_t cols = m.empty() ? 0 : m[0].size();
    std::vector<int> pivot_row = rref(m);
    std::vector<Poly> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (pivot_row[f] != -1) continue;
        Poly v(cols, GaussRational{});
        v[f] = GaussRational{1, 0};
        for (size_t c = 0; c < cols; ++c)
            if (pivot_row[c] != -1)
                v[c] = GaussRational{} - m[static_cast<size_t>(pivot_row[c])][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

int degree(const Poly& q) {
    for (int j = static_cast<int>(q.size()) - 1; j >= 0; --j)
        if (!q[static_cast<size_t>(j)].is_zero()) return j;
    return -1;
}

bool determinant_nonzero(Matrix m) {
    const size_t n = m.size();
    for (size_t col = 0; col < n; ++col) {
        size_t p = col;
        while (p < n && m[p][col].is_zero()) ++p;
        if (p == n) return false;
        std::swap(m[p], m[col]);
        for (size_t i = col + 1; i < n; ++i) {
            if (m[i][col].is_zero()) continue;
            GaussRational f = m[i][col] / m[col][col];
            for (size_t j = col; j < n; ++j) m[i][j] = m[i][j] - f * m[col][j];
        }
    }
    return true;
}

// Res(q, q') != 0 iff q has no repeated finite root.
bool squarefree_finite_part(const Poly& q, int deg) {
    if (deg <= 1) return true;
    Poly dq(static_cast<size_t>(deg));
    for (int j = 1; j <= deg; ++j)
        dq[static_cast<size_t>(j - 1)] = GaussRational{j, 0} * q[static_cast<size_t>(j)];
    const int n = 2 * deg - 1;  // Sylvester matrix of (deg, deg-1)
    Matrix syl(static_cast<size_t>(n), std::vector<GaussRational>(static_cast<size_t>(n)));
    for (int i = 0; i < deg - 1; ++i)
        for (int j = 0; j <= deg; ++j)
            syl[static_cast<size_t>(i)][static_cast<size_t>(i + j)] =
                q[static_cast<size_t>(deg - j)];
    for (int i = 0; i < deg; ++i)
        for (int j = 0; j <= deg - 1; ++j)
            syl[static_cast<size_t>(deg - 1 + i)][static_cast<size_t>(i + j)] =
                dq[static_cast<size_t>(deg - 1 - j)];
    return determinant_nonzero(std::move(syl));
}

}  // namespace

int bond_dimension(const std::vector<GaussRational>& moment_vector) {
    const int n = static_cast<int>(moment_vector.size()) - 1;
    if (n < 1) throw std::invalid_argument("oracle: need at least two moments");
    bool all_zero = true;
    for (const auto& m : moment_vector) all_zero = all_zero && m.is_zero();
    if (all_zero) throw std::invalid_argument("oracle: zero state");

    for (int r = 1; r <= n; ++r) {
        Matrix h(static_cast<size_t>(n - r + 1),
                 std::vector<GaussRational>(static_cast<size_t>(r + 1)));
        for (int i = 0; i <= n - r; ++i)
            for (int j = 0; j <= r; ++j)
                h[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    moment_vector[static_cast<size_t>(i + j)];
        std::vector<Poly> kernel = kernel_basis(std::move(h));
        if (kernel.empty()) continue;

        // Apolar ideal of a binary form is generated in degrees r and N+2-r;
        // when both coincide the rank is r for either branch of the dichotomy.
        if (2 * r == n + 2) return r;
        if (kernel.size() != 1)
            throw std::logic_error("oracle: unexpected kernel dimension below the boundary");

        const Poly& q = kernel.front();
        int deg = degree(q);
        if (r - deg > 1) return n + 2 - r;  // >= double root at infinity
        if (!squarefree_finite_part(q, deg)) return n + 2 - r;
        return r;
    }
    throw std::logic_error("oracle: no Hankel kernel found up to r = N");
}

int bond_dimension(const std::vector<std::array<long, 2>>& integer_moments) {
    std::vector<GaussRational> m;
    m.reserve(integer_moments.size());
    for (const auto& [re, im] : integer_moments) m.push_back({Rational(re), Rational(im)});
    return bond_dimension(m);
}

}  // namespace symclass::exact
