#include "symclass/hamiltonian.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include <Eigen/Eigenvalues>

#include "symclass/decomposer.hpp"

namespace symclass {

namespace {

using Index = std::int64_t;

MatrixXcd pauli_matrix(char p) {
    MatrixXcd m(2, 2);
    switch (p) {
        case 'I': m << 1, 0, 0, 1; break;
        case 'X': m << 0, 1, 1, 0; break;
        case 'Y': m << 0, Complex{0, -1}, Complex{0, 1}, 0; break;
        case 'Z': m << 1, 0, 0, -1; break;
        default: throw std::invalid_argument("unknown Pauli letter");
    }
    return m;
}

// Coefficients of M over the n-qubit Pauli basis, flat base-4 index with
// digit order matching qubit order (qubit 0 = most significant). Letters
// I,X,Y,Z are digits 0..3. O(n 4^n).
void pauli_decompose_rec(const MatrixXcd& m, int n, Index stride, Complex factor,
                         std::vector<Complex>& out, Index base) {
    if (n == 0) {
        out[static_cast<size_t>(base)] += factor * m(0, 0);
        return;
    }
    const Index h = m.rows() / 2;
    MatrixXcd b00 = m.topLeftCorner(h, h), b01 = m.topRightCorner(h, h);
    MatrixXcd b10 = m.bottomLeftCorner(h, h), b11 = m.bottomRightCorner(h, h);
    const Complex half{0.5, 0.0};
    const Complex ihalf{0.0, 0.5};
    pauli_decompose_rec((b00 + b11).eval(), n - 1, stride / 4, factor * half, out, base);
    pauli_decompose_rec((b01 + b10).eval(), n - 1, stride / 4, factor * half, out,
                        base + stride / 4);
    pauli_decompose_rec((b01 - b10).eval(), n - 1, stride / 4, factor * ihalf, out,
                        base + 2 * (stride / 4));
    pauli_decompose_rec((b00 - b11).eval(), n - 1, stride / 4, factor * half, out,
                        base + 3 * (stride / 4));
}

std::vector<Complex> pauli_decompose(const MatrixXcd& m, int n) {
    std::vector<Complex> out(static_cast<size_t>(Index{1} << (2 * n)), Complex{0.0, 0.0});
    pauli_decompose_rec(m, n, Index{1} << (2 * n), Complex{1.0, 0.0}, out, 0);
    return out;
}

MatrixXcd materialize_term(const std::vector<int>& sites, const std::string& paulis,
                           Complex coeff, const std::vector<int>& block_sites) {
    // Dense operator of one Pauli term over the given block site list.
    MatrixXcd m = MatrixXcd::Identity(1, 1) * coeff;
    for (int s : block_sites) {
        auto it = std::find(sites.begin(), sites.end(), s);
        char letter = it == sites.end() ? 'I' : paulis[static_cast<size_t>(it - sites.begin())];
        MatrixXcd p = pauli_matrix(letter);
        // kron(m, p): each appended site becomes the next less significant qubit
        MatrixXcd kron(m.rows() * 2, m.cols() * 2);
        for (Index r = 0; r < m.rows(); ++r)
            for (Index c = 0; c < m.cols(); ++c)
                kron.block(2 * r, 2 * c, 2, 2) = m(r, c) * p;
        m = std::move(kron);
    }
    return m;
}

std::vector<ParentHamiltonian::LocalBlock> group_blocks(const std::vector<PauliTerm>& terms) {
    std::map<std::vector<int>, std::vector<const PauliTerm*>> groups;
    for (const PauliTerm& t : terms) groups[t.sites].push_back(&t);
    std::vector<ParentHamiltonian::LocalBlock> blocks;
    for (auto& [sites, members] : groups) {
        const int k = static_cast<int>(sites.size());
        MatrixXcd block = MatrixXcd::Zero(Index{1} << k, Index{1} << k);
        for (const PauliTerm* t : members)
            block += materialize_term(t->sites, t->paulis, t->coeff, sites);
        blocks.push_back({sites, std::move(block)});
    }
    return blocks;
}

std::vector<PauliTerm> block_to_terms(const std::vector<int>& sites, const MatrixXcd& block) {
    const int k = static_cast<int>(sites.size());
    std::vector<Complex> coeffs = pauli_decompose(block, k);
    std::vector<PauliTerm> terms;
    const char letters[4] = {'I', 'X', 'Y', 'Z'};
    for (size_t flat = 0; flat < coeffs.size(); ++flat) {
        if (std::abs(coeffs[flat]) == 0.0) continue;
        PauliTerm t;
        t.coeff = coeffs[flat];
        size_t rem = flat;
        for (int j = k - 1; j >= 0; --j) {
            int digit = static_cast<int>(rem % 4);
            rem /= 4;
            if (digit != 0) {
                t.sites.insert(t.sites.begin(), sites[static_cast<size_t>(j)]);
                t.paulis.insert(t.paulis.begin(), letters[digit]);
            }
        }
        terms.push_back(std::move(t));
    }
    return terms;
}

bool term_order(const PauliTerm& a, const PauliTerm& b) {
    if (a.sites.size() != b.sites.size()) return a.sites.size() < b.sites.size();
    if (a.sites != b.sites) return a.sites < b.sites;
    return a.paulis < b.paulis;  // X < Y < Z in ASCII
}

std::vector<int> window_sites(int start, int length, int n_parties) {
    std::vector<int> sites(static_cast<size_t>(length));
    for (int t = 0; t < length; ++t) sites[static_cast<size_t>(t)] = (start + t) % n_parties;
    std::sort(sites.begin(), sites.end());
    return sites;
}

void append_singlet_terms(std::vector<PauliTerm>& terms, int n_parties, double weight) {
    for (int i = 0; i < n_parties; ++i) {
        std::vector<int> bond = window_sites(i, 2, n_parties);
        terms.push_back({{}, "", Complex{weight / 4.0, 0.0}});
        for (char s : {'X', 'Y', 'Z'})
            terms.push_back({bond, std::string(2, s), Complex{-weight / 4.0, 0.0}});
    }
}

}  // namespace

double ParentHamiltonian::term_norm() const {
    double acc = 0.0;
    for (const PauliTerm& t : terms) acc += std::abs(t.coeff);
    return acc;
}

MatrixXcd dicke_isometry(int n) {
    MatrixXcd t = MatrixXcd::Zero(Index{1} << n, n + 1);
    for (Index idx = 0; idx < (Index{1} << n); ++idx) {
        int w = std::popcount(static_cast<std::uint64_t>(idx));
        t(idx, w) = 1.0 / sqrt_binomial(n, w);
    }
    return t;
}

BipartitionMap bipartition_map(const SymmetricState& state, int m_cut) {
    const int n = state.n;
    if (m_cut < 1 || m_cut >= n)
        throw std::invalid_argument("bipartition_map: M must lie in [1, N-1]");
    MatrixXcd psi(n - m_cut + 1, m_cut + 1);
    for (int l = 0; l <= n - m_cut; ++l)
        for (int k = 0; k <= m_cut; ++k)
            psi(l, k) = sqrt_binomial(m_cut, k) * sqrt_binomial(n - m_cut, l) /
                        sqrt_binomial(n, k + l) * state.dicke(k + l);
    return {n, m_cut, std::move(psi)};
}

ReducedDensityMatrix reduced_density(const SymmetricState& state, int m_sites) {
    const int n = state.n;
    if (m_sites < 1 || m_sites >= n)
        throw std::invalid_argument("reduced_density: M must lie in [1, N-1]");
    BipartitionMap psi = bipartition_map(state.normalized(), n - m_sites);
    MatrixXcd rho = psi.matrix * psi.matrix.adjoint();
    return {m_sites, std::move(rho)};
}

RankProfile rank_profile(const SymmetricState& state, const ToleranceConfig& tol) {
    const int n = state.n;
    if (n < 2) throw std::invalid_argument("rank_profile: need N >= 2");
    SymmetricState normed = state.normalized();
    RankProfile profile;
    profile.n_star = 0;
    for (int m = 1; m < n; ++m) {
        int r = schmidt_binary_rank(normed, m, tol);
        profile.ranks.push_back(r);
        if (profile.n_star == 0 && r < m + 1) profile.n_star = m;
    }
    return profile;
}

MatrixXcd LocalProjector::full_matrix() const {
    MatrixXcd t = dicke_isometry(n_sites);
    return t * symmetric_block * t.adjoint();
}

LocalProjector kernel_projector(const SymmetricState& state, int n_sites,
                                const ToleranceConfig& tol) {
    ReducedDensityMatrix rho = reduced_density(state, n_sites);
    Eigen::SelfAdjointEigenSolver<MatrixXcd> eig(rho.matrix);
    const auto& vals = eig.eigenvalues();
    double top = vals(vals.size() - 1);
    int kernel_dim = 0;
    while (kernel_dim < vals.size() && vals(kernel_dim) <= tol.tol_rank * top) ++kernel_dim;
    if (kernel_dim == 0) {
        int n_star = rank_profile(state, tol).n_star;
        throw NoKernelError("kernel_projector: rho^(" + std::to_string(n_sites) +
                                ") is full rank in the symmetric block; minimal "
                                "interaction length is " +
                                std::to_string(n_star),
                            n_star);
    }
    MatrixXcd kernel_vecs = eig.eigenvectors().leftCols(kernel_dim);
    LocalProjector proj;
    proj.n_sites = n_sites;
    proj.kernel_dim = kernel_dim;
    proj.symmetric_block = kernel_vecs * kernel_vecs.adjoint();
    return proj;
}

std::vector<PauliTerm> dicke_projector(int n_sites, int k) {
    if (n_sites < 1 || k < 0 || k > n_sites)
        throw std::invalid_argument("dicke_projector: need 0 <= k <= n");
    // Diagonal operator selecting Hamming weight k; the Z-string coefficient
    // for support size t is the Krawtchouk sum 2^-n sum_j (-1)^j C(t,j) C(n-t,k-j).
    std::vector<double> coeff_by_size(static_cast<size_t>(n_sites) + 1, 0.0);
    for (int t = 0; t <= n_sites; ++t) {
        double acc = 0.0;
        for (int j = 0; j <= std::min(t, k); ++j)
            acc += (j % 2 ? -1.0 : 1.0) * binomial(t, j) * binomial(n_sites - t, k - j);
        coeff_by_size[static_cast<size_t>(t)] = acc / std::pow(2.0, n_sites);
    }
    std::vector<PauliTerm> terms;
    for (Index mask = 0; mask < (Index{1} << n_sites); ++mask) {
        int t = std::popcount(static_cast<std::uint64_t>(mask));
        double c = coeff_by_size[static_cast<size_t>(t)];
        if (c == 0.0) continue;
        PauliTerm term;
        term.coeff = c;
        for (int s = 0; s < n_sites; ++s)
            if (mask & (Index{1} << s)) {
                term.sites.push_back(s);
                term.paulis.push_back('Z');
            }
        terms.push_back(std::move(term));
    }
    return canonicalize(std::move(terms));
}

std::vector<PauliTerm> canonicalize(std::vector<PauliTerm> terms) {
    double top = 0.0;
    for (const PauliTerm& t : terms) top = std::max(top, std::abs(t.coeff));
    std::sort(terms.begin(), terms.end(), term_order);
    std::vector<PauliTerm> merged;
    for (PauliTerm& t : terms) {
        if (!merged.empty() && merged.back().sites == t.sites && merged.back().paulis == t.paulis)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(std::move(t));
    }
    std::vector<PauliTerm> pruned;
    for (PauliTerm& t : merged) {
        if (std::abs(t.coeff) <= 1e-12 * top) continue;
        if (std::abs(t.coeff.imag()) <= 1e-13 * std::abs(t.coeff)) t.coeff.imag(0.0);
        if (std::abs(t.coeff.real()) <= 1e-13 * std::abs(t.coeff)) t.coeff.real(0.0);
        pruned.push_back(std::move(t));
    }
    return pruned;
}

ParentHamiltonian assemble_parent(const SymmetricState& state, int n_sites, double lambda_sym,
                                  const ToleranceConfig& tol) {
    if (lambda_sym <= 0.0)
        throw std::invalid_argument("assemble_parent: lambda_sym must be positive");
    const int n = state.n;
    LocalProjector proj = kernel_projector(state, n_sites, tol);
    MatrixXcd h_local = proj.full_matrix();

    ParentHamiltonian h;
    h.n_parties = n;
    h.positive_semidefinite = true;
    h.couplings = {{"lambda_sym", lambda_sym}};

    std::vector<int> base_sites = window_sites(0, n_sites, n);
    std::vector<PauliTerm> local_terms = block_to_terms(base_sites, h_local);
    std::vector<PauliTerm> all_terms;
    for (int i = 0; i < n; ++i) {
        std::vector<int> sites = window_sites(i, n_sites, n);
        // h_local is permutation symmetric (built through the Dicke isometry),
        // so the same block serves every window ordering.
        h.blocks.push_back({sites, h_local});
        for (const PauliTerm& t : local_terms) {
            PauliTerm shifted = t;
            shifted.sites.clear();
            for (int s : t.sites) {
                auto pos = std::find(base_sites.begin(), base_sites.end(), s);
                shifted.sites.push_back(sites[static_cast<size_t>(pos - base_sites.begin())]);
            }
            // Keep (site, letter) pairs sorted after the relabeling.
            std::vector<std::pair<int, char>> zipped;
            for (size_t j = 0; j < shifted.sites.size(); ++j)
                zipped.emplace_back(shifted.sites[j], shifted.paulis[j]);
            std::sort(zipped.begin(), zipped.end());
            shifted.sites.clear();
            shifted.paulis.clear();
            for (auto& [s, p] : zipped) {
                shifted.sites.push_back(s);
                shifted.paulis.push_back(p);
            }
            all_terms.push_back(std::move(shifted));
        }
    }
    append_singlet_terms(all_terms, n, lambda_sym);
    MatrixXcd singlet = MatrixXcd::Zero(4, 4);
    singlet(1, 1) = singlet(2, 2) = 0.5;
    singlet(1, 2) = singlet(2, 1) = -0.5;
    for (int i = 0; i < n; ++i)
        h.blocks.push_back({window_sites(i, 2, n), lambda_sym * singlet});
    h.terms = canonicalize(std::move(all_terms));
    return h;
}

ParentHamiltonian paper_hamiltonian(PaperModel which, int n_parties, double j,
                                    double jz_or_gamma) {
    if (n_parties < 3)
        throw std::invalid_argument("paper_hamiltonian: need at least three sites");
    ParentHamiltonian h;
    h.n_parties = n_parties;
    h.positive_semidefinite = false;
    std::vector<PauliTerm> terms;
    auto bond = [&](int i) { return window_sites(i, 2, n_parties); };

    switch (which) {
        case PaperModel::Ghz: {
            double jz = jz_or_gamma;
            if (!(jz > 0.0))
                throw std::invalid_argument("paper_hamiltonian ghz: requires J_z > 0");
            if (!(jz > 2.0 * j))
                throw std::invalid_argument("paper_hamiltonian ghz: requires J_z > 2J");
            h.couplings = {{"J", j}, {"Jz", jz}};
            for (int i = 0; i < n_parties; ++i) {
                terms.push_back({bond(i), "XX", Complex{j, 0.0}});
                terms.push_back({bond(i), "YY", Complex{j, 0.0}});
                terms.push_back({bond(i), "ZZ", Complex{j - jz, 0.0}});
            }
            break;
        }
        case PaperModel::W: {
            double gamma = jz_or_gamma;
            if (!(j > 0.0)) throw std::invalid_argument("paper_hamiltonian w: requires J > 0");
            if (!(gamma > 0.0))
                throw std::invalid_argument("paper_hamiltonian w: requires gamma > 0");
            h.couplings = {{"J", j}, {"gamma", gamma}};
            for (int i = 0; i < n_parties; ++i) {
                terms.push_back({{i}, "Z", Complex{-2.0 * j, 0.0}});
                terms.push_back({bond(i), "XX", Complex{-j * gamma, 0.0}});
                terms.push_back({bond(i), "YY", Complex{-j * gamma, 0.0}});
                terms.push_back({bond(i), "ZZ", Complex{j - j * gamma, 0.0}});
            }
            break;
        }
        case PaperModel::X: {
            double jz = jz_or_gamma;
            if (!(j > 0.0)) throw std::invalid_argument("paper_hamiltonian x: requires J > 0");
            if (!(jz > 0.0))
                throw std::invalid_argument("paper_hamiltonian x: requires J_z > 0");
            h.couplings = {{"J", j}, {"Jz", jz}};
            for (int i = 0; i < n_parties; ++i) {
                std::vector<int> triple = window_sites(i, 3, n_parties);
                terms.push_back({{}, "", Complex{jz + j / 4.0, 0.0}});
                terms.push_back({triple, "ZZZ", Complex{jz, 0.0}});
                int a = i, b = (i + 1) % n_parties, c = (i + 2) % n_parties;
                for (auto [s, t] : {std::pair{a, b}, std::pair{a, c}, std::pair{b, c}}) {
                    std::vector<int> pair_sites{std::min(s, t), std::max(s, t)};
                    terms.push_back({pair_sites, "ZZ", Complex{-jz / 3.0, 0.0}});
                }
                for (int s : {a, b, c}) terms.push_back({{s}, "Z", Complex{-jz / 3.0, 0.0}});
                terms.push_back({bond(i), "XX", Complex{-j / 4.0, 0.0}});
                terms.push_back({bond(i), "YY", Complex{-j / 4.0, 0.0}});
                terms.push_back({bond(i), "ZZ", Complex{-j / 4.0, 0.0}});
            }
            break;
        }
    }
    h.terms = canonicalize(std::move(terms));
    h.blocks = group_blocks(h.terms);
    return h;
}

VectorXcd apply_dense(const ParentHamiltonian& h, const VectorXcd& amplitudes) {
    const int n = h.n_parties;
    if (amplitudes.size() != (Index{1} << n))
        throw std::invalid_argument("apply: amplitude vector has wrong length");
    VectorXcd out = VectorXcd::Zero(amplitudes.size());
    for (const auto& [sites, block] : h.blocks) {
        const int k = static_cast<int>(sites.size());
        if (k == 0) {
            out += block(0, 0) * amplitudes;
            continue;
        }
        std::vector<int> site_bits(static_cast<size_t>(k));
        for (int t = 0; t < k; ++t) site_bits[static_cast<size_t>(t)] = n - 1 - sites[static_cast<size_t>(t)];
        std::vector<int> rest_bits;
        for (int b = n - 1; b >= 0; --b)
            if (std::find(site_bits.begin(), site_bits.end(), b) == site_bits.end())
                rest_bits.push_back(b);
        const Index dim_block = Index{1} << k;
        const Index dim_rest = Index{1} << (n - k);
        auto scatter_block = [&](Index b) {
            Index idx = 0;
            for (int t = 0; t < k; ++t)
                if (b & (Index{1} << (k - 1 - t))) idx |= Index{1} << site_bits[static_cast<size_t>(t)];
            return idx;
        };
        std::vector<Index> block_scatter(static_cast<size_t>(dim_block));
        for (Index b = 0; b < dim_block; ++b) block_scatter[static_cast<size_t>(b)] = scatter_block(b);
        for (Index rest = 0; rest < dim_rest; ++rest) {
            Index base = 0;
            for (int t = 0; t < n - k; ++t)
                if (rest & (Index{1} << (n - k - 1 - t))) base |= Index{1} << rest_bits[static_cast<size_t>(t)];
            for (Index row = 0; row < dim_block; ++row) {
                Complex acc{0.0, 0.0};
                for (Index col = 0; col < dim_block; ++col)
                    acc += block(row, col) * amplitudes(base | block_scatter[static_cast<size_t>(col)]);
                out(base | block_scatter[static_cast<size_t>(row)]) += acc;
            }
        }
    }
    return out;
}

MatrixXcd dense_matrix(const ParentHamiltonian& h) {
    const Index dim = Index{1} << h.n_parties;
    MatrixXcd m = MatrixXcd::Zero(dim, dim);
    VectorXcd basis = VectorXcd::Zero(dim);
    for (Index col = 0; col < dim; ++col) {
        basis(col) = 1.0;
        m.col(col) = apply_dense(h, basis);
        basis(col) = 0.0;
    }
    return m;
}

GroundReport verify_ground(const ParentHamiltonian& h, const SymmetricState& state,
                           const ToleranceConfig& tol, int spectral_cap) {
    if (state.n != h.n_parties)
        throw std::invalid_argument("verify_ground: state and Hamiltonian size mismatch");
    if (state.n > tol.n_full_cap)
        throw std::invalid_argument("verify_ground: N exceeds the dense cap");
    VectorXcd psi = to_full_vector(state.normalized(), tol.n_full_cap).amplitudes;
    VectorXcd hpsi = apply_dense(h, psi);
    GroundReport report;
    report.energy = std::real(psi.dot(hpsi));
    double e_ref = h.positive_semidefinite ? 0.0 : report.energy;
    if (state.n <= spectral_cap) {
        Eigen::SelfAdjointEigenSolver<MatrixXcd> eig(dense_matrix(h));
        const auto& vals = eig.eigenvalues();
        report.has_spectrum = true;
        report.e_min = vals(0);
        double scale = std::max({std::abs(vals(0)), std::abs(vals(vals.size() - 1)), 1.0});
        double window = 1e-9 * scale;
        int deg = 0;
        while (deg < vals.size() && vals(deg) <= report.e_min + window) ++deg;
        report.ground_degeneracy = deg;
        MatrixXcd ground = eig.eigenvectors().leftCols(deg);
        report.ground_overlap = (ground.adjoint() * psi).squaredNorm();
        e_ref = report.e_min;
    }
    report.residual = (hpsi - e_ref * psi).norm();
    return report;
}

}  // namespace symclass
