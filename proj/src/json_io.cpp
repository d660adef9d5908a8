#include "symclass/json_io.hpp"

namespace symclass {

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("complex value must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

json state_to_json(const SymmetricState& state) {
    json dicke = json::array();
    for (int k = 0; k <= state.n; ++k) dicke.push_back(complex_to_json(state.dicke(k)));
    return json{{"n", state.n}, {"dicke", dicke}};
}

SymmetricState state_from_json(const json& j) {
    if (!j.contains("n")) throw std::invalid_argument("state JSON: missing \"n\"");
    int n = j.at("n").get<int>();
    if (j.contains("dicke")) {
        const json& arr = j.at("dicke");
        if (!arr.is_array() || static_cast<int>(arr.size()) != n + 1)
            throw std::invalid_argument("state JSON: \"dicke\" must hold N+1 entries");
        VectorXcd d(n + 1);
        for (int k = 0; k <= n; ++k) d(k) = complex_from_json(arr[static_cast<size_t>(k)]);
        return SymmetricState{n, std::move(d)};
    }
    if (j.contains("name")) {
        std::optional<int> k;
        std::optional<Complex> z;
        if (j.contains("k")) k = j.at("k").get<int>();
        if (j.contains("z")) z = complex_from_json(j.at("z"));
        return build_named(j.at("name").get<std::string>(), n, k, z);
    }
    throw std::invalid_argument("state JSON: need either \"dicke\" or \"name\"");
}

json decomposition_to_json(const DiagonalDecomposition& dec) {
    json points = json::array();
    for (const ProductPoint& p : dec.points)
        points.push_back(json::array({complex_to_json(p.x), complex_to_json(p.y)}));
    json weights = json::array();
    for (Eigen::Index k = 0; k < dec.weights.size(); ++k)
        weights.push_back(complex_to_json(dec.weights(k)));
    json j{{"n", dec.n},
           {"d", dec.bond_dimension()},
           {"points", points},
           {"weights", weights},
           {"residual", dec.residual}};
    j["infinity_point"] = dec.infinity_index >= 0 ? json(dec.infinity_index) : json(nullptr);
    return j;
}

json hamiltonian_to_json(const ParentHamiltonian& h) {
    json terms = json::array();
    for (const PauliTerm& t : h.terms) {
        terms.push_back(json{{"sites", t.sites},
                             {"paulis", t.paulis},
                             {"coeff", complex_to_json(t.coeff)}});
    }
    return json{{"n", h.n_parties}, {"boundary", "periodic"}, {"terms", terms}};
}

Ilo ilo_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument("ILO JSON: expected [[a],[b],[c],[d]]");
    return {complex_from_json(j[0]), complex_from_json(j[1]), complex_from_json(j[2]),
            complex_from_json(j[3])};
}

}  // namespace symclass
