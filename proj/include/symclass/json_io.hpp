#ifndef SYMCLASS_JSON_IO_HPP
#define SYMCLASS_JSON_IO_HPP

#include "json.hpp"

#include "symclass/decomposer.hpp"
#include "symclass/hamiltonian.hpp"
#include "symclass/slocc.hpp"
#include "symclass/symmetric_state.hpp"

namespace symclass {

using json = nlohmann::json;

json complex_to_json(const Complex& z);
Complex complex_from_json(const json& j);

/// {"n": N, "dicke": [[re, im], ...]}
json state_to_json(const SymmetricState& state);

/// Accepts {"n", "dicke"} or {"name", "n", "k"?, "z"?}.
SymmetricState state_from_json(const json& j);

/// {"n", "d", "points", "weights", "residual", "infinity_point"}
json decomposition_to_json(const DiagonalDecomposition& dec);

/// {"n", "boundary": "periodic", "terms": [{"sites", "paulis", "coeff"}, ...]}
json hamiltonian_to_json(const ParentHamiltonian& h);

/// [[a_re,a_im],[b_re,b_im],[c_re,c_im],[d_re,d_im]]
Ilo ilo_from_json(const json& j);

}  // namespace symclass

#endif
