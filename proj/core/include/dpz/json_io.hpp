#pragma once

#include <nlohmann/json.hpp>

#include "dpz/certificate.hpp"
#include "dpz/involutions.hpp"
#include "dpz/irreducibility.hpp"
#include "dpz/lattice.hpp"
#include "dpz/named_models.hpp"

namespace dpz {

using Json = nlohmann::json;

Json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

// {"rank": r, "gram": [[...]], "basis": ["H", "E1", ...]}
Json to_json(const Lattice& l);
Lattice lattice_from_json(const Json& j);

Json to_json(const Obstruction& o);
Obstruction obstruction_from_json(const Json& j);
Json to_json(const ReducibilityResult& r);
ReducibilityResult result_from_json(const Json& j);

Json to_json(const InvolutionClass& c);
Json to_json(const DecompositionTree& t);
Json to_json(const NamedInvolution& m);

// Matrix files: {"basis": "HE" | "quadric", "matrix": [[...]]}; an optional "certificate"
// member carries a previously emitted certificate.
Isometry isometry_from_matrix_file(const Json& j);
Json matrix_file(const Isometry& g, BasisKind basis);

}  // namespace dpz
