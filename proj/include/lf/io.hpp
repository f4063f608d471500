#pragma once

#include "lf/fano.hpp"
#include "lf/git.hpp"
#include "lf/inversion.hpp"
#include "lf/laurent.hpp"

#include <json.hpp>

#include <string>

namespace lf {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
// Rationals are always "p/q" or "p" strings.
Json to_json(const Int& x);
Json to_json(const Rat& x);
Json to_json(const IntVector& v);
Json to_json(const RatVector& v);
Json to_json(const IntMatrix& m);  // list of rows
Json to_json(const std::vector<Int>& v);
Json to_json(const LaurentPolynomial& f);
Json to_json(const GitPresentation& G);
Json to_json(const Scaffolding& S);
Json to_json(const CiModel& M);
Json to_json(const PfaffianModel& M);
Json to_json(const MutationGraph& g);

Int int_from_json(const Json& j);
Rat rat_from_json(const Json& j);
IntVector int_vector_from_json(const Json& j);
RatVector rat_vector_from_json(const Json& j);
IntMatrix int_matrix_from_json(const Json& j);
std::vector<Int> int_list_from_json(const Json& j);
LaurentPolynomial polynomial_from_json(const Json& j);
GitPresentation presentation_from_json(const Json& j);
Scaffolding scaffolding_from_json(const Json& j);
CiModel ci_model_from_json(const Json& j);
PfaffianModel pfaffian_model_from_json(const Json& j);

// A class given either as a weight vector or as a monomial {"name": exponent}
// in the Cox coordinates of G.
IntVector class_from_json(const Json& j, const GitPresentation& G);

Json load_json(const std::string& path);

}  // namespace lf
