#pragma once

#include "scv/commutant.hpp"
#include "scv/semiconformal.hpp"
#include "scv/variety.hpp"
#include "scv/verify.hpp"

#include <json.hpp>

#include <string>

namespace scv {

/// Insertion-ordered JSON keeps report bytes reproducible.
using Json = nlohmann::ordered_json;

Json scalar_to_json(const GaussianRational& x);
GaussianRational scalar_from_json(const Json& j);

Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json quadratic_to_json(const QuadraticVector& q);
/// Strict: requires {"d", "A", "B", "Lambda"} with a symmetric d x d matrix.
/// Throws std::invalid_argument on malformed structure.
QuadraticVector quadratic_from_json(const Json& j);

/// Fock elements as a list of {"monomial": [[mode, flavor], ...], "coeff": s};
/// monomials are emitted in canonical order and accepted in any order.
Json fock_to_json(const FockElement& v);
FockElement fock_from_json(const Json& j, long rank);

Json check_report_to_json(const CheckReport& r);

Json scpoint_to_json(const ScPoint& p);

Json commutant_profile_to_json(const CommutantProfile& profile);
std::string commutant_profile_to_csv(const CommutantProfile& profile);

Json chain_to_json(const Chain& chain);
Json extremal_to_json(const ExtremalClass& c);

Json verify_summary_to_json(const VerifySummary& s);
std::string verify_summary_to_csv(const VerifySummary& s);

}  // namespace scv
