#ifndef CTIDLAB_SERIALIZE_HPP
#define CTIDLAB_SERIALIZE_HPP

#include <nlohmann/json.hpp>

#include "ctidlab/identities.hpp"
#include "ctidlab/sumsets.hpp"

namespace ctidlab {

using nlohmann::json;

// QPoly <-> ascending coefficient list of decimal strings, e.g. ["1","-1"].
json to_json(const QPoly& p);
QPoly qpoly_from_json(const json& j);

// BigRat <-> decimal string "n" or "n/d".
json to_json(const BigRat& r);
BigRat bigrat_from_json(const json& j);

json to_json(const Value& v);

// LaurentPoly: {"nvars": n, "terms": [{"exponents": [...], "coeff": ...}]}
// with terms in lexicographic exponent order.
json to_json(const LaurentPoly<BigRat>& p);
json to_json(const LaurentPoly<QPoly>& p);

// ParamMatrix <-> {"n": ..., "beta": [[...]]}
json to_json(const ParamMatrix& B);
ParamMatrix param_matrix_from_json(const json& j);

// IdentityCase <-> {"family": "...", "params": {...}, "method": "..."}
json to_json(const IdentityCase& c);
IdentityCase identity_case_from_json(const json& j);

json to_json(const VerifyReport& rep);

// SumsetInstance <-> {"p": int, "A": [[int]], "S": {"i,j": [int]}}
json to_json(const SumsetInstance& inst);
SumsetInstance sumset_instance_from_json(const json& j);

json to_json(const BoundReport& rep);

} // namespace ctidlab

#endif
