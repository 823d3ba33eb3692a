#pragma once

#include "json.hpp"

#include "rb3/classify.hpp"
#include "rb3/induced.hpp"
#include "rb3/operators.hpp"

namespace rb3 {

using Json = nlohmann::ordered_json;

/// {"passed", "tuples_checked", "violations", "counterexamples": [{"tuple", "lhs", "rhs"}]}
Json report_to_json(const Report& r);

/// {"passed", "tuples_checked", "parts": {name: report}}
Json suite_to_json(const SuiteReport& s);

/// Operator grammar:
///   {"family":"r01","b":"5"}
///   {"family":"r02","m0":1,"a":"3"}          ("a":"sym" selects the symbolic parameter)
///   {"family":"r03","m0":7,"s0":2,"a":"2"}
///   {"family":"r04","m1":3}
///   {"family":"r05","m1":3,"b":"5"}
///   {"support":{"3":"1","-2":"1/2"}}
/// Scalars are strings ("p/q") or JSON integers; floats are rejected. Throws ParseError.
HomogeneousOperator operator_from_json(const Json& j);
Json operator_to_json(const HomogeneousOperator& R);

/// {"3":"1","-2":"1/2"}, keys in index order.
Json support_to_json(const FiniteSupport& f);

Json match_to_json(const FamilyMatch& m);

Json prune_to_json(const PruneReport& p);

}  // namespace rb3
