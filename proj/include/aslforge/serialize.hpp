#pragma once

#include <string>

#include <json.hpp>

#include "aslforge/asl.hpp"
#include "aslforge/groebner.hpp"
#include "aslforge/matrix_ideal.hpp"
#include "aslforge/poset.hpp"

namespace aslforge {

/// Insertion-ordered so that output bytes are stable.
using Json = nlohmann::ordered_json;

/// {"x_1_1": 2, "y_2": 1}, keys in variable order.
Json monomial_to_json(const Monomial& m, const RingContext& ctx);
Monomial monomial_from_json(const Json& j, const RingContext& ctx);

/// [{"c": "num/den", "m": {...}}, ...], terms descending in the order.
Json polynomial_to_json(const Polynomial& f);
Polynomial polynomial_from_json(const Json& j, const RingPtr& ring);

/// {"n": 3, "kind": "generic"|"symmetric"|"zero_pattern", "mask": [[...]]}.
/// Throws UsageError on malformed input.
MatrixPattern pattern_from_json(const Json& j);
Json pattern_to_json(const MatrixPattern& p);

/// {"is_groebner", "pairs": [{i, j, criterion, remainder_zero}], "basis"}.
/// Pair indices are 1-based.
Json certificate_to_json(const GroebnerCertificate& cert);
Json initial_ideal_to_json(const InitialIdeal& I);

/// {"elements": [...], "covers": [[a, b], ...]} with covers after
/// transitive reduction.
Json poset_to_json(const Poset& p);
/// Hasse diagram in Graphviz DOT, edges pointing upward in the order.
std::string poset_to_dot(const Poset& p);

Json axiom1_to_json(const Axiom1Report& r);
Json axiom2_to_json(const Axiom2Report& r, const Poset& p);

}  // namespace aslforge
