#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "bwprob/montecarlo.hpp"
#include "bwprob/posthoc.hpp"
#include "bwprob/structure.hpp"
#include "bwprob/wiedemann.hpp"

namespace bwprob {

using Json = nlohmann::json;

// Polynomials travel as ascending coefficient arrays of integers, e.g.
// x^2+x+1 over GF(2) -> [1,1,1].  Invariant lists are arrays of those,
// largest invariant first.

Json field_to_json(const Field& f);
Field field_from_json(const Json& j);

Json poly_to_json(const Poly& p);
Poly poly_from_json(const Field& f, const Json& j);

Json invariants_to_json(const InvariantList& inv);
InvariantList invariants_from_json(const Field& f, const Json& j);

// Matrix spec files carry either an invariant chain or explicit entries:
//   {"field": {...}, "n": 27, "invariants": [[...], ...]}
//   {"field": {...}, "entries": [[...], ...]}
// Entries are integers for prime fields, coefficient arrays otherwise.
struct MatrixSpec {
  Field field;
  MatrixFF matrix;
  // Present when the spec was given as invariants.
  std::optional<InvariantList> invariants;
};
MatrixSpec matrix_from_json(const Json& j);

Json structure_to_json(const EigStructure& es);
// Accepts an explicit structure ({"q":..,"n":..,"components":[...]}), or a
// matrix spec, from which the structure is derived.
EigStructure structure_from_json(const Json& j);

Json generator_result_to_json(const GeneratorResult& res,
                              bool include_generator = false);

Json mcstats_to_json(const MCStats& stats, const TheoryComparison* cmp);
std::string mcstats_to_csv(const MCStats& stats, const TheoryComparison* cmp);

Json posthoc_report_to_json(const PosthocReport& rep);

}  // namespace bwprob
