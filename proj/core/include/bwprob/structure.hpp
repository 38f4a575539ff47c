#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bwprob/bigint.hpp"
#include "bwprob/matrix.hpp"

namespace bwprob {

// Eigenstructure data: for each distinct irreducible (identified only by
// degree and a label; the probability formulas never need the actual
// polynomial), the nonincreasing partition of Jordan-block exponents.
// This is exactly the data the faithfulness probability depends on.
struct StructureComponent {
  int degree = 1;
  std::string label;  // distinct per component, e.g. "x+1" or "d2#0"
  std::vector<int> exponents;  // nonincreasing, entries >= 1

  std::int64_t dimension() const;
  // Multiplicity of the top exponent.
  int top_multiplicity() const;
};

struct EigStructure {
  BigInt q;
  std::int64_t n = 0;
  std::vector<StructureComponent> components;
  // Dimension absorbed by exponent padding in the worst-case construction;
  // metadata only, never enters the probability.
  std::int64_t padding = 0;

  std::int64_t dimension_sum() const;
};

// Throws std::invalid_argument when partitions are not nonincreasing or the
// dimensions exceed n.
void validate_structure(const EigStructure& es);

// Derives the eigenstructure from an invariant-factor chain by factoring
// each nontrivial invariant and transposing exponents per irreducible.
EigStructure to_structure(const InvariantList& inv, std::int64_t n);

}  // namespace bwprob
