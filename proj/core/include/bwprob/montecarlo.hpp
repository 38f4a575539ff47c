#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "bwprob/engine.hpp"
#include "bwprob/wiedemann.hpp"

namespace bwprob {

struct MCStats {
  std::int64_t trials = 0;
  // faithful_count value -> number of trials with exactly that count.
  std::map<int, std::int64_t> histogram;
  std::uint64_t master_seed = 0;
  int b = 0;
  std::int64_t n = 0;
  BigInt q;
  InvariantList truth;  // smith(xI - A), computed once
  double elapsed_s = 0;

  std::int64_t at_least(int r) const;
};

// Runs `trials` independent pipeline trials on A; trial j uses seed
// mix_seed(master_seed, j).  The histogram is a pure function of
// (A, b, trials, master_seed) regardless of worker count: workers take
// disjoint trial-index stripes and histogram merging is commutative.
MCStats run_trials(const MatrixFF& a, int b, std::int64_t trials,
                   std::uint64_t master_seed, int workers = 1);

struct TheoryRow {
  int r = 0;
  Prob theory;       // P(exactly r faithful)
  std::int64_t count = 0;
  double empirical = 0;
  double sigma = 0;  // binomial std error of the empirical frequency
  double z = 0;
  bool flagged = false;  // |z| > 4
};

struct TheoryComparison {
  std::vector<TheoryRow> rows;  // r = b down to 0
  double max_abs_z = 0;
  bool all_within(double zmax) const { return max_abs_z <= zmax; }
};

// Per-r comparison of the empirical histogram against the structure formula:
// theory(exactly r) = P_r - P_{r+1} with P_0 = 1 and P_{b+1} = 0.
TheoryComparison compare_with_theory(const MCStats& stats,
                                     const EigStructure& es,
                                     Backend backend = Backend::exact);

}  // namespace bwprob
