#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tagix/bundle.hpp"
#include "tagix/synthetic.hpp"
#include "tagix/tag_array.hpp"

namespace tagix {

// One row per BWT position:
//   index bwt column end_lcp ilcp doc sa lcp diff_sa diff_lcp
// with a header row and a '#' footer describing the difference convention.
// Needs the column, end_lcp, ilcp and document tag arrays; throws
// ValidationError naming the first absent TAG: section.
std::string dump_tsv(const IndexBundle& bundle);

using NamedStats = std::vector<std::pair<std::string, RunStats>>;

// BWT, document array and every stored tag array.
NamedStats bundle_stats(const IndexBundle& bundle);

// Header `array n runs runs_per_n distinct mean_abs_delta zero_delta_fraction`.
std::string stats_tsv(const NamedStats& stats);

struct SyntheticExperiment {
  std::size_t n = 0;
  RunStats bwt;
  RunStats document;
  RunStats species;
  RunStats leaf_rank_tree;      // leaf ranks in tree order
  RunStats leaf_rank_shuffled;  // leaf ranks under a seeded random relabeling
  std::uint64_t shuffle_seed = 0;

  NamedStats named() const;
};

// Builds the synthetic corpus and its index, then measures the tag arrays.
// The shuffled leaf order uses seeded_permutation(leaves, spec.seed + 1).
SyntheticExperiment run_synthetic_experiment(const SyntheticSpec& spec);

}  // namespace tagix
