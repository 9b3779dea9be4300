#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tagix/corpus.hpp"
#include "tagix/newick.hpp"

namespace tagix {

// Deterministic toy pangenome.
//
// Each species gets a uniformly random root sequence over ACGT; each copy is
// the root with independent substitutions at `mutation_rate`. All draws
// come from std::mt19937_64 seeded with `seed`, consumed in this order:
// species roots (species-major), then copies (species-major, copy-minor,
// position-minor). A base is `draw >> 62`; a mutation fires when
// `(draw >> 11) * 2^-53 < mutation_rate`, replacing base b with
// `(b + 1 + next_draw % 3) % 4`.
struct SyntheticSpec {
  std::size_t species = 5;
  std::size_t copies = 10;
  std::size_t length = 1000;
  double mutation_rate = 0.01;
  std::uint64_t seed = 42;
};

struct SyntheticCorpus {
  // Documents named S<i>_<j>, labeled S<i>.
  Corpus corpus;
  // Balanced tree over species; each species is a balanced clade of its copies.
  PhyloTree genome_tree;
};

// Throws ValidationError for zero species/copies/length or a rate outside [0, 1].
SyntheticCorpus generate_synthetic(const SyntheticSpec& spec);

// Seeded Fisher-Yates permutation of [0, n) using std::mt19937_64.
std::vector<std::size_t> seeded_permutation(std::size_t n, std::uint64_t seed);

}  // namespace tagix
