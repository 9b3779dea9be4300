#include "tagix/synthetic.hpp"

#include <numeric>
#include <random>

#include "tagix/error.hpp"

namespace tagix {
namespace {

constexpr char kBases[] = {'A', 'C', 'G', 'T'};

int base_index(char c) {
  switch (c) {
    case 'A': return 0;
    case 'C': return 1;
    case 'G': return 2;
    default: return 3;
  }
}

// Joins already-formatted subtrees into a balanced binary Newick fragment.
std::string balanced_newick(const std::vector<std::string>& parts, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return parts[lo];
  const std::size_t mid = lo + (hi - lo + 1) / 2;
  return "(" + balanced_newick(parts, lo, mid) + "," + balanced_newick(parts, mid, hi) + ")";
}

}  // namespace

SyntheticCorpus generate_synthetic(const SyntheticSpec& spec) {
  if (spec.species == 0) throw ValidationError("synthetic corpus needs at least one species");
  if (spec.copies == 0) throw ValidationError("synthetic corpus needs at least one copy per species");
  if (spec.length == 0) throw ValidationError("synthetic sequence length must be positive");
  if (!(spec.mutation_rate >= 0.0 && spec.mutation_rate <= 1.0)) {
    throw ValidationError("mutation rate must lie in [0, 1]");
  }

  std::mt19937_64 rng(spec.seed);
  std::vector<std::string> roots(spec.species);
  for (auto& root : roots) {
    root.resize(spec.length);
    for (auto& c : root) c = kBases[rng() >> 62];
  }

  std::vector<Document> docs;
  std::vector<std::string> labels;
  std::vector<std::string> clades;
  for (std::size_t s = 0; s < spec.species; ++s) {
    std::vector<std::string> leaves;
    for (std::size_t k = 0; k < spec.copies; ++k) {
      std::string body = roots[s];
      for (auto& c : body) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u < spec.mutation_rate) c = kBases[(base_index(c) + 1 + rng() % 3) % 4];
      }
      std::string name = "S" + std::to_string(s) + "_" + std::to_string(k);
      leaves.push_back(name);
      docs.push_back(Document{docs.size(), std::move(name), std::move(body)});
      labels.push_back("S" + std::to_string(s));
    }
    clades.push_back(balanced_newick(leaves, 0, leaves.size()));
  }

  SyntheticCorpus out{corpus_from_documents(docs), {}};
  out.corpus.set_labels(std::move(labels));
  out.genome_tree = PhyloTree::parse_newick(balanced_newick(clades, 0, clades.size()) + ";");
  out.corpus.set_tree(out.genome_tree);
  return out;
}

std::vector<std::size_t> seeded_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(perm[i - 1], perm[j]);
  }
  return perm;
}

}  // namespace tagix
