#include "tagix/report.hpp"

#include <cstdio>
#include <sstream>

#include "tagix/error.hpp"

namespace tagix {
namespace {

const RunLengthTagArray& require_tag(const IndexBundle& bundle, const std::string& name) {
  const auto it = bundle.tag_arrays.find(name);
  if (it == bundle.tag_arrays.end()) throw ValidationError("bundle lacks section TAG:" + name);
  return it->second;
}

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

std::string dump_tsv(const IndexBundle& bundle) {
  const auto column = require_tag(bundle, "column").decode();
  const auto end_lcp = require_tag(bundle, "end_lcp").decode();
  const auto ilcp = require_tag(bundle, "ilcp").decode();
  const auto doc = require_tag(bundle, "document").decode();
  const auto& ix = bundle.index;
  const auto sa = to_tags(ix.sa());
  const auto lcp = to_tags(ix.lcp());
  const auto diff_sa = diff_encode(sa);
  const auto diff_lcp = diff_encode(lcp);

  std::ostringstream out;
  out << "index\tbwt\tcolumn\tend_lcp\tilcp\tdoc\tsa\tlcp\tdiff_sa\tdiff_lcp\n";
  for (std::size_t i = 0; i < ix.size(); ++i) {
    out << i << '\t' << ix.bwt()[i] << '\t' << column[i] << '\t' << end_lcp[i] << '\t' << ilcp[i] << '\t'
        << doc[i] << '\t' << sa[i] << '\t' << lcp[i] << '\t' << (i ? diff_sa.deltas[i - 1] : diff_sa.first)
        << '\t' << (i ? diff_lcp.deltas[i - 1] : diff_lcp.first) << '\n';
  }
  out << "# rows: " << ix.size() << "\n";
  out << "# diff_sa/diff_lcp: row 0 holds sa[0]/lcp[0] verbatim; row i > 0 holds x[i] - x[i-1]\n";
  return out.str();
}

NamedStats bundle_stats(const IndexBundle& bundle) {
  NamedStats stats;
  const auto& bwt = bundle.index.bwt();
  std::vector<Tag> bwt_tags(bwt.begin(), bwt.end());
  for (auto& t : bwt_tags) t = static_cast<std::uint8_t>(t);
  stats.emplace_back("bwt", run_stats(bwt_tags));
  if (!bundle.index.da().empty()) stats.emplace_back("document_array", run_stats(to_tags(bundle.index.da())));
  for (const auto& [name, rle] : bundle.tag_arrays) stats.emplace_back("tag:" + name, run_stats(rle.decode()));
  return stats;
}

std::string stats_tsv(const NamedStats& stats) {
  std::ostringstream out;
  out << "array\tn\truns\truns_per_n\tdistinct\tmean_abs_delta\tzero_delta_fraction\n";
  for (const auto& [name, s] : stats) {
    out << name << '\t' << s.n << '\t' << s.run_count << '\t'
        << fixed(static_cast<double>(s.run_count) / static_cast<double>(s.n)) << '\t' << s.distinct << '\t'
        << fixed(s.mean_abs_delta) << '\t' << fixed(s.zero_delta_fraction) << '\n';
  }
  return out.str();
}

NamedStats SyntheticExperiment::named() const {
  return {{"bwt", bwt},
          {"document", document},
          {"species", species},
          {"leaf_rank_tree", leaf_rank_tree},
          {"leaf_rank_shuffled", leaf_rank_shuffled}};
}

SyntheticExperiment run_synthetic_experiment(const SyntheticSpec& spec) {
  const SyntheticCorpus synth = generate_synthetic(spec);
  const Corpus& corpus = synth.corpus;
  const SuffixIndex index = SuffixIndex::build(corpus);

  SyntheticExperiment e;
  e.n = index.size();
  std::vector<Tag> bwt_tags;
  for (const char c : index.bwt()) bwt_tags.push_back(static_cast<std::uint8_t>(c));
  e.bwt = run_stats(bwt_tags);
  auto measure = [&](const PositionTags& tags) { return run_stats(to_bwt_order(index, tags).values); };
  e.document = measure(assign_tags(corpus, {SchemeKind::kDocument}));
  e.species = measure(assign_tags(corpus, {SchemeKind::kLabel}));
  const PositionTags leaf = assign_tags(corpus, {SchemeKind::kLeafRank});
  e.leaf_rank_tree = measure(leaf);

  e.shuffle_seed = spec.seed + 1;
  const auto perm = seeded_permutation(synth.genome_tree.leaves_in_order().size(), e.shuffle_seed);
  PositionTags shuffled(leaf.size());
  for (std::size_t p = 0; p < leaf.size(); ++p) shuffled[p] = static_cast<Tag>(perm[static_cast<std::size_t>(leaf[p])]);
  e.leaf_rank_shuffled = measure(shuffled);
  return e;
}

}  // namespace tagix
