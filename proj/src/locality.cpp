#include "tagix/locality.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "tagix/error.hpp"

namespace tagix {

std::string_view scheme_name(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::kDocument: return "document";
    case SchemeKind::kColumn: return "column";
    case SchemeKind::kLabel: return "label";
    case SchemeKind::kLeafRank: return "leaf_rank";
    case SchemeKind::kEndLcp: return "end_lcp";
    case SchemeKind::kIlcp: return "ilcp";
    case SchemeKind::kPlcp: return "plcp";
    case SchemeKind::kPosition: return "position";
  }
  return "unknown";
}

std::optional<SchemeKind> parse_scheme(std::string_view name) {
  static constexpr SchemeKind kAll[] = {SchemeKind::kDocument, SchemeKind::kColumn, SchemeKind::kLabel,
                                        SchemeKind::kLeafRank, SchemeKind::kEndLcp, SchemeKind::kIlcp,
                                        SchemeKind::kPlcp,     SchemeKind::kPosition};
  std::string normalized(name);
  std::replace(normalized.begin(), normalized.end(), '-', '_');
  for (const auto kind : kAll) {
    if (scheme_name(kind) == normalized) return kind;
  }
  return std::nullopt;
}

LabelCodes label_codes(const std::vector<std::string>& label_of_doc) {
  LabelCodes codes;
  std::unordered_map<std::string, Tag> code_of;
  for (const auto& label : label_of_doc) {
    const auto [it, inserted] = code_of.emplace(label, static_cast<Tag>(codes.names.size()));
    if (inserted) codes.names.push_back(label);
    codes.code_of_doc.push_back(it->second);
  }
  return codes;
}

PositionTags ilcp_values(const Corpus& corpus, IlcpMode mode) {
  PositionTags out(corpus.size(), 0);
  for (std::size_t d = 0; d < corpus.doc_count(); ++d) {
    const std::size_t begin = corpus.doc_range(d).first;
    const auto doc = SuffixIndex::build(corpus.doc_text(d));
    const auto& sa = doc.sa();
    const auto& lcp = doc.lcp();
    const std::size_t m = doc.size();
    for (std::size_t r = 0; r < m; ++r) {
      Tag v = lcp[r];
      if (mode == IlcpMode::kSymmetricMax && r + 1 < m) v = std::max<Tag>(v, lcp[r + 1]);
      out[begin + sa[r]] = v;
    }
  }
  return out;
}

PositionTags end_lcp_values(const Corpus& corpus, const SuffixIndex& index) {
  const std::size_t n = corpus.size();
  if (index.size() != n) throw ValidationError("index and corpus lengths differ");
  const auto& lcp = index.lcp();
  const auto& isa = index.isa();
  PositionTags out(n, 0);
  for (std::size_t d = 0; d < corpus.doc_count(); ++d) {
    const auto [b, e] = corpus.doc_range(d);
    for (std::size_t p = b; p < e; ++p) {
      const std::size_t r = isa[p];
      std::uint32_t best = lcp[r];
      if (r + 1 < n) best = std::max(best, lcp[r + 1]);
      out[p] = std::min<Tag>(best, static_cast<Tag>(e - p));
    }
  }
  return out;
}

PositionTags end_lcp_values(const Corpus& corpus) {
  return end_lcp_values(corpus, SuffixIndex::build(corpus));
}

namespace {

PositionTags per_document(const Corpus& corpus, const std::vector<Tag>& doc_tags) {
  PositionTags out(corpus.size());
  for (std::size_t d = 0; d < corpus.doc_count(); ++d) {
    const auto [b, e] = corpus.doc_range(d);
    std::fill(out.begin() + static_cast<std::ptrdiff_t>(b), out.begin() + static_cast<std::ptrdiff_t>(e),
              doc_tags[d]);
  }
  return out;
}

}  // namespace

const std::vector<std::string>& leaf_keys(const Corpus& corpus) {
  if (!corpus.has_labels()) return corpus.doc_names();
  const auto leaves = corpus.tree().leaves_in_order();
  const std::unordered_set<std::string> leaf_set(leaves.begin(), leaves.end());
  const auto& names = corpus.doc_names();
  const bool names_are_leaves =
      std::all_of(names.begin(), names.end(), [&](const std::string& n) { return leaf_set.count(n) > 0; });
  return names_are_leaves ? names : corpus.labels();
}

PositionTags assign_tags(const Corpus& corpus, const TagScheme& scheme, const SuffixIndex* index) {
  SuffixIndex owned;
  auto need_index = [&]() -> const SuffixIndex& {
    if (index) return *index;
    owned = SuffixIndex::build(corpus);
    return owned;
  };

  switch (scheme.kind) {
    case SchemeKind::kDocument: {
      std::vector<Tag> ids(corpus.doc_count());
      for (std::size_t d = 0; d < ids.size(); ++d) ids[d] = static_cast<Tag>(d);
      return per_document(corpus, ids);
    }
    case SchemeKind::kColumn: {
      if (!corpus.has_columns()) throw ValidationError("column scheme requires an alignment input");
      const auto& cols = corpus.column_of();
      return PositionTags(cols.begin(), cols.end());
    }
    case SchemeKind::kLabel: {
      if (!corpus.has_labels()) throw ValidationError("label scheme requires document labels");
      return per_document(corpus, label_codes(corpus.labels()).code_of_doc);
    }
    case SchemeKind::kLeafRank: {
      if (!corpus.has_tree()) throw ValidationError("leaf_rank scheme requires a phylogenetic tree");
      const auto ranks = leaf_ranks(corpus.tree(), leaf_keys(corpus));
      return per_document(corpus, std::vector<Tag>(ranks.begin(), ranks.end()));
    }
    case SchemeKind::kEndLcp:
      return end_lcp_values(corpus, need_index());
    case SchemeKind::kIlcp:
      return ilcp_values(corpus, scheme.ilcp_mode);
    case SchemeKind::kPlcp: {
      const auto values = plcp(need_index());
      return PositionTags(values.begin(), values.end());
    }
    case SchemeKind::kPosition: {
      PositionTags out(corpus.size());
      for (std::size_t p = 0; p < out.size(); ++p) out[p] = static_cast<Tag>(p);
      return out;
    }
  }
  throw ValidationError("unknown tag scheme");
}

}  // namespace tagix
