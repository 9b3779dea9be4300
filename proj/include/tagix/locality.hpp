#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tagix/corpus.hpp"
#include "tagix/suffix_core.hpp"

namespace tagix {

using Tag = std::int64_t;

// One tag per text position, in text order.
using PositionTags = std::vector<Tag>;

enum class SchemeKind { kDocument, kColumn, kLabel, kLeafRank, kEndLcp, kIlcp, kPlcp, kPosition };

enum class IlcpMode {
  // Longest common prefix with any other suffix of the same document.
  kSymmetricMax,
  // Longest common prefix with the preceding suffix of the same document in
  // sorted order (the interleaved per-document LCP arrays).
  kPredecessor,
};

struct TagScheme {
  SchemeKind kind = SchemeKind::kDocument;
  IlcpMode ilcp_mode = IlcpMode::kSymmetricMax;
};

std::string_view scheme_name(SchemeKind kind);
// Accepts the names returned by scheme_name(); also "leaf-rank"/"end-lcp".
std::optional<SchemeKind> parse_scheme(std::string_view name);

// Dense integer codes for document labels, assigned by first appearance.
struct LabelCodes {
  std::vector<Tag> code_of_doc;
  std::vector<std::string> names;  // names[code]
};
LabelCodes label_codes(const std::vector<std::string>& label_of_doc);

// Per-position longest common prefix with another suffix of the same
// document, both suffixes cut at the document end (sentinel included).
PositionTags ilcp_values(const Corpus& corpus, IlcpMode mode = IlcpMode::kSymmetricMax);

// Per-position longest common prefix with any other suffix, each suffix cut
// at the end of its own document. Uses the full-text LCP array: because
// sentinels occur only at document ends, the truncated LCP of p and q equals
// min(lcp(p, q), length of p's truncated suffix).
PositionTags end_lcp_values(const Corpus& corpus, const SuffixIndex& index);
PositionTags end_lcp_values(const Corpus& corpus);

// Strings matched against tree leaves by the leaf_rank scheme: document
// names when every name is a leaf (one leaf per genome), otherwise labels
// when present (one leaf per label), otherwise document names.
const std::vector<std::string>& leaf_keys(const Corpus& corpus);

// Materializes `scheme` over the corpus. `index` is needed by end_lcp and
// plcp; one is built on demand when null. Throws ValidationError when the
// scheme needs alignment columns, labels or a tree the corpus lacks.
PositionTags assign_tags(const Corpus& corpus, const TagScheme& scheme, const SuffixIndex* index = nullptr);

}  // namespace tagix
