#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tagix/newick.hpp"

namespace tagix {

inline constexpr char kDefaultSeparator = '$';
inline constexpr char kDefaultTerminator = '#';
inline constexpr char kDefaultGap = '-';

struct Document {
  std::size_t id = 0;
  std::string name;
  std::string body;  // no sentinel bytes
};

struct Alignment {
  std::vector<std::string> names;
  std::vector<std::string> rows;
  std::size_t width = 0;
  char gap = kDefaultGap;
};

struct SentinelConfig {
  char separator = kDefaultSeparator;
  char terminator = kDefaultTerminator;

  bool is_sentinel(char c) const { return c == separator || c == terminator; }
};

// Concatenated documents, each ending in a sentinel byte, plus optional
// per-position alignment columns, per-document labels and a phylogeny.
//
// Built through the factory functions below; treat as immutable once shared.
class Corpus {
 public:
  const std::string& text() const { return text_; }
  std::size_t size() const { return text_.size(); }
  std::size_t doc_count() const { return doc_starts_.size(); }
  const std::vector<std::size_t>& doc_starts() const { return doc_starts_; }
  const std::vector<std::string>& doc_names() const { return names_; }
  const SentinelConfig& sentinels() const { return sentinels_; }

  // Document containing text position p (binary search over doc_starts).
  std::size_t doc_of(std::size_t p) const;
  // Half-open text range [begin, end) of document d, sentinel included.
  std::pair<std::size_t, std::size_t> doc_range(std::size_t d) const;
  std::string_view doc_text(std::size_t d) const;

  bool has_columns() const { return column_of_.has_value(); }
  const std::vector<std::uint32_t>& column_of() const;
  std::size_t alignment_width() const { return alignment_width_; }

  bool has_labels() const { return labels_.has_value(); }
  const std::vector<std::string>& labels() const;
  // Assigns one label per document, in document order.
  void set_labels(std::vector<std::string> labels);
  // Assigns labels from (doc_name, label) pairs; every document must be covered.
  void set_labels_by_name(const std::vector<std::pair<std::string, std::string>>& pairs);

  bool has_tree() const { return tree_.has_value(); }
  const PhyloTree& tree() const;
  void set_tree(PhyloTree tree) { tree_ = std::move(tree); }

  // Re-inserts gaps from column_of to rebuild the alignment rows.
  std::vector<std::string> alignment_rows(char gap = kDefaultGap) const;

  // Direct construction for deserialization; validates every invariant.
  static Corpus from_parts(std::string text, std::vector<std::size_t> doc_starts,
                           std::vector<std::string> names, SentinelConfig sentinels,
                           std::optional<std::vector<std::uint32_t>> column_of,
                           std::size_t alignment_width);

 private:
  friend Corpus corpus_from_documents(const std::vector<Document>&, SentinelConfig);
  friend Corpus corpus_from_alignment(const Alignment&, SentinelConfig);

  void validate() const;

  std::string text_;
  std::vector<std::size_t> doc_starts_;
  std::vector<std::string> names_;
  SentinelConfig sentinels_;
  std::optional<std::vector<std::uint32_t>> column_of_;
  std::size_t alignment_width_ = 0;
  std::optional<std::vector<std::string>> labels_;
  std::optional<PhyloTree> tree_;
};

// Rows of a gapped multiple alignment, either one row per line or aligned
// FASTA. Blank lines are ignored. Throws FormatError on empty or ragged input.
Alignment parse_msa(std::string_view msa_text, char gap = kDefaultGap);

// Concatenates de-gapped rows. Each row's last non-gap byte must be a
// sentinel and no other byte may be one.
Corpus corpus_from_alignment(const Alignment& alignment, SentinelConfig sentinels = {});

// Appends the separator to every document but the last, which gets the
// terminator. Throws ValidationError if a body contains a sentinel byte.
Corpus corpus_from_documents(const std::vector<Document>& docs, SentinelConfig sentinels = {});

// FASTA records in file order; the header after '>' (up to whitespace) is the name.
std::vector<Document> parse_fasta(std::string_view fasta_text);
// One document per non-empty line, named doc0, doc1, ...
std::vector<Document> parse_lines(std::string_view text);
// `doc_name<TAB>label` per line.
std::vector<std::pair<std::string, std::string>> parse_labels_tsv(std::string_view tsv_text);

// 0-based DFS leaf rank of each document's label in `tree`.
// Throws ValidationError listing every label that is not a leaf name.
std::vector<std::size_t> leaf_ranks(const PhyloTree& tree, const std::vector<std::string>& label_of_doc);

}  // namespace tagix
