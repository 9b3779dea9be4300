#include "tagix/corpus.hpp"

#include <algorithm>
#include <unordered_map>

#include "tagix/error.hpp"

namespace tagix {
namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

std::string header_name(std::string_view header) {
  header.remove_prefix(1);
  const auto ws = header.find_first_of(" \t");
  return std::string(header.substr(0, ws));
}

std::string printable(char c) {
  if (c >= 0x20 && c < 0x7f) return std::string(1, c);
  return "\\x" + std::to_string(static_cast<unsigned char>(c));
}

}  // namespace

std::size_t Corpus::doc_of(std::size_t p) const {
  if (p >= text_.size()) throw ValidationError("position " + std::to_string(p) + " out of range");
  const auto it = std::upper_bound(doc_starts_.begin(), doc_starts_.end(), p);
  return static_cast<std::size_t>(it - doc_starts_.begin()) - 1;
}

std::pair<std::size_t, std::size_t> Corpus::doc_range(std::size_t d) const {
  if (d >= doc_starts_.size()) throw ValidationError("document " + std::to_string(d) + " out of range");
  const std::size_t end = d + 1 < doc_starts_.size() ? doc_starts_[d + 1] : text_.size();
  return {doc_starts_[d], end};
}

std::string_view Corpus::doc_text(std::size_t d) const {
  const auto [b, e] = doc_range(d);
  return std::string_view(text_).substr(b, e - b);
}

const std::vector<std::uint32_t>& Corpus::column_of() const {
  if (!column_of_) throw ValidationError("corpus has no alignment columns");
  return *column_of_;
}

const std::vector<std::string>& Corpus::labels() const {
  if (!labels_) throw ValidationError("corpus has no document labels");
  return *labels_;
}

const PhyloTree& Corpus::tree() const {
  if (!tree_) throw ValidationError("corpus has no phylogenetic tree");
  return *tree_;
}

void Corpus::set_labels(std::vector<std::string> labels) {
  if (labels.size() != doc_count()) {
    throw ValidationError("expected " + std::to_string(doc_count()) + " labels, got " +
                          std::to_string(labels.size()));
  }
  labels_ = std::move(labels);
}

void Corpus::set_labels_by_name(const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::unordered_map<std::string, std::string> by_name;
  for (const auto& [name, label] : pairs) {
    if (!by_name.emplace(name, label).second) throw ValidationError("duplicate label entry for '" + name + "'");
  }
  std::vector<std::string> labels;
  std::string missing;
  for (const auto& name : names_) {
    const auto it = by_name.find(name);
    if (it == by_name.end()) {
      missing += (missing.empty() ? "" : ", ") + name;
      continue;
    }
    labels.push_back(it->second);
  }
  if (!missing.empty()) throw ValidationError("documents without a label: " + missing);
  labels_ = std::move(labels);
}

std::vector<std::string> Corpus::alignment_rows(char gap) const {
  const auto& cols = column_of();
  std::vector<std::string> rows;
  rows.reserve(doc_count());
  for (std::size_t d = 0; d < doc_count(); ++d) {
    std::string row(alignment_width_, gap);
    const auto [b, e] = doc_range(d);
    for (std::size_t p = b; p < e; ++p) row[cols[p]] = text_[p];
    rows.push_back(std::move(row));
  }
  return rows;
}

void Corpus::validate() const {
  if (text_.empty()) throw ValidationError("corpus is empty");
  if (doc_starts_.empty() || doc_starts_.front() != 0) throw ValidationError("doc_starts must begin at 0");
  if (names_.size() != doc_starts_.size()) throw ValidationError("document name count mismatch");
  for (std::size_t d = 0; d < doc_count(); ++d) {
    const auto [b, e] = doc_range(d);
    if (b >= e) throw ValidationError("document " + std::to_string(d) + " is empty");
    for (std::size_t p = b; p + 1 < e; ++p) {
      if (sentinels_.is_sentinel(text_[p])) {
        throw ValidationError("sentinel byte inside document " + std::to_string(d) + " at position " +
                              std::to_string(p));
      }
    }
    if (!sentinels_.is_sentinel(text_[e - 1])) {
      throw ValidationError("document " + std::to_string(d) + " does not end in a sentinel");
    }
  }
  if (column_of_) {
    if (column_of_->size() != text_.size()) throw ValidationError("column map length mismatch");
    for (std::size_t d = 0; d < doc_count(); ++d) {
      const auto [b, e] = doc_range(d);
      for (std::size_t p = b; p < e; ++p) {
        if ((*column_of_)[p] >= alignment_width_) throw ValidationError("column index exceeds alignment width");
        if (p > b && (*column_of_)[p] <= (*column_of_)[p - 1]) {
          throw ValidationError("columns must strictly increase within a document");
        }
      }
    }
  }
}

Corpus Corpus::from_parts(std::string text, std::vector<std::size_t> doc_starts, std::vector<std::string> names,
                          SentinelConfig sentinels, std::optional<std::vector<std::uint32_t>> column_of,
                          std::size_t alignment_width) {
  Corpus c;
  c.text_ = std::move(text);
  c.doc_starts_ = std::move(doc_starts);
  c.names_ = std::move(names);
  c.sentinels_ = sentinels;
  c.column_of_ = std::move(column_of);
  c.alignment_width_ = alignment_width;
  if (!std::is_sorted(c.doc_starts_.begin(), c.doc_starts_.end())) {
    throw ValidationError("doc_starts must be ascending");
  }
  if (!c.doc_starts_.empty() && c.doc_starts_.back() >= c.text_.size()) {
    throw ValidationError("doc_starts out of range");
  }
  c.validate();
  return c;
}

Alignment parse_msa(std::string_view msa_text, char gap) {
  Alignment a;
  a.gap = gap;
  const auto lines = split_lines(msa_text);
  const bool fasta = std::any_of(lines.begin(), lines.end(),
                                 [](std::string_view l) { return !l.empty() && l.front() == '>'; });
  if (fasta) {
    for (const auto line : lines) {
      if (line.empty()) continue;
      if (line.front() == '>') {
        a.names.push_back(header_name(line));
        a.rows.emplace_back();
      } else {
        if (a.rows.empty()) throw FormatError("msa: sequence data before first FASTA header");
        a.rows.back().append(line);
      }
    }
  } else {
    for (const auto line : lines) {
      if (line.empty()) continue;
      a.names.push_back("row" + std::to_string(a.rows.size()));
      a.rows.emplace_back(line);
    }
  }
  if (a.rows.empty()) throw FormatError("msa: no rows");
  a.width = a.rows.front().size();
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    if (a.rows[i].size() != a.width) {
      throw FormatError("msa: row " + std::to_string(i) + " has length " + std::to_string(a.rows[i].size()) +
                        ", expected " + std::to_string(a.width));
    }
  }
  if (a.width == 0) throw FormatError("msa: rows are empty");
  return a;
}

Corpus corpus_from_alignment(const Alignment& alignment, SentinelConfig sentinels) {
  if (alignment.rows.empty()) throw FormatError("alignment has no rows");
  Corpus c;
  c.sentinels_ = sentinels;
  c.alignment_width_ = alignment.width;
  std::vector<std::uint32_t> cols;
  for (std::size_t r = 0; r < alignment.rows.size(); ++r) {
    const std::string& row = alignment.rows[r];
    if (row.size() != alignment.width) throw FormatError("alignment row " + std::to_string(r) + " is ragged");
    c.doc_starts_.push_back(c.text_.size());
    c.names_.push_back(r < alignment.names.size() ? alignment.names[r] : "row" + std::to_string(r));
    std::size_t last = std::string::npos;
    for (std::size_t col = 0; col < row.size(); ++col) {
      if (row[col] == alignment.gap) continue;
      if (last != std::string::npos && sentinels.is_sentinel(c.text_.back())) {
        throw FormatError("alignment row " + std::to_string(r) + ": sentinel '" + printable(c.text_.back()) +
                          "' before column " + std::to_string(col));
      }
      c.text_.push_back(row[col]);
      cols.push_back(static_cast<std::uint32_t>(col));
      last = col;
    }
    if (last == std::string::npos) throw FormatError("alignment row " + std::to_string(r) + " is all gaps");
    if (!sentinels.is_sentinel(c.text_.back())) {
      throw FormatError("alignment row " + std::to_string(r) + " does not end in a sentinel");
    }
  }
  c.column_of_ = std::move(cols);
  c.validate();
  return c;
}

Corpus corpus_from_documents(const std::vector<Document>& docs, SentinelConfig sentinels) {
  if (docs.empty()) throw ValidationError("no documents");
  Corpus c;
  c.sentinels_ = sentinels;
  for (std::size_t d = 0; d < docs.size(); ++d) {
    const std::string& body = docs[d].body;
    const auto bad = std::find_if(body.begin(), body.end(), [&](char ch) { return sentinels.is_sentinel(ch); });
    if (bad != body.end()) {
      throw ValidationError("document '" + docs[d].name + "' contains sentinel byte '" + printable(*bad) +
                            "' at offset " + std::to_string(bad - body.begin()));
    }
    c.doc_starts_.push_back(c.text_.size());
    c.names_.push_back(docs[d].name.empty() ? "doc" + std::to_string(d) : docs[d].name);
    c.text_ += body;
    c.text_.push_back(d + 1 == docs.size() ? sentinels.terminator : sentinels.separator);
  }
  c.validate();
  return c;
}

std::vector<Document> parse_fasta(std::string_view fasta_text) {
  std::vector<Document> docs;
  for (const auto line : split_lines(fasta_text)) {
    if (line.empty()) continue;
    if (line.front() == '>') {
      docs.push_back(Document{docs.size(), header_name(line), {}});
    } else {
      if (docs.empty()) throw FormatError("fasta: sequence data before first header");
      docs.back().body.append(line);
    }
  }
  return docs;
}

std::vector<Document> parse_lines(std::string_view text) {
  std::vector<Document> docs;
  for (const auto line : split_lines(text)) {
    if (line.empty()) continue;
    docs.push_back(Document{docs.size(), "doc" + std::to_string(docs.size()), std::string(line)});
  }
  return docs;
}

std::vector<std::pair<std::string, std::string>> parse_labels_tsv(std::string_view tsv_text) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::size_t lineno = 0;
  for (const auto line : split_lines(tsv_text)) {
    ++lineno;
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos || tab == 0 || tab + 1 == line.size()) {
      throw FormatError("labels: line " + std::to_string(lineno) + " is not 'name<TAB>label'");
    }
    pairs.emplace_back(std::string(line.substr(0, tab)), std::string(line.substr(tab + 1)));
  }
  return pairs;
}

std::vector<std::size_t> leaf_ranks(const PhyloTree& tree, const std::vector<std::string>& label_of_doc) {
  std::unordered_map<std::string, std::size_t> rank_of;
  const auto leaves = tree.leaves_in_order();
  for (std::size_t i = 0; i < leaves.size(); ++i) rank_of.emplace(leaves[i], i);
  std::vector<std::size_t> ranks;
  ranks.reserve(label_of_doc.size());
  std::vector<std::string> missing;
  for (const auto& label : label_of_doc) {
    const auto it = rank_of.find(label);
    if (it == rank_of.end()) {
      if (std::find(missing.begin(), missing.end(), label) == missing.end()) missing.push_back(label);
      continue;
    }
    ranks.push_back(it->second);
  }
  if (!missing.empty()) {
    std::string msg = "labels not found among tree leaves:";
    for (const auto& m : missing) msg += " " + m;
    throw ValidationError(msg);
  }
  return ranks;
}

}  // namespace tagix
