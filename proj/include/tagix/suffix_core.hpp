#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tagix/corpus.hpp"

namespace tagix {

// Suffix array, inverse, BWT, LCP array and document array over a byte text.
//
// Suffixes are ordered as plain strings (a proper prefix sorts first); the
// BWT is read cyclically, bwt[i] = text[(sa[i] + n - 1) mod n]. lcp[0] = 0.
// Texts are limited to fewer than 2^32 - 1 bytes.
class SuffixIndex {
 public:
  SuffixIndex() = default;

  static SuffixIndex build(std::string_view text);
  // Also fills the document array from the corpus boundaries.
  static SuffixIndex build(const Corpus& corpus);
  // Rebuilds derived arrays (isa, bwt) from stored ones and checks them.
  static SuffixIndex from_arrays(std::string text, std::vector<std::uint32_t> sa, std::vector<std::uint32_t> lcp,
                                 std::vector<std::uint32_t> da);

  std::size_t size() const { return text_.size(); }
  const std::string& text() const { return text_; }
  const std::vector<std::uint32_t>& sa() const { return sa_; }
  const std::vector<std::uint32_t>& isa() const { return isa_; }
  const std::string& bwt() const { return bwt_; }
  const std::vector<std::uint32_t>& lcp() const { return lcp_; }
  // Empty when built from a bare text.
  const std::vector<std::uint32_t>& da() const { return da_; }

 private:
  void derive();

  std::string text_;
  std::vector<std::uint32_t> sa_;
  std::vector<std::uint32_t> isa_;
  std::string bwt_;
  std::vector<std::uint32_t> lcp_;
  std::vector<std::uint32_t> da_;
};

// Prefix-doubling construction with counting sorts, O(n log n).
std::vector<std::uint32_t> build_suffix_array(std::string_view text);

// Kasai et al. LCP from the suffix array and its inverse.
std::vector<std::uint32_t> build_lcp(std::string_view text, std::span<const std::uint32_t> sa,
                                     std::span<const std::uint32_t> isa);

// LCP values in text order: plcp[sa[i]] = lcp[i].
std::vector<std::uint32_t> plcp(const SuffixIndex& index);

// Recovers the text from its BWT by LF-mapping, starting at `primary_row`,
// the row of the suffix that starts at text position 0. Throws
// IntegrityError if the LF walk closes before covering every row.
std::string invert_bwt(std::string_view bwt, std::size_t primary_row);

// Number of maximal runs of equal bytes.
std::size_t run_count(std::string_view s);

}  // namespace tagix
