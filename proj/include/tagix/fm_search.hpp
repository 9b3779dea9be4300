#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tagix/suffix_core.hpp"

namespace tagix {

// Half-open range of BWT rows.
struct Interval {
  std::size_t lo = 0;
  std::size_t hi = 0;

  std::size_t width() const { return hi - lo; }
  bool empty() const { return lo >= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// occ(c, i): occurrences of byte c in bwt[0, i). Counts are sampled every
// kBlock rows for the symbols that occur; the remainder inside a block is
// counted with the byte-count kernel.
class RankIndex {
 public:
  static constexpr std::size_t kBlock = 256;

  RankIndex() = default;
  explicit RankIndex(std::string bwt);

  std::size_t size() const { return bwt_.size(); }
  std::size_t occ(std::uint8_t c, std::size_t i) const;
  // Number of BWT bytes smaller than c.
  std::size_t first_row(std::uint8_t c) const { return first_[c]; }
  std::size_t count(std::uint8_t c) const { return first_[c + 1] - first_[c]; }
  std::size_t sigma() const { return symbols_.size(); }

 private:
  std::string bwt_;
  std::array<std::size_t, 257> first_{};
  std::array<std::int16_t, 256> slot_{};  // -1 for absent symbols
  std::vector<std::uint8_t> symbols_;
  std::vector<std::uint32_t> samples_;  // (blocks + 1) x sigma
};

struct MemMatch {
  std::size_t p_start = 0;
  std::size_t p_end = 0;
  Interval interval;

  std::size_t length() const { return p_end - p_start; }
  friend bool operator==(const MemMatch&, const MemMatch&) = default;
};

inline constexpr std::size_t kDefaultMinMemLength = 10;

// Backward search over a SuffixIndex. The index must outlive this object.
class FmIndex {
 public:
  explicit FmIndex(const SuffixIndex& index);

  std::size_t size() const { return rank_.size(); }
  Interval full() const { return {0, size()}; }

  // Interval of c·X given the interval of X. Absent symbols give an empty interval.
  Interval backward_extend(Interval iv, std::uint8_t c) const;
  Interval backward_search(std::string_view pattern) const;

  // All maximal exact matches of length >= min_len, sorted by p_start.
  // For each right end j the leftmost start i with pattern[i, j) in the
  // text is found by backward extension; (i, j) is a MEM when the match
  // ending at j + 1 starts strictly after i.
  std::vector<MemMatch> find_mems(std::string_view pattern, std::size_t min_len = kDefaultMinMemLength) const;

  // Text positions of the suffixes in `iv`, in row order.
  std::vector<std::size_t> locate(Interval iv) const;

  const SuffixIndex& index() const { return *index_; }
  const RankIndex& rank() const { return rank_; }

 private:
  const SuffixIndex* index_;
  RankIndex rank_;
};

}  // namespace tagix
