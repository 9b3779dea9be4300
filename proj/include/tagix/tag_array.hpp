#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tagix/locality.hpp"
#include "tagix/suffix_core.hpp"

namespace tagix {

// Tags whose magnitude reaches this bound are rejected so every difference
// of two tags fits in a signed 64-bit integer.
inline constexpr Tag kTagLimit = Tag{1} << 62;

enum class TagAttach {
  // values[i] = tags[sa[i]]: the tag of the suffix starting at row i.
  kSuffixStart,
  // values[i] = tags[(sa[i] + n - 1) mod n]: the tag of the BWT character.
  kPrecedingChar,
};

// Tags permuted into BWT order.
struct TagArray {
  std::vector<Tag> values;
};

TagArray to_bwt_order(const SuffixIndex& index, const PositionTags& tags,
                      TagAttach attach = TagAttach::kSuffixStart);

struct Run {
  Tag value;
  std::uint32_t length;

  friend bool operator==(const Run&, const Run&) = default;
};

// Canonical run-length encoding: adjacent runs never share a value. Keeps
// run start offsets for interval lookup.
class RunLengthTagArray {
 public:
  RunLengthTagArray() = default;

  // Throws ValidationError on empty input or out-of-range tags.
  static RunLengthTagArray encode(std::span<const Tag> values);
  // Throws ValidationError if runs are empty, zero-length or not canonical.
  static RunLengthTagArray from_runs(std::vector<Run> runs);

  std::vector<Tag> decode() const;

  std::size_t size() const { return starts_.empty() ? 0 : starts_.back(); }
  std::size_t run_count() const { return runs_.size(); }
  const std::vector<Run>& runs() const { return runs_; }

  // Index of the run covering row i.
  std::size_t run_of(std::size_t i) const;
  Tag at(std::size_t i) const { return runs_[run_of(i)].value; }
  std::size_t run_start(std::size_t r) const { return starts_[r]; }

 private:
  void index_runs();

  std::vector<Run> runs_;
  std::vector<std::size_t> starts_;  // run_count() + 1 entries
};

// Sorted distinct values in rows [lo, hi). Visits only the overlapping runs.
// Throws ValidationError unless lo < hi <= size().
std::vector<Tag> distinct_tags(const RunLengthTagArray& rle, std::size_t lo, std::size_t hi);

struct DiffArray {
  Tag first = 0;
  std::vector<Tag> deltas;  // deltas[i] = values[i + 1] - values[i]
};

DiffArray diff_encode(std::span<const Tag> values);
std::vector<Tag> diff_decode(const DiffArray& diff);

struct RunStats {
  std::size_t n = 0;
  std::size_t run_count = 0;
  std::size_t distinct = 0;
  double mean_abs_delta = 0.0;
  double zero_delta_fraction = 0.0;  // 1 when n < 2
};

// Throws ValidationError on empty input.
RunStats run_stats(std::span<const Tag> values);

// Widens unsigned index arrays (SA, LCP, DA) for the tag-array utilities.
std::vector<Tag> to_tags(std::span<const std::uint32_t> values);

}  // namespace tagix
