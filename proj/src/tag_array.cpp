#include "tagix/tag_array.hpp"

#include <algorithm>
#include <string>

#include "tagix/error.hpp"
#include "tagix/simd/kernels.hpp"

namespace tagix {
namespace {

void check_tag_range(std::span<const Tag> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= kTagLimit || values[i] <= -kTagLimit) {
      throw ValidationError("tag value out of range at index " + std::to_string(i));
    }
  }
}

}  // namespace

TagArray to_bwt_order(const SuffixIndex& index, const PositionTags& tags, TagAttach attach) {
  const std::size_t n = index.size();
  if (tags.size() != n) {
    throw ValidationError("tag count " + std::to_string(tags.size()) + " does not match text length " +
                          std::to_string(n));
  }
  TagArray out;
  out.values.resize(n);
  const auto& sa = index.sa();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t p = attach == TagAttach::kSuffixStart ? sa[i] : (sa[i] + n - 1) % n;
    out.values[i] = tags[p];
  }
  return out;
}

RunLengthTagArray RunLengthTagArray::encode(std::span<const Tag> values) {
  if (values.empty()) throw ValidationError("cannot run-length encode an empty sequence");
  check_tag_range(values);
  RunLengthTagArray rle;
  rle.runs_.reserve(1 + simd::kernels().count_changes(values.data(), values.size()));
  rle.runs_.push_back(Run{values[0], 1});
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] == rle.runs_.back().value) {
      ++rle.runs_.back().length;
    } else {
      rle.runs_.push_back(Run{values[i], 1});
    }
  }
  rle.index_runs();
  return rle;
}

RunLengthTagArray RunLengthTagArray::from_runs(std::vector<Run> runs) {
  if (runs.empty()) throw ValidationError("run list is empty");
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (runs[i].length == 0) throw ValidationError("zero-length run at " + std::to_string(i));
    if (runs[i].value >= kTagLimit || runs[i].value <= -kTagLimit) {
      throw ValidationError("tag value out of range in run " + std::to_string(i));
    }
    if (i > 0 && runs[i].value == runs[i - 1].value) {
      throw ValidationError("adjacent runs share a value at " + std::to_string(i));
    }
  }
  RunLengthTagArray rle;
  rle.runs_ = std::move(runs);
  rle.index_runs();
  return rle;
}

void RunLengthTagArray::index_runs() {
  starts_.assign(runs_.size() + 1, 0);
  for (std::size_t i = 0; i < runs_.size(); ++i) starts_[i + 1] = starts_[i] + runs_[i].length;
}

std::vector<Tag> RunLengthTagArray::decode() const {
  std::vector<Tag> out;
  out.reserve(size());
  for (const auto& run : runs_) out.insert(out.end(), run.length, run.value);
  return out;
}

std::size_t RunLengthTagArray::run_of(std::size_t i) const {
  if (i >= size()) throw ValidationError("row " + std::to_string(i) + " out of range");
  const auto it = std::upper_bound(starts_.begin(), starts_.end(), i);
  return static_cast<std::size_t>(it - starts_.begin()) - 1;
}

std::vector<Tag> distinct_tags(const RunLengthTagArray& rle, std::size_t lo, std::size_t hi) {
  if (lo >= hi || hi > rle.size()) {
    throw ValidationError("interval [" + std::to_string(lo) + ", " + std::to_string(hi) +
                          ") out of range for tag array of length " + std::to_string(rle.size()));
  }
  std::vector<Tag> out;
  const auto& runs = rle.runs();
  for (std::size_t r = rle.run_of(lo), start = rle.run_start(r); start < hi; start += runs[r].length, ++r) {
    out.push_back(runs[r].value);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DiffArray diff_encode(std::span<const Tag> values) {
  if (values.empty()) throw ValidationError("cannot difference-encode an empty sequence");
  check_tag_range(values);
  DiffArray diff;
  diff.first = values[0];
  diff.deltas.resize(values.size() - 1);
  simd::kernels().adjacent_diff(values.data(), values.size(), diff.deltas.data());
  return diff;
}

std::vector<Tag> diff_decode(const DiffArray& diff) {
  std::vector<Tag> out;
  out.reserve(diff.deltas.size() + 1);
  Tag acc = diff.first;
  out.push_back(acc);
  for (const Tag d : diff.deltas) {
    acc = static_cast<Tag>(static_cast<std::uint64_t>(acc) + static_cast<std::uint64_t>(d));
    out.push_back(acc);
  }
  return out;
}

RunStats run_stats(std::span<const Tag> values) {
  if (values.empty()) throw ValidationError("run statistics need a non-empty sequence");
  const auto& k = simd::kernels();
  RunStats s;
  s.n = values.size();
  const std::size_t changes = k.count_changes(values.data(), values.size());
  s.run_count = changes + 1;
  std::vector<Tag> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  s.distinct = static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  if (s.n >= 2) {
    s.mean_abs_delta = static_cast<double>(k.sum_abs_diff(values.data(), values.size())) /
                       static_cast<double>(s.n - 1);
    s.zero_delta_fraction = 1.0 - static_cast<double>(changes) / static_cast<double>(s.n - 1);
  } else {
    s.zero_delta_fraction = 1.0;
  }
  return s;
}

std::vector<Tag> to_tags(std::span<const std::uint32_t> values) {
  return std::vector<Tag>(values.begin(), values.end());
}

}  // namespace tagix
