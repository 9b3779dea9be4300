#include "tagix/fm_search.hpp"

#include <algorithm>

#include "tagix/error.hpp"
#include "tagix/simd/kernels.hpp"

namespace tagix {

RankIndex::RankIndex(std::string bwt) : bwt_(std::move(bwt)) {
  std::array<std::size_t, 256> freq{};
  for (const char c : bwt_) ++freq[static_cast<std::uint8_t>(c)];
  first_[0] = 0;
  for (std::size_t c = 0; c < 256; ++c) first_[c + 1] = first_[c] + freq[c];
  slot_.fill(-1);
  for (std::size_t c = 0; c < 256; ++c) {
    if (freq[c] == 0) continue;
    slot_[c] = static_cast<std::int16_t>(symbols_.size());
    symbols_.push_back(static_cast<std::uint8_t>(c));
  }
  const std::size_t sigma = symbols_.size();
  const std::size_t blocks = bwt_.size() / kBlock + 1;
  samples_.assign(blocks * sigma, 0);
  std::vector<std::uint32_t> running(sigma, 0);
  for (std::size_t i = 0; i < bwt_.size(); ++i) {
    if (i % kBlock == 0) std::copy(running.begin(), running.end(), samples_.begin() + (i / kBlock) * sigma);
    ++running[slot_[static_cast<std::uint8_t>(bwt_[i])]];
  }
  if (bwt_.size() % kBlock == 0 && !bwt_.empty()) {
    std::copy(running.begin(), running.end(), samples_.begin() + (bwt_.size() / kBlock) * sigma);
  }
}

std::size_t RankIndex::occ(std::uint8_t c, std::size_t i) const {
  const int slot = slot_[c];
  if (slot < 0) return 0;
  if (i > bwt_.size()) i = bwt_.size();
  const std::size_t block = i / kBlock;
  const std::size_t base = block * kBlock;
  const auto* data = reinterpret_cast<const std::uint8_t*>(bwt_.data()) + base;
  return samples_[block * symbols_.size() + static_cast<std::size_t>(slot)] +
         simd::kernels().count_byte(data, i - base, c);
}

FmIndex::FmIndex(const SuffixIndex& index) : index_(&index), rank_(index.bwt()) {}

Interval FmIndex::backward_extend(Interval iv, std::uint8_t c) const {
  if (iv.empty() || rank_.count(c) == 0) return {};
  const std::size_t base = rank_.first_row(c);
  Interval out{base + rank_.occ(c, iv.lo), base + rank_.occ(c, iv.hi)};
  if (out.empty()) return {};
  return out;
}

Interval FmIndex::backward_search(std::string_view pattern) const {
  Interval iv = full();
  for (std::size_t k = pattern.size(); k-- > 0 && !iv.empty();) {
    iv = backward_extend(iv, static_cast<std::uint8_t>(pattern[k]));
  }
  return iv;
}

std::vector<MemMatch> FmIndex::find_mems(std::string_view pattern, std::size_t min_len) const {
  if (min_len == 0) throw ValidationError("minimum MEM length must be at least 1");
  const std::size_t m = pattern.size();
  std::vector<MemMatch> out;
  if (m == 0) return out;

  // leftmost[j]: smallest i such that pattern[i, j) occurs; intervals[j] its rows.
  std::vector<std::size_t> leftmost(m + 1, 0);
  std::vector<Interval> intervals(m + 1);
  for (std::size_t j = m; j >= 1; --j) {
    Interval iv = full();
    std::size_t i = j;
    while (i > 0) {
      const Interval next = backward_extend(iv, static_cast<std::uint8_t>(pattern[i - 1]));
      if (next.empty()) break;
      iv = next;
      --i;
    }
    leftmost[j] = i;
    intervals[j] = iv;
  }
  for (std::size_t j = 1; j <= m; ++j) {
    const std::size_t i = leftmost[j];
    if (j - i < min_len) continue;
    if (j < m && leftmost[j + 1] <= i) continue;
    out.push_back(MemMatch{i, j, intervals[j]});
  }
  return out;
}

std::vector<std::size_t> FmIndex::locate(Interval iv) const {
  if (iv.hi > size() || iv.lo > iv.hi) throw ValidationError("interval out of range");
  std::vector<std::size_t> out;
  out.reserve(iv.width());
  for (std::size_t r = iv.lo; r < iv.hi; ++r) out.push_back(index_->sa()[r]);
  return out;
}

}  // namespace tagix
