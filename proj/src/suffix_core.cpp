#include "tagix/suffix_core.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>

#include "tagix/error.hpp"
#include "tagix/simd/kernels.hpp"

namespace tagix {
namespace {

void check_length(std::size_t n) {
  if (n >= std::numeric_limits<std::uint32_t>::max()) throw ValidationError("text too long for 32-bit index");
}

}  // namespace

std::vector<std::uint32_t> build_suffix_array(std::string_view text) {
  const std::size_t n = text.size();
  check_length(n);
  std::vector<std::uint32_t> sa(n);
  if (n == 0) return sa;

  // rank 0 is reserved for "past the end", so byte b gets rank b + 1.
  std::vector<std::uint32_t> rank(n);
  std::vector<std::uint32_t> next_rank(n);
  std::vector<std::uint32_t> order(n);
  std::vector<std::uint32_t> count(std::max<std::size_t>(257, n + 1));

  for (std::size_t i = 0; i < n; ++i) rank[i] = static_cast<std::uint8_t>(text[i]) + 1u;
  for (std::size_t i = 0; i < n; ++i) ++count[rank[i]];
  std::partial_sum(count.begin(), count.begin() + 257, count.begin());
  for (std::size_t i = n; i-- > 0;) sa[--count[rank[i]]] = static_cast<std::uint32_t>(i);

  // Dense re-rank after the first pass so the count array stays O(n).
  auto rerank = [&](auto&& second_key) {
    next_rank[sa[0]] = 1;
    std::uint32_t classes = 1;
    for (std::size_t i = 1; i < n; ++i) {
      const std::uint32_t a = sa[i - 1];
      const std::uint32_t b = sa[i];
      if (rank[a] != rank[b] || second_key(a) != second_key(b)) ++classes;
      next_rank[b] = classes;
    }
    rank.swap(next_rank);
    return classes;
  };

  std::uint32_t classes = rerank([](std::uint32_t) { return 0u; });
  for (std::size_t k = 1; classes < n; k <<= 1) {
    auto key2 = [&](std::uint32_t i) { return i + k < n ? rank[i + k] : 0u; };
    // Order by second key: suffixes running past the end first, then by the current order.
    std::size_t pos = 0;
    for (std::size_t i = n - std::min(k, n); i < n; ++i) order[pos++] = static_cast<std::uint32_t>(i);
    for (std::size_t i = 0; i < n; ++i) {
      if (sa[i] >= k) order[pos++] = static_cast<std::uint32_t>(sa[i] - k);
    }
    // Stable counting sort by first key.
    std::fill(count.begin(), count.begin() + classes + 1, 0u);
    for (std::size_t i = 0; i < n; ++i) ++count[rank[i]];
    std::partial_sum(count.begin(), count.begin() + classes + 1, count.begin());
    for (std::size_t i = n; i-- > 0;) sa[--count[rank[order[i]]]] = order[i];
    classes = rerank(key2);
  }
  return sa;
}

std::vector<std::uint32_t> build_lcp(std::string_view text, std::span<const std::uint32_t> sa,
                                     std::span<const std::uint32_t> isa) {
  const std::size_t n = text.size();
  std::vector<std::uint32_t> lcp(n, 0);
  const auto* bytes = reinterpret_cast<const std::uint8_t*>(text.data());
  const auto& k = simd::kernels();
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = isa[i];
    if (r == 0) {
      h = 0;
      continue;
    }
    const std::size_t j = sa[r - 1];
    const std::size_t limit = n - std::max(i, j);
    if (h < limit) h += k.common_prefix(bytes + i + h, bytes + j + h, limit - h);
    lcp[r] = static_cast<std::uint32_t>(h);
    if (h > 0) --h;
  }
  return lcp;
}

void SuffixIndex::derive() {
  const std::size_t n = text_.size();
  isa_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) isa_[sa_[i]] = static_cast<std::uint32_t>(i);
  bwt_.resize(n);
  for (std::size_t i = 0; i < n; ++i) bwt_[i] = text_[(sa_[i] + n - 1) % n];
}

SuffixIndex SuffixIndex::build(std::string_view text) {
  if (text.empty()) throw ValidationError("cannot index an empty text");
  SuffixIndex ix;
  ix.text_ = std::string(text);
  ix.sa_ = build_suffix_array(ix.text_);
  ix.derive();
  ix.lcp_ = build_lcp(ix.text_, ix.sa_, ix.isa_);
  return ix;
}

SuffixIndex SuffixIndex::build(const Corpus& corpus) {
  SuffixIndex ix = build(std::string_view(corpus.text()));
  const std::size_t n = ix.size();
  // Walk documents in text order, then scatter through isa.
  ix.da_.assign(n, 0);
  for (std::size_t d = 0; d < corpus.doc_count(); ++d) {
    const auto [b, e] = corpus.doc_range(d);
    for (std::size_t p = b; p < e; ++p) ix.da_[ix.isa_[p]] = static_cast<std::uint32_t>(d);
  }
  return ix;
}

SuffixIndex SuffixIndex::from_arrays(std::string text, std::vector<std::uint32_t> sa, std::vector<std::uint32_t> lcp,
                                     std::vector<std::uint32_t> da) {
  const std::size_t n = text.size();
  check_length(n);
  if (n == 0) throw IntegrityError("empty text");
  if (sa.size() != n || lcp.size() != n || (!da.empty() && da.size() != n)) {
    throw IntegrityError("suffix index array lengths disagree with text length");
  }
  std::vector<bool> seen(n, false);
  for (const auto s : sa) {
    if (s >= n || seen[s]) throw IntegrityError("suffix array is not a permutation");
    seen[s] = true;
  }
  SuffixIndex ix;
  ix.text_ = std::move(text);
  ix.sa_ = std::move(sa);
  ix.lcp_ = std::move(lcp);
  ix.da_ = std::move(da);
  ix.derive();
  return ix;
}

std::vector<std::uint32_t> plcp(const SuffixIndex& index) {
  std::vector<std::uint32_t> out(index.size());
  for (std::size_t i = 0; i < index.size(); ++i) out[index.sa()[i]] = index.lcp()[i];
  return out;
}

std::string invert_bwt(std::string_view bwt, std::size_t primary_row) {
  const std::size_t n = bwt.size();
  if (n == 0) return {};
  if (primary_row >= n) throw IntegrityError("primary row out of range");
  std::array<std::size_t, 257> first{};
  for (const char c : bwt) ++first[static_cast<std::uint8_t>(c) + 1];
  std::partial_sum(first.begin(), first.end(), first.begin());
  // lf[i] = first[c] + occurrences of c in bwt[0..i)
  std::vector<std::uint32_t> lf(n);
  std::array<std::size_t, 256> seen{};
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = static_cast<std::uint8_t>(bwt[i]);
    lf[i] = static_cast<std::uint32_t>(first[c] + seen[c]++);
  }
  std::string text(n, '\0');
  std::size_t row = primary_row;
  for (std::size_t k = n; k-- > 0;) {
    text[k] = bwt[row];
    row = lf[row];
    if (row == primary_row && k != 0) throw IntegrityError("LF cycle shorter than text length");
  }
  if (row != primary_row) throw IntegrityError("LF walk did not return to the primary row");
  return text;
}

std::size_t run_count(std::string_view s) {
  if (s.empty()) return 0;
  std::size_t runs = 1;
  for (std::size_t i = 1; i < s.size(); ++i) runs += s[i] != s[i - 1];
  return runs;
}

}  // namespace tagix
