#include "tagix/query.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "tagix/error.hpp"

namespace tagix {

MemTagReport mem_tag_report(const FmIndex& fm, const RunLengthTagArray& tags, std::string_view pattern,
                            std::size_t min_len) {
  if (tags.size() != fm.size()) {
    throw ValidationError("tag array length " + std::to_string(tags.size()) + " does not match index length " +
                          std::to_string(fm.size()));
  }
  MemTagReport report;
  for (const auto& mem : fm.find_mems(pattern, min_len)) {
    report.push_back(MemTags{mem, distinct_tags(tags, mem.interval.lo, mem.interval.hi)});
  }
  return report;
}

Classification classify(const FmIndex& fm, const RunLengthTagArray& tags, std::string_view read_name,
                        std::string_view read, std::size_t min_len) {
  Classification result;
  result.read_name = std::string(read_name);
  for (const auto& entry : mem_tag_report(fm, tags, read, min_len)) {
    for (const Tag t : entry.tags) result.scores[t] += entry.mem.length();
  }
  // std::map iterates in ascending tag order, so strict '>' keeps the smallest tag on ties.
  for (const auto& [tag, score] : result.scores) {
    if (!result.verdict || score > result.score) {
      result.verdict = tag;
      result.score = score;
    }
  }
  return result;
}

std::vector<Classification> classify_batch(const FmIndex& fm, const RunLengthTagArray& tags,
                                           const std::vector<Read>& reads, std::size_t min_len,
                                           unsigned threads) {
  std::vector<Classification> out(reads.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(reads.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < reads.size(); ++i) out[i] = classify(fm, tags, reads[i].name, reads[i].sequence, min_len);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    try {
      for (std::size_t i = next++; i < reads.size() && !failed; i = next++) {
        out[i] = classify(fm, tags, reads[i].name, reads[i].sequence, min_len);
      }
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace tagix
