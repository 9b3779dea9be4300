#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tagix/fm_search.hpp"
#include "tagix/tag_array.hpp"

namespace tagix {

struct MemTags {
  MemMatch mem;
  std::vector<Tag> tags;  // sorted, distinct
};

using MemTagReport = std::vector<MemTags>;

// One entry per MEM of `pattern`, with the distinct tags of its BWT interval.
// Throws ValidationError if the tag array and index lengths differ.
MemTagReport mem_tag_report(const FmIndex& fm, const RunLengthTagArray& tags, std::string_view pattern,
                            std::size_t min_len = kDefaultMinMemLength);

struct Classification {
  std::string read_name;
  std::optional<Tag> verdict;  // nullopt: unclassified
  std::size_t score = 0;       // score of the verdict
  std::map<Tag, std::size_t> scores;
};

// Scores each tag by the summed length of MEMs whose interval carries it;
// the verdict is the highest-scoring tag, smallest tag on ties.
Classification classify(const FmIndex& fm, const RunLengthTagArray& tags, std::string_view read_name,
                        std::string_view read, std::size_t min_len = kDefaultMinMemLength);

struct Read {
  std::string name;
  std::string sequence;
};

// Classifies reads on up to `threads` workers; results keep input order.
std::vector<Classification> classify_batch(const FmIndex& fm, const RunLengthTagArray& tags,
                                           const std::vector<Read>& reads, std::size_t min_len,
                                           unsigned threads = 1);

}  // namespace tagix
