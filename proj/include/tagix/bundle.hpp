#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tagix/corpus.hpp"
#include "tagix/locality.hpp"
#include "tagix/suffix_core.hpp"
#include "tagix/tag_array.hpp"

namespace tagix {

inline constexpr std::string_view kBundleMagic = "TAGX1";
inline constexpr std::uint8_t kBundleVersion = 1;

// Everything a query needs: the corpus, its suffix structures and named
// run-length tag arrays. Tag arrays named after a label-like scheme may
// carry a code dictionary (code -> display name).
struct IndexBundle {
  Corpus corpus;
  SuffixIndex index;
  std::map<std::string, RunLengthTagArray> tag_arrays;
  std::map<std::string, std::vector<std::string>> tag_codes;
};

// Builds the index and one tag array per scheme, named by scheme_name().
IndexBundle build_bundle(Corpus corpus, const std::vector<TagScheme>& schemes);

// Layout, all integers little-endian:
//   "TAGX1" | version u8 | section count u32
//   per section: name length u32 | name | payload length u64 | payload
// Sections appear in a fixed order (META, TEXT, DOCS, NAMES, then optional
// COLUMNS, LABELS, TREE, then SA, LCP, DA, then TAG:<name> and
// CODES:<name> by ascending name), so equal bundles serialize identically.
std::string serialize_bundle(const IndexBundle& bundle);
// Throws FormatError on malformed bytes, IntegrityError on inconsistent arrays.
IndexBundle deserialize_bundle(std::string_view bytes);

void save_bundle(const IndexBundle& bundle, const std::filesystem::path& path);
IndexBundle load_bundle(const std::filesystem::path& path);

// Reads a whole file; throws std::runtime_error when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

}  // namespace tagix
