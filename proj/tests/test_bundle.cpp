#include <doctest.h>

#include <filesystem>
#include <random>

#include "tagix/bundle.hpp"
#include "tagix/error.hpp"
#include "test_support.hpp"

using namespace tagix;

namespace {

IndexBundle sample_bundle() {
  Corpus c = tagix::testing::sample_corpus();
  c.set_labels({"L0", "L0", "L0", "L1", "L1"});
  c.set_tree(PhyloTree::parse_newick("(L1,L0);"));
  return build_bundle(std::move(c), {{SchemeKind::kDocument}, {SchemeKind::kColumn}, {SchemeKind::kEndLcp},
                                     {SchemeKind::kIlcp}, {SchemeKind::kLabel}, {SchemeKind::kLeafRank}});
}

void check_same(const IndexBundle& a, const IndexBundle& b) {
  CHECK(a.corpus.text() == b.corpus.text());
  CHECK(a.corpus.doc_starts() == b.corpus.doc_starts());
  CHECK(a.corpus.doc_names() == b.corpus.doc_names());
  CHECK(a.corpus.has_columns() == b.corpus.has_columns());
  if (a.corpus.has_columns()) CHECK(a.corpus.column_of() == b.corpus.column_of());
  CHECK(a.index.sa() == b.index.sa());
  CHECK(a.index.lcp() == b.index.lcp());
  CHECK(a.index.da() == b.index.da());
  CHECK(a.index.bwt() == b.index.bwt());
  REQUIRE(a.tag_arrays.size() == b.tag_arrays.size());
  for (const auto& [name, rle] : a.tag_arrays) CHECK(b.tag_arrays.at(name).runs() == rle.runs());
  CHECK(a.tag_codes == b.tag_codes);
}

}  // namespace

TEST_CASE("bundle round trip is byte-identical") {
  const IndexBundle b = sample_bundle();
  const std::string bytes = serialize_bundle(b);
  CHECK(bytes.substr(0, 5) == "TAGX1");
  CHECK(static_cast<unsigned char>(bytes[5]) == kBundleVersion);
  const IndexBundle loaded = deserialize_bundle(bytes);
  check_same(b, loaded);
  CHECK(serialize_bundle(loaded) == bytes);
  CHECK(loaded.corpus.labels() == b.corpus.labels());
  CHECK(loaded.corpus.tree().to_newick() == "(L1,L0);");
  CHECK(loaded.tag_codes.at("label") == std::vector<std::string>{"L0", "L1"});
  CHECK(loaded.tag_codes.at("leaf_rank") == std::vector<std::string>{"L1", "L0"});
}

TEST_CASE("bundle files") {
  const auto path = std::filesystem::temp_directory_path() / "tagix_test_bundle.tagx";
  const IndexBundle b = sample_bundle();
  save_bundle(b, path);
  check_same(b, load_bundle(path));
  std::filesystem::remove(path);
  CHECK_THROWS(load_bundle(path));
}

TEST_CASE("property: random corpora round-trip") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const IndexBundle b = build_bundle(tagix::testing::random_corpus(rng, 300),
                                       {{SchemeKind::kDocument}, {SchemeKind::kPlcp}, {SchemeKind::kIlcp}});
    const std::string bytes = serialize_bundle(b);
    const IndexBundle loaded = deserialize_bundle(bytes);
    check_same(b, loaded);
    CHECK(serialize_bundle(loaded) == bytes);
  }
}

TEST_CASE("malformed bundles") {
  const std::string bytes = serialize_bundle(sample_bundle());
  CHECK_THROWS_AS(deserialize_bundle("TAGX2" + bytes.substr(5)), FormatError);
  CHECK_THROWS_AS(deserialize_bundle(bytes.substr(0, bytes.size() - 3)), FormatError);
  CHECK_THROWS_AS(deserialize_bundle(bytes + "x"), FormatError);
  std::string bad_version = bytes;
  bad_version[5] = 9;
  CHECK_THROWS_AS(deserialize_bundle(bad_version), FormatError);
  // Corrupt the first SA entry so the array stops being a permutation.
  std::string corrupt = bytes;
  const auto sa_pos = corrupt.find(std::string("\x02\x00\x00\x00SA", 6));
  REQUIRE(sa_pos != std::string::npos);
  const std::size_t payload = sa_pos + 6 + 8;
  corrupt[payload] = corrupt[payload + 4];
  corrupt[payload + 1] = corrupt[payload + 5];
  CHECK_THROWS_AS(deserialize_bundle(corrupt), IntegrityError);
}
