#include <doctest.h>

#include <random>

#include "tagix/error.hpp"
#include "tagix/locality.hpp"
#include "tagix/tag_array.hpp"
#include "test_support.hpp"

using namespace tagix;
using tagix::testing::sample_corpus;

namespace {

std::vector<Tag> slice(const std::vector<Tag>& v, std::size_t b, std::size_t e) {
  return std::vector<Tag>(v.begin() + static_cast<std::ptrdiff_t>(b), v.begin() + static_cast<std::ptrdiff_t>(e));
}

}  // namespace

TEST_CASE("ilcp_values") {
  const auto ilcp = ilcp_values(sample_corpus());
  CHECK(slice(ilcp, 0, 9) == std::vector<Tag>{0, 2, 1, 1, 1, 0, 2, 1, 0});
  CHECK(slice(ilcp, 26, 35) == std::vector<Tag>{3, 2, 1, 1, 1, 3, 2, 1, 0});
  CHECK(ilcp_values(corpus_from_documents({Document{0, "x", "AB"}})) == std::vector<Tag>{0, 0, 0});
  CHECK(ilcp == tagix::testing::naive_ilcp(sample_corpus()));
}

TEST_CASE("ilcp predecessor mode") {
  const Corpus c = sample_corpus();
  CHECK(ilcp_values(c, IlcpMode::kPredecessor) == tagix::testing::naive_ilcp(c, true));
}

TEST_CASE("end_lcp_values") {
  const Corpus c = sample_corpus();
  const auto e = end_lcp_values(c);
  CHECK(slice(e, 0, 9) == std::vector<Tag>{5, 4, 3, 6, 5, 4, 3, 2, 1});
  CHECK(e[26] == 8);
  // "AGATA..." at position 9 shares "AGATA" with position 39's truncated suffix.
  CHECK(e[9] == 5);
  CHECK(e == tagix::testing::naive_end_lcp(c));
}

TEST_CASE("assign_tags") {
  const Corpus c = sample_corpus();
  SUBCASE("document") {
    const auto t = assign_tags(c, {SchemeKind::kDocument});
    std::vector<Tag> expected;
    for (const auto [d, len] : std::vector<std::pair<Tag, int>>{{0, 9}, {1, 9}, {2, 8}, {3, 9}, {4, 10}}) {
      expected.insert(expected.end(), static_cast<std::size_t>(len), d);
    }
    CHECK(t == expected);
  }
  SUBCASE("column") {
    CHECK(slice(assign_tags(c, {SchemeKind::kColumn}), 0, 9) == std::vector<Tag>{1, 2, 3, 4, 5, 6, 7, 8, 10});
  }
  SUBCASE("label codes by first appearance") {
    Corpus labeled = c;
    labeled.set_labels({"L1", "L1", "L0", "L1", "L0"});
    const auto t = assign_tags(labeled, {SchemeKind::kLabel});
    CHECK(t[0] == 0);
    CHECK(t[18] == 1);
    CHECK(t[44] == 1);
    CHECK(label_codes(labeled.labels()).names == std::vector<std::string>{"L1", "L0"});
  }
  SUBCASE("leaf rank") {
    Corpus three = corpus_from_documents({Document{0, "a", "GA"}, Document{1, "b", "TT"}, Document{2, "c", "C"}});
    three.set_labels({"A", "B", "C"});
    three.set_tree(PhyloTree::parse_newick("((A,B),C);"));
    CHECK(assign_tags(three, {SchemeKind::kLeafRank}) == std::vector<Tag>{0, 0, 0, 1, 1, 1, 2, 2});
    three.set_tree(PhyloTree::parse_newick("(C,(A,B));"));
    CHECK(assign_tags(three, {SchemeKind::kLeafRank}) == std::vector<Tag>{1, 1, 1, 2, 2, 2, 0, 0});
    three.set_tree(PhyloTree::parse_newick("((b,a),c);"));
    CHECK(assign_tags(three, {SchemeKind::kLeafRank}) == std::vector<Tag>{1, 1, 1, 0, 0, 0, 2, 2});
  }
  SUBCASE("position and plcp") {
    const auto ix = SuffixIndex::build(c);
    const auto pos = assign_tags(c, {SchemeKind::kPosition});
    CHECK(pos[44] == 44);
    const auto p = assign_tags(c, {SchemeKind::kPlcp}, &ix);
    CHECK(slice(p, 0, 9) == std::vector<Tag>{3, 2, 1, 2, 1, 0, 1, 0, 0});
  }
  SUBCASE("missing inputs") {
    const Corpus plain = corpus_from_documents({Document{0, "a", "AC"}});
    CHECK_THROWS_AS(assign_tags(plain, {SchemeKind::kColumn}), ValidationError);
    CHECK_THROWS_AS(assign_tags(plain, {SchemeKind::kLeafRank}), ValidationError);
    CHECK_THROWS_AS(assign_tags(plain, {SchemeKind::kLabel}), ValidationError);
  }
}

TEST_CASE("scheme names round-trip") {
  for (const auto kind : {SchemeKind::kDocument, SchemeKind::kColumn, SchemeKind::kLabel, SchemeKind::kLeafRank,
                          SchemeKind::kEndLcp, SchemeKind::kIlcp, SchemeKind::kPlcp, SchemeKind::kPosition}) {
    CHECK(parse_scheme(scheme_name(kind)) == kind);
  }
  CHECK(parse_scheme("end-lcp") == SchemeKind::kEndLcp);
  CHECK_FALSE(parse_scheme("species").has_value());
}

TEST_CASE("property: ILCP and end-LCP match quadratic oracles") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const Corpus c = tagix::testing::random_corpus(rng, 400);
    const auto ilcp = ilcp_values(c);
    const auto end = end_lcp_values(c);
    REQUIRE(ilcp == tagix::testing::naive_ilcp(c));
    REQUIRE(end == tagix::testing::naive_end_lcp(c));
    CHECK(ilcp_values(c, IlcpMode::kPredecessor) == tagix::testing::naive_ilcp(c, true));
    for (std::size_t p = 0; p < c.size(); ++p) CHECK(ilcp[p] <= end[p]);

    // Final sentinel of each document matches another document's sentinel iff the byte repeats.
    for (std::size_t d = 0; d < c.doc_count(); ++d) {
      const std::size_t last = c.doc_range(d).second - 1;
      std::size_t same = 0;
      for (std::size_t e = 0; e < c.doc_count(); ++e) same += c.text()[c.doc_range(e).second - 1] == c.text()[last];
      CHECK(end[last] == (same > 1 ? 1 : 0));
    }
    const auto doc = assign_tags(c, {SchemeKind::kDocument});
    CHECK(run_stats(doc).run_count == c.doc_count());
  }
}
