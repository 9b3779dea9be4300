#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tagix {

// Rooted ordered tree. Children keep the order in which they appear in the
// Newick source, so the left-to-right leaf order is well defined.
class PhyloTree {
 public:
  struct Node {
    std::string name;
    std::vector<std::size_t> children;
  };

  PhyloTree() = default;

  // Parses the subset: names, parentheses, commas, optional ":length"
  // (ignored), terminating ';'. Whitespace between tokens is skipped.
  // Throws FormatError on malformed input.
  static PhyloTree parse_newick(std::string_view source);

  // Builds a balanced binary tree whose leaves, read left to right, are
  // `leaf_names` in the given order.
  static PhyloTree balanced(const std::vector<std::string>& leaf_names);

  const std::vector<Node>& nodes() const { return nodes_; }
  std::size_t root() const { return root_; }
  bool empty() const { return nodes_.empty(); }

  // Leaf names in depth-first order, children visited in file order.
  std::vector<std::string> leaves_in_order() const;

  // Newick serialization without branch lengths.
  std::string to_newick() const;

 private:
  std::vector<Node> nodes_;
  std::size_t root_ = 0;
};

}  // namespace tagix
