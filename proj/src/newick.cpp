#include "tagix/newick.hpp"

#include <cctype>
#include <cstdlib>
#include <functional>
#include <unordered_set>

#include "tagix/error.hpp"

namespace tagix {
namespace {

class NewickParser {
 public:
  explicit NewickParser(std::string_view src) : src_(src) {}

  std::vector<PhyloTree::Node> run(std::size_t& root) {
    root = parse_subtree();
    skip_space();
    expect(';');
    skip_space();
    if (pos_ != src_.size()) fail("trailing characters after ';'");
    return std::move(nodes_);
  }

 private:
  std::size_t parse_subtree() {
    skip_space();
    const std::size_t id = nodes_.size();
    nodes_.emplace_back();
    if (peek() == '(') {
      ++pos_;
      while (true) {
        const std::size_t child = parse_subtree();
        nodes_[id].children.push_back(child);
        skip_space();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        expect(')');
        break;
      }
    }
    skip_space();
    nodes_[id].name = parse_name();
    skip_space();
    if (peek() == ':') {
      ++pos_;
      skip_space();
      parse_length();
    }
    if (nodes_[id].children.empty() && nodes_[id].name.empty()) fail("unnamed leaf");
    return id;
  }

  std::string parse_name() {
    const std::size_t start = pos_;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '(' || c == ')' || c == ',' || c == ':' || c == ';' ||
          std::isspace(static_cast<unsigned char>(c))) {
        break;
      }
      ++pos_;
    }
    return std::string(src_.substr(start, pos_ - start));
  }

  void parse_length() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[pos_])) ||
                                  src_[pos_] == '.' || src_[pos_] == '-' || src_[pos_] == '+' ||
                                  src_[pos_] == 'e' || src_[pos_] == 'E')) {
      ++pos_;
    }
    if (start == pos_) fail("expected branch length after ':'");
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw FormatError("newick: " + what + " at offset " + std::to_string(pos_));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::vector<PhyloTree::Node> nodes_;
};

}  // namespace

PhyloTree PhyloTree::parse_newick(std::string_view source) {
  PhyloTree tree;
  NewickParser parser(source);
  tree.nodes_ = parser.run(tree.root_);
  std::unordered_set<std::string> seen;
  for (const auto& name : tree.leaves_in_order()) {
    if (!seen.insert(name).second) throw FormatError("newick: duplicate leaf name '" + name + "'");
  }
  return tree;
}

PhyloTree PhyloTree::balanced(const std::vector<std::string>& leaf_names) {
  if (leaf_names.empty()) throw ValidationError("balanced tree needs at least one leaf");
  PhyloTree tree;
  std::function<std::size_t(std::size_t, std::size_t)> build = [&](std::size_t lo, std::size_t hi) {
    const std::size_t id = tree.nodes_.size();
    tree.nodes_.emplace_back();
    if (hi - lo == 1) {
      tree.nodes_[id].name = leaf_names[lo];
      return id;
    }
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    const std::size_t left = build(lo, mid);
    const std::size_t right = build(mid, hi);
    tree.nodes_[id].children = {left, right};
    return id;
  };
  tree.root_ = build(0, leaf_names.size());
  return tree;
}

std::vector<std::string> PhyloTree::leaves_in_order() const {
  std::vector<std::string> leaves;
  if (nodes_.empty()) return leaves;
  std::vector<std::size_t> stack{root_};
  while (!stack.empty()) {
    const std::size_t id = stack.back();
    stack.pop_back();
    const Node& n = nodes_[id];
    if (n.children.empty()) {
      leaves.push_back(n.name);
      continue;
    }
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) stack.push_back(*it);
  }
  return leaves;
}

std::string PhyloTree::to_newick() const {
  if (nodes_.empty()) return ";";
  std::string out;
  std::function<void(std::size_t)> emit = [&](std::size_t id) {
    const Node& n = nodes_[id];
    if (!n.children.empty()) {
      out += '(';
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i) out += ',';
        emit(n.children[i]);
      }
      out += ')';
    }
    out += n.name;
  };
  emit(root_);
  out += ';';
  return out;
}

}  // namespace tagix
