#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stacksort/word.hpp"

namespace stacksort {

/// (r+1)-ary decreasing tree stored as a node arena. Node 0 is the root.
/// Each node has exactly r+1 child slots; slot i (0-based) is occupied iff
/// the node's label is a type-i descent of the corresponding r-permutation.
class DecreasingTree {
 public:
  static constexpr std::int32_t kAbsent = -1;

  struct Node {
    Letter label = 0;
    std::vector<std::int32_t> child;  // size r+1, kAbsent for empty slots
  };

  DecreasingTree() = default;

  /// Builds from an explicit arena (root at index 0). Throws InvalidInput if
  /// the slots are malformed, a node is unreachable or shared, labels repeat,
  /// or a child is not smaller than its parent.
  DecreasingTree(unsigned r, std::vector<Node> nodes);

  unsigned r() const { return r_; }
  bool empty() const { return nodes_.empty(); }
  std::size_t size() const { return nodes_.size(); }
  const Node& node(std::size_t i) const { return nodes_[i]; }
  const std::vector<Node>& nodes() const { return nodes_; }

  /// Occupied child slots over the whole tree.
  std::size_t child_count() const;

 private:
  friend DecreasingTree to_tree(WordView w, unsigned r);
  unsigned r_ = 1;
  std::vector<Node> nodes_;
};

/// Root = maximum; the i-th child is the tree of the i-th block between
/// copies of the maximum. Throws InvalidInput on an empty or invalid word.
DecreasingTree to_tree(WordView w, unsigned r);

/// Child 1, root, child 2, root, ..., root, child r+1.
Word inorder_read(const DecreasingTree& t);

/// Children in slot order, then the root once.
Word postorder_read(const DecreasingTree& t);

struct DecreasingForest {
  unsigned r = 1;
  std::vector<DecreasingTree> trees;  // order is significant
};

/// One tree per component; empty components are skipped.
DecreasingForest to_forest(const KTuple& t);

/// DOT digraph; edges carry the 1-based slot index.
std::string tree_to_dot(const DecreasingTree& t);
std::string forest_to_dot(const DecreasingForest& f);

/// Indented text rendering, one node per line: "[slot] label".
std::string tree_to_text(const DecreasingTree& t);

}  // namespace stacksort
