#include "stacksort/tree_model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "stacksort/error.hpp"
#include "stacksort/perm_core.hpp"

namespace stacksort {

DecreasingTree::DecreasingTree(unsigned r, std::vector<Node> nodes) : r_(r), nodes_(std::move(nodes)) {
  if (r_ == 0) throw InvalidInput("tree arity r must be positive");
  std::vector<int> parents(nodes_.size(), 0);
  std::set<Letter> labels;
  for (const auto& n : nodes_) {
    if (n.child.size() != r_ + 1) throw InvalidInput("each node needs exactly r+1 child slots");
    if (n.label == 0) throw InvalidInput("labels must be positive");
    if (!labels.insert(n.label).second) throw InvalidInput("duplicate label in tree");
    for (auto c : n.child) {
      if (c == kAbsent) continue;
      if (c <= 0 || static_cast<std::size_t>(c) >= nodes_.size()) throw InvalidInput("child index out of range");
      if (++parents[c] > 1) throw InvalidInput("node has two parents");
      if (nodes_[c].label >= n.label) throw InvalidInput("tree is not decreasing");
    }
  }
  for (std::size_t i = 1; i < nodes_.size(); ++i)
    if (parents[i] != 1) throw InvalidInput("node unreachable from root");
}

std::size_t DecreasingTree::child_count() const {
  std::size_t count = 0;
  for (const auto& n : nodes_)
    count += static_cast<std::size_t>(std::count_if(n.child.begin(), n.child.end(), [](auto c) { return c != kAbsent; }));
  return count;
}

DecreasingTree to_tree(WordView w, unsigned r) {
  if (w.empty()) throw InvalidInput("cannot build a tree from the empty word");
  if (!is_r_word(w, r))
    throw InvalidInput("word '" + format_word(w) + "' is not a valid " + std::to_string(r) + "-permutation");

  DecreasingTree t;
  t.r_ = r;
  struct Task {
    std::uint32_t lo, hi;
    std::int32_t parent;
    unsigned slot;
  };
  std::vector<Task> work{{0, static_cast<std::uint32_t>(w.size()), DecreasingTree::kAbsent, 0}};
  while (!work.empty()) {
    Task task = work.back();
    work.pop_back();
    Letter m = *std::max_element(w.begin() + task.lo, w.begin() + task.hi);
    auto id = static_cast<std::int32_t>(t.nodes_.size());
    t.nodes_.push_back({m, std::vector<std::int32_t>(r + 1, DecreasingTree::kAbsent)});
    if (task.parent != DecreasingTree::kAbsent) t.nodes_[task.parent].child[task.slot] = id;

    std::vector<std::pair<std::uint32_t, std::uint32_t>> blocks;
    std::uint32_t start = task.lo;
    for (std::uint32_t i = task.lo; i < task.hi; ++i) {
      if (w[i] == m) {
        blocks.emplace_back(start, i);
        start = i + 1;
      }
    }
    blocks.emplace_back(start, task.hi);
    for (unsigned s = static_cast<unsigned>(blocks.size()); s-- > 0;)
      if (blocks[s].first < blocks[s].second) work.push_back({blocks[s].first, blocks[s].second, id, s});
  }
  return t;
}

Word inorder_read(const DecreasingTree& t) {
  Word out;
  if (t.empty()) return out;
  out.reserve(t.size() * t.r());
  struct Frame {
    std::int32_t node;
    unsigned next;
  };
  std::vector<Frame> stack{{0, 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next > t.r()) {
      stack.pop_back();
      continue;
    }
    unsigned slot = f.next++;
    const auto& node = t.node(static_cast<std::size_t>(f.node));
    if (slot > 0) out.push_back(node.label);
    if (node.child[slot] != DecreasingTree::kAbsent) stack.push_back({node.child[slot], 0});
  }
  return out;
}

Word postorder_read(const DecreasingTree& t) {
  Word out;
  if (t.empty()) return out;
  out.reserve(t.size());
  struct Frame {
    std::int32_t node;
    unsigned next;
  };
  std::vector<Frame> stack{{0, 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& node = t.node(static_cast<std::size_t>(f.node));
    if (f.next > t.r()) {
      out.push_back(node.label);
      stack.pop_back();
      continue;
    }
    unsigned slot = f.next++;
    if (node.child[slot] != DecreasingTree::kAbsent) stack.push_back({node.child[slot], 0});
  }
  return out;
}

DecreasingForest to_forest(const KTuple& t) {
  if (!is_valid_ktuple(t)) throw InvalidInput("invalid k-tuple r-permutation");
  DecreasingForest f;
  f.r = t.r;
  for (const auto& c : t.components)
    if (!c.empty()) f.trees.push_back(to_tree(c, t.r));
  return f;
}

namespace {

void emit_dot_body(std::ostream& os, const DecreasingTree& t) {
  for (const auto& n : t.nodes()) os << "  n" << n.label << " [label=\"" << n.label << "\"];\n";
  for (const auto& n : t.nodes())
    for (std::size_t s = 0; s < n.child.size(); ++s)
      if (n.child[s] != DecreasingTree::kAbsent)
        os << "  n" << n.label << " -> n" << t.node(static_cast<std::size_t>(n.child[s])).label << " [label=\""
           << s + 1 << "\"];\n";
}

}  // namespace

std::string tree_to_dot(const DecreasingTree& t) {
  std::ostringstream os;
  os << "digraph tree {\n";
  emit_dot_body(os, t);
  os << "}\n";
  return os.str();
}

std::string forest_to_dot(const DecreasingForest& f) {
  std::ostringstream os;
  os << "digraph forest {\n";
  for (const auto& t : f.trees) emit_dot_body(os, t);
  os << "}\n";
  return os.str();
}

std::string tree_to_text(const DecreasingTree& t) {
  std::ostringstream os;
  if (t.empty()) return "";
  struct Frame {
    std::int32_t node;
    unsigned depth;
    unsigned slot;
  };
  std::vector<Frame> stack{{0, 0, 0}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    const auto& n = t.node(static_cast<std::size_t>(f.node));
    os << std::string(2 * f.depth, ' ');
    if (f.depth > 0) os << '[' << f.slot << "] ";
    os << n.label << '\n';
    for (std::size_t s = n.child.size(); s-- > 0;)
      if (n.child[s] != DecreasingTree::kAbsent)
        stack.push_back({n.child[s], f.depth + 1, static_cast<unsigned>(s + 1)});
  }
  return os.str();
}

}  // namespace stacksort
