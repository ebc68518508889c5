#pragma once

// Explicit ordered trees, their prefix codes, and text renderings.
//
// Every traversal here is iterative: unary chains with millions of nodes
// must not exhaust the call stack. That includes destruction and copying of
// TreeNode.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "treegen/degree.hpp"
#include "treegen/errors.hpp"
#include "treegen/random.hpp"

namespace treegen {

class TreeNode;
DegreeSequence encode_prefix(const TreeNode& t);
TreeNode decode_prefix(std::span<const Degree> s);

/// Ordered tree node; children.size() == outdegree once fully built.
class TreeNode {
 public:
  Degree outdegree = 0;
  std::vector<TreeNode> children;

  TreeNode() = default;
  explicit TreeNode(Degree degree) : outdegree(degree) {}
  TreeNode(Degree degree, std::vector<TreeNode> kids) : outdegree(degree), children(std::move(kids)) {}

  TreeNode(const TreeNode& other) : TreeNode() { *this = decode_prefix(encode_prefix(other)); }
  TreeNode(TreeNode&&) noexcept = default;
  TreeNode& operator=(const TreeNode& other) {
    if (this != &other) *this = decode_prefix(encode_prefix(other));
    return *this;
  }
  TreeNode& operator=(TreeNode&& other) noexcept {
    if (this != &other) {
      release();
      outdegree = other.outdegree;
      children = std::move(other.children);
    }
    return *this;
  }
  ~TreeNode() { release(); }

  bool is_leaf() const noexcept { return children.empty(); }

  // Preorder determines the tree, so comparing codes is structural equality.
  friend bool operator==(const TreeNode& a, const TreeNode& b) { return encode_prefix(a) == encode_prefix(b); }

 private:
  // Flattens the subtree so each destructor below runs on a childless node.
  void release() noexcept {
    if (children.empty()) return;
    std::vector<TreeNode> pending = std::move(children);
    children.clear();
    while (!pending.empty()) {
      TreeNode node = std::move(pending.back());
      pending.pop_back();
      for (auto& child : node.children) pending.push_back(std::move(child));
      node.children.clear();
    }
  }
};

inline TreeNode decode_prefix(std::span<const Degree> s) {
  if (s.empty()) throw truncated(0);
  std::size_t pos = 0;
  auto open = [&](Degree d) {
    TreeNode node(d);
    // An operator of arity d needs at least d more symbols.
    if (d > s.size() - pos) throw truncated(pos);
    node.children.reserve(static_cast<std::size_t>(d));
    return node;
  };

  ++pos;
  TreeNode root = open(s[0]);
  // Children vectors are reserved up front, so these pointers stay valid.
  std::vector<TreeNode*> pending;
  if (root.outdegree > 0) pending.push_back(&root);
  while (!pending.empty()) {
    TreeNode* parent = pending.back();
    if (parent->children.size() == parent->outdegree) {
      pending.pop_back();
      continue;
    }
    if (pos == s.size()) throw truncated(pos);
    const Degree d = s[pos++];
    parent->children.push_back(open(d));
    if (d > 0) pending.push_back(&parent->children.back());
  }
  if (pos != s.size()) throw trailing_symbols(pos, s.size());
  return root;
}

inline DegreeSequence encode_prefix(const TreeNode& t) {
  DegreeSequence out;
  std::vector<const TreeNode*> stack{&t};
  while (!stack.empty()) {
    const TreeNode* node = stack.back();
    stack.pop_back();
    out.push_back(node->outdegree);
    for (auto it = node->children.rbegin(); it != node->children.rend(); ++it) stack.push_back(&*it);
  }
  return out;
}

inline std::size_t node_count(const TreeNode& t) { return encode_prefix(t).size(); }

namespace detail {

// Walks the tree in preorder, calling enter(node, preorder_id) before the
// children, between(node, child_index) ahead of every child after the first,
// and leave(node) after the last one.
template <typename Enter, typename Between, typename Leave>
void walk(const TreeNode& t, Enter&& enter, Between&& between, Leave&& leave) {
  struct Frame {
    const TreeNode* node;
    std::size_t next_child;
  };
  std::size_t id = 0;
  std::vector<Frame> stack;
  enter(t, id++);
  stack.push_back({&t, 0});
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next_child == top.node->children.size()) {
      leave(*top.node);
      stack.pop_back();
      continue;
    }
    if (top.next_child > 0) between(*top.node, top.next_child);
    const TreeNode& child = top.node->children[top.next_child++];
    enter(child, id++);
    stack.push_back({&child, 0});
  }
}

}  // namespace detail

/// Leaves as "0", internal nodes as "(d c1 ... cd)".
inline std::string to_sexpr(const TreeNode& t) {
  std::string out;
  detail::walk(
      t,
      [&](const TreeNode& n, std::size_t) {
        if (n.is_leaf()) {
          out += std::to_string(n.outdegree);
        } else {
          out += '(';
          out += std::to_string(n.outdegree);
          out += ' ';
        }
      },
      [&](const TreeNode&, std::size_t) { out += ' '; },
      [&](const TreeNode& n) {
        if (!n.is_leaf()) out += ')';
      });
  return out;
}

// Nodes numbered in preorder from 0; node lines first, then edges in the
// order their children were visited.
inline std::string to_dot(const TreeNode& t) {
  std::string nodes;
  std::string edges;
  std::vector<std::size_t> ids;
  detail::walk(
      t,
      [&](const TreeNode& n, std::size_t id) {
        nodes += "  " + std::to_string(id) + " [label=\"" + std::to_string(n.outdegree) + "\"];\n";
        if (!ids.empty()) edges += "  " + std::to_string(ids.back()) + " -> " + std::to_string(id) + ";\n";
        ids.push_back(id);
      },
      [](const TreeNode&, std::size_t) {},
      [&](const TreeNode&) { ids.pop_back(); });
  return "digraph tree {\n" + nodes + edges + "}\n";
}

/// Compact single-line JSON: {"degree":d,"children":[...]}.
inline std::string to_json(const TreeNode& t) {
  std::string out;
  detail::walk(
      t,
      [&](const TreeNode& n, std::size_t) {
        out += "{\"degree\":";
        out += std::to_string(n.outdegree);
        out += ",\"children\":[";
      },
      [&](const TreeNode&, std::size_t) { out += ','; },
      [&](const TreeNode&) { out += "]}"; });
  return out;
}

/// Space-separated preorder degree list, e.g. "3 1 0 2 0 0 0".
inline std::string to_prefix_text(std::span<const Degree> s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(s[i]);
  }
  return out;
}

/// Display symbols per arity.
class OperatorAlphabet {
 public:
  using Symbols = std::map<Degree, std::vector<std::string>>;

  OperatorAlphabet() = default;
  explicit OperatorAlphabet(Symbols symbols) : symbols_(std::move(symbols)) {
    for (const auto& [arity, list] : symbols_)
      if (list.empty()) throw std::invalid_argument("no symbols listed for arity " + std::to_string(arity));
  }

  OperatorAlphabet(std::initializer_list<Symbols::value_type> symbols) : OperatorAlphabet(Symbols(symbols)) {}

  const Symbols& symbols() const noexcept { return symbols_; }
  bool covers(Degree arity) const { return symbols_.contains(arity); }
  const std::vector<std::string>& at(Degree arity) const {
    auto it = symbols_.find(arity);
    if (it == symbols_.end()) throw missing_arity(arity);
    return it->second;
  }

 private:
  Symbols symbols_;
};

enum class ExpressionStyle { prefix, infix };

// Symbols are drawn in preorder, one uniform draw per node. Infix form:
// atoms bare, unary "op(a)", binary "(a op b)", higher arities "op(a, b, c)".
template <BoundedRandom R>
std::string render_expression(const TreeNode& t, const OperatorAlphabet& a, R& r, ExpressionStyle style) {
  const DegreeSequence code = encode_prefix(t);
  for (Degree d : code)
    if (!a.covers(d)) throw missing_arity(d);

  std::vector<const std::string*> chosen;
  chosen.reserve(code.size());
  for (Degree d : code) {
    const auto& options = a.at(d);
    chosen.push_back(&options[static_cast<std::size_t>(r.next_below(options.size()))]);
  }

  std::string out;
  if (style == ExpressionStyle::prefix) {
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      if (i > 0) out += ' ';
      out += *chosen[i];
    }
    return out;
  }

  std::vector<std::size_t> ids;
  detail::walk(
      t,
      [&](const TreeNode& n, std::size_t id) {
        ids.push_back(id);
        const std::string& sym = *chosen[id];
        if (n.outdegree == 0) {
          out += sym;
        } else if (n.outdegree == 2) {
          out += '(';
        } else {
          out += sym;
          out += '(';
        }
      },
      [&](const TreeNode& n, std::size_t) {
        if (n.outdegree == 2) {
          // The parent is the innermost node still open.
          out += ' ';
          out += *chosen[ids.back()];
          out += ' ';
        } else {
          out += ", ";
        }
      },
      [&](const TreeNode& n) {
        if (n.outdegree > 0) out += ')';
        ids.pop_back();
      });
  return out;
}

}  // namespace treegen
