#include "njcones/newick.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "njcones/errors.hpp"

namespace njcones {

bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  auto digit = [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  };
  while (i < a.size() && j < b.size()) {
    if (digit(a[i]) && digit(b[j])) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && digit(a[ie])) ++ie;
      while (je < b.size() && digit(b[je])) ++je;
      std::size_t ia = i, jb = j;
      while (ia + 1 < ie && a[ia] == '0') ++ia;
      while (jb + 1 < je && b[jb] == '0') ++jb;
      const std::size_t la = ie - ia, lb = je - jb;
      if (la != lb) return la < lb;
      const int c = a.compare(ia, la, b, jb, lb);
      if (c != 0) return c < 0;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return (a.size() - i) < (b.size() - j);
}

namespace {

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' ||
         c == '-';
}

// Smallest taxon name under each node, computable in step order because a
// child's creation step is always smaller than its parent's.
std::vector<const std::string*> min_names(const AgglomeratedTree& t) {
  const int n = t.leaf_count();
  std::vector<const std::string*> mins(2 * n - 3, nullptr);
  for (int i = 0; i < n; ++i) mins[i] = &t.leaf_name(i);
  for (int r = 1; r <= t.join_count(); ++r) {
    const auto& c = t.children(r);
    mins[t.node_id(r)] = natural_less(*mins[c[0]], *mins[c[1]])
                             ? mins[c[0]]
                             : mins[c[1]];
  }
  return mins;
}

void render(const AgglomeratedTree& t, int id,
            const std::vector<const std::string*>& mins, std::string& out) {
  if (t.is_leaf(id)) {
    out += t.leaf_name(id);
    return;
  }
  const int step = t.step_of(id);
  auto c = t.children(step);
  if (natural_less(*mins[c[1]], *mins[c[0]])) std::swap(c[0], c[1]);
  out += '@';
  out += std::to_string(step);
  out += '(';
  render(t, c[0], mins, out);
  out += ',';
  render(t, c[1], mins, out);
  out += ')';
}

}  // namespace

std::string serialize(const AgglomeratedTree& t) {
  const auto mins = min_names(t);
  std::array<int, 3> top = t.top();
  std::sort(top.begin(), top.end(), [&](int x, int y) {
    return natural_less(*mins[x], *mins[y]);
  });
  std::string out;
  out += '(';
  render(t, top[0], mins, out);
  out += ',';
  render(t, top[1], mins, out);
  out += ',';
  render(t, top[2], mins, out);
  out += ')';
  return out;
}

std::string subtree_text(const AgglomeratedTree& t, int node_id) {
  const auto mins = min_names(t);
  std::string out;
  render(t, node_id, mins, out);
  return out;
}

AgglomeratedTree canonicalize(const AgglomeratedTree& t) {
  const auto mins = min_names(t);
  std::vector<std::array<int, 2>> inners;
  inners.reserve(t.join_count());
  for (int r = 1; r <= t.join_count(); ++r) {
    auto c = t.children(r);
    if (natural_less(*mins[c[1]], *mins[c[0]])) std::swap(c[0], c[1]);
    inners.push_back(c);
  }
  std::array<int, 3> top = t.top();
  std::sort(top.begin(), top.end(), [&](int x, int y) {
    return natural_less(*mins[x], *mins[y]);
  });
  return AgglomeratedTree(t.leaf_names(), std::move(inners), top);
}

namespace {

// Parse tree before ids are assigned.
struct RawNode {
  int label = 0;        // creation step; 0 on leaves and unlabeled inners
  std::string name;     // leaves only
  int child[2] = {-1, -1};
  std::size_t pos = 0;  // byte offset, for diagnostics
  bool leaf() const { return child[0] < 0; }
};

struct RawTree {
  std::vector<RawNode> nodes;
  std::array<int, 3> top{-1, -1, -1};
};

class Parser {
 public:
  Parser(const std::string& text, bool require_labels)
      : text_(text), require_labels_(require_labels) {}

  RawTree run() {
    skip_ws();
    expect('(', "expected '('");
    tree_.top[0] = item();
    expect(',', "expected ','");
    tree_.top[1] = item();
    expect(',', "expected ',' (a tree has exactly 3 top-level items)");
    tree_.top[2] = item();
    expect(')', "expected ')' (a tree has exactly 3 top-level items)");
    skip_ws();
    if (pos_ < text_.size())
      throw GrammarError("trailing characters after the tree", pos_);
    return std::move(tree_);
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c, const char* msg) {
    if (peek() != c) throw GrammarError(msg, pos_);
    ++pos_;
  }

  int item() {
    const char c = peek();
    if (c == '@' || c == '(') {
      RawNode node;
      node.pos = pos_;
      if (c == '@') {
        ++pos_;
        node.label = parse_label();
      } else if (require_labels_) {
        throw GrammarError("inner node is missing its '@' order label", pos_);
      }
      expect('(', "expected '(' after order label");
      const int a = item();
      expect(',', "expected ','");
      const int b = item();
      expect(')', "expected ')' (inner nodes are binary)");
      node.child[0] = a;
      node.child[1] = b;
      tree_.nodes.push_back(node);
      return static_cast<int>(tree_.nodes.size()) - 1;
    }
    return leaf();
  }

  int parse_label() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start)
      throw GrammarError("expected digits after '@'", start);
    int value = 0;
    for (std::size_t i = start; i < pos_; ++i) {
      value = value * 10 + (text_[i] - '0');
      if (value > 1'000'000)
        throw GrammarError("order label out of range", start);
    }
    return value;
  }

  int leaf() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && name_char(text_[pos_])) ++pos_;
    if (pos_ == start)
      throw GrammarError("expected a taxon name or a subtree", pos_);
    RawNode node;
    node.pos = start;
    node.name = text_.substr(start, pos_ - start);
    tree_.nodes.push_back(node);
    return static_cast<int>(tree_.nodes.size()) - 1;
  }

  const std::string& text_;
  bool require_labels_;
  std::size_t pos_ = 0;
  RawTree tree_;
};

}  // namespace

AgglomeratedTree parse(const std::string& text) {
  RawTree raw = Parser(text, /*require_labels=*/true).run();

  std::vector<std::string> leaf_names;
  std::map<std::string, int> leaf_id;
  std::vector<int> node_to_id(raw.nodes.size(), -1);
  int inner_count = 0;

  // Leaves get ids in order of appearance; raw nodes are stored child-first,
  // so walking the top items in order visits names left to right.
  std::vector<int> order;
  auto walk = [&](auto&& self, int idx) -> void {
    const RawNode& node = raw.nodes[idx];
    if (node.leaf()) {
      order.push_back(idx);
      return;
    }
    ++inner_count;
    self(self, node.child[0]);
    self(self, node.child[1]);
  };
  for (int t : raw.top) walk(walk, t);

  for (int idx : order) {
    const RawNode& node = raw.nodes[idx];
    auto [it, fresh] = leaf_id.emplace(node.name,
                                       static_cast<int>(leaf_names.size()));
    if (!fresh)
      throw GrammarError("duplicate taxon name '" + node.name + "'", node.pos);
    leaf_names.push_back(node.name);
    node_to_id[idx] = it->second;
  }

  const int n = static_cast<int>(leaf_names.size());
  std::vector<bool> label_seen(inner_count + 1, false);
  for (const RawNode& node : raw.nodes) {
    if (node.leaf()) continue;
    if (node.label < 1 || node.label > inner_count)
      throw LabelError("order label " + std::to_string(node.label) +
                       " outside 1.." + std::to_string(inner_count));
    if (label_seen[node.label])
      throw LabelError("order label " + std::to_string(node.label) +
                       " appears twice");
    label_seen[node.label] = true;
  }

  std::vector<std::array<int, 2>> inners(inner_count);
  for (std::size_t idx = 0; idx < raw.nodes.size(); ++idx) {
    const RawNode& node = raw.nodes[idx];
    if (node.leaf()) continue;
    node_to_id[idx] = n - 1 + node.label;
  }
  for (std::size_t idx = 0; idx < raw.nodes.size(); ++idx) {
    const RawNode& node = raw.nodes[idx];
    if (node.leaf()) continue;
    inners[node.label - 1] = {node_to_id[node.child[0]],
                              node_to_id[node.child[1]]};
  }
  const std::array<int, 3> top{node_to_id[raw.top[0]], node_to_id[raw.top[1]],
                               node_to_id[raw.top[2]]};
  return AgglomeratedTree(std::move(leaf_names), std::move(inners), top);
}

namespace {

// Canonical key of an unrooted leaf-labeled tree given by adjacency: root at
// the smallest-named leaf and list children everywhere ordered by the
// smallest name in their subtree.
struct KeyPart {
  std::string text;
  const std::string* min_name;
};

KeyPart key_rec(int v, int from, const std::vector<std::vector<int>>& adj,
                const std::vector<std::string>& names) {
  if (!names[v].empty()) return {names[v], &names[v]};
  std::vector<KeyPart> parts;
  for (int w : adj[v])
    if (w != from) parts.push_back(key_rec(w, v, adj, names));
  std::sort(parts.begin(), parts.end(), [](const KeyPart& a, const KeyPart& b) {
    return natural_less(*a.min_name, *b.min_name);
  });
  std::string text = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) text += ',';
    text += parts[i].text;
  }
  text += ')';
  return {std::move(text), parts[0].min_name};
}

std::string unrooted_key(const std::vector<std::vector<int>>& adj,
                         const std::vector<std::string>& names) {
  int root = -1;
  for (std::size_t v = 0; v < names.size(); ++v) {
    if (names[v].empty()) continue;
    if (root < 0 || natural_less(names[v], names[root])) root = static_cast<int>(v);
  }
  const int neighbor = adj[root][0];
  return "(" + names[root] + "," + key_rec(neighbor, root, adj, names).text +
         ")";
}

}  // namespace

std::string strip_order(const AgglomeratedTree& t) {
  const int n = t.leaf_count();
  const int total = 2 * n - 2;  // leaves, inner nodes, and O
  const int o_id = total - 1;
  std::vector<std::vector<int>> adj(total);
  std::vector<std::string> names(total);
  for (int i = 0; i < n; ++i) names[i] = t.leaf_name(i);
  auto link = [&](int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (int r = 1; r <= t.join_count(); ++r)
    for (int c : t.children(r)) link(t.node_id(r), c);
  for (int c : t.top()) link(o_id, c);
  return unrooted_key(adj, names);
}

std::string strip_order(const std::string& newick) {
  RawTree raw = Parser(newick, /*require_labels=*/false).run();
  const int total = static_cast<int>(raw.nodes.size()) + 1;
  const int o_id = total - 1;
  std::vector<std::vector<int>> adj(total);
  std::vector<std::string> names(total);
  for (std::size_t idx = 0; idx < raw.nodes.size(); ++idx) {
    const RawNode& node = raw.nodes[idx];
    if (node.leaf()) {
      names[idx] = node.name;
    } else {
      for (int c : node.child) {
        adj[idx].push_back(c);
        adj[c].push_back(static_cast<int>(idx));
      }
    }
  }
  int leaves = 0;
  for (const RawNode& node : raw.nodes) leaves += node.leaf();
  std::map<std::string, int> distinct;
  for (std::size_t idx = 0; idx < raw.nodes.size(); ++idx)
    if (raw.nodes[idx].leaf()) distinct.emplace(names[idx], 1);
  if (static_cast<int>(distinct.size()) != leaves)
    throw GrammarError("duplicate taxon name", 0);
  for (int t : raw.top) {
    adj[o_id].push_back(t);
    adj[t].push_back(o_id);
  }
  return unrooted_key(adj, names);
}

int nesting_depth(const std::string& newick) {
  // On balanced strings the ')' nesting equals the '(' nesting, so one
  // left-to-right pass suffices.
  int depth = 0, deepest = 0;
  for (char c : newick) {
    if (c == '(')
      deepest = std::max(deepest, ++depth);
    else if (c == ')')
      --depth;
  }
  return deepest;
}

}  // namespace njcones
