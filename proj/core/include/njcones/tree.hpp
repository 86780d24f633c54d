#pragma once

#include <array>
#include <string>
#include <vector>

namespace njcones {

/// Unrooted binary tree on n leaves whose internal nodes carry the step at
/// which they were created (1..n-3). The distinguished degree-3 node O is
/// kept implicit at the top and never labeled; creation labels strictly
/// decrease along every path from O to a leaf.
///
/// Node ids: 0..n-1 are leaves; the node created at step r has id n-1+r.
class AgglomeratedTree {
 public:
  /// `inner_children[r-1]` holds the two nodes joined at step r; `top` holds
  /// the three nodes adjacent to O. Throws Error on structural defects and
  /// OrderError when creation labels do not decrease away from O.
  AgglomeratedTree(std::vector<std::string> leaf_names,
                   std::vector<std::array<int, 2>> inner_children,
                   std::array<int, 3> top_children);

  int leaf_count() const { return n_; }
  int join_count() const { return static_cast<int>(inners_.size()); }

  bool is_leaf(int id) const { return id < n_; }
  int step_of(int id) const { return id - n_ + 1; }
  int node_id(int step) const { return n_ - 1 + step; }

  const std::string& leaf_name(int id) const { return leaf_names_[id]; }
  const std::vector<std::string>& leaf_names() const { return leaf_names_; }
  const std::array<int, 2>& children(int step) const {
    return inners_[step - 1];
  }
  const std::array<int, 3>& top() const { return top_; }

 private:
  int n_;
  std::vector<std::string> leaf_names_;
  std::vector<std::array<int, 2>> inners_;
  std::array<int, 3> top_;
};

}  // namespace njcones
