#include "njcones/tree.hpp"

#include "njcones/errors.hpp"

namespace njcones {

AgglomeratedTree::AgglomeratedTree(std::vector<std::string> leaf_names,
                                   std::vector<std::array<int, 2>> inner_children,
                                   std::array<int, 3> top_children)
    : n_(static_cast<int>(leaf_names.size())),
      leaf_names_(std::move(leaf_names)),
      inners_(std::move(inner_children)),
      top_(top_children) {
  if (n_ < 3) throw Error("a tree needs at least 3 leaves");
  if (static_cast<int>(inners_.size()) != n_ - 3)
    throw Error("expected " + std::to_string(n_ - 3) + " inner nodes, got " +
                std::to_string(inners_.size()));

  // Every node except the three adjacent to O is a child exactly once.
  const int total = 2 * n_ - 3;
  std::vector<int> uses(total, 0);
  auto touch = [&](int id) {
    if (id < 0 || id >= total)
      throw Error("node id " + std::to_string(id) + " out of range");
    ++uses[id];
  };
  for (int r = 1; r <= n_ - 3; ++r) {
    for (int c : inners_[r - 1]) {
      touch(c);
      if (!is_leaf(c) && step_of(c) >= r)
        throw OrderError("node created at step " + std::to_string(step_of(c)) +
                         " cannot sit below step " + std::to_string(r));
    }
  }
  for (int c : top_) touch(c);
  for (int id = 0; id < total; ++id)
    if (uses[id] != 1)
      throw Error("node " + std::to_string(id) + " appears " +
                  std::to_string(uses[id]) + " times as a child");
}

}  // namespace njcones
