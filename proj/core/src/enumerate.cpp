#include "njcones/enumerate.hpp"

#include <array>
#include <numeric>
#include <vector>

#include "njcones/errors.hpp"
#include "njcones/newick.hpp"
#include "njcones/tree.hpp"

namespace njcones {

std::set<std::string> enumerate_agglomerated_trees(int n, bool allow_large) {
  if (n < 4) throw TooSmallError("enumeration is defined for n >= 4");
  if (n > 8 && !allow_large)
    throw TooLargeError(
        "enumeration above 8 taxa grows like a product of binomials; pass "
        "allow_large to force it");

  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));

  std::set<std::string> out;
  std::vector<std::array<int, 2>> inners(n - 3);
  std::vector<int> boughs(n);
  std::iota(boughs.begin(), boughs.end(), 0);

  auto rec = [&](auto&& self, std::vector<int>& cur, int step) -> void {
    if (cur.size() == 3) {
      AgglomeratedTree tree(labels, inners, {cur[0], cur[1], cur[2]});
      out.insert(serialize(tree));
      return;
    }
    const int k = static_cast<int>(cur.size());
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        inners[step - 1] = {cur[i], cur[j]};
        std::vector<int> next;
        next.reserve(k - 1);
        for (int t = 0; t < k; ++t)
          if (t != i && t != j) next.push_back(cur[t]);
        next.push_back(n - 1 + step);
        self(self, next, step + 1);
      }
  };
  rec(rec, boughs, 1);
  return out;
}

}  // namespace njcones
