#pragma once

#include <array>
#include <string>
#include <vector>

#include "njcones/dissimilarity.hpp"
#include "njcones/random.hpp"
#include "njcones/tree.hpp"

namespace testutil {

// The two worked-example 5-taxon matrices; both map to the same unrooted
// tree but to different agglomeration orders.
inline njcones::DissimilarityMap example_d() {
  return njcones::validate({{0, 3, 5, 4, 7},
                            {3, 0, 10, 3, 7},
                            {5, 10, 0, 6, 5},
                            {4, 3, 6, 0, 2},
                            {7, 7, 5, 2, 0}},
                           {"a", "b", "c", "d", "e"});
}

inline njcones::DissimilarityMap example_d_prime() {
  return njcones::validate({{0, 2, 4, 1, 9},
                            {2, 0, 10, 3, 8},
                            {4, 10, 0, 6, 5},
                            {1, 3, 6, 0, 7},
                            {9, 8, 5, 7, 0}},
                           {"a", "b", "c", "d", "e"});
}

inline std::vector<std::string> make_names(int n, int style) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    switch (style % 3) {
      case 0: out.push_back(std::to_string(i + 1)); break;
      case 1: out.push_back(std::string(1, static_cast<char>('a' + i))); break;
      default: out.push_back("t" + std::to_string(i + 1)); break;
    }
  }
  return out;
}

// Random agglomerated tree built from a random join sequence.
inline njcones::AgglomeratedTree random_tree(njcones::RandomStream& rng, int n,
                                             int name_style) {
  std::vector<int> boughs(n);
  for (int i = 0; i < n; ++i) boughs[i] = i;
  std::vector<std::array<int, 2>> inners(n - 3);
  for (int step = 1; step <= n - 3; ++step) {
    const int k = static_cast<int>(boughs.size());
    const int i = static_cast<int>(rng.next_below(k));
    int j = static_cast<int>(rng.next_below(k - 1));
    if (j >= i) ++j;
    inners[step - 1] = {boughs[i], boughs[j]};
    std::vector<int> next;
    next.reserve(k - 1);
    for (int t = 0; t < k; ++t)
      if (t != i && t != j) next.push_back(boughs[t]);
    next.push_back(n - 1 + step);
    boughs = std::move(next);
  }
  return njcones::AgglomeratedTree(make_names(n, name_style),
                                   std::move(inners),
                                   {boughs[0], boughs[1], boughs[2]});
}

}  // namespace testutil
