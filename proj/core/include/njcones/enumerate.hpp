#pragma once

#include <set>
#include <string>

namespace njcones {

/// Every agglomerated tree on taxa "1".."n" as a canonical ordered Newick
/// string, produced by exhaustively applying all join sequences from the
/// star down to three boughs. This is the brute-force oracle the counting
/// formulas are checked against. Throws TooLargeError for n > 8 unless
/// allow_large is set (the count grows like a product of binomials).
std::set<std::string> enumerate_agglomerated_trees(int n,
                                                   bool allow_large = false);

}  // namespace njcones
