#pragma once

#include <string>

#include "njcones/tree.hpp"

namespace njcones {

/// Numeric-aware ordering on taxon names: digit runs compare as integers,
/// everything else bytewise ("9" < "10", "a" < "b").
bool natural_less(const std::string& a, const std::string& b);

/// Canonical ordered Newick. Grammar:
///   tree := "(" item "," item "," item ")"
///   item := leaf | "@" int "(" item "," item ")"
/// where "@r" is the creation-step label of an inner node and leaf is a
/// taxon name over [A-Za-z0-9_.-]. Children of every node are emitted
/// ordered by the smallest taxon name in their subtree.
std::string serialize(const AgglomeratedTree& t);

/// Parses the grammar above. Throws GrammarError (with byte position),
/// LabelError (labels not a permutation of 1..n-3), or OrderError (labels
/// not decreasing away from the top node). Whitespace between tokens is
/// accepted and never emitted.
AgglomeratedTree parse(const std::string& text);

/// Reorders every node's children into the canonical order; idempotent.
AgglomeratedTree canonicalize(const AgglomeratedTree& t);

/// Stable key of the underlying unrooted leaf-labeled topology with the
/// creation labels removed and the top node treated as an anonymous internal
/// node. Two trees get equal keys iff they are the same unrooted tree, so
/// the two resolutions of a final tie always share a key.
std::string strip_order(const AgglomeratedTree& t);

/// Same key computed from a Newick string; "@r" labels are optional here,
/// so plain topology strings like "((d,(a,b)),c,e)" are accepted.
std::string strip_order(const std::string& newick);

/// Canonical text of a single node's subtree ("a" or "@1(a,b)").
std::string subtree_text(const AgglomeratedTree& t, int node_id);

/// Maximum nesting of same-orientation parentheses, the string "length" in
/// the classical sense. Debug accessor only.
int nesting_depth(const std::string& newick);

}  // namespace njcones
