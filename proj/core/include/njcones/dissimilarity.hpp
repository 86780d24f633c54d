#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace njcones {

/// Symmetric nonnegative map on n taxa with zero diagonal, a point in
/// R^(n choose 2). Only the upper triangle is stored, so symmetry and the
/// zero diagonal cannot be violated by construction. Immutable after
/// construction and safe to share across threads.
class DissimilarityMap {
 public:
  /// `upper` holds the (n choose 2) entries for pairs {i,j}, i<j, in
  /// row-major order. Labels default to "1".."n".
  DissimilarityMap(int n, std::vector<double> upper,
                   std::vector<std::string> labels = {});

  int size() const { return n_; }

  double operator()(int i, int j) const {
    if (i == j) return 0.0;
    if (i > j) std::swap(i, j);
    return entries_[pair_index(n_, i, j)];
  }

  const std::vector<double>& upper() const { return entries_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }

  /// Taxon relabeling: result(i,j) = (*this)(perm[i], perm[j]), labels
  /// carried along.
  DissimilarityMap permuted(const std::vector<int>& perm) const;

  /// Index of pair {i,j}, i<j, in the upper-triangle layout.
  static std::size_t pair_index(int n, int i, int j) {
    return static_cast<std::size_t>(i) * (2 * n - i - 1) / 2 + (j - i - 1);
  }

 private:
  int n_;
  std::vector<double> entries_;
  std::vector<std::string> labels_;
};

/// Checks a full square matrix and turns it into a DissimilarityMap.
/// Throws TooSmallError (n < 3), AsymmetryError (exact comparison, no
/// tolerance), NonzeroDiagonalError, NegativeEntryError.
DissimilarityMap validate(const std::vector<std::vector<double>>& raw,
                          std::vector<std::string> labels = {});

enum class MatrixFormat { Csv, PhylipSquare };

/// CSV: n rows of n comma-separated reals, optional leading header row of
/// taxon names (detected when the first row fails numeric parsing).
/// Phylip-square: first line n, then n lines of "name v1 ... vn".
/// Throws ParseError with line/column; validate() errors propagate.
DissimilarityMap parse_matrix(const std::string& text, MatrixFormat format);

/// CSV serialization with a header row; values are printed with shortest
/// round-trip precision so parse_matrix(serialize_csv(d)) == d bit-exactly.
std::string serialize_csv(const DissimilarityMap& d);

}  // namespace njcones
