#pragma once

#include <array>
#include <utility>
#include <vector>

#include "njcones/dissimilarity.hpp"
#include "njcones/random.hpp"
#include "njcones/tree.hpp"

namespace njcones {

/// Kind of join: two stems, two bouquets, or one of each.
enum class StepClass { Alpha, Beta, Gamma };

/// How minimum ties are resolved. Lexicographic is deterministic; Uniform
/// and Baggage draw from the caller's random stream.
enum class TieBreakPolicy { Lexicographic, Uniform, Baggage };

const char* to_string(StepClass c);
const char* to_string(TieBreakPolicy p);

/// (number of stems, number of bouquets) of the working tree.
struct BoughVector {
  int stems = 0;
  int bouquets = 0;
  friend bool operator==(const BoughVector&, const BoughVector&) = default;
};

/// A vertex adjacent to the central node O during the run.
struct Bough {
  int id;             // leaf index, or n-1+step for created bouquets
  int min_leaf;       // smallest original taxon index carried
  int leaf_size;      // number of taxa carried
  int creation_step;  // 0 for stems
  bool is_bouquet() const { return creation_step > 0; }
};

StepClass classify_step(const Bough& a, const Bough& b);

/// Dissimilarities restricted to the current boughs. Unlike
/// DissimilarityMap this is a working object: reductions may drive entries
/// negative, which is fine downstream.
class WorkingMatrix {
 public:
  explicit WorkingMatrix(const DissimilarityMap& d);
  WorkingMatrix(int k, std::vector<double> upper);

  int size() const { return k_; }
  double at(int i, int j) const {
    if (i == j) return 0.0;
    if (i > j) std::swap(i, j);
    return v_[DissimilarityMap::pair_index(k_, i, j)];
  }

 private:
  int k_;
  std::vector<double> v_;
};

/// Q-criterion values over unordered bough pairs, defined for k >= 4.
struct QMatrix {
  int k = 0;
  std::vector<double> values;
  double at(int i, int j) const {
    if (i > j) std::swap(i, j);
    return values[DissimilarityMap::pair_index(k, i, j)];
  }
};

/// Q(a,b) = (k-2) D(a,b) - sum_c D(a,c) - sum_c D(b,c), the sums running
/// over all k boughs. Throws KTooSmallError for k < 4.
QMatrix q_matrix(const WorkingMatrix& d);

/// Cancellation-free value of the 4-bough Q criterion for the partition
/// {pair, complement}: the negated sum of the four cross entries, evaluated
/// in a canonical order. Both tied pairs of a partition produce the exact
/// same float, which is how the guaranteed last-step tie is asserted without
/// rounding noise.
double q4_partition_value(const WorkingMatrix& d, std::pair<int, int> pair);

/// Drops boughs a and b and appends their join u at the end, with
/// D'(c,u) = (D(a,c) + D(b,c) - D(a,b)) / 2.
WorkingMatrix reduce(const WorkingMatrix& d, int a, int b);

struct Selection {
  std::pair<int, int> chosen;               // slot indices, first < second
  std::vector<std::pair<int, int>> tied;    // the tie group the policy saw
};

/// Selects the joining pair. For k > 4 entries tie when they agree within
/// 1e-12 relative of the minimum; for k = 4 the tie set is built
/// structurally as {argmin pair, complement pair} since the tie is algebraic
/// and float noise must not hide it.
Selection select_pair(const QMatrix& q, const std::vector<Bough>& boughs,
                      TieBreakPolicy policy, RandomStream& rng);

struct JoinEvent {
  int step = 0;  // 1..n-3
  std::pair<int, int> bough_ids;
  StepClass cls = StepClass::Alpha;
  BoughVector before;
};

struct AgglomerationTrace {
  int n = 0;
  std::vector<JoinEvent> events;        // exactly n-3
  std::pair<int, int> final_tie_chosen;  // bough ids joined at the last step
  std::pair<int, int> final_tie_other;   // the complement pair
  bool multiway_tie_seen = false;        // any k > 4 tolerance tie occurred
};

struct NjResult {
  AgglomeratedTree tree;
  AgglomerationTrace trace;
};

/// Both resolutions of the guaranteed last-step tie; `chosen` is what the
/// policy picked, `other` differs only in the final join. The tie pair, not
/// the resolution, identifies the input's cone.
struct NjBothResult {
  AgglomeratedTree chosen;
  AgglomeratedTree other;
  AgglomerationTrace trace;
};

/// Full run from k = n down to k = 4 inclusive (n-3 joins); requires n >= 4.
NjResult run_nj(const DissimilarityMap& d, TieBreakPolicy policy,
                RandomStream& rng);
NjBothResult run_nj_both(const DissimilarityMap& d, TieBreakPolicy policy,
                         RandomStream& rng);

}  // namespace njcones
