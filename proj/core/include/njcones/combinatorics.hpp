#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "njcones/nj.hpp"

namespace njcones {

/// Counts are exact; the agglomerated-tree count for 20 taxa already
/// overflows 64 bits.
using BigInt = boost::multiprecision::cpp_int;

/// Standard binomial coefficient, 0 outside 0 <= k <= n.
BigInt binomial(int n, int k);

/// C(x, 2) as the polynomial x(x-1)/2, defined for every integer x. The
/// step-weight formulas need this form: inside their index range the stem
/// count n-s-j-2 can dip below zero on cells the triangle never populates,
/// and the weight-sum identity only holds polynomially there.
BigInt choose2(long long x);

BigInt catalan(int k);

/// (2n-5)!!, the number of unrooted binary leaf-labeled trees on n taxa.
BigInt count_unrooted_trees(int n);

/// M[k][j] counts lattice paths of k steps from the origin over
/// u=(1,1), d=(1,-1), h=(1,0) that stay at height >= 0 and end at height j.
struct MotzkinTriangle {
  int kmax = 0;
  std::vector<std::vector<BigInt>> rows;  // rows[k][j], 0 <= j <= k

  const BigInt& at(int k, int j) const;  // 0 outside the triangle
};

/// Recursion M[0][0] = 1, M[k+1][j] = M[k][j-1] + M[k][j] + M[k][j+1].
MotzkinTriangle motzkin_triangle(int kmax);

/// Closed form
///   M[k][j] = sum_i C(k,i) * [ C(k-i, (k+j-i)/2) - C(k-i, (k+j-i+2)/2) ],
/// binomials with a fractional bottom parameter counting as 0.
BigInt motzkin_closed_form(int k, int j);

struct MotzkinCatalanReport {
  int kmax = 0;
  bool motzkin_from_catalan = false;  // M_k  = sum_i C(k,2i) C_i
  bool catalan_from_motzkin = false;  // C_{k+1} = sum_i C(k,i) M_i
  bool ok() const { return motzkin_from_catalan && catalan_from_motzkin; }
};

MotzkinCatalanReport motzkin_catalan_checks(int kmax);

/// Multiplicities for the weighted triangle of an n-taxon run, indexed by
/// row s (steps after the forced first join) and height j: a weights up
/// steps (join of two stems, C(l,2) choices with l = n-s-j-2 stems), b down
/// steps (two bouquets, C(j+1,2)), c horizontal steps (stem with bouquet,
/// l*(j+1)). Zero outside 0 <= s <= n-4, 0 <= j <= s.
struct StepWeights {
  BigInt a;  // up
  BigInt b;  // down
  BigInt c;  // horizontal
};

StepWeights nj_weights(int n, int s, int j);

/// Number of agglomerated trees on n taxa:
/// C(n,2) C(n-1,2) ... C(4,2) = n ((n-1)!)^2 / (3 2^(n-1)); both forms are
/// computed and cross-checked.
BigInt phi(int n);

/// The same number via the weighted triangle seeded with M[0][0] = C(n,2):
/// returns M[n-4][0] + M[n-4][1] + M[n-4][2].
BigInt phi_via_weighted_triangle(int n);

/// Weighted triangle rows themselves, for identity checks.
std::vector<std::vector<BigInt>> weighted_triangle_rows(int n);

/// Lattice path of the n-4 joins after the forced first one, starting at
/// (n-2, 1) with displacements alpha = (-2,1), beta = (0,-1),
/// gamma = (-1,0), never crossing y = 1, ending at (2,1), (1,2) or (0,3).
struct NjPath {
  int n = 0;
  std::vector<StepClass> steps;  // length n-4
};

enum class MotzkinStep { Up, Down, Horizontal };

/// Partial Motzkin path from (1,1) staying at height >= 1, ending at height
/// 1, 2 or 3.
struct MotzkinPath {
  std::vector<MotzkinStep> steps;
};

/// Throws InvalidPathError when the steps leave the admissible region.
void check_path(const NjPath& p);
void check_path(const MotzkinPath& p);

/// Extracts the path from a trace, dropping the forced first join. Throws
/// MalformedTraceError when the recorded bough vectors and classes do not
/// chain, the first event is not a stem-stem join, or a step is infeasible
/// for its bough vector.
NjPath nj_path(const AgglomerationTrace& trace);

/// Stepwise bijection alpha -> u, beta -> d, gamma -> h (the mapping matrix
/// is an involution). Both directions validate their output.
MotzkinPath nj_to_motzkin(const NjPath& p);
NjPath motzkin_to_nj(const MotzkinPath& q, int n);

/// Number of admissible paths, M[n-3][1] in the plain triangle.
BigInt count_nj_paths(int n);

/// All admissible paths by depth-first search.
std::vector<NjPath> enumerate_nj_paths(int n);

/// Class of each join 1..n-3 read back off a finished tree (a child that is
/// an inner node was a bouquet when joined).
std::vector<StepClass> step_classes(const AgglomeratedTree& t);

/// "aag" / "uuh" words; "-" for the empty path.
std::string path_word(const NjPath& p);
std::string motzkin_word(const MotzkinPath& p);

}  // namespace njcones
