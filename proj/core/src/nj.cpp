#include "njcones/nj.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "njcones/errors.hpp"

namespace njcones {

namespace {
// Two Q entries count as tied when they agree to this relative precision.
// Hand-crafted integer inputs tie exactly; generic float data never trips it.
constexpr double kTieTolerance = 1e-12;
}  // namespace

const char* to_string(StepClass c) {
  switch (c) {
    case StepClass::Alpha: return "alpha";
    case StepClass::Beta: return "beta";
    case StepClass::Gamma: return "gamma";
  }
  return "?";
}

const char* to_string(TieBreakPolicy p) {
  switch (p) {
    case TieBreakPolicy::Lexicographic: return "lex";
    case TieBreakPolicy::Uniform: return "uniform";
    case TieBreakPolicy::Baggage: return "baggage";
  }
  return "?";
}

StepClass classify_step(const Bough& a, const Bough& b) {
  const int bouquets = int(a.is_bouquet()) + int(b.is_bouquet());
  if (bouquets == 0) return StepClass::Alpha;
  if (bouquets == 2) return StepClass::Beta;
  return StepClass::Gamma;
}

WorkingMatrix::WorkingMatrix(const DissimilarityMap& d)
    : k_(d.size()), v_(d.upper()) {}

WorkingMatrix::WorkingMatrix(int k, std::vector<double> upper)
    : k_(k), v_(std::move(upper)) {
  if (v_.size() != static_cast<std::size_t>(k_) * (k_ - 1) / 2)
    throw Error("working matrix entry count does not match size");
}

QMatrix q_matrix(const WorkingMatrix& d) {
  const int k = d.size();
  if (k < 4)
    throw KTooSmallError("the Q-criterion needs at least 4 boughs, got " +
                         std::to_string(k));
  std::vector<double> sums(k, 0.0);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      sums[i] += d.at(i, j);
      sums[j] += d.at(i, j);
    }
  QMatrix q;
  q.k = k;
  q.values.resize(static_cast<std::size_t>(k) * (k - 1) / 2);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      q.values[DissimilarityMap::pair_index(k, i, j)] =
          (k - 2) * d.at(i, j) - sums[i] - sums[j];
  return q;
}

double q4_partition_value(const WorkingMatrix& d, std::pair<int, int> pair) {
  if (d.size() != 4) throw Error("partition form is defined for 4 boughs");
  int a = pair.first, b = pair.second;
  if (a > b) std::swap(a, b);
  if (a < 0 || b > 3 || a == b) throw Error("invalid bough pair");
  std::array<int, 2> side{a, b}, rest{};
  int t = 0;
  for (int i = 0; i < 4; ++i)
    if (i != a && i != b) rest[t++] = i;
  // Canonical evaluation order keyed to the partition, not to which side was
  // asked about: both tied pairs produce the bit-identical float.
  if (rest[0] < side[0]) std::swap(side, rest);
  return -((d.at(side[0], rest[0]) + d.at(side[0], rest[1])) +
           (d.at(side[1], rest[0]) + d.at(side[1], rest[1])));
}

WorkingMatrix reduce(const WorkingMatrix& d, int a, int b) {
  const int k = d.size();
  if (a > b) std::swap(a, b);
  if (a < 0 || b >= k || a == b) throw Error("reduce needs two distinct boughs");
  const int nk = k - 1;
  std::vector<int> keep;
  keep.reserve(nk - 1);
  for (int i = 0; i < k; ++i)
    if (i != a && i != b) keep.push_back(i);
  std::vector<double> v(static_cast<std::size_t>(nk) * (nk - 1) / 2);
  for (int p = 0; p < nk - 1; ++p)
    for (int q = p + 1; q < nk - 1; ++q)
      v[DissimilarityMap::pair_index(nk, p, q)] = d.at(keep[p], keep[q]);
  const double dab = d.at(a, b);
  for (int p = 0; p < nk - 1; ++p)
    v[DissimilarityMap::pair_index(nk, p, nk - 1)] =
        0.5 * (d.at(a, keep[p]) + d.at(b, keep[p]) - dab);
  return WorkingMatrix(nk, std::move(v));
}

namespace {

std::pair<int, int> lexicographic_key(const std::pair<int, int>& slots,
                                      const std::vector<Bough>& boughs) {
  int x = boughs[slots.first].min_leaf;
  int y = boughs[slots.second].min_leaf;
  if (x > y) std::swap(x, y);
  return {x, y};
}

}  // namespace

Selection select_pair(const QMatrix& q, const std::vector<Bough>& boughs,
                      TieBreakPolicy policy, RandomStream& rng) {
  const int k = q.k;
  if (static_cast<int>(boughs.size()) != k)
    throw Error("bough list does not match the Q matrix");

  std::pair<int, int> best{0, 1};
  double best_v = q.at(0, 1);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (q.at(i, j) < best_v) {
        best_v = q.at(i, j);
        best = {i, j};
      }

  std::vector<std::pair<int, int>> tied;
  if (k == 4) {
    // The last-step tie is algebraic; build it structurally so float noise
    // cannot hide it.
    std::pair<int, int> comp{-1, -1};
    for (int i = 0; i < 4; ++i) {
      if (i == best.first || i == best.second) continue;
      (comp.first < 0 ? comp.first : comp.second) = i;
    }
    tied = {best, comp};
  } else {
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        const double v = q.at(i, j);
        if (std::abs(v - best_v) <=
            kTieTolerance * std::max({1.0, std::abs(v), std::abs(best_v)}))
          tied.push_back({i, j});
      }
    if (tied.size() == 1) return {tied[0], std::move(tied)};
  }

  std::pair<int, int> chosen = tied[0];
  switch (policy) {
    case TieBreakPolicy::Lexicographic: {
      for (const auto& p : tied)
        if (lexicographic_key(p, boughs) < lexicographic_key(chosen, boughs))
          chosen = p;
      break;
    }
    case TieBreakPolicy::Uniform: {
      chosen = tied[rng.next_below(static_cast<std::uint32_t>(tied.size()))];
      break;
    }
    case TieBreakPolicy::Baggage: {
      auto size_of = [&](const std::pair<int, int>& p) {
        return boughs[p.first].leaf_size + boughs[p.second].leaf_size;
      };
      int best_size = size_of(tied[0]);
      for (const auto& p : tied) best_size = std::max(best_size, size_of(p));
      std::vector<std::pair<int, int>> heaviest;
      for (const auto& p : tied)
        if (size_of(p) == best_size) heaviest.push_back(p);
      chosen = heaviest.size() == 1
                   ? heaviest[0]
                   : heaviest[rng.next_below(
                         static_cast<std::uint32_t>(heaviest.size()))];
      break;
    }
  }
  return {chosen, std::move(tied)};
}

NjBothResult run_nj_both(const DissimilarityMap& dm, TieBreakPolicy policy,
                         RandomStream& rng) {
  const int n = dm.size();
  if (n < 4)
    throw TooSmallError("neighbor joining needs at least 4 taxa, got " +
                        std::to_string(n));

  std::vector<Bough> boughs;
  boughs.reserve(n);
  for (int i = 0; i < n; ++i) boughs.push_back({i, i, 1, 0});
  WorkingMatrix d(dm);

  AgglomerationTrace trace;
  trace.n = n;
  std::vector<std::array<int, 2>> inners(n - 3);
  std::array<int, 2> other_children{};
  std::array<int, 3> other_top{};

  int step = 0;
  while (static_cast<int>(boughs.size()) > 3) {
    const int k = static_cast<int>(boughs.size());
    const QMatrix q = q_matrix(d);
    const Selection sel = select_pair(q, boughs, policy, rng);
    if (k > 4 && sel.tied.size() > 1) trace.multiway_tie_seen = true;

    const auto [ia, ib] = sel.chosen;
    const Bough a = boughs[ia];
    const Bough b = boughs[ib];
    ++step;

    BoughVector before;
    for (const Bough& bg : boughs)
      (bg.is_bouquet() ? before.bouquets : before.stems)++;
    trace.events.push_back({step, {a.id, b.id}, classify_step(a, b), before});

    const int new_id = n - 1 + step;
    inners[step - 1] = {a.id, b.id};

    if (k == 4) {
      const auto& alt = sel.tied[1] == sel.chosen ? sel.tied[0] : sel.tied[1];
      const Bough& c = boughs[alt.first];
      const Bough& e = boughs[alt.second];
      trace.final_tie_chosen = {a.id, b.id};
      trace.final_tie_other = {c.id, e.id};
      other_children = {c.id, e.id};
      other_top = {new_id, a.id, b.id};
    }

    d = reduce(d, ia, ib);
    boughs.erase(boughs.begin() + ib);
    boughs.erase(boughs.begin() + ia);
    boughs.push_back(
        {new_id, std::min(a.min_leaf, b.min_leaf), a.leaf_size + b.leaf_size,
         step});
  }

  const std::array<int, 3> top{boughs[0].id, boughs[1].id, boughs[2].id};
  AgglomeratedTree chosen(dm.labels(), inners, top);
  auto other_inners = inners;
  other_inners[n - 4] = other_children;
  AgglomeratedTree other(dm.labels(), std::move(other_inners), other_top);
  return {std::move(chosen), std::move(other), std::move(trace)};
}

NjResult run_nj(const DissimilarityMap& d, TieBreakPolicy policy,
                RandomStream& rng) {
  NjBothResult both = run_nj_both(d, policy, rng);
  return {std::move(both.chosen), std::move(both.trace)};
}

}  // namespace njcones
