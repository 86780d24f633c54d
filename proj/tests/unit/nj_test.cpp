#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "helpers.hpp"
#include "njcones/combinatorics.hpp"
#include "njcones/errors.hpp"
#include "njcones/newick.hpp"
#include "njcones/nj.hpp"
#include "njcones/sampling.hpp"

using namespace njcones;

namespace {

WorkingMatrix all_ones(int k) {
  std::vector<double> v(static_cast<std::size_t>(k) * (k - 1) / 2, 1.0);
  return WorkingMatrix(k, std::move(v));
}

std::vector<Bough> stem_boughs(int k) {
  std::vector<Bough> out;
  for (int i = 0; i < k; ++i) out.push_back({i, i, 1, 0});
  return out;
}

}  // namespace

TEST_CASE("q matrix on the fully symmetric 4-bough input") {
  const QMatrix q = q_matrix(all_ones(4));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) CHECK_EQ(q.at(i, j), -4.0);
}

TEST_CASE("q matrix rejects fewer than 4 boughs") {
  CHECK_THROWS_AS(q_matrix(all_ones(3)), KTooSmallError);
}

TEST_CASE("worked example: first join minimizes Q at {a,b}") {
  const WorkingMatrix d(testutil::example_d());
  const QMatrix q = q_matrix(d);
  double best = q.at(0, 1);
  std::pair<int, int> arg{0, 1};
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (q.at(i, j) < best) {
        best = q.at(i, j);
        arg = {i, j};
      }
  CHECK_EQ(arg, std::pair<int, int>{0, 1});
  CHECK_EQ(best, -33.0);
}

TEST_CASE("q matrix agrees with a naive evaluation") {
  RandomStream rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const DissimilarityMap dm = sample_uniform(6, rng);
    const WorkingMatrix d(dm);
    const QMatrix q = q_matrix(d);
    const int k = 6;
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) {
        double sum_a = 0.0, sum_b = 0.0;
        for (int c = 0; c < k; ++c) {
          sum_a += d.at(a, c);
          sum_b += d.at(b, c);
        }
        const double naive = (k - 2) * d.at(a, b) - sum_a - sum_b;
        CHECK_LE(std::abs(q.at(a, b) - naive),
                 1e-12 * std::max(1.0, std::abs(naive)));
      }
  }
}

TEST_CASE("select_pair reports the structural tie at k = 4") {
  RandomStream rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const DissimilarityMap dm = sample_uniform(4, rng);
    const QMatrix q = q_matrix(WorkingMatrix(dm));
    RandomStream policy_rng(0);
    const Selection sel =
        select_pair(q, stem_boughs(4), TieBreakPolicy::Lexicographic,
                    policy_rng);
    REQUIRE_EQ(sel.tied.size(), 2);
    std::set<int> slots{sel.tied[0].first, sel.tied[0].second,
                        sel.tied[1].first, sel.tied[1].second};
    CHECK_EQ(slots, std::set<int>{0, 1, 2, 3});
  }
}

TEST_CASE("fully tied Q picks the smallest pair under lexicographic") {
  const QMatrix q = q_matrix(all_ones(4));
  RandomStream rng(0);
  const Selection sel =
      select_pair(q, stem_boughs(4), TieBreakPolicy::Lexicographic, rng);
  CHECK_EQ(sel.chosen, std::pair<int, int>{0, 1});
}

TEST_CASE("baggage joins the pair carrying more taxa") {
  QMatrix q;
  q.k = 4;
  q.values = {-10, -5, -5, -5, -5, -10};  // argmin pair {0,1}, tie {2,3}
  std::vector<Bough> boughs{{0, 0, 1, 0},
                            {1, 1, 1, 0},
                            {6, 2, 3, 2},   // bouquet carrying 3 taxa
                            {7, 5, 2, 1}};  // bouquet carrying 2 taxa
  RandomStream rng(0);
  const Selection sel = select_pair(q, boughs, TieBreakPolicy::Baggage, rng);
  CHECK_EQ(sel.chosen, std::pair<int, int>{2, 3});
}

TEST_CASE("reduction") {
  SUBCASE("coincident pair keeps distances") {
    const double t = 0.75;
    const WorkingMatrix d(3, {0.0, t, t});  // pairs (a,b)=(0), (a,c), (b,c)
    const WorkingMatrix r = reduce(d, 0, 1);
    CHECK_EQ(r.size(), 2);
    CHECK_EQ(r.at(0, 1), t);
  }
  SUBCASE("worked example values after joining {a,b}") {
    const WorkingMatrix d(testutil::example_d());
    const WorkingMatrix r = reduce(d, 0, 1);  // boughs now c,d,e,u
    CHECK_EQ(r.size(), 4);
    CHECK_EQ(r.at(0, 3), 6.0);   // c-u
    CHECK_EQ(r.at(1, 3), 2.0);   // d-u
    CHECK_EQ(r.at(2, 3), 5.5);   // e-u
    CHECK_EQ(r.at(0, 1), 6.0);   // c-d carried over
    CHECK_EQ(r.at(0, 2), 5.0);   // c-e
    CHECK_EQ(r.at(1, 2), 2.0);   // d-e
  }
  SUBCASE("entries may go negative and stay accepted") {
    const WorkingMatrix d(3, {3.0, 1.0, 1.0});
    const WorkingMatrix r = reduce(d, 0, 1);
    CHECK_EQ(r.at(0, 1), -0.5);
    const QMatrix q = q_matrix(reduce(WorkingMatrix(5, {3, 1, 1, 1, 1, 1, 1,
                                                        1, 1, 1}),
                                      0, 1));
    CHECK_EQ(q.k, 4);  // a reduced matrix with negative entries still works
  }
}

TEST_CASE("step classification") {
  const Bough stem1{0, 0, 1, 0}, stem2{1, 1, 1, 0};
  const Bough bq1{6, 0, 2, 1}, bq2{7, 2, 3, 2};
  CHECK_EQ(classify_step(stem1, stem2), StepClass::Alpha);
  CHECK_EQ(classify_step(bq1, bq2), StepClass::Beta);
  CHECK_EQ(classify_step(stem1, bq2), StepClass::Gamma);
}

TEST_CASE("worked example runs") {
  RandomStream rng(0);
  SUBCASE("first matrix") {
    const NjResult r =
        run_nj(testutil::example_d(), TieBreakPolicy::Lexicographic, rng);
    CHECK_EQ(serialize(r.tree), "(@2(@1(a,b),d),c,e)");
    CHECK_EQ(strip_order(r.tree), strip_order(std::string("((d,(a,b)),c,e)")));
  }
  SUBCASE("second matrix, same topology, different order") {
    const NjResult r = run_nj(testutil::example_d_prime(),
                              TieBreakPolicy::Lexicographic, rng);
    CHECK_EQ(strip_order(r.tree), strip_order(std::string("((d,(c,e)),a,b)")));
  }
  SUBCASE("both final-tie branches agree after stripping the order") {
    const NjBothResult both = run_nj_both(testutil::example_d(),
                                          TieBreakPolicy::Lexicographic, rng);
    CHECK_EQ(serialize(both.chosen), "(@2(@1(a,b),d),c,e)");
    CHECK_EQ(serialize(both.other), "(@1(a,b),@2(c,e),d)");
    CHECK_NE(serialize(both.chosen), serialize(both.other));
    CHECK_EQ(strip_order(both.chosen), strip_order(both.other));
  }
}

TEST_CASE("the last-step tie is exact in the cancellation-free form") {
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    RandomStream rng = RandomStream::for_sample(55, i);
    const DissimilarityMap dm = sample_uniform(4, rng);
    const WorkingMatrix d(dm);
    const QMatrix q = q_matrix(d);
    RandomStream prng(0);
    const Selection sel =
        select_pair(q, stem_boughs(4), TieBreakPolicy::Lexicographic, prng);
    const auto p = sel.tied[0];
    const auto pc = sel.tied[1];
    // Float route: both entries agree to 1e-9 relative.
    const double qa = q.at(p.first, p.second);
    const double qb = q.at(pc.first, pc.second);
    CHECK_LE(std::abs(qa - qb),
             1e-9 * std::max({1.0, std::abs(qa), std::abs(qb)}));
    // Rearranged route: bitwise equal.
    CHECK_EQ(q4_partition_value(d, p), q4_partition_value(d, pc));
    ++checked;
  }
  CHECK_EQ(checked, 1000);
}

TEST_CASE("strict ties above 4 boughs never fire on sampled data") {
  int ties = 0;
  for (int i = 0; i < 100000; ++i) {
    RandomStream rng = RandomStream::for_sample(303, i);
    const DissimilarityMap dm = sample_uniform(6, rng);
    const NjResult r = run_nj(dm, TieBreakPolicy::Lexicographic, rng);
    ties += r.trace.multiway_tie_seen ? 1 : 0;
  }
  CHECK_EQ(ties, 0);
}

TEST_CASE("the two final-tie outputs are distinct trees with one topology") {
  for (int i = 0; i < 2000; ++i) {
    RandomStream rng = RandomStream::for_sample(404, i);
    const int n = 5 + static_cast<int>(i % 4);
    const DissimilarityMap dm = sample_uniform(n, rng);
    const NjBothResult both = run_nj_both(dm, TieBreakPolicy::Uniform, rng);
    REQUIRE_NE(serialize(both.chosen), serialize(both.other));
    REQUIRE_EQ(strip_order(both.chosen), strip_order(both.other));
  }
}

TEST_CASE("selection is invariant under positive scaling") {
  for (int i = 0; i < 50; ++i) {
    RandomStream rng = RandomStream::for_sample(505, i);
    const DissimilarityMap dm = sample_uniform(6, rng);
    for (double c : {3.7, 1e-3, 250.0}) {
      std::vector<double> scaled = dm.upper();
      for (double& v : scaled) v *= c;
      const DissimilarityMap dm2(6, std::move(scaled));
      RandomStream r1(0), r2(0);
      const NjResult a = run_nj(dm, TieBreakPolicy::Lexicographic, r1);
      const NjResult b = run_nj(dm2, TieBreakPolicy::Lexicographic, r2);
      CHECK_EQ(serialize(a.tree), serialize(b.tree));
    }
  }
}

TEST_CASE("traces chain correctly and convert to paths") {
  for (int i = 0; i < 200; ++i) {
    RandomStream rng = RandomStream::for_sample(606, i);
    const int n = 4 + static_cast<int>(i % 5);
    const DissimilarityMap dm = sample_uniform(n, rng);
    const NjResult r = run_nj(dm, TieBreakPolicy::Lexicographic, rng);
    REQUIRE_EQ(static_cast<int>(r.trace.events.size()), n - 3);
    CHECK_EQ(r.trace.events[0].cls, StepClass::Alpha);
    CHECK_EQ(r.trace.events[0].before, BoughVector{n, 0});
    // nj_path revalidates the whole chain, endpoint included.
    const NjPath p = nj_path(r.trace);
    CHECK_EQ(static_cast<int>(p.steps.size()), n - 4);
  }
}

TEST_CASE("path extraction matches the classical 6-taxon example") {
  // Joins: two stems, two stems, then a stem onto the first bouquet.
  AgglomerationTrace trace;
  trace.n = 6;
  trace.events = {
      {1, {0, 1}, StepClass::Alpha, {6, 0}},
      {2, {4, 5}, StepClass::Alpha, {4, 1}},
      {3, {2, 6}, StepClass::Gamma, {2, 2}},
  };
  const NjPath p = nj_path(trace);
  CHECK_EQ(path_word(p), "ag");
  CHECK_EQ(motzkin_word(nj_to_motzkin(p)), "uh");
}

TEST_CASE("single-join runs produce the empty path") {
  RandomStream rng = RandomStream::for_sample(3, 3);
  const DissimilarityMap dm = sample_uniform(4, rng);
  const NjResult r = run_nj(dm, TieBreakPolicy::Lexicographic, rng);
  const NjPath p = nj_path(r.trace);
  CHECK_EQ(p.steps.size(), 0);
  CHECK_EQ(path_word(p), "-");
}

TEST_CASE("impossible traces are rejected") {
  SUBCASE("bouquet-bouquet join without two bouquets") {
    AgglomerationTrace trace;
    trace.n = 5;
    trace.events = {
        {1, {0, 1}, StepClass::Alpha, {5, 0}},
        {2, {2, 5}, StepClass::Beta, {3, 1}},
    };
    CHECK_THROWS_AS(nj_path(trace), MalformedTraceError);
  }
  SUBCASE("bough vectors that do not chain") {
    AgglomerationTrace trace;
    trace.n = 5;
    trace.events = {
        {1, {0, 1}, StepClass::Alpha, {5, 0}},
        {2, {2, 5}, StepClass::Gamma, {4, 1}},
    };
    CHECK_THROWS_AS(nj_path(trace), MalformedTraceError);
  }
  SUBCASE("first event must join two stems") {
    AgglomerationTrace trace;
    trace.n = 4;
    trace.events = {{1, {0, 1}, StepClass::Gamma, {4, 0}}};
    CHECK_THROWS_AS(nj_path(trace), MalformedTraceError);
  }
  SUBCASE("wrong event count") {
    AgglomerationTrace trace;
    trace.n = 6;
    trace.events = {{1, {0, 1}, StepClass::Alpha, {6, 0}}};
    CHECK_THROWS_AS(nj_path(trace), MalformedTraceError);
  }
}

TEST_CASE("the fully tied matrix runs deterministically under lexicographic") {
  const auto d = validate({{0, 1, 1, 1},
                           {1, 0, 1, 1},
                           {1, 1, 0, 1},
                           {1, 1, 1, 0}});
  RandomStream r1(0), r2(99);
  const NjResult a = run_nj(d, TieBreakPolicy::Lexicographic, r1);
  const NjResult b = run_nj(d, TieBreakPolicy::Lexicographic, r2);
  CHECK_EQ(serialize(a.tree), "(@1(1,2),3,4)");
  CHECK_EQ(serialize(a.tree), serialize(b.tree));
}

TEST_CASE("runs below 4 taxa are rejected") {
  RandomStream rng(0);
  const auto d = validate({{0, 1, 2}, {1, 0, 3}, {2, 3, 0}});
  CHECK_THROWS_AS(run_nj(d, TieBreakPolicy::Lexicographic, rng),
                  TooSmallError);
}
