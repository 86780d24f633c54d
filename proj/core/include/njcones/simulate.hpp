#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "njcones/nj.hpp"

namespace njcones {

struct SampleSpec {
  int n = 4;
  std::uint64_t count = 1'000'000;
  std::uint64_t seed = 0;
  TieBreakPolicy policy = TieBreakPolicy::Lexicographic;
};

/// Monte Carlo hit counts per canonical tree key. pair_rows aggregates each
/// tree with the other resolution of its final tie, estimating the cone
/// fraction independently of the policy.
struct FrequencyTable {
  int n = 0;
  TieBreakPolicy policy = TieBreakPolicy::Lexicographic;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::map<std::string, std::uint64_t> rows;
  std::map<std::string, std::string> partner;  // key -> final-tie partner key
  std::map<std::pair<std::string, std::string>, std::uint64_t> pair_rows;

  double percent(std::uint64_t count) const {
    return 100.0 * static_cast<double>(count) / static_cast<double>(samples);
  }
};

/// Runs spec.count independent samples: draw a uniform map from the
/// ball-orthant region, run the engine, record both final-tie trees. Sample
/// i only ever touches the stream derived from (seed, i), so the table is
/// bit-identical for every worker count. workers = 0 picks the hardware
/// parallelism.
FrequencyTable simulate(const SampleSpec& spec, int workers = 0);

}  // namespace njcones
