#include "njcones/simulate.hpp"

#include <algorithm>
#include <thread>

#include "njcones/errors.hpp"
#include "njcones/newick.hpp"
#include "njcones/sampling.hpp"

namespace njcones {

namespace {

struct Partial {
  std::map<std::string, std::uint64_t> rows;
  std::map<std::string, std::string> partner;
  std::map<std::pair<std::string, std::string>, std::uint64_t> pairs;
};

void run_range(const SampleSpec& spec, std::uint64_t lo, std::uint64_t hi,
               Partial& out) {
  for (std::uint64_t i = lo; i < hi; ++i) {
    RandomStream rng = RandomStream::for_sample(spec.seed, i);
    const DissimilarityMap d = sample_uniform(spec.n, rng);
    const NjBothResult both = run_nj_both(d, spec.policy, rng);
    std::string chosen = serialize(both.chosen);
    std::string other = serialize(both.other);
    ++out.rows[chosen];
    out.partner.emplace(chosen, other);
    out.partner.emplace(other, chosen);
    auto key = chosen < other ? std::make_pair(std::move(chosen), std::move(other))
                              : std::make_pair(std::move(other), std::move(chosen));
    ++out.pairs[key];
  }
}

}  // namespace

FrequencyTable simulate(const SampleSpec& spec, int workers) {
  if (spec.n < 4)
    throw ConfigError("simulation needs at least 4 taxa, got " +
                      std::to_string(spec.n));
  if (spec.count < 1) throw ConfigError("sample count must be at least 1");

  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  std::uint64_t w = workers > 0 ? static_cast<std::uint64_t>(workers) : hw;
  w = std::min<std::uint64_t>(w, spec.count);

  std::vector<Partial> partials(w);
  if (w == 1) {
    run_range(spec, 0, spec.count, partials[0]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(w);
    const std::uint64_t chunk = spec.count / w;
    const std::uint64_t extra = spec.count % w;
    std::uint64_t lo = 0;
    for (std::uint64_t t = 0; t < w; ++t) {
      const std::uint64_t hi = lo + chunk + (t < extra ? 1 : 0);
      threads.emplace_back(run_range, std::cref(spec), lo, hi,
                           std::ref(partials[t]));
      lo = hi;
    }
    for (auto& th : threads) th.join();
  }

  FrequencyTable table;
  table.n = spec.n;
  table.policy = spec.policy;
  table.samples = spec.count;
  table.seed = spec.seed;
  for (const Partial& p : partials) {
    for (const auto& [key, count] : p.rows) table.rows[key] += count;
    for (const auto& [key, mate] : p.partner) table.partner.emplace(key, mate);
    for (const auto& [key, count] : p.pairs) table.pair_rows[key] += count;
  }
  return table;
}

}  // namespace njcones
