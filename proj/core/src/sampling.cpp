#include "njcones/sampling.hpp"

#include <cmath>

#include "njcones/errors.hpp"

namespace njcones {

DissimilarityMap sample_uniform(int n, RandomStream& rng) {
  if (n < 4)
    throw TooSmallError("sampling needs at least 4 taxa, got " +
                        std::to_string(n));
  const int d = n * (n - 1) / 2;
  std::vector<double> x(d);
  double norm_sq = 0.0;
  for (int i = 0; i < d; ++i) {
    x[i] = rng.next_normal();
    norm_sq += x[i] * x[i];
  }
  const double norm = std::sqrt(norm_sq);
  const double radius = std::pow(rng.next_double(), 1.0 / d);
  if (norm == 0.0) {
    for (auto& v : x) v = 0.0;
  } else {
    for (auto& v : x) v = std::abs(v) / norm * radius;
  }
  return DissimilarityMap(n, std::move(x));
}

}  // namespace njcones
