#include "njcones/combinatorics.hpp"

#include <stdexcept>

#include "njcones/errors.hpp"

namespace njcones {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt choose2(long long x) { return BigInt(x) * (x - 1) / 2; }

BigInt catalan(int k) { return binomial(2 * k, k) / (k + 1); }

BigInt count_unrooted_trees(int n) {
  if (n < 3) throw TooSmallError("tree counts start at 3 taxa");
  BigInt r = 1;
  for (int m = 3; m <= 2 * n - 5; m += 2) r *= m;
  return r;
}

const BigInt& MotzkinTriangle::at(int k, int j) const {
  static const BigInt zero = 0;
  if (k < 0 || k > kmax || j < 0 || j > k) return zero;
  return rows[k][j];
}

MotzkinTriangle motzkin_triangle(int kmax) {
  if (kmax < 0) throw Error("triangle size must be nonnegative");
  MotzkinTriangle t;
  t.kmax = kmax;
  t.rows.resize(kmax + 1);
  t.rows[0] = {1};
  for (int k = 0; k < kmax; ++k) {
    t.rows[k + 1].assign(k + 2, 0);
    for (int j = 0; j <= k + 1; ++j) {
      BigInt v = 0;
      if (j - 1 >= 0 && j - 1 <= k) v += t.rows[k][j - 1];
      if (j <= k) v += t.rows[k][j];
      if (j + 1 <= k) v += t.rows[k][j + 1];
      t.rows[k + 1][j] = v;
    }
  }
  return t;
}

BigInt motzkin_closed_form(int k, int j) {
  if (k < 0 || j < 0 || j > k) return 0;
  BigInt sum = 0;
  for (int i = 0; i <= k; ++i) {
    const int t = k + j - i;
    BigInt b1 = (t % 2 == 0) ? binomial(k - i, t / 2) : 0;
    BigInt b2 = ((t + 2) % 2 == 0) ? binomial(k - i, (t + 2) / 2) : 0;
    sum += binomial(k, i) * (b1 - b2);
  }
  return sum;
}

MotzkinCatalanReport motzkin_catalan_checks(int kmax) {
  MotzkinCatalanReport report;
  report.kmax = kmax;
  report.motzkin_from_catalan = true;
  report.catalan_from_motzkin = true;
  const MotzkinTriangle t = motzkin_triangle(kmax);
  for (int k = 0; k <= kmax; ++k) {
    BigInt m = 0;
    for (int i = 0; 2 * i <= k; ++i) m += binomial(k, 2 * i) * catalan(i);
    if (m != t.at(k, 0)) report.motzkin_from_catalan = false;
    BigInt c = 0;
    for (int i = 0; i <= k; ++i) c += binomial(k, i) * t.at(i, 0);
    if (c != catalan(k + 1)) report.catalan_from_motzkin = false;
  }
  return report;
}

StepWeights nj_weights(int n, int s, int j) {
  if (n < 4) throw TooSmallError("weights are defined for n >= 4");
  if (s < 0 || s > n - 4 || j < 0 || j > s) return {0, 0, 0};
  const long long stems = n - s - j - 2;  // may dip below zero on dead cells
  return {choose2(stems), choose2(j + 1), BigInt(stems) * (j + 1)};
}

BigInt phi(int n) {
  if (n < 4) throw TooSmallError("phi is defined for n >= 4");
  BigInt product = 1;
  for (int m = 4; m <= n; ++m) product *= binomial(m, 2);
  // Cross-check against the factorial form n ((n-1)!)^2 / (3 2^(n-1)).
  BigInt fact = 1;
  for (int m = 2; m <= n - 1; ++m) fact *= m;
  BigInt alt = n * fact * fact;
  BigInt den = BigInt(3) << (n - 1);
  if (alt % den != 0 || alt / den != product)
    throw std::logic_error("phi product and factorial forms disagree");
  return product;
}

std::vector<std::vector<BigInt>> weighted_triangle_rows(int n) {
  if (n < 4) throw TooSmallError("the weighted triangle needs n >= 4");
  const int rows = n - 3;  // s = 0..n-4
  std::vector<std::vector<BigInt>> t(rows);
  t[0] = {binomial(n, 2)};
  for (int s = 0; s + 1 < rows; ++s) {
    t[s + 1].assign(s + 2, 0);
    for (int j = 0; j <= s + 1; ++j) {
      BigInt v = 0;
      if (j - 1 >= 0 && j - 1 <= s) v += nj_weights(n, s, j - 1).a * t[s][j - 1];
      if (j <= s) v += nj_weights(n, s, j).c * t[s][j];
      if (j + 1 <= s) v += nj_weights(n, s, j + 1).b * t[s][j + 1];
      t[s + 1][j] = v;
    }
  }
  return t;
}

BigInt phi_via_weighted_triangle(int n) {
  const auto rows = weighted_triangle_rows(n);
  const auto& last = rows.back();
  BigInt sum = 0;
  for (int j = 0; j < 3 && j < static_cast<int>(last.size()); ++j)
    sum += last[j];
  return sum;
}

namespace {

struct Point {
  int x = 0;
  int y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

bool feasible(StepClass c, Point p) {
  switch (c) {
    case StepClass::Alpha: return p.x >= 2;
    case StepClass::Beta: return p.y >= 2;
    case StepClass::Gamma: return p.x >= 1 && p.y >= 1;
  }
  return false;
}

Point apply(StepClass c, Point p) {
  switch (c) {
    case StepClass::Alpha: return {p.x - 2, p.y + 1};
    case StepClass::Beta: return {p.x, p.y - 1};
    case StepClass::Gamma: return {p.x - 1, p.y};
  }
  return p;
}

bool end_point(Point p) {
  return p == Point{2, 1} || p == Point{1, 2} || p == Point{0, 3};
}

}  // namespace

void check_path(const NjPath& p) {
  if (p.n < 4) throw InvalidPathError("paths are defined for n >= 4");
  if (static_cast<int>(p.steps.size()) != p.n - 4)
    throw InvalidPathError("expected " + std::to_string(p.n - 4) +
                           " steps, got " + std::to_string(p.steps.size()));
  Point pos{p.n - 2, 1};
  for (StepClass c : p.steps) {
    if (!feasible(c, pos))
      throw InvalidPathError(std::string("step ") + to_string(c) +
                             " infeasible at (" + std::to_string(pos.x) + "," +
                             std::to_string(pos.y) + ")");
    pos = apply(c, pos);
  }
  if (!end_point(pos))
    throw InvalidPathError("path ends at (" + std::to_string(pos.x) + "," +
                           std::to_string(pos.y) + ")");
}

void check_path(const MotzkinPath& p) {
  int height = 1;
  for (MotzkinStep s : p.steps) {
    if (s == MotzkinStep::Up) ++height;
    else if (s == MotzkinStep::Down) --height;
    if (height < 1)
      throw InvalidPathError("path drops below its baseline");
  }
}

NjPath nj_path(const AgglomerationTrace& trace) {
  const int n = trace.n;
  if (n < 4) throw MalformedTraceError("trace has fewer than 4 taxa");
  if (static_cast<int>(trace.events.size()) != n - 3)
    throw MalformedTraceError("expected " + std::to_string(n - 3) +
                              " events, got " +
                              std::to_string(trace.events.size()));
  if (trace.events[0].cls != StepClass::Alpha)
    throw MalformedTraceError("the first join must merge two stems");

  Point pos{n, 0};
  int step = 0;
  for (const JoinEvent& e : trace.events) {
    ++step;
    if (e.step != step)
      throw MalformedTraceError("events are not numbered 1..n-3");
    if (e.before != BoughVector{pos.x, pos.y})
      throw MalformedTraceError(
          "bough vector before step " + std::to_string(step) + " is (" +
          std::to_string(e.before.stems) + "," +
          std::to_string(e.before.bouquets) + "), expected (" +
          std::to_string(pos.x) + "," + std::to_string(pos.y) + ")");
    if (!feasible(e.cls, pos))
      throw MalformedTraceError(std::string(to_string(e.cls)) +
                                " step infeasible at step " +
                                std::to_string(step));
    pos = apply(e.cls, pos);
  }
  if (!end_point(pos))
    throw MalformedTraceError("trace does not end with 3 boughs");

  NjPath p;
  p.n = n;
  p.steps.reserve(n - 4);
  for (std::size_t i = 1; i < trace.events.size(); ++i)
    p.steps.push_back(trace.events[i].cls);
  return p;
}

MotzkinPath nj_to_motzkin(const NjPath& p) {
  check_path(p);
  MotzkinPath q;
  q.steps.reserve(p.steps.size());
  for (StepClass c : p.steps) {
    switch (c) {
      case StepClass::Alpha: q.steps.push_back(MotzkinStep::Up); break;
      case StepClass::Beta: q.steps.push_back(MotzkinStep::Down); break;
      case StepClass::Gamma: q.steps.push_back(MotzkinStep::Horizontal); break;
    }
  }
  check_path(q);
  return q;
}

NjPath motzkin_to_nj(const MotzkinPath& q, int n) {
  check_path(q);
  NjPath p;
  p.n = n;
  p.steps.reserve(q.steps.size());
  for (MotzkinStep s : q.steps) {
    switch (s) {
      case MotzkinStep::Up: p.steps.push_back(StepClass::Alpha); break;
      case MotzkinStep::Down: p.steps.push_back(StepClass::Beta); break;
      case MotzkinStep::Horizontal: p.steps.push_back(StepClass::Gamma); break;
    }
  }
  check_path(p);
  return p;
}

BigInt count_nj_paths(int n) {
  if (n < 4) throw TooSmallError("path counts are defined for n >= 4");
  return motzkin_triangle(n - 3).at(n - 3, 1);
}

std::vector<NjPath> enumerate_nj_paths(int n) {
  if (n < 4) throw TooSmallError("path enumeration is defined for n >= 4");
  std::vector<NjPath> out;
  std::vector<StepClass> steps;
  auto rec = [&](auto&& self, Point pos, int left) -> void {
    if (left == 0) {
      if (end_point(pos)) out.push_back({n, steps});
      return;
    }
    for (StepClass c :
         {StepClass::Alpha, StepClass::Beta, StepClass::Gamma}) {
      if (!feasible(c, pos)) continue;
      steps.push_back(c);
      self(self, apply(c, pos), left - 1);
      steps.pop_back();
    }
  };
  rec(rec, Point{n - 2, 1}, n - 4);
  return out;
}

std::vector<StepClass> step_classes(const AgglomeratedTree& t) {
  std::vector<StepClass> out;
  out.reserve(t.join_count());
  for (int r = 1; r <= t.join_count(); ++r) {
    const auto& c = t.children(r);
    const int bouquets = int(!t.is_leaf(c[0])) + int(!t.is_leaf(c[1]));
    out.push_back(bouquets == 0   ? StepClass::Alpha
                  : bouquets == 2 ? StepClass::Beta
                                  : StepClass::Gamma);
  }
  return out;
}

std::string path_word(const NjPath& p) {
  if (p.steps.empty()) return "-";
  std::string out;
  for (StepClass c : p.steps)
    out += c == StepClass::Alpha ? 'a' : c == StepClass::Beta ? 'b' : 'g';
  return out;
}

std::string motzkin_word(const MotzkinPath& p) {
  if (p.steps.empty()) return "-";
  std::string out;
  for (MotzkinStep s : p.steps)
    out += s == MotzkinStep::Up ? 'u' : s == MotzkinStep::Down ? 'd' : 'h';
  return out;
}

}  // namespace njcones
