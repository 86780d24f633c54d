#include "njcones/dissimilarity.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <system_error>

#include "njcones/errors.hpp"

namespace njcones {

namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

bool parse_double(std::string_view token, double& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

DissimilarityMap::DissimilarityMap(int n, std::vector<double> upper,
                                   std::vector<std::string> labels)
    : n_(n), entries_(std::move(upper)), labels_(std::move(labels)) {
  if (n_ < 3)
    throw TooSmallError("dissimilarity map needs at least 3 taxa, got " +
                        std::to_string(n_));
  const std::size_t want = static_cast<std::size_t>(n_) * (n_ - 1) / 2;
  if (entries_.size() != want)
    throw Error("expected " + std::to_string(want) + " entries, got " +
                std::to_string(entries_.size()));
  for (double v : entries_)
    if (!(v >= 0.0))
      throw NegativeEntryError("dissimilarity entries must be nonnegative");
  if (labels_.empty()) {
    labels_ = default_labels(n_);
  } else if (static_cast<int>(labels_.size()) != n_) {
    throw Error("expected " + std::to_string(n_) + " labels, got " +
                std::to_string(labels_.size()));
  }
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (static_cast<int>(seen.size()) != n_)
    throw Error("taxon labels must be distinct");
  for (const auto& l : labels_) {
    if (l.empty()) throw Error("taxon labels must be nonempty");
    for (char c : l)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
            c == '.' || c == '-'))
        throw Error("taxon label '" + l + "' contains characters outside" +
                    " [A-Za-z0-9_.-]");
  }
}

DissimilarityMap DissimilarityMap::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw Error("permutation size does not match taxon count");
  std::vector<bool> hit(n_, false);
  for (int p : perm) {
    if (p < 0 || p >= n_ || hit[p]) throw Error("not a permutation");
    hit[p] = true;
  }
  std::vector<double> out(entries_.size());
  std::vector<std::string> labels(n_);
  for (int i = 0; i < n_; ++i) labels[i] = labels_[perm[i]];
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      out[pair_index(n_, i, j)] = (*this)(perm[i], perm[j]);
  return DissimilarityMap(n_, std::move(out), std::move(labels));
}

DissimilarityMap validate(const std::vector<std::vector<double>>& raw,
                          std::vector<std::string> labels) {
  const int n = static_cast<int>(raw.size());
  if (n < 3)
    throw TooSmallError("dissimilarity map needs at least 3 taxa, got " +
                        std::to_string(n));
  for (const auto& row : raw)
    if (static_cast<int>(row.size()) != n)
      throw Error("matrix is not square");
  for (int i = 0; i < n; ++i)
    if (raw[i][i] != 0.0)
      throw NonzeroDiagonalError("diagonal entry (" + std::to_string(i + 1) +
                                 "," + std::to_string(i + 1) +
                                 ") must be zero");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!(raw[i][j] == raw[j][i]))
        throw AsymmetryError("entries (" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + ") and (" +
                             std::to_string(j + 1) + "," +
                             std::to_string(i + 1) + ") differ");
      if (!(raw[i][j] >= 0.0))
        throw NegativeEntryError("entry (" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) +
                                 ") must be nonnegative");
    }
  std::vector<double> upper;
  upper.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) upper.push_back(raw[i][j]);
  return DissimilarityMap(n, std::move(upper), std::move(labels));
}

namespace {

struct Line {
  std::string_view text;
  int number;  // 1-based
};

std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> out;
  std::size_t start = 0;
  int number = 1;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string_view line(text.data() + start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back({line, number});
    ++number;
    if (end == text.size()) break;
    start = end + 1;
  }
  while (!out.empty() && trim(out.back().text).empty()) out.pop_back();
  return out;
}

struct Cell {
  std::string_view text;
  int column;  // 1-based character offset of the cell start
};

std::vector<Cell> split_csv_cells(std::string_view line) {
  std::vector<Cell> out;
  std::size_t start = 0;
  while (true) {
    std::size_t end = line.find(',', start);
    std::string_view cell = line.substr(
        start, end == std::string_view::npos ? line.size() - start
                                             : end - start);
    out.push_back({trim(cell), static_cast<int>(start) + 1});
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

DissimilarityMap parse_csv(const std::string& text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty input", 1, 1);

  auto first_cells = split_csv_cells(lines[0].text);
  const int n = static_cast<int>(first_cells.size());

  std::vector<std::string> labels;
  std::size_t data_start = 0;
  bool header = false;
  for (const auto& c : first_cells) {
    double v;
    if (!parse_double(c.text, v)) {
      header = true;
      break;
    }
  }
  if (header) {
    for (const auto& c : first_cells) labels.emplace_back(c.text);
    data_start = 1;
  }

  const std::size_t want_rows = data_start + n;
  if (lines.size() != want_rows)
    throw ParseError("expected " + std::to_string(n) + " data rows, got " +
                         std::to_string(lines.size() - data_start),
                     lines.back().number, 1);

  std::vector<std::vector<double>> raw(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i) {
    const Line& line = lines[data_start + i];
    auto cells = split_csv_cells(line.text);
    if (static_cast<int>(cells.size()) != n)
      throw ParseError("expected " + std::to_string(n) + " values, got " +
                           std::to_string(cells.size()),
                       line.number,
                       cells.empty() ? 1 : cells.back().column);
    for (int j = 0; j < n; ++j) {
      if (!parse_double(cells[j].text, raw[i][j]))
        throw ParseError("not a number: '" + std::string(cells[j].text) + "'",
                         line.number, cells[j].column);
    }
  }
  return validate(raw, std::move(labels));
}

std::vector<Cell> split_whitespace(std::string_view line) {
  std::vector<Cell> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() &&
           std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    out.push_back({line.substr(start, i - start),
                   static_cast<int>(start) + 1});
  }
  return out;
}

DissimilarityMap parse_phylip(const std::string& text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty input", 1, 1);

  auto head = split_whitespace(lines[0].text);
  long n_long = 0;
  if (head.size() != 1 ||
      !([&] {
        auto t = head[0].text;
        auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), n_long);
        return ec == std::errc() && p == t.data() + t.size();
      })())
    throw ParseError("expected the taxon count on the first line",
                     lines[0].number, 1);
  const int n = static_cast<int>(n_long);
  if (n < 1) throw ParseError("taxon count must be positive", lines[0].number, 1);

  if (lines.size() != static_cast<std::size_t>(n) + 1)
    throw ParseError("expected " + std::to_string(n) + " taxon rows, got " +
                         std::to_string(lines.size() - 1),
                     lines.back().number, 1);

  std::vector<std::string> labels(n);
  std::vector<std::vector<double>> raw(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i) {
    const Line& line = lines[1 + i];
    auto cells = split_whitespace(line.text);
    if (static_cast<int>(cells.size()) != n + 1)
      throw ParseError("expected a name and " + std::to_string(n) +
                           " values, got " + std::to_string(cells.size()) +
                           " fields",
                       line.number, cells.empty() ? 1 : cells.back().column);
    labels[i] = std::string(cells[0].text);
    for (int j = 0; j < n; ++j) {
      if (!parse_double(cells[j + 1].text, raw[i][j]))
        throw ParseError("not a number: '" + std::string(cells[j + 1].text) +
                             "'",
                         line.number, cells[j + 1].column);
    }
  }
  return validate(raw, std::move(labels));
}

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

DissimilarityMap parse_matrix(const std::string& text, MatrixFormat format) {
  switch (format) {
    case MatrixFormat::Csv:
      return parse_csv(text);
    case MatrixFormat::PhylipSquare:
      return parse_phylip(text);
  }
  throw Error("unknown matrix format");
}

std::string serialize_csv(const DissimilarityMap& d) {
  const int n = d.size();
  std::string out;
  // A header of all-numeric labels would be indistinguishable from a data
  // row, so it is only written when some label is non-numeric.
  bool header = false;
  for (const auto& l : d.labels()) {
    double v;
    if (!parse_double(l, v)) {
      header = true;
      break;
    }
  }
  if (header) {
    for (int j = 0; j < n; ++j) {
      if (j) out += ',';
      out += d.label(j);
    }
    out += '\n';
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) out += ',';
      out += format_double(d(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace njcones
