#include "njcones/report.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

#include "njcones/errors.hpp"

namespace njcones {

namespace {

std::string pct(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::uint64_t hits(const FrequencyTable& t, const std::string& key) {
  auto it = t.rows.find(key);
  return it == t.rows.end() ? 0 : it->second;
}

std::uint64_t pair_hits(const FrequencyTable& t, const std::string& a,
                        const std::string& b) {
  auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  auto it = t.pair_rows.find(key);
  return it == t.pair_rows.end() ? 0 : it->second;
}

std::string emit_csv(const FrequencyTable& t) {
  std::string out = "tree,partner,count,percent,pair_percent\n";
  for (const auto& [key, count] : t.rows) {
    const std::string& mate = t.partner.at(key);
    out += csv_quote(key);
    out += ',';
    out += csv_quote(mate);
    out += ',';
    out += std::to_string(count);
    out += ',';
    out += pct(t.percent(count));
    out += ',';
    out += pct(t.percent(pair_hits(t, key, mate)));
    out += '\n';
  }
  return out;
}

std::string emit_json(const FrequencyTable& t) {
  nlohmann::ordered_json j;
  j["taxa"] = t.n;
  j["policy"] = to_string(t.policy);
  j["samples"] = t.samples;
  j["seed"] = t.seed;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& [key, count] : t.rows) {
    const std::string& mate = t.partner.at(key);
    nlohmann::ordered_json row;
    row["tree"] = key;
    row["partner"] = mate;
    row["count"] = count;
    row["percent"] = t.percent(count);
    row["pair_percent"] = t.percent(pair_hits(t, key, mate));
    j["rows"].push_back(std::move(row));
  }
  j["pairs"] = nlohmann::ordered_json::array();
  for (const auto& [key, count] : t.pair_rows) {
    nlohmann::ordered_json row;
    row["tree_a"] = key.first;
    row["tree_b"] = key.second;
    row["count"] = count;
    row["percent"] = t.percent(count);
    j["pairs"].push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

std::string emit_text(const FrequencyTable& t) {
  std::size_t width = 4;
  for (const auto& [key, count] : t.pair_rows) {
    width = std::max(width, key.first.size());
    width = std::max(width, key.second.size());
  }
  auto pad = [&](const std::string& s) {
    return s + std::string(width + 2 - s.size(), ' ');
  };

  std::string out = "taxa=" + std::to_string(t.n) +
                    " policy=" + to_string(t.policy) +
                    " samples=" + std::to_string(t.samples) +
                    " seed=" + std::to_string(t.seed) + "\n";
  out += pad("tree") + "percent   " + pad("partner") + "percent   pair\n";
  double total = 0.0;
  for (const auto& [key, count] : t.pair_rows) {
    const double pa = t.percent(hits(t, key.first));
    const double pb = t.percent(hits(t, key.second));
    out += pad(key.first) + pct(pa) + std::string(10 - pct(pa).size(), ' ') +
           pad(key.second) + pct(pb) + std::string(10 - pct(pb).size(), ' ') +
           pct(t.percent(count)) + "\n";
    total += pa + pb;
  }
  out += "trees=" + std::to_string(t.rows.size()) +
         " pairs=" + std::to_string(t.pair_rows.size()) +
         " total=" + pct(total) + "\n";
  return out;
}

}  // namespace

const char* to_string(ReportFormat f) {
  switch (f) {
    case ReportFormat::Csv: return "csv";
    case ReportFormat::Json: return "json";
    case ReportFormat::Text: return "text";
  }
  return "?";
}

std::string emit_report(const FrequencyTable& t, ReportFormat format) {
  switch (format) {
    case ReportFormat::Csv: return emit_csv(t);
    case ReportFormat::Json: return emit_json(t);
    case ReportFormat::Text: return emit_text(t);
  }
  throw Error("unknown report format");
}

}  // namespace njcones
