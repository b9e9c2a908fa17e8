#pragma once

#include <array>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "zsl/progressions.hpp"

namespace zsl {

using nlohmann::json;

inline json to_json(const ApCover& c) {
  return json{{"start", c.start}, {"d", c.d}, {"len", c.len}};
}

inline ApCover ap_cover_from_json(const json& j, int n) {
  ApCover c;
  c.n = n;
  c.start = j.at("start").get<i64>();
  c.d = j.at("d").get<i64>();
  c.len = j.at("len").get<i64>();
  return c;
}

inline json to_json(const Certificate& c) {
  json covers = json::array();
  for (const auto& cov : c.covers) covers.push_back(to_json(cov));
  return json{{"p", c.p}, {"A", c.A}, {"B", c.B}, {"C", c.C},
              {"r", c.r}, {"d", c.d}, {"covers", covers}, {"ok", c.ok}};
}

inline Certificate certificate_from_json(const json& j) {
  Certificate c;
  c.p = j.at("p").get<int>();
  c.A = j.at("A").get<std::vector<int>>();
  c.B = j.at("B").get<std::vector<int>>();
  c.C = j.at("C").get<std::vector<int>>();
  c.r = j.at("r").get<i64>();
  c.d = j.at("d").get<i64>();
  for (const auto& cov : j.at("covers")) c.covers.push_back(ap_cover_from_json(cov, c.p));
  c.ok = j.at("ok").get<bool>();
  return c;
}

// Fixed-width hex pair "maskA:maskB", width ceil(p/4), residue 0 at the top
// bit so that string order equals the member-first order on sets.
inline std::string canonical_key(int p, u64 mask_a, u64 mask_b) {
  auto reversed = [p](u64 m) {
    u64 out = 0;
    for (int i = 0; i < p; ++i)
      if ((m >> i) & 1) out |= u64{1} << (p - 1 - i);
    return out;
  };
  int width = (p + 3) / 4;
  std::ostringstream os;
  os << std::hex << std::setw(width) << std::setfill('0') << reversed(mask_a) << ":"
     << std::setw(width) << std::setfill('0') << reversed(mask_b);
  return os.str();
}

// One line of scan output: a certificate plus scan context.
struct ScanRecord {
  std::string mode;
  std::string key;
  std::string verdict;  // "holds" or "violation"
  Certificate cert;
};

inline std::string to_jsonl(const ScanRecord& r) {
  json j = to_json(r.cert);
  j["mode"] = r.mode;
  j["canonical_key"] = r.key;
  j["verdict"] = r.verdict;
  return j.dump();
}

inline ScanRecord record_from_json(const json& j) {
  ScanRecord r;
  r.mode = j.at("mode").get<std::string>();
  r.key = j.at("canonical_key").get<std::string>();
  r.verdict = j.at("verdict").get<std::string>();
  r.cert = certificate_from_json(j);
  return r;
}

struct SummarizeResult {
  std::string csv;
  std::vector<std::string> warnings;
};

// Aggregates scan JSONL files into per-(p, r) counts.  Records are deduped
// by (p, canonical_key); duplicates produce a warning and count once.
inline SummarizeResult summarize(const std::vector<std::string>& paths) {
  SummarizeResult out;
  std::map<std::pair<int, i64>, std::array<i64, 3>> rows;  // orbits, holds, violations
  std::set<std::pair<int, std::string>> seen;
  for (const auto& path : paths) {
    std::ifstream in(path);
    if (!in) {
      out.warnings.push_back("cannot open " + path);
      continue;
    }
    std::string line;
    i64 lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      json j;
      try {
        j = json::parse(line);
      } catch (const std::exception& e) {
        out.warnings.push_back(path + ":" + std::to_string(lineno) + ": parse error");
        continue;
      }
      ScanRecord r;
      try {
        r = record_from_json(j);
      } catch (const std::exception& e) {
        out.warnings.push_back(path + ":" + std::to_string(lineno) + ": missing field");
        continue;
      }
      if (!seen.insert({r.cert.p, r.key}).second) {
        out.warnings.push_back(path + ":" + std::to_string(lineno) + ": duplicate key " + r.key);
        continue;
      }
      auto& row = rows[{r.cert.p, r.cert.r}];
      row[0] += 1;
      if (r.verdict == "holds") row[1] += 1;
      if (r.verdict == "violation") row[2] += 1;
    }
  }
  std::ostringstream csv;
  csv << "p,r,orbits,applicable,holds,violations\n";
  for (const auto& [key, row] : rows) {
    csv << key.first << "," << key.second << "," << row[0] << "," << row[0] << ","
        << row[1] << "," << row[2] << "\n";
  }
  out.csv = csv.str();
  return out;
}

}  // namespace zsl
