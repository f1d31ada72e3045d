#pragma once

/// @file report.hpp
/// @brief Rendering of harness reports as sorted-key JSON and as an aligned
/// table. Both renderings are byte-stable for a given result.

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "harness.hpp"

namespace fring {

inline nlohmann::json to_json(const TheoremReport& r) {
  nlohmann::json conds = nlohmann::json::object(), wit = nlohmann::json::object();
  for (const auto& c : r.conditions) {
    nlohmann::json j{{"value", c.value}, {"exactness", c.exact ? "exact" : "corpus-bounded"}};
    if (!c.group.empty()) j["group"] = c.group;
    if (c.assertion) j["assertion"] = true;
    conds[c.name] = std::move(j);
    if (c.witness) wit[c.name] = *c.witness;
  }
  nlohmann::json j{{"theorem_id", r.theorem_id},
                   {"ring", r.ring},
                   {"subject", r.subject},
                   {"conditions", std::move(conds)},
                   {"witnesses", std::move(wit)},
                   {"agreement", r.agreement},
                   {"disagreements", r.disagreements},
                   {"not_evaluated", r.not_evaluated},
                   {"notes", r.notes}};
  j["error"] = r.error ? nlohmann::json(*r.error) : nlohmann::json(nullptr);
  return j;
}

/// Ring label → theorem id → all reports agree.
inline std::map<std::string, std::map<std::string, bool>> summary_matrix(const HarnessResult& res) {
  std::map<std::string, std::map<std::string, bool>> m;
  for (const auto& r : res.reports) {
    auto [it, fresh] = m[r.ring].emplace(r.theorem_id, r.agreement);
    if (!fresh) it->second = it->second && r.agreement;
  }
  return m;
}

inline std::string render_json(const HarnessResult& res) {
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& r : res.reports) reports.push_back(to_json(r));
  nlohmann::json summary = nlohmann::json::object();
  for (const auto& [ring, row] : summary_matrix(res))
    for (const auto& [id, ok] : row) summary[ring][id] = ok;
  std::size_t failed = 0;
  for (const auto& r : res.reports) failed += !r.agreement;
  nlohmann::json doc{{"reports", std::move(reports)},
                     {"summary", std::move(summary)},
                     {"total", res.reports.size()},
                     {"disagreeing", failed}};
  return doc.dump(2) + "\n";
}

namespace detail {

inline std::string render_rows(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w;
  for (const auto& row : rows) {
    w.resize(std::max(w.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) w[i] = std::max(w[i], row[i].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(w[i] - row[i].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

}  // namespace detail

inline std::string render_table(const HarnessResult& res) {
  std::vector<std::vector<std::string>> rows{{"ring", "theorem", "subject", "condition", "value", "kind", "witness"}};
  for (const auto& r : res.reports) {
    if (r.error) rows.push_back({r.ring, r.theorem_id, r.subject, "-", "error", "-", *r.error});
    for (const auto& c : r.conditions)
      rows.push_back({r.ring, r.theorem_id, r.subject, c.name, c.value ? "true" : "false",
                      c.assertion ? "assert" : c.exact ? "exact" : "corpus", c.witness.value_or("")});
  }
  std::ostringstream out;
  out << detail::render_rows(rows) << '\n';

  std::vector<std::string> ids;
  for (const auto& r : res.reports)
    if (std::find(ids.begin(), ids.end(), r.theorem_id) == ids.end()) ids.push_back(r.theorem_id);
  std::sort(ids.begin(), ids.end());
  std::vector<std::vector<std::string>> matrix{{"ring"}};
  for (const auto& id : ids) matrix[0].push_back(id);
  for (const auto& [ring, row] : summary_matrix(res)) {
    std::vector<std::string> line{ring};
    for (const auto& id : ids) {
      auto it = row.find(id);
      line.push_back(it == row.end() ? "." : it->second ? "agree" : "DISAGREE");
    }
    matrix.push_back(std::move(line));
  }
  out << detail::render_rows(matrix);

  std::size_t failed = 0;
  for (const auto& r : res.reports)
    if (!r.agreement) {
      ++failed;
      for (const auto& d : r.disagreements)
        out << "disagreement: " << r.ring << ' ' << r.theorem_id << (r.subject.empty() ? "" : " " + r.subject) << ": "
            << d << '\n';
    }
  out << '\n' << res.reports.size() << " reports, " << failed << " disagreeing\n";
  return out.str();
}

inline std::string render_verdict_table(const PropertyVerdict& v, const std::string& ring) {
  std::vector<std::vector<std::string>> rows{{"ring", "property", "side", "value", "kind", "witness"},
                                             {ring, v.name, v.side, v.value ? "holds" : "fails",
                                              v.corpus_bounded ? "corpus" : "exact", v.witness.value_or("")}};
  return detail::render_rows(rows);
}

inline std::string render_verdict_json(const PropertyVerdict& v, const std::string& ring) {
  nlohmann::json j{{"ring", ring},
                   {"property", v.name},
                   {"side", v.side},
                   {"value", v.value},
                   {"exactness", v.corpus_bounded ? "corpus-bounded" : "exact"}};
  j["witness"] = v.witness ? nlohmann::json(*v.witness) : nlohmann::json(nullptr);
  return j.dump(2) + "\n";
}

}  // namespace fring
