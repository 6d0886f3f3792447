/**
 * @file serialize.hpp
 * @brief JSON and CSV renderings. Objects use nlohmann::json's default
 * std::map storage, so keys come out sorted and dumps are byte-stable.
 */
#pragma once

#include <sstream>
#include <string>

#include "json.hpp"
#include "nakayama/enumeration.hpp"
#include "nakayama/homology.hpp"
#include "nakayama/relations.hpp"
#include "nakayama/syzygy_filtration.hpp"

namespace nakayama {

inline nlohmann::json pd_json(PdValue p) {
  if (p.is_infinite()) return "inf";
  return p.value();
}

inline nlohmann::json to_json(const HomologyReport& report) {
  nlohmann::json j;
  j["kind"] = std::string(to_string(report.kind));
  j["kupisch"] = report.kupisch;
  auto pds = nlohmann::json::array();
  for (PdValue p : report.pd_simple) pds.push_back(pd_json(p));
  j["pd_simple"] = pds;
  j["gldim"] = pd_json(report.gldim);
  j["o_set"] = report.o_set;
  j["a_min"] = report.a_min ? nlohmann::json(*report.a_min) : nlohmann::json(nullptr);
  nlohmann::json lambda = nlohmann::json::object();
  for (const auto& [c, value] : report.lambda) lambda[std::to_string(c)] = value;
  j["lambda"] = lambda;
  j["s_connected"] = std::string(to_string(report.s_connected));
  j["quasi_hereditary"] = report.quasi_hereditary;
  j["brown_slack"] = report.brown_slack ? nlohmann::json(*report.brown_slack) : nlohmann::json(nullptr);
  return j;
}

inline nlohmann::json to_json(const RelationSystem& system) {
  nlohmann::json j;
  j["kind"] = std::string(to_string(system.kind));
  j["n"] = system.n;
  auto rel = nlohmann::json::array();
  for (const auto& r : system.relations) rel.push_back({r.start, r.end});
  j["relations"] = rel;
  j["r"] = system.count();
  j["selfinjective"] = system.selfinjective;
  return j;
}

/// The starting algebra followed by each filtered algebra, plus the terminal.
inline nlohmann::json to_json(const KupischSeries& start, const EpsilonTower& tower) {
  nlohmann::json j;
  auto steps = nlohmann::json::array();
  steps.push_back(std::vector<int>(start.entries().begin(), start.entries().end()));
  for (const auto& step : tower.steps) steps.push_back(step.kupisch);
  j["steps"] = steps;
  j["terminal"] = std::string(to_string(tower.terminal));
  j["depth"] = tower.depth();
  return j;
}

inline nlohmann::json to_json(const CensusTable& table) {
  auto rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json j;
    j["n"] = row.n;
    j["kind"] = std::string(to_string(row.kind));
    j["r"] = row.r ? nlohmann::json(*row.r) : nlohmann::json("all");
    j["enumerated"] = row.enumerated;
    j["chains"] = row.chains;
    j["closed_form"] = row.closed_form;
    j["fibonacci"] = row.fibonacci ? nlohmann::json(*row.fibonacci) : nlohmann::json(nullptr);
    j["violations"] = row.violations;
    if (!row.members.empty()) j["members"] = row.members;
    rows.push_back(std::move(j));
  }
  return rows;
}

inline std::string to_csv(const CensusTable& table) {
  std::ostringstream out;
  out << "n,kind,r,enumerated,closed_form,fibonacci,violations\n";
  for (const auto& row : table.rows) {
    out << row.n << ',' << to_string(row.kind) << ',' << (row.r ? std::to_string(*row.r) : "all")
        << ',' << row.enumerated << ',' << row.closed_form << ','
        << (row.fibonacci ? std::to_string(*row.fibonacci) : "") << ',' << row.violations << '\n';
  }
  return out.str();
}

}  // namespace nakayama
