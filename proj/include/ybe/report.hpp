#pragma once

// JSON report builders and solution-file I/O shared by the CLI and tests.
// Every report carries a versioned "schema" field; the machine form is the
// single source of truth and the human rendering is derived from it.

#include <string>

#include "json.hpp"

#include "ybe/atlas.hpp"
#include "ybe/base.hpp"
#include "ybe/solution.hpp"
#include "ybe/words.hpp"

namespace ybe {

using json = nlohmann::json;

inline constexpr const char* kReportSchema = "ybe.report/1";

struct LoadedSolution {
  FiniteSolution solution;
  std::string name;
  std::string notes;
};

json solution_to_json(const FiniteSolution& s, const std::string& name = "",
                      const std::string& notes = "");
LoadedSolution solution_from_json(const json& j);
LoadedSolution load_solution_file(const std::string& path);

json check_report(const LoadedSolution& in);
json monoid_report(const LoadedSolution& in, PresentationKind kind, int max_degree,
                   bool list_classes);
json cocycle_report(const LoadedSolution& in, int max_degree);
json eta_report(const LoadedSolution& in, int max_degree, int witness_bound,
                std::uint64_t seed);
json enumerate_report(const CampaignReport& rep);
json example_list_report();

// Deterministic plain-text rendering of a report.
std::string render_human(const json& report);

}  // namespace ybe
