#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ptb/catalog.hpp"
#include "ptb/exec.hpp"

namespace ptb {

inline constexpr int kCriteriaCount = 13;

struct SuiteConfig {
  std::vector<int> criteria;               // empty: all
  std::optional<Family> family;            // restricts to criteria about that family
  std::vector<double> t_list;              // overrides the sec/Ricci t values when non-empty
  int samples = 48;                        // Grassmannian starts per sec_bounds call
  int refine_steps = 40;
  std::uint64_t seed = 1;
  Exec mode = Exec::openmp;
};

struct CheckResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string summary;
  nlohmann::ordered_json tolerances = nlohmann::ordered_json::object();
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
  double seconds = 0;         // wall time, never serialized by default
  double budget_seconds = 0;  // runtime budget from the acceptance contract
};

std::string criterion_title(int id);
double criterion_budget(int id);
std::vector<int> selected_criteria(const SuiteConfig& cfg);

CheckResult run_criterion(int id, const SuiteConfig& cfg);
std::vector<CheckResult> run_suite(const SuiteConfig& cfg);

}  // namespace ptb
