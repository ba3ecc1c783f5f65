#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ptb/iso.hpp"
#include "ptb/suite.hpp"

namespace ptb {

using ojson = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class Format { json, csv, text };

ojson config_json(const SuiteConfig& cfg);
SuiteConfig config_from_json(const ojson& j);

// Deterministic certificate; wall times only when `timings` is set.
ojson certificate_json(const SuiteConfig& cfg, const std::vector<CheckResult>& checks, bool timings = false);

struct VerifyOutcome {
  bool reproduced = false;  // regenerated certificate equals the stored one
  bool all_pass = false;
  std::vector<std::string> mismatches;  // JSON pointer paths
};
VerifyOutcome verify_certificate(const ojson& stored, Exec mode = Exec::openmp);

ojson cohomology_report(const FamilySpec& spec, bool& ok);
ojson iso_report(const FamilySpec& source, const FamilySpec& target, const IsoDecision& d);

struct AncoRow {
  double t = 0, min_sec = 0, ricci_min = 0, lambda_min = 0, D = 0, lambda_D2 = 0;
};
inline const std::vector<std::string> kAncoColumns{"t", "min_sec", "ricci_min", "lambda_min", "D", "lambda_min_D2"};
AncoRow anco_row(const Decomposition& D, double t, int samples, int refine_steps, std::uint64_t seed, double diam);

ojson curvature_report(const FamilySpec& spec, double t, int samples, int refine_steps, std::uint64_t seed,
                       bool& ok);
ojson diameter_report(const FamilySpec& spec);

// Rendering. JSON is compact with two-space indentation; CSV/text flatten nested
// objects into dotted keys unless a table is given.
std::string render(const ojson& j, Format f);
std::string render_table(const std::vector<std::string>& columns, const std::vector<std::vector<double>>& rows,
                         Format f, const ojson& meta);
std::string render_checks(const std::vector<CheckResult>& checks, Format f, const ojson& cert);

}  // namespace ptb
