#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "ptb/report.hpp"

using namespace ptb;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kUndecided = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family;
  std::vector<long> alpha, a;
  std::optional<int> sphere;
  std::vector<double> t_list;
  int samples = 48;
  int refine_steps = 40;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format;
  std::string verify;
  std::vector<int> criteria;
  bool timings = false;
};

Format parse_format(const std::string& s, Format fallback) {
  if (s.empty()) return fallback;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "text") return Format::text;
  throw UsageError("--format must be json, csv or text");
}

std::vector<FamilySpec> families(const Options& o) {
  std::vector<FamilySpec> out;
  if (o.family == "E") {
    if (o.alpha.empty()) throw UsageError("--family E needs --alpha");
    for (long p : o.alpha) out.push_back(make_family(Family::E, p));
  } else if (o.family == "M") {
    if (o.a.empty()) throw UsageError("--family M needs --a");
    for (long p : o.a) out.push_back(make_family(Family::M, p));
  } else {
    throw UsageError("--family must be E or M");
  }
  if (o.sphere)
    for (auto& f : out) f = with_sphere(f, *o.sphere);
  return out;
}

FamilySpec one_family(const Options& o) {
  auto f = families(o);
  if (f.size() != 1) throw UsageError("expected exactly one family parameter");
  return f.front();
}

std::uint64_t need_seed(const Options& o) {
  if (!o.seed) throw UsageError("--seed is required for sampling subcommands");
  return *o.seed;
}

void check_t(const std::vector<double>& ts) {
  for (double t : ts)
    if (!(t > 0 && t <= 1)) throw UsageError("t values must lie in (0, 1]");
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + o.out);
  f << text;
}

int cmd_cohomology(const Options& o) {
  bool ok = false;
  ojson j;
  try {
    j = cohomology_report(one_family(o), ok);
  } catch (const NotInjective& e) {
    j = {{"schema_version", kSchemaVersion}, {"kind", "cohomology"}, {"error", e.what()},
         {"stage", e.stage}, {"degree", e.degree}};
    ok = false;
  }
  emit(o, render(j, parse_format(o.format, Format::json)));
  return ok ? kPass : kFail;
}

int cmd_iso_check(const Options& o) {
  auto f = families(o);
  if (f.size() != 2) throw UsageError("iso-check needs two parameters, e.g. --alpha 1 --alpha 3");
  const IsoDecision d = iso_decide(family_ring(f[0]), family_ring(f[1]));
  emit(o, render(iso_report(f[0], f[1], d), parse_format(o.format, Format::json)));
  return d.result == IsoResult::unknown ? kUndecided : kPass;
}

int cmd_curvature(const Options& o) {
  const std::uint64_t seed = need_seed(o);
  if (o.t_list.size() != 1) throw UsageError("curvature takes a single t via --t-list");
  check_t(o.t_list);
  bool ok = false;
  const ojson j = curvature_report(one_family(o), o.t_list.front(), o.samples, o.refine_steps, seed, ok);
  emit(o, render(j, parse_format(o.format, Format::json)));
  return ok ? kPass : kFail;
}

int cmd_anco_sweep(const Options& o) {
  const std::uint64_t seed = need_seed(o);
  std::vector<double> ts = o.t_list.empty() ? std::vector<double>{1, 0.5, 0.25, 0.1, 0.05} : o.t_list;
  check_t(ts);
  const FamilySpec spec = one_family(o);
  const Decomposition D = build_decomposition(spec.geometry);
  const double diam = diameter_upper_bound(D.g).D;
  std::vector<std::vector<double>> rows;
  for (double t : ts) {
    const AncoRow r = anco_row(D, t, o.samples, o.refine_steps, seed, diam);
    rows.push_back({r.t, r.min_sec, r.ricci_min, r.lambda_min, r.D, r.lambda_D2});
  }
  // Trend check: among t <= 0.5 in decreasing order, λ_min·D² must not decrease.
  std::vector<std::pair<double, double>> tail;
  for (const auto& r : rows)
    if (r[0] <= 0.5) tail.emplace_back(r[0], r[5]);
  std::sort(tail.begin(), tail.end(), [](auto& x, auto& y) { return x.first > y.first; });
  bool mono = true;
  for (std::size_t i = 1; i < tail.size(); ++i) mono = mono && tail[i].second >= tail[i - 1].second;
  const ojson meta = {{"schema_version", kSchemaVersion}, {"kind", "anco-sweep"}, {"family", spec.name()},
                      {"samples", o.samples}, {"seed", seed}, {"monotone_below_half", mono}};
  emit(o, render_table(kAncoColumns, rows, parse_format(o.format, Format::csv), meta));
  return mono ? kPass : kFail;
}

int cmd_diameter(const Options& o) {
  emit(o, render(diameter_report(one_family(o)), parse_format(o.format, Format::json)));
  return kPass;
}

int cmd_certify(const Options& o) {
  if (!o.verify.empty()) {
    std::ifstream f(o.verify);
    if (!f) throw UsageError("cannot read " + o.verify);
    ojson stored;
    try {
      stored = ojson::parse(f);
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(std::string("certificate is not valid JSON: ") + e.what());
    }
    VerifyOutcome v;
    try {
      v = verify_certificate(stored);
    } catch (const nlohmann::json::exception& e) {
      v.mismatches.push_back(std::string("malformed certificate: ") + e.what());
    }
    const ojson j = {{"schema_version", kSchemaVersion}, {"kind", "verify"}, {"file", o.verify},
                     {"reproduced", v.reproduced}, {"all_pass", v.all_pass}, {"mismatches", v.mismatches}};
    emit(o, render(j, parse_format(o.format, Format::json)));
    return v.reproduced ? kPass : kFail;
  }
  SuiteConfig cfg;
  cfg.seed = need_seed(o);
  check_t(o.t_list);
  cfg.t_list = o.t_list;
  cfg.samples = o.samples;
  cfg.refine_steps = o.refine_steps;
  cfg.criteria = o.criteria;
  if (o.family == "E") cfg.family = Family::E;
  else if (o.family == "M") cfg.family = Family::M;
  else if (!o.family.empty()) throw UsageError("--family must be E or M");
  std::vector<CheckResult> checks;
  for (int id : selected_criteria(cfg)) {
    checks.push_back(run_criterion(id, cfg));
    const auto& c = checks.back();
    std::cerr << (c.pass ? "pass " : "FAIL ") << c.id << " " << c.title << "\n";
  }
  const ojson cert = certificate_json(cfg, checks, o.timings);
  emit(o, render_checks(checks, parse_format(o.format, Format::json), cert));
  return cert["all_pass"].get<bool>() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topology and curvature certification for two homogeneous families"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--family", o.family, "E or M");
  app.add_option("--alpha", o.alpha, "E parameter (repeat for iso-check)")->take_all();
  app.add_option("--a", o.a, "M parameter (repeat for iso-check)")->take_all();
  app.add_option("--sphere", o.sphere, "product with S^n");
  app.add_option("--t-list", o.t_list, "metric parameters in (0,1], comma separated")->delimiter(',');
  app.add_option("--samples", o.samples, "random starting planes per sec search")->check(CLI::PositiveNumber);
  app.add_option("--refine-steps", o.refine_steps, "alternating eigen steps per start")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", o.seed, "RNG seed (required when sampling)");
  app.add_option("--out", o.out, "output file (default stdout)");
  app.add_option("--format", o.format, "json, csv or text");
  app.add_option("--verify", o.verify, "certify: re-run a stored certificate");
  app.add_option("--criteria", o.criteria, "certify: subset of criteria ids")->delimiter(',');
  app.add_flag("--timings", o.timings, "certify: include wall times (breaks byte-identity)");

  std::vector<std::pair<std::string, int (*)(const Options&)>> cmds{
      {"cohomology", cmd_cohomology}, {"iso-check", cmd_iso_check}, {"curvature", cmd_curvature},
      {"anco-sweep", cmd_anco_sweep}, {"diameter", cmd_diameter},   {"certify", cmd_certify}};
  std::vector<CLI::App*> subs;
  for (const auto& [name, fn] : cmds) subs.push_back(app.add_subcommand(name)->fallthrough());

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }
  try {
    for (std::size_t i = 0; i < subs.size(); ++i)
      if (subs[i]->parsed()) return cmds[i].second(o);
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const NonpositiveAlpha& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const SphereTooSmall& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
