#include "ptb/report.hpp"

#include <charconv>
#include <sstream>

namespace ptb {

namespace {

std::string num(double x) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

std::string family_tag(Family f) { return f == Family::E ? "E" : "M"; }

ojson vec_json(const Vec& v) {
  ojson a = ojson::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

void flatten(const ojson& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const ojson& e) { return e.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
  } else if (j.is_string()) {
    out.emplace_back(prefix, j.get<std::string>());
  } else if (j.is_number_float()) {
    out.emplace_back(prefix, num(j.get<double>()));
  } else {
    out.emplace_back(prefix, j.dump());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

}  // namespace

ojson config_json(const SuiteConfig& cfg) {
  ojson j;
  j["criteria"] = selected_criteria(cfg);
  j["family"] = cfg.family ? family_tag(*cfg.family) : std::string("all");
  j["t_list"] = cfg.t_list;
  j["samples"] = cfg.samples;
  j["refine_steps"] = cfg.refine_steps;
  j["seed"] = cfg.seed;
  return j;
}

SuiteConfig config_from_json(const ojson& j) {
  SuiteConfig cfg;
  cfg.criteria = j.at("criteria").get<std::vector<int>>();
  const auto fam = j.at("family").get<std::string>();
  if (fam == "E") cfg.family = Family::E;
  if (fam == "M") cfg.family = Family::M;
  cfg.t_list = j.at("t_list").get<std::vector<double>>();
  cfg.samples = j.at("samples").get<int>();
  cfg.refine_steps = j.at("refine_steps").get<int>();
  cfg.seed = j.at("seed").get<std::uint64_t>();
  return cfg;
}

ojson certificate_json(const SuiteConfig& cfg, const std::vector<CheckResult>& checks, bool timings) {
  ojson j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "certificate";
  j["config"] = config_json(cfg);
  ojson arr = ojson::array();
  bool all = true;
  for (const auto& c : checks) {
    ojson e;
    e["id"] = c.id;
    e["title"] = c.title;
    e["pass"] = c.pass;
    e["summary"] = c.summary;
    e["tolerances"] = c.tolerances;
    e["data"] = c.data;
    if (timings) {
      e["wall_time_s"] = c.seconds;
      e["budget_s"] = c.budget_seconds;
    }
    arr.push_back(e);
    all = all && c.pass;
  }
  j["checks"] = arr;
  j["all_pass"] = all;
  return j;
}

VerifyOutcome verify_certificate(const ojson& stored, Exec mode) {
  VerifyOutcome v;
  if (!stored.contains("schema_version") || stored["schema_version"] != kSchemaVersion) {
    v.mismatches.push_back("/schema_version");
    return v;
  }
  SuiteConfig cfg = config_from_json(stored.at("config"));
  cfg.mode = mode;
  const auto checks = run_suite(cfg);
  ojson fresh = certificate_json(cfg, checks);
  ojson old = stored;
  for (auto& c : old["checks"]) {
    c.erase("wall_time_s");
    c.erase("budget_s");
  }
  for (const auto& op : ojson::diff(old, fresh)) v.mismatches.push_back(op.at("path").get<std::string>());
  v.reproduced = v.mismatches.empty();
  v.all_pass = fresh["all_pass"].get<bool>();
  return v;
}

ojson cohomology_report(const FamilySpec& spec, bool& ok) {
  ojson j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "cohomology";
  j["family"] = spec.name();
  const TorusQuotient q = family_quotient(spec);
  RingPtr ring = q.ring;
  if (spec.sphere) ring = tensor_with_sphere(ring, *spec.sphere);
  ojson gens = ojson::array();
  for (const auto& g : ring->generators()) gens.push_back({{"name", g.name}, {"degree", g.degree}});
  j["generators"] = gens;
  ojson rels = ojson::array();
  for (const auto& r : ring->relations()) rels.push_back(to_string(r, ring->names(), ring->weights()));
  j["relations"] = rels;
  j["betti"] = ring->betti_table();
  ok = true;
  ojson stages = ojson::array();
  const auto prim = spec.primitivity_inputs();
  for (std::size_t s = 0; s < q.stages.size(); ++s) {
    const auto& st = q.stages[s];
    ojson maps = ojson::array();
    for (const auto& m : st.maps)
      maps.push_back({{"degree", m.degree}, {"rank", m.rank}, {"injective", m.injective}});
    const bool primitive = check_primitive(prim[s].first, prim[s].second);
    ok = ok && primitive;
    stages.push_back({{"stage", s + 1},
                      {"euler", spec.bundle.euler[s]},
                      {"eliminated", st.eliminated},
                      {"primitive", primitive},
                      {"multiplication_maps", maps}});
  }
  j["stages"] = stages;
  j["odd_zero_through"] = ring->odd_zero_through() == kUnbounded ? -1 : ring->odd_zero_through();
  if (const auto& ob = ring->obstruction())
    j["odd_obstruction"] = {{"stage", ob->stage}, {"degree", ob->degree}};
  j["ring"] = ring->serialize();
  const auto& g = spec.geometry;
  j["geometry"] = {{"dim_g", g.g.dim()}, {"dim_h", g.h_basis.size()}, {"fiber", g.fiber},
                   {"rho_weights", g.rho.weights}};
  j["ok"] = ok;
  return j;
}

ojson iso_report(const FamilySpec& source, const FamilySpec& target, const IsoDecision& d) {
  ojson j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "iso-check";
  j["source"] = source.name();
  j["target"] = target.name();
  j["result"] = to_string(d.result);
  j["reason"] = d.reason;
  j["source_locus"] = d.source_locus.describe();
  j["target_locus"] = d.target_locus.describe();
  ojson shapes = ojson::array();
  for (const auto& s : d.shapes)
    shapes.push_back({{"shape", s.description},
                      {"unknowns", s.unknowns},
                      {"consistent", s.consistent},
                      {"verified", s.verified},
                      {"certificate_terms", s.certificate_terms}});
  j["shapes"] = shapes;
  if (d.certificate) {
    const auto& c = *d.certificate;
    ojson cert;
    cert["rational"] = c.rational;
    if (c.rational) {
      ojson m = ojson::array();
      for (const auto& row : c.matrix) {
        ojson r = ojson::array();
        for (const auto& x : row) r.push_back(rat_string(x));
        m.push_back(r);
      }
      cert["matrix"] = m;
      cert["determinant"] = rat_string(c.verification.det);
    }
    cert["unknowns"] = c.unknown_names;
    cert["description"] = c.description;
    cert["verified"] = c.verification.ok;
    j["certificate"] = cert;
  }
  return j;
}

AncoRow anco_row(const Decomposition& D, double t, int samples, int refine_steps, std::uint64_t seed, double diam) {
  const CurvatureOperator op = assemble_curvature_operator(D, t);
  const SecBounds sb = sec_bounds(op, D, samples, refine_steps, seed);
  AncoRow r;
  r.t = t;
  r.min_sec = sb.min;
  r.ricci_min = ricci_min(D, t).min;
  r.lambda_min = curvature_operator_min_eig(op).value;
  r.D = diam;
  r.lambda_D2 = r.lambda_min * diam * diam;
  return r;
}

ojson curvature_report(const FamilySpec& spec, double t, int samples, int refine_steps, std::uint64_t seed,
                       bool& ok) {
  const Decomposition D = build_decomposition(spec.geometry);
  const CurvatureOperator op = assemble_curvature_operator(D, t);
  const SecBounds sb = sec_bounds(op, D, samples, refine_steps, seed);
  const RicciResult ric = ricci_min(D, t);
  const EigenResult eig = curvature_operator_min_eig(op);
  const double diam = diameter_upper_bound(D.g).D;
  ojson j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "curvature";
  j["family"] = spec.name();
  j["t"] = t;
  j["dims"] = {{"g", D.g.dim()}, {"h", D.h.cols()}, {"m1", D.n1()}, {"m2", D.n2()}, {"wedge", op.M.rows()}};
  j["inclusion_residuals"] = {{"m1_m2_in_m1", D.residuals.m1_m2_in_m1},
                              {"k_k_in_k", D.residuals.k_k_in_k},
                              {"m2_m2_zero", D.residuals.m2_m2_zero},
                              {"m1_m1_in_k", D.residuals.m1_m1_in_k}};
  j["sec"] = {{"min", sb.min},
              {"max", sb.max},
              {"argmin", {{"x", vec_json(sb.argmin.x)}, {"y", vec_json(sb.argmin.y)}}},
              {"argmax", {{"x", vec_json(sb.argmax.x)}, {"y", vec_json(sb.argmax.y)}}},
              {"samples", samples},
              {"refine_steps", refine_steps},
              {"seed", seed}};
  j["ricci"] = {{"min", ric.min}, {"trace", ric.trace}, {"direction", vec_json(ric.direction)}};
  j["curvature_operator"] = {{"lambda_min", eig.value}, {"residual", eig.residual}};
  j["D"] = diam;
  j["lambda_min_D2"] = eig.value * diam * diam;
  const double tol = 1e-9;
  const bool nonneg = sb.min >= -tol, ricpos = ric.min > 0;
  j["checks"] = {{"sec_nonnegative", nonneg}, {"ricci_positive", ricpos}, {"tolerance", tol}};
  ok = nonneg && ricpos;
  return j;
}

ojson diameter_report(const FamilySpec& spec) {
  const DiameterBound b = diameter_upper_bound(spec.geometry.g);
  ojson j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "diameter";
  j["family"] = spec.name();
  ojson f = ojson::array();
  for (const auto& x : b.factors) f.push_back({{"factor", x.name}, {"covering_radius", x.covering_radius}});
  j["factors"] = f;
  j["D"] = b.D;
  return j;
}

std::string render(const ojson& j, Format f) {
  if (f == Format::json) return j.dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> kv;
  flatten(j, "", kv);
  std::ostringstream os;
  if (f == Format::csv) {
    os << "key,value\n";
    for (const auto& [k, v] : kv) os << csv_field(k) << "," << csv_field(v) << "\n";
  } else {
    for (const auto& [k, v] : kv) os << k << ": " << v << "\n";
  }
  return os.str();
}

std::string render_table(const std::vector<std::string>& columns, const std::vector<std::vector<double>>& rows,
                         Format f, const ojson& meta) {
  if (f == Format::json) {
    ojson j = meta;
    j["columns"] = columns;
    j["rows"] = rows;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  const char* sep = f == Format::csv ? "," : "  ";
  for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? sep : "") << columns[i];
  os << "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? sep : "") << num(r[i]);
    os << "\n";
  }
  return os.str();
}

std::string render_checks(const std::vector<CheckResult>& checks, Format f, const ojson& cert) {
  if (f == Format::json) return cert.dump(2) + "\n";
  std::ostringstream os;
  if (f == Format::csv) {
    os << "id,title,pass,summary\n";
    for (const auto& c : checks)
      os << c.id << "," << csv_field(c.title) << "," << (c.pass ? "true" : "false") << "," << csv_field(c.summary)
         << "\n";
  } else {
    for (const auto& c : checks)
      os << "[" << (c.pass ? "PASS" : "FAIL") << "] " << c.id << " " << c.title << ": " << c.summary << "\n";
  }
  return os.str();
}

}  // namespace ptb
