#include "wittsupport/report.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace witt {

namespace {

const std::set<std::string> kChecks{"convexity", "upset", "rays", "mixed"};

CheckResult upset_for(const FamilyDescriptor& d, const SupportWindow& w) {
  if (d.family != "verma" || d.n < 2) return upset_complement_check(w);
  // Lemma-5 normalized coordinates around the top offset 0.
  try {
    CheckResult r = upset_complement_check(lemma5_normalized(w, LatticeVector(d.n)));
    return r;
  } catch (const std::invalid_argument&) {
    return CheckResult{"upset", false, {LatticeVector(d.n)}, 0};
  }
}

CheckResult rays_check(const SupportWindow& w) {
  CheckResult r{"rays", true, {}, 0};
  const std::size_t n = w.dim();
  Box dirs = Box::cube(n, 2);
  for (std::size_t i = 0; i < n; ++i) dirs.lo[i] = 1;
  std::set<LatticeVector> bad;
  for (const auto& mu : w.support())
    for (const auto& alpha : dirs.points()) {
      RayProfile p;
      try {
        p = ray_profile(w, mu, alpha);
      } catch (const std::invalid_argument&) {
        continue;  // short ray
      }
      ++r.checked;
      if (p.kind == RayKind::Irregular) bad.insert(mu);
    }
  r.violations.assign(bad.begin(), bad.end());
  r.pass = bad.empty();
  return r;
}

Json ghw_json(const std::optional<GhwWitness>& g) {
  if (!g) return nullptr;
  return Json{{"offset", to_json(g->offset)}, {"N", g->N},     {"basis", to_json(g->basis)},
              {"scope", g->scope},           {"radius", g->radius}, {"vector", to_json(g->vector)}};
}

Json options_json(const ClassifyOptions& o) {
  Json j{{"checks", o.checks}};
  j["box"] = o.box ? Json(*o.box) : Json(nullptr);
  j["radii"] = o.radii ? Json::array({o.radii->first, o.radii->second}) : Json(nullptr);
  return j;
}

ClassifyOptions options_from_json(const Json& j) {
  ClassifyOptions o;
  o.checks = j.at("checks").get<std::vector<std::string>>();
  if (!j.at("box").is_null()) o.box = j.at("box").get<std::int64_t>();
  if (!j.at("radii").is_null()) o.radii = std::make_pair(j.at("radii")[0].get<std::int64_t>(), j.at("radii")[1].get<std::int64_t>());
  return o;
}

}  // namespace

std::vector<CheckResult> run_checks(const FamilyDescriptor& d, const WeightModule&, const SupportWindow& w,
                                    const ClassifyOptions& opts, Json* mixed_section) {
  std::vector<CheckResult> out;
  for (const auto& c : opts.checks) {
    if (!kChecks.count(c)) throw std::invalid_argument("unknown check '" + c + "'");
    if (c == "convexity") out.push_back(complement_convexity_check(w));
    if (c == "upset") out.push_back(upset_for(d, w));
    if (c == "rays") out.push_back(rays_check(w));
    if (c == "mixed") {
      std::pair<std::int64_t, std::int64_t> radii{1, 2};
      if (d.family == "verma") radii = {d.verma.B, d.verma.B + 2};
      if (opts.radii) radii = *opts.radii;
      MixedSupport ms = d.family == "verma" ? mixed_refine(d, radii.first, radii.second, w.box)
                                            : mixed_refine(radius_builder(d), radii.first, radii.second, w.box);
      out.push_back(finsupp_convexity_check(ms, w));
      if (mixed_section) {
        Json inf = Json::array(), und = Json::array();
        for (const auto& x : ms.with_tag(MixedTag::Inf)) inf.push_back(to_json(x));
        for (const auto& x : ms.with_tag(MixedTag::BoundaryUndetermined)) und.push_back(to_json(x));
        *mixed_section = Json{{"radii", Json::array({radii.first, radii.second})},
                              {"inf", inf},
                              {"boundary_undetermined", und}};
      }
    }
  }
  return out;
}

ClassifyOutcome classify_family(const Json& descriptor, const ClassifyOptions& opts) {
  FamilyDescriptor d = parse_descriptor(descriptor);
  if (opts.box) {
    d.box = *opts.box;
    d = parse_descriptor(to_json(d));  // revalidates the box against the truncation
  }
  for (const auto& c : opts.checks)
    if (!kChecks.count(c)) throw std::invalid_argument("unknown check '" + c + "'");
  auto m = build_module(d);
  ClassifyOutcome out;
  out.window = support_window(*m, scan_window(d, *m));
  out.classification = classify_support(out.window);
  Json mixed = nullptr;
  auto checks = run_checks(d, *m, out.window, opts, &mixed);
  std::optional<GhwWitness> ghw = find_ghw_vector(*m, out.window.box);

  Json& r = out.report;
  r["schema"] = kReportSchema;
  r["descriptor"] = to_json(d);
  r["options"] = options_json(opts);
  Json w = window_to_json(out.window);
  for (auto& [k, v] : w.items()) r[k] = v;
  r["verdict"] = to_string(out.classification.verdict);
  if (out.classification.cut) {
    Json cert = to_json(*out.classification.cut);
    cert["scope"] = to_string(out.classification.scope);
    r["certificate"] = cert;
  } else {
    r["certificate"] = nullptr;
  }
  Json cj = Json::array();
  for (const auto& c : checks) {
    cj.push_back(to_json(c));
    out.checks_pass = out.checks_pass && c.pass;
  }
  r["checks"] = cj;
  r["ghw"] = ghw_json(ghw);
  if (!mixed.is_null()) r["mixed"] = mixed;
  return out;
}

Validation validate_report(const Json& report) {
  Validation v;
  auto problem = [&](std::string s) {
    v.ok = false;
    v.problems.push_back(std::move(s));
  };
  try {
    if (report.value("schema", std::string()) != kReportSchema) {
      problem("schema is not " + std::string(kReportSchema));
      return v;
    }
    FamilyDescriptor d = parse_descriptor(report.at("descriptor"));
    ClassifyOptions opts = options_from_json(report.at("options"));
    SupportWindow w = window_from_json(report);
    Verdict verdict = parse_verdict(report.at("verdict").get<std::string>());
    for (const auto& c : report.at("checks")) (void)check_from_json(c);

    auto m = build_module(d);
    const Json& cert = report.at("certificate");
    if (verdict == Verdict::Cut) {
      if (cert.is_null()) {
        problem("Cut verdict without certificate");
      } else {
        HalfSpaceSpec h = halfspace_from_json(cert);
        Scope scope = parse_scope(cert.at("scope").get<std::string>());
        if (!verify_cut(w, h, scope == Scope::Window)) problem("cut certificate fails on the reported window");
        if (scope == Scope::Analytic) {
          auto a = m->analytic_cut();
          if (!a || a->a != h.a || a->b != h.b) problem("analytic certificate does not match the family construction");
        }
      }
    } else if (!cert.is_null()) {
      problem("certificate present for a non-cut verdict");
    }
    if (!report.at("ghw").is_null()) {
      const Json& g = report.at("ghw");
      LatticeVector mu = lattice_from_json(g.at("offset"));
      ScalarVector vec = scalar_vector_from_json(g.at("vector"));
      auto N = is_ghw(*m, mu, vec, g.at("radius").get<std::int64_t>(), basis_from_json(g.at("basis")));
      if (!N || *N != g.at("N").get<std::int64_t>()) problem("GHW witness does not re-verify");
    }
    Json again = classify_family(report.at("descriptor"), opts).report;
    if (again != report) problem("regenerating the report from its descriptor gives a different result");
  } catch (const std::exception& e) {
    problem(std::string("malformed report: ") + e.what());
  }
  return v;
}

std::string window_csv(const SupportWindow& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.dim(); ++i) os << "x" << i + 1 << ',';
  os << "dim,boundary\n";
  for (const auto& [x, d] : w.dims) {
    for (auto c : x) os << c << ',';
    os << d << ',' << (w.boundary.count(x) ? 1 : 0) << '\n';
  }
  return os.str();
}

}  // namespace witt
