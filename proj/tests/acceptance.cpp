#include "wittsupport/catalog.hpp"
#include "wittsupport/cli.hpp"
#include "wittsupport/report.hpp"
#include "wittsupport/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace witt;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& note) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", n, note.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string summary(const SuiteResult& r) {
  std::string s = r.name + " " + std::to_string(r.checked) + " checks";
  if (!r.failures.empty()) s += " (" + r.failures.front() + ")";
  return s;
}

double seconds(const std::function<void()>& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void suite_criterion(int n, const std::string& name, const std::function<bool(const SuiteResult&)>& extra = {}) {
  SuiteResult r = run_suite(name);
  report(n, r.pass && (!extra || extra(r)), summary(r));
}

}  // namespace

int main() {
  {
    SuiteResult a, j, d;
    double t = seconds([&] {
      a = run_suite("antisymmetry");
      j = run_suite("jacobi");
      d = run_suite("derivation-oracle");
    });
    bool ok = a.pass && j.pass && d.pass && a.checked == 1000 && j.checked == 1000 && d.checked == 50 && t < 10;
    report(1, ok, summary(a) + "; " + summary(j) + "; " + summary(d) + "; " + std::to_string(t) + " s");
  }
  {
    SuiteResult g;
    double t = seconds([&] { g = run_suite("grading"); });
    report(2, g.pass && g.checked == 400 && t < 10, summary(g) + "; " + std::to_string(t) + " s");
  }
  suite_criterion(3, "module-axiom", [](const SuiteResult& r) { return r.checked == 500; });
  suite_criterion(4, "punctured");
  suite_criterion(5, "verma-partitions", [](const SuiteResult& r) {
    return r.details.at("dims_K7") == Json::array({1, 1, 2, 3, 5, 7, 11, 15}) && r.details.at("oracle") == r.details.at("dims_K7");
  });
  suite_criterion(6, "cut");
  {
    SuiteResult plain = run_suite("convexity");
    SuiteOptions inject;
    inject.inject_negative = true;
    SuiteResult neg = run_suite("convexity", inject);
    bool flagged = !neg.pass && !neg.failures.empty() && neg.failures.front().find("(2,0)") != std::string::npos;
    report(7, plain.pass && flagged, summary(plain) + "; injected: " + (neg.failures.empty() ? "none" : neg.failures.front()));
  }
  suite_criterion(8, "semigroup", [](const SuiteResult& r) { return r.checked == 50; });
  suite_criterion(9, "rays");
  suite_criterion(10, "propagation");
  suite_criterion(11, "trichotomy");
  suite_criterion(12, "mixed");
  {
    bool ok = true;
    std::string note;
    for (const auto& e : family_catalog()) {
      cli::RunConfig c;
      c.command = "classify";
      c.family = e.descriptor.dump();
      cli::RunOutput a = cli::dispatch(c), b = cli::dispatch(c);
      Validation v = validate_report(Json::parse(a.text));
      if (a.exit_code != 0 || a.text != b.text || !v.ok) {
        ok = false;
        note += e.descriptor.at("name").get<std::string>() + " ";
      }
    }
    cli::RunConfig vc;
    vc.command = "verify";
    vc.seed = 13;
    cli::RunOutput v1 = cli::dispatch(vc), v2 = cli::dispatch(vc);
    ok = ok && v1.exit_code == 0 && v1.text == v2.text;
    Json round = Json::parse(v1.text);
    ok = ok && round.dump(2) + "\n" == v1.text;
    report(13, ok, note.empty() ? "classify and verify reports byte-identical, all catalog reports re-validate" : "mismatch: " + note);
  }
  return failures == 0 ? 0 : 1;
}
