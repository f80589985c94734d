#include "helpers.hpp"

#include "wittsupport/catalog.hpp"
#include "wittsupport/cli.hpp"
#include "wittsupport/descriptor.hpp"
#include "wittsupport/report.hpp"
#include "wittsupport/verify.hpp"

using namespace witt;
using witt::test::S;

TEST_CASE("json round trips") {
  CHECK(lattice_from_json(to_json(LatticeVector{3, -4})) == LatticeVector{3, -4});
  RationalVector q{Rational(1, 2), Rational(-3)};
  CHECK(to_json(q) == Json::array({"1/2", "-3"}));
  CHECK(rational_vector_from_json(to_json(q)) == q);
  WittElement x = WittElement::term({1, -1}, S({"γ1", "2/3"})) + WittElement::basis({0, 2}, 1);
  CHECK(witt_from_json(to_json(x), 2) == x);
  UnimodularBasis m({{3, 2}, {4, 3}});
  CHECK(basis_from_json(to_json(m)) == m);
  Box b = Box::cube(2, 3);
  CHECK(box_from_json(to_json(b)) == b);
  CHECK(scalar_from_json(Json(5)) == Scalar(5));
  CHECK(scalar_from_json(Json("1/4")) == Scalar(Rational(1, 4)));
}

TEST_CASE("window serialization") {
  TensorModule quot({S({"0", "0"}), Scalar(0), TensorVariant::QuotientByTrivial});
  SupportWindow w = support_window(quot, Box::cube(2, 3));
  SupportWindow r = window_from_json(window_to_json(w));
  CHECK(r.dims == w.dims);
  CHECK(r.zero_weight_offset == w.zero_weight_offset);
  CHECK(r.box == w.box);
}

TEST_CASE("descriptor parsing") {
  FamilyDescriptor d = parse_descriptor(Json{{"family", "tensor"}, {"λ", "γ"}, {"b", "1/2"}});
  CHECK(d.n == 2);
  CHECK(d.tensor.lambda == formal_vector("γ", 2));
  FamilyDescriptor again = parse_descriptor(to_json(d));
  CHECK(to_json(again) == to_json(d));

  FamilyDescriptor v = parse_descriptor(Json{{"family", "verma"}, {"G", {{0, 1}}}, {"beta", {1, 0}}, {"X", "trivial"}});
  CHECK(v.verma.K == 4);
  CHECK(v.verma.B == 4);

  CHECK_THROWS_AS(parse_descriptor(Json{{"family", "bogus"}}), DescriptorError);
  CHECK_THROWS_AS(parse_descriptor(Json{{"family", "tensor"}, {"lambda", {"1/2"}}, {"b", 0}, {"variant", "quotient_by_trivial"}}),
                  DescriptorError);
  CHECK_THROWS_AS(parse_descriptor(Json{{"family", "verma"}, {"G", {{0, 2}}}, {"beta", {1, 0}}}), DescriptorError);
  CHECK_THROWS_AS(parse_descriptor(Json{{"family", "verma"}, {"G", {{0, 1}}}, {"beta", {1, 0}}, {"box", 50}}),
                  DescriptorError);
  CHECK_THROWS_AS(parse_descriptor(Json::array()), DescriptorError);
}

TEST_CASE("reports re-validate and detect tampering") {
  Json desc{{"family", "verma"}, {"n", 2}, {"G", {{0, 1}}}, {"beta", {1, 0}}, {"X", "trivial"}, {"K", 3}, {"B", 3}};
  ClassifyOutcome out = classify_family(desc);
  CHECK(out.report.at("schema") == kReportSchema);
  CHECK(out.report.at("verdict") == "Cut");
  Validation ok = validate_report(out.report);
  CHECK(ok.ok);

  Json bad = out.report;
  bad["certificate"]["a"] = Json::array({"-1", "0"});
  CHECK_FALSE(validate_report(bad).ok);

  Json dims = out.report;
  dims["dims"] = Json::array();
  CHECK_FALSE(validate_report(dims).ok);

  Json schema = out.report;
  schema["schema"] = "other/1";
  CHECK_FALSE(validate_report(schema).ok);

  CHECK_THROWS_AS(classify_family(desc, ClassifyOptions{{"nope"}, {}, {}}), std::invalid_argument);
}

TEST_CASE("csv export") {
  Json desc{{"family", "tensor"}, {"lambda", {"0", "0"}}, {"b", "0"}, {"variant", "quotient_by_trivial"}, {"box", 1}};
  std::string csv = window_csv(classify_family(desc).window);
  CHECK(csv.rfind("x1,x2,dim,boundary\n", 0) == 0);
  CHECK(csv.find("\n0,0,0,0\n") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 10);
}

TEST_CASE("cli classify examples") {
  cli::RunConfig c;
  c.command = "classify";
  c.family = R"({"family":"tensor","lambda":0,"b":0,"variant":"quotient_by_trivial","box":6})";
  cli::RunOutput r = cli::dispatch(c);
  CHECK(r.exit_code == 0);
  CHECK(Json::parse(r.text).at("verdict") == "Punctured");

  c.family = R"({"family":"verma","n":2,"G":[[0,1]],"beta":[1,0],"X":"trivial","K":4,"B":4})";
  r = cli::dispatch(c);
  CHECK(r.exit_code == 0);
  Json rep = Json::parse(r.text);
  CHECK(rep.at("verdict") == "Cut");
  CHECK(rep.at("certificate").at("a") == Json::array({"1", "0"}));

  c.family = R"({"family":"tensor","λ":"γ","b":"1/2","variant":"full","box":5})";
  CHECK(Json::parse(cli::dispatch(c).text).at("verdict") == "Dense");

  c.family = R"({"family":"tensor","lambda":0,"b":0,"variant":"quotient_by_trivial","box":4})";
  c.checks = {"upset"};
  CHECK(cli::dispatch(c).exit_code == 2);

  c.checks = {};
  c.family = R"({"family":"tensor","lambda":"1/2","b":0,"variant":"quotient_by_trivial"})";
  r = cli::dispatch(c);
  CHECK(r.exit_code == 1);
  CHECK(r.diagnostics.find("error:") != std::string::npos);
  c.family = "{not json";
  CHECK(cli::dispatch(c).exit_code == 1);
  c.family = "/definitely/missing.json";
  CHECK(cli::dispatch(c).exit_code == 1);
}

TEST_CASE("cli argument parsing") {
  const char* argv[] = {"wittsupport", "classify", "--family", "{}", "--box", "3", "--radii", "2,4", "--checks",
                        "convexity,mixed", "--format", "csv"};
  auto [cfg, early] = cli::parse_args(12, argv);
  REQUIRE(cfg);
  CHECK(cfg->command == "classify");
  CHECK(cfg->box == std::optional<std::int64_t>(3));
  CHECK(cfg->radii == std::optional<std::pair<std::int64_t, std::int64_t>>({2, 4}));
  CHECK(cfg->checks == std::vector<std::string>{"convexity", "mixed"});
  CHECK(cfg->format == "csv");

  const char* bad[] = {"wittsupport", "classify", "--family", "{}", "--radii", "2;4"};
  auto [none, out] = cli::parse_args(6, bad);
  CHECK_FALSE(none);
  CHECK(out.exit_code == 1);

  const char* verify[] = {"wittsupport", "verify", "jacobi", "--seed", "11", "--inject-negative"};
  auto [v, vo] = cli::parse_args(6, verify);
  REQUIRE(v);
  CHECK(v->checks == std::vector<std::string>{"jacobi"});
  CHECK(v->seed == 11);
  CHECK(v->inject_negative);
}

TEST_CASE("cli verify") {
  cli::RunConfig c;
  c.command = "verify";
  c.checks = {"jacobi"};
  cli::RunOutput r = cli::dispatch(c);
  CHECK(r.exit_code == 0);
  Json rep = Json::parse(r.text);
  CHECK(rep.at("suites")[0].at("checked") == 1000);
  CHECK(rep.at("suites")[0].at("pass") == true);

  c.checks = {"convexity"};
  c.inject_negative = true;
  r = cli::dispatch(c);
  CHECK(r.exit_code == 2);
  CHECK(r.diagnostics.find("(2,0)") != std::string::npos);

  c.checks = {"no-such-suite"};
  CHECK(cli::dispatch(c).exit_code == 1);
}

TEST_CASE("uniform_int is reproducible and in range") {
  std::mt19937_64 a(5), b(5);
  for (int i = 0; i < 1000; ++i) {
    auto x = uniform_int(a, -3, 4);
    CHECK(x == uniform_int(b, -3, 4));
    CHECK(x >= -3);
    CHECK(x <= 4);
  }
  std::mt19937_64 g(1);
  CHECK(uniform_int(g, 9, 9) == 9);
  CHECK_THROWS_AS(uniform_int(g, 2, 1), std::invalid_argument);
}
