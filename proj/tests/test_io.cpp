#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <sstream>

#include "entlab/io.hpp"

using namespace entlab;

TEST_CASE("family state specs parse and realize") {
  const StateSpec spec =
      parse_state_spec(R"({"family": {"id": 3, "c": 0.3, "d": 0.2, "v": 0.3, "alpha": 0.0}})");
  const auto* p = std::get_if<FamilyParams>(&spec.value);
  REQUIRE(p != nullptr);
  CHECK(p->family == 3);
  CHECK(p->diag1 == 0.3);
  CHECK(p->diag2 == 0.2);
  CHECK(negativity_oracle(realize(spec)) == doctest::Approx(0.21622776601683796).epsilon(1e-12));
  CHECK(describe(spec) == "family 3 (c=0.3, d=0.2, v=0.3, alpha=0)");
}

TEST_CASE("pure and mixed specs parse") {
  const StateSpec psi = parse_state_spec(R"({"pure": {"kind": "psi", "theta": 0.785398163397448, "alpha": 0.0}})");
  CHECK(std::holds_alternative<PureInitialState>(psi.value));
  CHECK(negativity_oracle(realize(psi)) == doctest::Approx(0.5).epsilon(1e-9));

  const StateSpec phi = parse_state_spec(R"({"pure": {"kind": "phi_minus", "theta": 0.785398163397448}})");
  CHECK(negativity_oracle(realize(phi)) == doctest::Approx(0.5).epsilon(1e-9));

  const StateSpec mixed = parse_state_spec(R"({"mixed": {"kind": 5, "theta": 0.4}})");
  CHECK(negativity_oracle(realize(mixed)) <= 1e-12);
}

TEST_CASE("raw specs parse 16 [re, im] pairs row-major") {
  std::ostringstream os;
  os << R"({"raw": [)";
  for (int i = 0; i < 16; ++i) {
    os << (i % 5 == 0 ? "[0.25, 0]" : "[0, 0]");
    if (i != 15) os << ", ";
  }
  os << "]}";
  const StateSpec spec = parse_state_spec(os.str());
  CHECK(negativity_oracle(realize(spec)) == 0.0);

  CHECK_THROWS_AS(parse_state_spec(R"({"raw": [[1, 0]]})"), ConfigError);
}

TEST_CASE("strict key checking") {
  CHECK_THROWS_WITH_AS(
      parse_state_spec(R"({"family": {"id": 1, "a": 0.5, "v": 0.5, "bogus": 1}})"),
      doctest::Contains("bogus"), ConfigError);
  // Family 1 has no "d" weight.
  CHECK_THROWS_AS(parse_state_spec(R"({"family": {"id": 1, "a": 0.5, "d": 0.1, "v": 0.5}})"),
                  ConfigError);
  CHECK_THROWS_AS(parse_state_spec(R"({"family": {"id": 1, "a": 0.5}})"), ConfigError);
  CHECK_THROWS_AS(parse_state_spec(R"({"pure": {"kind": "phi_plus", "theta": 1, "alpha": 2}})"),
                  ConfigError);
  CHECK_THROWS_AS(parse_state_spec(R"({})"), ConfigError);
  CHECK_THROWS_AS(
      parse_state_spec(R"({"mixed": {"kind": 1, "theta": 0}, "pure": {"kind": "psi", "theta": 0}})"),
      ConfigError);
}

TEST_CASE("parse errors carry a line number") {
  const std::string text = "{\n  \"family\": {\n  oops\n}}";
  CHECK_THROWS_WITH_AS(parse_state_spec(text), doctest::Contains("line 3"), ConfigError);
}

TEST_CASE("CSV rendering uses 17 significant digits and round-trips") {
  SurfaceSample s;
  s.theta = 0.7853981633974483;
  s.time = 1.0 / 3.0;
  s.scaled_time_T = 2.0 / 3.0;
  s.obs = {0.1, -0.2, 0.3, 1.9999999999999998};
  s.n_oracle = 0.21622776601683796;
  s.n_printed = 0.16055512754639896;
  s.n_corrected = s.n_oracle;
  const std::string csv = surface_csv_string({s});
  std::istringstream in(csv);
  std::string header, row;
  std::getline(in, header);
  CHECK(header == "theta,time,T,Sz,S2,s11,s12,N_oracle,N_printed,N_corrected");
  std::getline(in, row);
  std::istringstream fields(row);
  std::string field;
  std::vector<double> parsed;
  while (std::getline(fields, field, ',')) parsed.push_back(std::strtod(field.c_str(), nullptr));
  REQUIRE(parsed.size() == 10);
  CHECK(parsed[0] == s.theta);
  CHECK(parsed[1] == s.time);
  CHECK(parsed[4] == s.obs.s2);
  CHECK(parsed[7] == s.n_oracle);
}

TEST_CASE("verification table marks passes and failures") {
  VerificationReport good;
  good.claim = "always true";
  good.trials = 3;
  good.tolerance = 1e-10;
  good.max_abs_error = 0.0;
  good.pass = true;
  VerificationReport bad;
  bad.claim = "always false";
  bad.pass = false;
  bad.failures.push_back({"some point", 0.5});
  const std::string table = verification_table({good, bad});
  CHECK(table.find("[PASS]") != std::string::npos);
  CHECK(table.find("[FAIL]") != std::string::npos);
  CHECK(table.find("some point") != std::string::npos);
}

TEST_CASE("discrepancy report flags exactly the documented issues") {
  const DiscrepancyReport report = build_discrepancy_report(7, 25);
  REQUIRE(report.issues.size() == 5);
  CHECK(report.issues[0].id == "closed-form-families-3-6");
  CHECK(report.issues[1].id == "observable-relation-half-families-3-6");
  CHECK(report.issues[2].id == "psi-relation-missing-square");
  CHECK(report.issues[3].id == "mixed-state-6-hermiticity");
  CHECK(report.issues[4].id == "families-5-6-coherence-symbol-reuse");
  CHECK(report.issues[0].max_abs_deviation > 0.0);
  CHECK(report.issues[2].max_abs_deviation >= 0.2);   // the bound violation at <Sz> = -1
  CHECK(report.issues[3].max_abs_deviation == doctest::Approx(1.0));  // defect at theta = pi/2
  CHECK(report.issues[4].max_abs_deviation == 0.0);

  // Deterministic at fixed seed.
  const DiscrepancyReport again = build_discrepancy_report(7, 25);
  std::ostringstream a, b;
  write_discrepancy_report(a, report);
  write_discrepancy_report(b, again);
  CHECK(a.str() == b.str());
}
