#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "orbita/checks.hpp"

using namespace orbita;

namespace {

CheckRequest mk(const std::string& name,
                std::vector<std::pair<std::string, std::string>> params,
                GbLimits lim = {}) {
  CheckRequest req;
  req.name = name;
  req.params = std::move(params);
  req.lim = lim;
  return req;
}

}  // namespace

TEST_CASE("check catalog and name canonicalization") {
  REQUIRE(check_catalog().size() == 20);
  std::set<std::string> names(check_catalog().begin(), check_catalog().end());
  REQUIRE(names.size() == 20);
  CHECK(names.count("SQ-TANISAKI") == 1);
  CHECK(names.count("CONJ-A-NOT-0") == 1);
  CHECK(names.count("APPENDIX-A") == 1);
  CHECK(canonical_check_name("CONJ-A!=0") == "CONJ-A-NOT-0");
  CHECK(canonical_check_name("CONJ-A≠" "0") == "CONJ-A-NOT-0");
  CHECK(canonical_check_name("VK-DIM") == "VK-DIM");

  REQUIRE_THROWS_AS(run_check(mk("NO-SUCH-CHECK", {})), std::invalid_argument);
  REQUIRE_THROWS_AS(run_check(mk("BI1", {{"n", "3"}})), std::invalid_argument);  // k missing
  REQUIRE_THROWS_AS(run_check(mk("BI1", {{"n", "3"}, {"k", "x"}})), std::invalid_argument);
  REQUIRE_THROWS_AS(run_check(mk("EX-333", {{"variant", "seventh"}})),
                    std::invalid_argument);
}

TEST_CASE("REMARK-12 passes with slices (5,4,3)") {
  CheckOutcome out = run_check(mk("REMARK-12", {}));
  REQUIRE(out.status == CheckStatus::Pass);
  CHECK(out.computed["dimension"] == Json(12));
  CHECK(out.computed["cumulative"] == Json::array({5, 9, 12}));
  CHECK(out.computed["slices"] == Json::array({5, 4, 3}));
  CHECK(out.expected["value"] == Json::array({5, 4, 3}));
  CHECK(out.expected["provenance"] == "stated");
  CHECK(out.witnesses.empty());
}

TEST_CASE("SQ-TANISAKI on (n=4, b=(3,1)) and on a composition") {
  CheckOutcome out = run_check(mk("SQ-TANISAKI", {{"n", "4"}, {"b", "3,1"}}));
  REQUIRE(out.status == CheckStatus::Pass);
  CHECK(out.computed["dimension"] == Json(64));
  CHECK(out.computed["initial_certified"] == Json(true));
  CHECK(out.computed["specialized_dimension"] == Json(64));
  CHECK(out.computed["vanishes_on_orbit"] == Json(true));
  CHECK(out.expected["value"] == Json(64));

  // compositions are accepted and give the same sorted datum
  CheckOutcome comp = run_check(mk("SQ-TANISAKI", {{"n", "4"}, {"b", "1,3"}}));
  REQUIRE(comp.status == CheckStatus::Pass);
  CHECK(comp.computed["dimension"] == Json(64));
}

TEST_CASE("UNIFORM-A0 matches the interpolation oracle") {
  CheckOutcome out = run_check(mk("UNIFORM-A0", {{"n", "3"}, {"b", "2,1"}}));
  REQUIRE(out.status == CheckStatus::Pass);
  CHECK(out.computed["generic_match"] == Json(true));
  CHECK(out.computed["initial_match"] == Json(true));
}

TEST_CASE("BI1 dimensions and interpolation gate") {
  CheckOutcome out = run_check(mk("BI1", {{"n", "4"}, {"k", "1"}}));
  REQUIRE(out.status == CheckStatus::Pass);
  CHECK(out.computed["dimension"] == Json(8));
  CHECK(out.computed["interpolation_checked"] == Json(true));

  CheckOutcome big = run_check(mk("BI1", {{"n", "3"}, {"k", "3"}}));
  REQUIRE(big.status == CheckStatus::Pass);
  CHECK(big.computed["dimension"] == Json(48));
  CHECK(big.expected["value"] == Json(48));
}

TEST_CASE("B1EQ2 instances and the conjectural flag") {
  CheckOutcome out = run_check(mk("B1EQ2", {{"n", "3"}, {"a", "1"}, {"k", "1"}}));
  REQUIRE(out.status == CheckStatus::Pass);
  CHECK(out.computed["dimension"] == Json(12));
  CHECK(out.computed["conjectural"] == Json(true));

  CheckOutcome proved = run_check(mk("B1EQ2", {{"n", "4"}, {"a", "2"}, {"k", "1"}}));
  REQUIRE(proved.status == CheckStatus::Pass);
  CHECK(proved.computed["dimension"] == Json(24));
  CHECK(proved.computed["conjectural"] == Json(false));

  // (4,1,1) lies outside the b1=2 parameter range (no Levi datum has these
  // parameters) and the formula value 48 is adjudicated false: the quotient
  // dimension is 34, confirmed under three monomial orders and by an
  // independent Macaulay-rank oracle.  The conjectural instance is recorded
  // as a DISCREPANCY, not a failure of this tool.
  CheckOutcome adjudicated = run_check(mk("B1EQ2", {{"n", "4"}, {"a", "1"}, {"k", "1"}}));
  REQUIRE(adjudicated.status == CheckStatus::Discrepancy);
  CHECK(adjudicated.computed["dimension"] == Json(34));
  CHECK(adjudicated.computed["conjectural"] == Json(true));
  CHECK(adjudicated.expected["value"] == Json(48));
  REQUIRE(!adjudicated.witnesses.empty());
  CHECK(adjudicated.witnesses[0] == "quotient dimension 34 != 48");
}

TEST_CASE("CONJ-A-NOT-0 on the smallest instance, via the alias") {
  CheckOutcome out = run_check(mk("CONJ-A!=0", {{"n", "2"}, {"a", "1"}, {"b", "1"}}));
  REQUIRE(out.status == CheckStatus::Pass);
  CHECK(out.computed["generators_in_initial"] == Json(true));
  CHECK(out.computed["cap_stable"] == Json(true));
  CHECK(out.computed["dimension"] == Json(4));  // orbit of (t1, 0) under B2
}

TEST_CASE("E2P-H2P identity sweep") {
  CheckOutcome out = run_check(mk("E2P-H2P", {{"n", "3"}}));
  REQUIRE(out.status == CheckStatus::Pass);
  CHECK(out.computed["identities"] == Json(3 * 4));  // sum over L of |L| = n 2^(n-1)
  CHECK(out.computed["all_in_ideal"] == Json(true));
}

TEST_CASE("Pfaffian identity checks") {
  CheckOutcome pf = run_check(mk("PF-SQUARE", {}));
  REQUIRE(pf.status == CheckStatus::Pass);
  CHECK(pf.computed["matrices"] == Json(100));

  CheckOutcome spf = run_check(mk("SPF-SQUARE", {}));
  REQUIRE(spf.status == CheckStatus::Pass);
  CHECK(spf.computed["matrices"] == Json(50));
  const std::string sign = spf.computed["example_sign"].get<std::string>();
  CHECK((sign == "+1" || sign == "-1"));

  CheckOutcome minor = run_check(mk("SPF-MINOR", {{"n", "2"}}));
  REQUIRE(minor.status == CheckStatus::Pass);
  CHECK(minor.computed["minors_checked"] == Json(3));

  CheckOutcome rank = run_check(mk("PF-RANK", {{"N", "5"}, {"l", "1"}}));
  REQUIRE(rank.status == CheckStatus::Pass);
  CHECK(rank.computed["generators"] == Json(1));  // C(2,2)
  CHECK(rank.expected["value"] == Json(1));
}

TEST_CASE("TYPEC-FLAT and TYPEC-NONFLAT") {
  CheckOutcome flat = run_check(mk("TYPEC-FLAT", {{"lambda", "2,2"}}));
  REQUIRE(flat.status == CheckStatus::Pass);
  CHECK(flat.computed["levi_b"] == "2");

  CheckOutcome flat4 = run_check(mk("TYPEC-FLAT", {{"lambda", "4"}}));
  REQUIRE(flat4.status == CheckStatus::Pass);
  CHECK(flat4.computed["levi_b"] == "1,1");

  CheckOutcome nonflat = run_check(mk("TYPEC-NONFLAT", {{"n", "3"}, {"a", "1"}, {"b", "2"}}));
  REQUIRE(nonflat.status == CheckStatus::Pass);
  CHECK(nonflat.computed["sets"] == Json(1));  // C(3,3)
  CHECK(nonflat.computed["all_vanish"] == Json(true));
}

TEST_CASE("EX-333 both variants") {
  CheckOutcome cube = run_check(mk("EX-333", {{"variant", "cube"}}));
  INFO("cube normal form: " << cube.computed["normal_form"].dump());
  REQUIRE(cube.status == CheckStatus::Pass);
  CHECK(cube.computed["zero"] == Json(false));
  CHECK(cube.expected["provenance"] == "derived");

  // the run adjudicates the stated claim (zero would be a DISCREPANCY);
  // computed: the normal form is nonzero, agreeing with the statement
  CheckOutcome fifth = run_check(mk("EX-333", {{"variant", "fifth"}}));
  INFO("fifth normal form: " << fifth.computed["normal_form"].dump());
  CHECK(fifth.expected["provenance"] == "stated");
  REQUIRE(fifth.status == CheckStatus::Pass);
  CHECK(fifth.computed["zero"] == Json(false));
}

TEST_CASE("counting checks: TWO-ROW-D, VERY-EVEN, VK-DIM") {
  CheckOutcome tr = run_check(mk("TWO-ROW-D", {{"n", "5"}, {"k", "2"}}));
  REQUIRE(tr.status == CheckStatus::Pass);
  CHECK(tr.computed["dimension"] == Json(16));  // 1 + 5 + 10

  CheckOutcome ve = run_check(mk("VERY-EVEN", {{"k", "1"}}));
  REQUIRE(ve.status == CheckStatus::Pass);
  CHECK(ve.computed["dimension"] == Json(2));
  CHECK(ve.computed["combined_match"] == Json(true));

  CheckOutcome vk = run_check(mk("VK-DIM", {{"n", "4"}, {"k", "2"}}));
  REQUIRE(vk.status == CheckStatus::Pass);
  CHECK(vk.computed["dimension"] == Json(6));
}

TEST_CASE("APPENDIX-A statuses") {
  CheckOutcome good = run_check(mk("APPENDIX-A", {{"case", "B:2,2,1"}}));
  REQUIRE(good.status == CheckStatus::Pass);
  CHECK(good.computed["points"] == Json(4));
  CHECK(good.computed["rank_generic"] == Json(4));

  CheckOutcome disc = run_check(mk("APPENDIX-A", {{"case", "C:4,3,3"}}));
  REQUIRE(disc.status == CheckStatus::Discrepancy);
  CHECK(disc.computed["points"] == Json(80));
  CHECK(disc.computed["generators_vanish"] == Json(true));
  CHECK(disc.computed["initial_match"] == Json(false));
  CHECK(disc.computed["stated_initial_dimension"] == Json(131));
  CHECK(disc.computed["rank_generic"] == Json(288));
  CHECK(disc.expected["value"] == Json(80));
  CHECK(!disc.witnesses.empty());
}

TEST_CASE("FLAG-EVAL across families") {
  CheckOutcome d = run_check(mk("FLAG-EVAL", {{"family", "D"}, {"n", "3"}, {"a", "1"}, {"b", "2"}}));
  REQUIRE(d.status == CheckStatus::Pass);
  CHECK(d.computed["relations"] == Json(3));
  CHECK(d.computed["images"] == Json(6 * 8));  // all sign masks when a > 0

  CheckOutcome d0 = run_check(mk("FLAG-EVAL", {{"family", "D"}, {"n", "2"}, {"a", "0"}, {"b", "1,1"}}));
  REQUIRE(d0.status == CheckStatus::Pass);
  CHECK(d0.computed["images"] == Json(2 * 2));  // even sign masks only

  CheckOutcome b = run_check(mk("FLAG-EVAL", {{"family", "B"}, {"n", "2"}, {"a", "0"}, {"b", "2"}}));
  REQUIRE(b.status == CheckStatus::Pass);
  CHECK(b.computed["images"] == Json(2 * 4));
}

TEST_CASE("FREE-RANK constant fiber rank") {
  CheckOutcome out = run_check(mk("FREE-RANK", {{"n", "2"}, {"b", "2"}}));
  REQUIRE(out.status == CheckStatus::Pass);
  CHECK(out.computed["constant"] == Json(true));
  CHECK(out.computed["common_rank"] == Json(4));
  REQUIRE(out.computed["fibers"].size() == 3);
}

TEST_CASE("suite request lists have the pinned sizes") {
  CHECK(suite_requests("appendix-a").size() == 6);
  CHECK(suite_requests("conjecture-instances").size() == 5);
  CHECK(suite_requests("paper-core").size() == 115);
  CHECK(suite_requests("properties").size() == 73);
  CHECK(suite_requests("all").size() == 115 + 73 + 5 + 6);
  REQUIRE_THROWS_AS(suite_requests("no-such-suite"), std::invalid_argument);

  // paper-core never contains conjecture instances
  for (const auto& req : suite_requests("paper-core")) CHECK(req.name != "CONJ-A-NOT-0");
}

TEST_CASE("reports are deterministic and thread count does not matter") {
  std::vector<CheckRequest> reqs = {
      mk("REMARK-12", {}),
      mk("VK-DIM", {{"n", "4"}, {"k", "2"}}),
      mk("TWO-ROW-D", {{"n", "3"}, {"k", "1"}}),
      mk("EX-333", {{"variant", "cube"}}),
  };
  Report serial1 = run_requests(reqs, 1);
  Report serial2 = run_requests(reqs, 1);
  Report threaded = run_requests(reqs, 3);
  const std::string a = report_json_text(serial1);
  CHECK(a == report_json_text(serial2));
  CHECK(a == report_json_text(threaded));

  // schema spot checks
  Json j = report_json(serial1);
  REQUIRE(j.contains("version"));
  CHECK(j["version"] == kToolVersion);
  REQUIRE(j.contains("seed"));
  CHECK(j["seed"] == 42);
  REQUIRE(j["limits"].contains("degree_cap"));
  REQUIRE(j["checks"].is_array());
  REQUIRE(j["checks"].size() == 4);
  for (const auto& c : j["checks"]) {
    REQUIRE(c.contains("id"));
    REQUIRE(c.contains("params"));
    REQUIRE(c.contains("status"));
    REQUIRE(c.contains("computed"));
    REQUIRE(c.contains("expected"));
    REQUIRE(c.contains("witnesses"));
    REQUIRE(c.contains("millis"));
    CHECK(c["millis"] == 0);  // zeroed unless timings are requested
  }
  CHECK(j["summary"]["pass"] == 4);
  CHECK(j["summary"]["fail"] == 0);

  // request order is preserved
  CHECK(j["checks"][0]["id"] == "REMARK-12");
  CHECK(j["checks"][3]["id"] == "EX-333");

  CHECK(report_exit_code(serial1, false) == 0);
  CHECK(report_exit_code(serial1, true) == 0);
}

TEST_CASE("resource limits produce SKIP, not a crash") {
  GbLimits tiny;
  tiny.degree_cap = 1;
  CheckOutcome out = run_check(mk("SQ-TANISAKI", {{"n", "4"}, {"b", "2,2"}}, tiny));
  REQUIRE(out.status == CheckStatus::Skip);
  REQUIRE(!out.witnesses.empty());
  CHECK(out.witnesses[0].find("resource limit") != std::string::npos);

  GbLimits slow;
  slow.time_budget_ms = 1;
  CheckOutcome t = run_check(mk("SQ-TANISAKI", {{"n", "4"}, {"b", "1,1,1,1"}}, slow));
  CHECK((t.status == CheckStatus::Skip || t.status == CheckStatus::Pass));

  Report rep = run_requests({mk("SQ-TANISAKI", {{"n", "4"}, {"b", "2,2"}}, tiny),
                             mk("VK-DIM", {{"n", "3"}, {"k", "1"}}, tiny)},
                            2, false, 42, tiny);
  CHECK(rep.count(CheckStatus::Skip) >= 1);
  CHECK(rep.count(CheckStatus::Fail) == 0);
  CHECK(report_exit_code(rep, false) == 0);
  CHECK(report_exit_code(rep, true) == 1);  // strict escalates skips
}

TEST_CASE("failing outcomes escalate the exit code") {
  // request with parameters a check rejects becomes a FAIL entry inside a suite run
  Report rep = run_requests({mk("BI1", {{"n", "3"}, {"k", "9"}})}, 1);
  REQUIRE(rep.entries.size() == 1);
  CHECK(rep.entries[0].outcome.status == CheckStatus::Fail);
  REQUIRE(!rep.entries[0].outcome.witnesses.empty());
  CHECK(rep.entries[0].outcome.witnesses[0].find("error:") == 0);
  CHECK(report_exit_code(rep, false) == 1);
}

TEST_CASE("ideal file parsing") {
  GeneratorFamily with_header = parse_ideal_file("vars: y1 y2\n# a comment\ny1^2 - y2\ny2^3\n");
  CHECK(with_header.ring().size() == 2);
  CHECK(with_header.size() == 2);
  CHECK(with_header.items()[0].first == "g1");

  GeneratorFamily inferred = parse_ideal_file("x*z + y\nz^2 - 1\n");
  REQUIRE(inferred.ring().size() == 3);
  CHECK(inferred.ring().name(0) == "x");  // first-appearance order
  CHECK(inferred.ring().name(1) == "z");
  CHECK(inferred.ring().name(2) == "y");

  // round trip through the family's own file format
  GeneratorFamily fam = i_nak(3, 1, 1);
  GeneratorFamily back = parse_ideal_file(fam.ideal_file_str());
  CHECK(ideal_equal(fam.as_ideal(), back.as_ideal()));

  REQUIRE_THROWS_AS(parse_ideal_file(""), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_ideal_file("vars:\n"), std::invalid_argument);
}

TEST_CASE("text report format") {
  Report rep = run_requests({mk("VK-DIM", {{"n", "3"}, {"k", "2"}})}, 1);
  const std::string text = report_text(rep);
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(text.find("VK-DIM") != std::string::npos);
  CHECK(text.find("{n=3 k=2}") != std::string::npos);
  CHECK(text.find("summary: 1 pass, 0 fail, 0 discrepancy, 0 skip") != std::string::npos);
}
