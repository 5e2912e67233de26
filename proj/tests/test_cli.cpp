#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "freedom/cli.hpp"
#include "freedom/error.hpp"

namespace freedom::test {
using namespace freedom::cli;
using Json = nlohmann::json;

namespace {

const std::string kData = FREEDOM_DATA_DIR;

std::string data(const std::string& name) { return kData + "/" + name; }

struct Outcome {
  ExitCode code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Outcome invoke(RunConfig c) {
  std::ostringstream out, err;
  const ExitCode code = run(c, out, err);
  return {code, out.str(), err.str()};
}

RunConfig config(std::string command, std::string input) {
  RunConfig c;
  c.command = std::move(command);
  c.input_path = std::move(input);
  return c;
}

ErrorKind parse_kind(std::string_view text) {
  try {
    parse_assignment(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a parse failure");
  return ErrorKind::DomainError;
}

std::string parse_message(std::string_view text) {
  try {
    parse_assignment(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("parse assignment files") {
  const auto a = parse_assignment(
      R"({"options":[{"name":"a","ne":0.6,"po":0.8},{"name":"b","ne":0.2,"po":0.4}]})");
  CHECK(a.size() == 2);
  CHECK(a.label(0) == "a");
  CHECK(a.po(1) == 0.4);

  CHECK(parse_kind(R"({"options":[]})") == ErrorKind::TooFewOptions);
  CHECK(parse_kind(R"({"options":[{"name":"a","ne":0.6}]})") == ErrorKind::ParseError);
  CHECK(parse_message(R"({"options":[{"name":"a","ne":0.6,"po":1},{"name":"b","ne":0.2}]})")
            .find("options[1]: missing field \"po\"") != std::string::npos);
  CHECK(parse_message(R"({"options":[{"ne":"x","po":1}]})").find("options[0].ne") !=
        std::string::npos);
  CHECK(parse_message("{\n  \"options\": [\n    {\"ne\": 0.1,, }\n]}").find("line 3") !=
        std::string::npos);
  CHECK(parse_kind("[]") == ErrorKind::ParseError);
}

TEST_CASE("parse cross-table files") {
  const auto t = parse_crosstable(
      R"({"rows":[{"name":"r1","ne":0,"po":1},{"name":"r2","ne":0,"po":1}],
          "cols":[{"name":"c1","ne":0,"po":1},{"name":"c2","ne":0,"po":1}]})");
  CHECK(t.row_count() == 2);
  CHECK_FALSE(t.joint().has_value());

  const std::string margins =
      R"("rows":[{"ne":0.5,"po":0.5},{"ne":0.5,"po":0.5}],
         "cols":[{"ne":0.5,"po":0.5},{"ne":0.5,"po":0.5}])";
  try {
    parse_crosstable("{" + margins + R"(, "joint":[[0.2,0.25],[0.2,0.25]]})");
    FAIL("joint summing to 0.9 accepted");
  } catch (const Error& e) {
    CHECK(e.has(ErrorKind::JointInconsistent));
  }
  try {
    parse_crosstable("{" + margins + R"(, "joint":[[0.6,0.0],[0.0,0.4]]})");
    FAIL("cell above its Fréchet bound accepted");
  } catch (const Error& e) {
    CHECK(e.has(ErrorKind::FrechetViolation));
  }
}

TEST_CASE("measure reports the reference values") {
  const auto o = invoke(config("measure", data("yager_a.json")));
  REQUIRE(o.code == ExitCode::ok);
  const Json j = o.json();
  CHECK(j["command"] == "measure");
  CHECK(j["input"] == data("yager_a.json"));
  CHECK(j["results"]["freedom"].get<double>() == 0.2);
  CHECK(j["results"]["yager_ambiguity"].get<double>() == 0.4);
  CHECK(j["seed"].is_null());
  CHECK(j["samples"].is_null());

  auto c = config("measure", data("f3_half.json"));
  c.q = 1.0;
  const Json q = invoke(c).json();
  CHECK(q["results"]["unnormalized_conditional_freedom"].get<double>() == 0.25);
}

TEST_CASE("exit codes") {
  const auto infeasible = invoke(config("validate", data("infeasible.json")));
  CHECK(infeasible.code == ExitCode::domain);
  CHECK(infeasible.err.find("Infeasible") != std::string::npos);

  CHECK(invoke(config("measure", data("no_such_file.json"))).code == ExitCode::io);
  CHECK(invoke(config("bogus", data("f3_half.json"))).code == ExitCode::usage);
  CHECK(invoke(config("measure", "")).code == ExitCode::usage);
  auto bad_q = config("measure", data("f3_half.json"));
  bad_q.q = 0.0;
  CHECK(invoke(bad_q).code == ExitCode::usage);
  auto bad_index = config("sensitivity", data("f3_half.json"));
  bad_index.index = 4;
  CHECK(invoke(bad_index).code == ExitCode::domain);
  CHECK(invoke(config("region", data("yager_a.json"))).code == ExitCode::domain);

  const std::string broken =
      (std::filesystem::temp_directory_path() / "freedom_broken_input.json").string();
  std::ofstream(broken) << "{\"options\": [";
  CHECK(invoke(config("measure", broken)).code == ExitCode::io);
  std::remove(broken.c_str());
}

TEST_CASE("verify agrees with the closed form") {
  auto c = config("verify", data("f3_half.json"));
  c.samples = 1'000'000;
  c.seed = 42;
  const auto o = invoke(c);
  REQUIRE(o.code == ExitCode::ok);
  const Json j = o.json();
  CHECK(j["results"]["closed_form"].get<double>() == 0.25);
  CHECK(j["results"]["agrees_within_4se"] == true);
  CHECK(j["results"]["polygon_area_fraction"].get<double>() == 0.25);
  CHECK(j["seed"] == 42);
  CHECK(j["samples"] == 1'000'000);
  // Byte-identical on rerun.
  CHECK(invoke(c).out == o.out);
}

TEST_CASE("region area matches measure") {
  for (const char* file : {"f3_half.json", "f3_one.json", "sensitivity_low.json", "pinned_third.json"}) {
    const Json region = invoke(config("region", data(file))).json();
    const Json measure = invoke(config("measure", data(file))).json();
    CHECK(std::abs(region["results"]["area_fraction"].get<double>() -
                   measure["results"]["freedom"].get<double>()) <= 1e-9);
    CHECK(region["results"]["vertices"].is_array());
  }
}

TEST_CASE("subsets and sensitivity reports") {
  const Json s = invoke(config("subsets", data("pinned_third.json"))).json();
  REQUIRE(s["results"]["entries"].size() == 1);
  CHECK(s["results"]["entries"][0]["options"] == Json::array({"e1", "e2"}));
  CHECK(s["results"]["entries"][0]["unnormalized_conditional_freedom"].get<double>() == 0.5);
  CHECK(s["results"]["omitted"] == 2);

  auto c = config("sensitivity", data("sensitivity_low.json"));
  c.index = 3;
  c.eps = 0.4;
  const Json imp = invoke(c).json();
  CHECK(imp["results"]["mode"] == "imposition");
  CHECK(imp["results"]["reports"].size() == 1);
  CHECK(imp["results"]["reports"][0]["index"] == 3);

  c.eps.reset();
  c.index.reset();
  const Json all = invoke(c).json();
  CHECK(all["results"]["reports"].size() == 3);
}

TEST_CASE("crosstab report") {
  auto c = config("crosstab", data("crosstab_2x2.json"));
  c.samples = 200'000;
  const auto o = invoke(c);
  REQUIRE(o.code == ExitCode::ok);
  const Json j = o.json();
  CHECK(j["results"]["cells"].size() == 4);
  CHECK(j["results"]["joint_freedom"]["mean"].get<double>() > 0.0);
  CHECK(j["samples"] == 200'000);

  const Json joint = invoke(config("crosstab", data("crosstab_joint.json"))).json();
  CHECK(joint["results"]["joint_freedom"].is_null());
  CHECK(joint["results"]["cells"][0]["dependency"].get<double>() == doctest::Approx(0.6));
  CHECK(joint["seed"].is_null());
}

TEST_CASE("csv output") {
  auto c = config("measure", data("yager_a.json"));
  c.format = Format::csv;
  const auto o = invoke(c);
  CHECK(o.out == "freedom,yager_ambiguity,hartley_nonspecificity,normed_freedom,m\n0.2,0.4,0.4,0.2,2\n");

  auto r = config("region", data("f3_half.json"));
  r.format = Format::csv;
  CHECK(invoke(r).out.rfind("area_fraction,vertex_count,vertices\n0.25,3,", 0) == 0);
}

TEST_CASE("every report re-parses with the documented envelope") {
  for (const char* cmd : {"validate", "measure", "verify", "subsets", "sensitivity", "region"}) {
    auto c = config(cmd, data("f3_half.json"));
    c.samples = 10'000;
    const auto o = invoke(c);
    REQUIRE(o.code == ExitCode::ok);
    const Json j = o.json();
    for (const char* key : {"command", "input", "results", "seed", "samples"}) {
      CHECK(j.contains(key));
    }
    CHECK(j["command"] == cmd);
  }
}

TEST_CASE("report numbers carry 12 significant digits") {
  CHECK(report_number(1.0 / 3.0) == 0.333333333333);
  CHECK(report_number(0.2) == 0.2);
  CHECK(report_number(-0.0) == 0.0);
  CHECK_FALSE(std::signbit(report_number(-1e-300 * 1e-300)));
}

}  // namespace freedom::test
