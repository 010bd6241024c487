#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "orbitlimits/io.hpp"
#include "orbitlimits/reproduce.hpp"

using namespace ol;

namespace {

struct Run {
  int exit = -1;
  std::string out;
};

std::string cli() {
  const char* p = std::getenv("ORBITLIMITS_CLI");
  REQUIRE_MESSAGE(p != nullptr, "ORBITLIMITS_CLI must point at the command-line binary");
  return p;
}

std::string write_input(const std::string& name, const Json& doc) {
  auto path = std::filesystem::temp_directory_path() / ("orbitlimits_" + name + ".json");
  std::ofstream(path) << doc.dump();
  return path.string();
}

Run run(const std::string& args) {
  std::string cmd = cli() + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Json form_doc(const Form& f) { return Json{{"schema", 1}, {"form", form_to_json(f)}}; }

}  // namespace

TEST_CASE("stabilizer of det_3 and of the zero form") {
  auto r = run("stabilizer --input " + write_input("det3", form_doc(determinant_form(3))));
  REQUIRE(r.exit == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("schema") == 1);
  CHECK(j.at("command") == "stabilizer");
  CHECK(j.at("dimension") == 16);
  CHECK(j.at("verified") == true);

  auto z = run("stabilizer --input " + write_input("zero", form_doc(Form(2, 3))));
  REQUIRE(z.exit == 0);
  CHECK(Json::parse(z.out).at("dimension") == 4);
}

TEST_CASE("output is deterministic and round-trips") {
  std::string in = write_input("o2", Json{{"form", form_to_json(o2_form())}, {"weights", {1, 0}}});
  auto a = run("limit --input " + in), b = run("limit --input " + in);
  REQUIRE(a.exit == 0);
  CHECK(a.out == b.out);
  Json j = Json::parse(a.out);
  CHECK(j.dump(2) + "\n" == a.out);
  CHECK(j.at("a") == 0);
  CHECK(j.at("b") == 2);
  Form fb(2, 4);
  fb.add_term({2, 2}, Rational(2));
  CHECK(form_from_json(j.at("f_b")) == fb);
  CHECK(j.at("analysis").at("Delta") == "1");
}

TEST_CASE("trivial 1-PS has no analysis") {
  auto r = run("limit --input " + write_input("triv", Json{{"form", form_to_json(o2_form())}, {"weights", {0, 0}}}));
  REQUIRE(r.exit == 0);
  CHECK(Json::parse(r.out).at("analysis").is_null());
}

TEST_CASE("exit codes") {
  CHECK(run("stabilizer --input " + write_input("bad_schema", Json{{"schema", 2}})).exit == 2);
  CHECK(run("stabilizer --input " + write_input("no_subject", Json{{"schema", 1}})).exit == 2);
  CHECK(run("stabilizer --input /nonexistent/file.json").exit == 2);
  CHECK(run("reproduce no-such-example").exit == 2);
  CHECK(run("frobnicate").exit == 2);
  CHECK(run("local-model --input " + write_input("zero_lm", form_doc(Form(2, 2)))).exit == 3);
  CHECK(run("--help").exit == 0);
}

TEST_CASE("closure verdicts") {
  Json spec = Json::array({Json{{"eig", "0"}, {"sizes", {2, 1}}}, Json{{"eig", "1"}, {"sizes", {1}}}});
  auto yes = run("closure --input " + write_input("cl_yes", Json{{"spec", spec}, {"partition", {2, 1, 1}}}));
  REQUIRE(yes.exit == 0);
  Json j = Json::parse(yes.out);
  CHECK(j.at("chi") == Json::array({3, 1}));
  CHECK(j.at("contains") == true);
  auto no = run("closure --input " + write_input("cl_no", Json{{"spec", spec}, {"partition", {4}}}));
  REQUIRE(no.exit == 0);
  CHECK(Json::parse(no.out).at("contains") == false);
  CHECK(run("closure --input " + write_input("cl_bad", Json{{"spec", spec}, {"partition", {3}}})).exit == 2);
}

TEST_CASE("reproduce and table output") {
  auto r = run("reproduce o2 --format table");
  CHECK(r.exit == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  auto j = run("reproduce sphere-ricci");
  REQUIRE(j.exit == 0);
  Json doc = Json::parse(j.out);
  CHECK(doc.at("pass") == true);
  CHECK(doc.at("id") == "sphere-ricci");
}

TEST_CASE("curvature and kempf commands") {
  auto s = run("curvature --input " + write_input("sph", Json{{"kind", "sphere"}, {"n", 3}, {"r", "2"}}));
  REQUIRE(s.exit == 0);
  Json j = Json::parse(s.out);
  CHECK(j.at("ricci").at(0).at(0) == "1/2");
  QMatrix c(3, 3);
  for (std::size_t i = 0; i + 1 < 3; ++i) c(i, i + 1) = 1;
  auto k = run("kempf --input " + write_input("kempf", Json{{"matrix", matrix_to_json(c)}, {"log_t", 64}}));
  REQUIRE(k.exit == 0);
  Json kj = Json::parse(k.out);
  CHECK(kj.at("unstable") == true);
  CHECK(kj.at("monotone") == true);
  // The full cyclic shift has 0 in the convex hull of its weights.
  c(2, 0) = 1;
  auto cs = run("kempf --input " + write_input("kempf_cyc", Json{{"matrix", matrix_to_json(c)}, {"log_t", 64}}));
  REQUIRE(cs.exit == 0);
  CHECK(Json::parse(cs.out).at("unstable") == false);
}
