#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "orbitlimits/commands.hpp"
#include "orbitlimits/reproduce.hpp"

namespace {

ol::Json read_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    text = os.str();
  } else {
    std::ifstream in(path);
    if (!in) throw ol::SchemaError("cannot open input file " + path);
    std::ostringstream os;
    os << in.rdbuf();
    text = os.str();
  }
  ol::Json j;
  try {
    j = ol::Json::parse(text);
  } catch (const ol::Json::parse_error& e) {
    throw ol::SchemaError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ol::SchemaError("input must be a JSON object");
  if (j.contains("schema") && j.at("schema") != ol::kSchemaVersion)
    throw ol::SchemaError("unsupported schema version");
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact stabilizers, local models, orbit limits and closures"};
  app.require_subcommand(1);

  std::string input = "-", format = "json", policy = "orthogonal";
  std::uint64_t seed = 20240601;
  double tol = 0;
  std::string exampleId;

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input) sub->add_option("--input", input, "JSON input file, - for stdin")->capture_default_str();
    sub->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
    sub->add_option("--seed", seed, "seed for randomized verification")->capture_default_str();
    sub->add_option("--tol", tol, "tolerance for floating-point stages");
  };

  struct Entry {
    const char* name;
    const char* help;
    ol::CommandOutput (*run)(const ol::Json&, const ol::CommandOptions&);
  };
  const Entry entries[] = {
      {"stabilizer", "Lie algebra stabilizer of a form or matrix", ol::cmd_stabilizer},
      {"local-model", "local model, theta map and S-completion", ol::cmd_local_model},
      {"limit", "limit of a form under a one-parameter subgroup", ol::cmd_limit},
      {"closure", "nilpotent membership in a projective conjugation-orbit closure", ol::cmd_closure},
      {"slice", "J_n and J_{a,b} slice reports", ol::cmd_slice},
      {"curvature", "second fundamental form and Ricci data", ol::cmd_curvature},
      {"kempf", "Kempf optimizer over the diagonal torus", ol::cmd_kempf},
  };
  std::vector<std::pair<CLI::App*, const Entry*>> subs;
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    add_common(sub, true);
    if (std::string(e.name) == "local-model")
      sub->add_option("--policy", policy, "complement policy")
          ->check(CLI::IsMember({"orthogonal", "explicit"}))
          ->capture_default_str();
    subs.emplace_back(sub, &e);
  }
  CLI::App* rep = app.add_subcommand("reproduce", "rerun a pinned worked example");
  add_common(rep, false);
  rep->add_option("id", exampleId, "example id")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ol::kExitOk : ol::kExitSchema;
  }

  ol::CommandOptions opt;
  opt.seed = seed;
  if (tol > 0) opt.tol = tol;
  opt.policy = policy == "explicit" ? ol::ComplementPolicy::Explicit : ol::ComplementPolicy::Orthogonal;

  ol::CommandOutput out;
  try {
    if (rep->parsed()) {
      out = ol::cmd_reproduce(exampleId, opt);
    } else {
      for (auto [sub, e] : subs)
        if (sub->parsed()) out = e->run(read_input(input), opt);
    }
  } catch (const ol::SchemaError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return ol::kExitSchema;
  } catch (const std::exception& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return ol::kExitComputation;
  }

  if (format == "table")
    std::cout << out.table;
  else
    std::cout << out.doc.dump(2) << "\n";
  return out.exit;
}
