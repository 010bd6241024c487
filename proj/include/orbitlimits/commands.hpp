#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "orbitlimits/io.hpp"
#include "orbitlimits/local_model.hpp"

namespace ol {

// Exit codes of the command-line front end.
enum ExitCode { kExitOk = 0, kExitSchema = 2, kExitComputation = 3, kExitMismatch = 4 };

struct CommandOptions {
  std::uint64_t seed = 20240601;
  std::optional<double> tol;  // numeric tolerance override for float stages
  ComplementPolicy policy = ComplementPolicy::Orthogonal;
};

struct CommandOutput {
  Json doc;           // carries "schema" and "command"
  std::string table;  // aligned text rendering
  int exit = kExitOk;
};

// Each command validates its input document and throws SchemaError on a
// malformed one; mathematical failures propagate as std::exception.
CommandOutput cmd_stabilizer(const Json& in, const CommandOptions& opt);
CommandOutput cmd_local_model(const Json& in, const CommandOptions& opt);
CommandOutput cmd_limit(const Json& in, const CommandOptions& opt);
CommandOutput cmd_closure(const Json& in, const CommandOptions& opt);
CommandOutput cmd_slice(const Json& in, const CommandOptions& opt);
CommandOutput cmd_curvature(const Json& in, const CommandOptions& opt);
CommandOutput cmd_kempf(const Json& in, const CommandOptions& opt);
// exit is kExitMismatch when an assertion fails.
CommandOutput cmd_reproduce(const std::string& id, const CommandOptions& opt);

}  // namespace ol
