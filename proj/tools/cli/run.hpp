#pragma once

#include <optional>
#include <string>

#include "job.hpp"

namespace berktrees::cli {

enum class Command { kTree, kCover, kRescalings, kOrbit, kReduce, kEval, kVerify };

std::optional<Command> parse_command(const std::string& name);
std::string to_string(Command c);

struct Overrides {
  std::optional<long> precision;
  std::optional<int> budget;
  std::optional<int> max_period;
  std::optional<std::complex<double>> t0;
  std::optional<int> branch;
};

struct RunResult {
  Json report;
  /// Graphviz rendering, for commands that draw trees.
  std::optional<std::string> dot;
  /// 0 success, 2 validation failure, 3 precision exhausted.
  int exit_code = 0;
};

int exit_code_for(ErrorCode code);
Json error_json(ErrorCode code, const std::string& message);

/// Loads the job text, applies overrides and runs the command. Errors become
/// an {"error": {...}} report with the matching exit code.
RunResult run_text(const std::string& job_text, Command command, const Overrides& overrides = {});
RunResult run(const JobSpec& job, Command command);

/// Content-derived node id of a vertex.
std::string vertex_id(const TypeIIPoint& x);
std::string tree_dot(const TreeOfSpheres& t, const std::string& name = "tree");

}  // namespace berktrees::cli
