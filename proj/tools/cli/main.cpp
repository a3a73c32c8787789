#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "run.hpp"

using namespace berktrees;
using namespace berktrees::cli;

namespace {

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

std::optional<std::complex<double>> parse_t0(const std::string& text) {
  const auto comma = text.find(',');
  char* end = nullptr;
  const double re = std::strtod(text.c_str(), &end);
  if (end == text.c_str()) return std::nullopt;
  double im = 0.0;
  if (comma != std::string::npos) {
    const char* s = text.c_str() + comma + 1;
    im = std::strtod(s, &end);
    if (end == s) return std::nullopt;
  }
  return std::complex<double>(re, im);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trees of spheres and rescaling limits over Puiseux series"};
  std::string command_name, job_path, dot_path, out_path, t0_text;
  Overrides overrides;
  long precision = 0;
  int budget = 0, max_period = 0, branch = 0;

  app.add_option("command", command_name, "tree | cover | rescalings | orbit | reduce | eval | verify")->required();
  app.add_option("--job", job_path, "job file (JSON)")->required();
  app.add_option("--dot", dot_path, "write a Graphviz rendering here");
  app.add_option("--out", out_path, "write the JSON report here instead of stdout");
  auto* p_opt = app.add_option("--precision", precision, "exponent window");
  auto* b_opt = app.add_option("--budget", budget, "orbit iteration budget");
  auto* m_opt = app.add_option("--max-period", max_period, "largest cycle period to report");
  app.add_option("--t0", t0_text, "numeric evaluation point RE,IM");
  auto* br_opt = app.add_option("--branch", branch, "branch of t^(1/q) for numeric evaluation");
  CLI11_PARSE(app, argc, argv);

  const auto command = parse_command(command_name);
  if (!command) {
    std::cout << error_json(ErrorCode::kInvalidArgument, "unknown command " + command_name).dump(2) << "\n";
    return 2;
  }
  std::ifstream in(job_path, std::ios::binary);
  if (!in) {
    std::cout << error_json(ErrorCode::kInvalidArgument, "cannot read " + job_path).dump(2) << "\n";
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  if (*p_opt) {
    overrides.precision = precision;
  } else if (const char* env = std::getenv("BERKTREES_PRECISION")) {
    // Only a default: a precision in the job file wins.
    const Json doc = Json::parse(buf.str(), nullptr, false);
    if (!doc.is_object() || !doc.contains("precision")) overrides.precision = std::atol(env);
  }
  if (*b_opt) overrides.budget = budget;
  if (*m_opt) overrides.max_period = max_period;
  if (*br_opt) overrides.branch = branch;
  if (!t0_text.empty()) {
    overrides.t0 = parse_t0(t0_text);
    if (!overrides.t0) {
      std::cout << error_json(ErrorCode::kInvalidArgument, "--t0 expects RE,IM").dump(2) << "\n";
      return 2;
    }
  }

  const RunResult result = run_text(buf.str(), *command, overrides);
  const std::string report = result.report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << report;
  } else if (!write_file(out_path, report)) {
    std::cerr << "cannot write " << out_path << "\n";
    return 2;
  }
  if (!dot_path.empty() && result.dot && !write_file(dot_path, *result.dot)) {
    std::cerr << "cannot write " << dot_path << "\n";
    return 2;
  }
  return result.exit_code;
}
