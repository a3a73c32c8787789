#pragma once

// JSON job files. See docs/job.schema.json.

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "berktrees/dynamics.hpp"
#include "json.hpp"

namespace berktrees::cli {

using Json = nlohmann::ordered_json;

struct JobSpec {
  long precision = kDefaultWindow;
  bool precision_given = false;
  std::optional<SeriesPoly> num;
  std::optional<SeriesPoly> den;
  /// Named families in file order.
  std::vector<std::pair<std::string, Family>> families;
  std::map<std::string, std::vector<std::string>> sets;
  std::optional<Portrait> portrait;
  std::vector<TypeIIPoint> seeds;
  std::optional<TypeIIPoint> start;
  int budget = 32;
  int max_period = 4;
  std::complex<double> t0{1e-3, 0.0};
  int branch = 0;

  bool has_map() const { return num.has_value(); }
  /// The map of the job; throws INVALID_ARGUMENT when absent.
  RationalMapL map() const;
  /// Labels of set `name`: the `sets` entry, else the keys of the family of that name.
  std::optional<std::vector<std::string>> labels(const std::string& name) const;
  /// Points for set `name`, looked up in the family of that name first.
  Family family(const std::string& name) const;
};

/// Parses and checks a job document. Throws SYNTAX_ERROR, INVALID_ARGUMENT
/// or PORTRAIT_INVALID.
JobSpec load_job(const Json& doc);

/// Checks the numeric limits after command-line overrides.
void check_limits(const JobSpec& job);

TypeIIPoint parse_ball(const Json& j);

}  // namespace berktrees::cli
