#include "job.hpp"

#include <set>

#include "parse.hpp"

namespace berktrees::cli {

namespace {

[[noreturn]] void invalid(const std::string& what) { fail(ErrorCode::kInvalidArgument, "job: " + what); }

SeriesPoly parse_map_side(const Json& j) {
  if (j.is_string()) return parse_polynomial(j.get<std::string>());
  if (j.is_array()) {
    SeriesPoly out;
    for (const auto& c : j) {
      if (!c.is_string()) invalid("map coefficients must be strings");
      out.push_back(parse_series(c.get<std::string>()));
    }
    return out;
  }
  invalid("map sides must be a polynomial string or an array of series");
}

std::vector<std::string> string_list(const Json& j, const std::string& what) {
  if (!j.is_array()) invalid(what + " must be an array of labels");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) invalid(what + " must contain strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace

TypeIIPoint parse_ball(const Json& j) {
  if (!j.is_object() || !j.contains("center") || !j.contains("rv")) invalid("a ball needs center and rv");
  const PuiseuxSeries c = parse_series(j.at("center").get<std::string>());
  const Json& rv = j.at("rv");
  const Rational r = rv.is_string() ? parse_rational(rv.get<std::string>()) : Rational(rv.get<long>());
  return canonicalize(c, r);
}

RationalMapL JobSpec::map() const {
  if (!num || !den) invalid("this command needs a map");
  return RationalMapL(*num, *den, precision);
}

std::optional<std::vector<std::string>> JobSpec::labels(const std::string& name) const {
  if (auto it = sets.find(name); it != sets.end()) return it->second;
  for (const auto& [n, fam] : families) {
    if (n != name) continue;
    std::vector<std::string> out;
    for (const auto& [label, p] : fam) out.push_back(label);
    return out;
  }
  return std::nullopt;
}

Family JobSpec::family(const std::string& name) const {
  const auto labels_of = labels(name);
  if (!labels_of) invalid("no set or family named " + name);
  Family out;
  for (const auto& label : *labels_of) {
    const PointP1L* found = nullptr;
    for (const auto& [n, fam] : families) {
      if (n != name) continue;
      for (const auto& [l, p] : fam) {
        if (l == label) found = &p;
      }
    }
    for (const auto& [n, fam] : families) {
      for (const auto& [l, p] : fam) {
        if (!found && l == label) found = &p;
      }
    }
    if (!found) invalid("label " + label + " of set " + name + " has no point");
    out.emplace_back(label, *found);
  }
  return out;
}

JobSpec load_job(const Json& doc) {
  if (!doc.is_object()) invalid("the job must be a JSON object");
  static const std::set<std::string> known{"precision", "map", "families", "sets", "portrait", "seeds",
                                           "start",     "budgets", "t0",   "branch", "description"};
  for (const auto& [k, v] : doc.items()) {
    if (!known.count(k)) invalid("unknown field " + k);
  }
  JobSpec job;
  if (doc.contains("precision")) {
    job.precision = doc.at("precision").get<long>();
    job.precision_given = true;
  }
  if (doc.contains("map")) {
    const Json& m = doc.at("map");
    if (!m.is_object() || !m.contains("num")) invalid("map needs num (and optionally den)");
    job.num = parse_map_side(m.at("num"));
    job.den = m.contains("den") ? parse_map_side(m.at("den")) : SeriesPoly{series::constant(ExactComplex::one())};
  }
  if (doc.contains("families")) {
    for (const auto& [name, fam] : doc.at("families").items()) {
      if (!fam.is_object()) invalid("family " + name + " must map labels to points");
      Family f;
      for (const auto& [label, text] : fam.items()) {
        if (!text.is_string()) invalid("point of " + label + " must be a string");
        f.emplace_back(label, parse_point(text.get<std::string>()));
      }
      job.families.emplace_back(name, std::move(f));
    }
  }
  if (doc.contains("sets")) {
    for (const auto& [name, list] : doc.at("sets").items()) job.sets[name] = string_list(list, "set " + name);
  }
  if (doc.contains("portrait")) {
    const Json& pj = doc.at("portrait");
    Portrait p;
    p.degree = pj.value("degree", 0);
    if (pj.contains("map")) {
      for (const auto& [a, b] : pj.at("map").items()) p.F[a] = b.get<std::string>();
    }
    if (pj.contains("deg")) {
      for (const auto& [a, k] : pj.at("deg").items()) p.deg[a] = k.get<int>();
    }
    auto ys = job.labels("Y");
    auto zs = job.labels("Z");
    if (!ys || !zs) fail(ErrorCode::kPortraitInvalid, "portrait needs sets Y and Z");
    p.Y = *ys;
    p.Z = *zs;
    const std::set<std::string> yset(p.Y.begin(), p.Y.end());
    const std::set<std::string> zset(p.Z.begin(), p.Z.end());
    for (const auto& [a, b] : p.F) {
      if (!yset.count(a)) fail(ErrorCode::kPortraitInvalid, "portrait map uses unknown label " + a);
      if (!zset.count(b)) fail(ErrorCode::kPortraitInvalid, "portrait map uses unknown label " + b);
    }
    for (const auto& [a, k] : p.deg) {
      if (!yset.count(a)) fail(ErrorCode::kPortraitInvalid, "portrait degree uses unknown label " + a);
    }
    job.portrait = std::move(p);
  }
  for (const auto& [name, list] : job.sets) {
    for (const auto& label : list) {
      bool found = false;
      for (const auto& [n, fam] : job.families) {
        for (const auto& [l, p] : fam) found = found || l == label;
      }
      if (!found) invalid("label " + label + " of set " + name + " has no point");
    }
  }
  if (doc.contains("seeds")) {
    for (const auto& s : doc.at("seeds")) job.seeds.push_back(parse_ball(s));
  }
  if (doc.contains("start")) job.start = parse_ball(doc.at("start"));
  if (doc.contains("budgets")) {
    const Json& b = doc.at("budgets");
    job.budget = b.value("orbit", job.budget);
    job.max_period = b.value("max_period", job.max_period);
  }
  if (doc.contains("t0")) {
    const Json& t = doc.at("t0");
    if (t.is_number()) {
      job.t0 = {t.get<double>(), 0.0};
    } else if (t.is_array() && t.size() == 2) {
      job.t0 = {t[0].get<double>(), t[1].get<double>()};
    } else {
      invalid("t0 must be a number or [re, im]");
    }
  }
  job.branch = doc.value("branch", 0);
  check_limits(job);
  return job;
}

void check_limits(const JobSpec& job) {
  if (job.precision < 4) invalid("precision must be at least 4");
  if (job.budget < 1 || job.max_period < 1) invalid("budgets must be at least 1");
  if (job.t0 == std::complex<double>(0.0, 0.0)) invalid("t0 must be nonzero");
}

}  // namespace berktrees::cli
