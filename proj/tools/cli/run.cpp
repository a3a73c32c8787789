#include "run.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "parse.hpp"

namespace berktrees::cli {

using berktrees::to_string;

std::optional<Command> parse_command(const std::string& name) {
  static const std::vector<std::pair<std::string, Command>> names{
      {"tree", Command::kTree},     {"cover", Command::kCover}, {"rescalings", Command::kRescalings},
      {"orbit", Command::kOrbit},   {"reduce", Command::kReduce}, {"eval", Command::kEval},
      {"verify", Command::kVerify}};
  for (const auto& [n, c] : names) {
    if (n == name) return c;
  }
  return std::nullopt;
}

std::string to_string(Command c) {
  switch (c) {
    case Command::kTree: return "tree";
    case Command::kCover: return "cover";
    case Command::kRescalings: return "rescalings";
    case Command::kOrbit: return "orbit";
    case Command::kReduce: return "reduce";
    case Command::kEval: return "eval";
    case Command::kVerify: return "verify";
  }
  return "";
}

int exit_code_for(ErrorCode code) { return code == ErrorCode::kPrecisionExhausted ? 3 : 2; }

Json error_json(ErrorCode code, const std::string& message) {
  Json j;
  j["error"]["code"] = std::string(berktrees::to_string(code));
  j["error"]["message"] = message;
  return j;
}

std::string vertex_id(const TypeIIPoint& x) {
  const std::string key = to_string(x.center()) + ";" + to_string(x.rv());
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "v%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

std::string leaf_id(const std::string& label) { return "leaf_" + label; }

std::string node_id(const TreeOfSpheres& t, int node) {
  if (t.is_leaf(node)) return leaf_id(t.leaves[node]);
  const auto& v = t.vertices[t.vertex_of(node)];
  return v.point ? vertex_id(*v.point) : "v#" + std::to_string(t.vertex_of(node));
}

Json ball_json(const TypeIIPoint& x) {
  Json j;
  j["center"] = to_string(x.center());
  j["rv"] = to_string(x.rv());
  return j;
}

Json tree_json(const TreeOfSpheres& t) {
  Json j;
  j["leaves"] = Json::array();
  for (std::size_t k = 0; k < t.leaves.size(); ++k) {
    Json l;
    l["id"] = leaf_id(t.leaves[k]);
    l["label"] = t.leaves[k];
    if (k < t.leaf_points.size()) l["point"] = to_string(t.leaf_points[k]);
    j["leaves"].push_back(l);
  }
  j["vertices"] = Json::array();
  for (std::size_t i = 0; i < t.vertices.size(); ++i) {
    const auto& v = t.vertices[i];
    Json vj;
    vj["id"] = node_id(t, t.vertex_node(static_cast<int>(i)));
    if (v.point) {
      vj["center"] = to_string(v.point->center());
      vj["rv"] = to_string(v.point->rv());
    }
    Json marking = Json::object();
    for (std::size_t k = 0; k < t.leaves.size(); ++k) marking[t.leaves[k]] = to_string(v.marking[k]);
    vj["marking"] = marking;
    Json att = Json::object();
    for (const auto& [m, slot] : v.attachment) att[node_id(t, m)] = to_string(slot);
    vj["attachments"] = att;
    j["vertices"].push_back(vj);
  }
  j["edges"] = Json::array();
  for (const auto& [a, b] : t.edges) j["edges"].push_back(Json::array({node_id(t, a), node_id(t, b)}));
  return j;
}

Json coefficients(const ComplexPoly& p) {
  Json j = Json::array();
  for (const auto& c : p.coeffs()) j.push_back(to_string(c));
  return j;
}

Json series_coefficients(const SeriesPoly& p) {
  Json j = Json::array();
  for (const auto& c : p) j.push_back(to_string(c));
  return j;
}

Json reduced_json(const ReducedMap& f, const std::string& var = "u") {
  Json j;
  j["map"] = to_string(f, var);
  j["num"] = coefficients(f.num);
  j["den"] = coefficients(f.den);
  j["degree"] = f.degree();
  return j;
}

Json report_json(const ValidationReport& r) {
  Json j;
  j["ok"] = r.ok();
  j["issues"] = Json::array();
  for (const auto& i : r.issues) j["issues"].push_back({{"check", i.check}, {"witness", i.witness}, {"message", i.message}});
  return j;
}

Json orbit_json(const OrbitRecord& o) {
  Json j;
  j["status"] = to_string(o.status);
  if (o.status == OrbitRecord::Status::kPeriodic) {
    j["entry"] = o.entry;
    j["period"] = o.period;
  }
  j["points"] = Json::array();
  for (const auto& x : o.points) j["points"].push_back(ball_json(x));
  return j;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void dot_body(std::ostringstream& os, const TreeOfSpheres& t, const std::string& prefix, const std::string& indent) {
  for (std::size_t i = 0; i < t.vertices.size(); ++i) {
    const auto& v = t.vertices[i];
    const int node = t.vertex_node(static_cast<int>(i));
    std::string label = v.point ? to_string(*v.point) : "#" + std::to_string(i);
    os << indent << quote(prefix + node_id(t, node)) << " [shape=ellipse, label=" << quote(label) << "];\n";
  }
  for (std::size_t k = 0; k < t.leaves.size(); ++k) {
    std::string label = t.leaves[k];
    if (k < t.leaf_points.size()) label += " = " + to_string(t.leaf_points[k]);
    os << indent << quote(prefix + leaf_id(t.leaves[k])) << " [shape=box, label=" << quote(label) << "];\n";
  }
  for (const auto& [a, b] : t.edges) {
    os << indent << quote(prefix + node_id(t, a)) << " -- " << quote(prefix + node_id(t, b));
    std::vector<std::string> attrs;
    if (!t.is_leaf(a)) attrs.push_back("taillabel=" + quote(to_string(t.vertices[t.vertex_of(a)].attachment.at(b))));
    if (!t.is_leaf(b)) attrs.push_back("headlabel=" + quote(to_string(t.vertices[t.vertex_of(b)].attachment.at(a))));
    if (!attrs.empty()) {
      os << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) os << (i ? ", " : "") << attrs[i];
      os << "]";
    }
    os << ";\n";
  }
}

std::string cover_dot(const TreeCover& c) {
  std::ostringstream os;
  os << "graph cover {\n";
  os << "  subgraph cluster_source {\n    label=\"source\";\n";
  dot_body(os, c.source, "s_", "    ");
  os << "  }\n  subgraph cluster_target {\n    label=\"target\";\n";
  dot_body(os, c.target, "t_", "    ");
  os << "  }\n";
  for (std::size_t j = 0; j < c.vertex_map.size(); ++j) {
    const int a = c.source.vertex_node(static_cast<int>(j));
    const int b = c.target.vertex_node(c.vertex_map[j]);
    os << "  " << quote("s_" + node_id(c.source, a)) << " -- " << quote("t_" + node_id(c.target, b))
       << " [style=dashed, label=" << quote(to_string(c.sphere_maps[j], "u")) << "];\n";
  }
  os << "}\n";
  return os.str();
}

double round6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", x);
  return std::strtod(buf, nullptr);
}

Json complex_json(const std::optional<std::complex<double>>& z) {
  if (!z) return "inf";
  return Json::array({round6(z->real()), round6(z->imag())});
}

double chordal(const std::optional<std::complex<double>>& z, const std::optional<std::complex<double>>& w) {
  if (!z && !w) return 0.0;
  if (!z || !w) {
    const auto& p = z ? *z : *w;
    return 1.0 / std::sqrt(1.0 + std::norm(p));
  }
  return std::abs(*z - *w) / (std::sqrt(1.0 + std::norm(*z)) * std::sqrt(1.0 + std::norm(*w)));
}

std::optional<std::complex<double>> numeric(const PointP1L& p, std::complex<double> t0, int branch) {
  if (p.is_infinity()) return std::nullopt;
  return evaluate_at(p.value(), t0, branch);
}

std::optional<std::complex<double>> numeric(const SpherePoint& p) {
  if (p.is_infinity()) return std::nullopt;
  return p.value().to_complex();
}

std::optional<std::complex<double>> apply_numeric(const MoebiusL& m, const std::optional<std::complex<double>>& z,
                                                  std::complex<double> t0, int branch) {
  const auto a = evaluate_at(m.a(), t0, branch), b = evaluate_at(m.b(), t0, branch);
  const auto c = evaluate_at(m.c(), t0, branch), d = evaluate_at(m.d(), t0, branch);
  if (!z) {
    if (c == 0.0) return std::nullopt;
    return a / c;
  }
  const auto den = c * *z + d;
  if (den == 0.0) return std::nullopt;
  return (a * *z + b) / den;
}

std::optional<std::complex<double>> map_numeric(const RationalMapL& f, const std::optional<std::complex<double>>& z,
                                                std::complex<double> t0, int branch) {
  auto eval_poly = [&](const SeriesPoly& p, std::complex<double> x) {
    std::complex<double> acc = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + evaluate_at(*it, t0, branch);
    return acc;
  };
  if (!z) {
    const auto d = static_cast<std::size_t>(f.degree());
    const auto n = d < f.num().size() ? evaluate_at(f.num()[d], t0, branch) : 0.0;
    const auto q = d < f.den().size() ? evaluate_at(f.den()[d], t0, branch) : 0.0;
    if (q == 0.0) return std::nullopt;
    return n / q;
  }
  const auto q = eval_poly(f.den(), *z);
  if (q == 0.0) return std::nullopt;
  return eval_poly(f.num(), *z) / q;
}

std::string tree_set(const JobSpec& job) {
  if (job.labels("X")) return "X";
  if (job.families.empty()) fail(ErrorCode::kInvalidArgument, "job: no family to build a tree from");
  return job.families.front().first;
}

TreeCover build_cover(const JobSpec& job) {
  if (!job.portrait) fail(ErrorCode::kInvalidArgument, "job: this command needs a portrait");
  return limit_cover(job.map(), job.family("Y"), job.family("Z"), *job.portrait, job.precision);
}

Json cover_json(const TreeCover& c, const ValidationReport& r) {
  Json j;
  j["source"] = tree_json(c.source);
  j["target"] = tree_json(c.target);
  j["vertex_map"] = Json::array();
  j["sphere_maps"] = Json::array();
  for (std::size_t k = 0; k < c.vertex_map.size(); ++k) {
    const std::string src = node_id(c.source, c.source.vertex_node(static_cast<int>(k)));
    const std::string dst = node_id(c.target, c.target.vertex_node(c.vertex_map[k]));
    j["vertex_map"].push_back(Json::array({src, dst}));
    Json m = reduced_json(c.sphere_maps[k]);
    m["vertex"] = src;
    j["sphere_maps"].push_back(m);
  }
  j["verification"] = report_json(r);
  return j;
}

std::vector<TypeIIPoint> rescaling_seeds(const JobSpec& job) {
  std::vector<TypeIIPoint> seeds{TypeIIPoint::gauss()};
  auto add = [&](const TypeIIPoint& x) {
    if (std::find(seeds.begin(), seeds.end(), x) == seeds.end()) seeds.push_back(x);
  };
  for (const auto& s : job.seeds) add(s);
  for (const auto& [name, fam] : job.families) {
    if (fam.size() < 3) continue;
    for (const auto& v : limit_tree(fam, MarkingConvention::kCanonicalChart, job.precision).vertices) add(*v.point);
  }
  return seeds;
}

}  // namespace

std::string tree_dot(const TreeOfSpheres& t, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  dot_body(os, t, "", "  ");
  os << "}\n";
  return os.str();
}

RunResult run(const JobSpec& job, Command command) {
  RunResult out;
  Json& r = out.report;
  r["command"] = to_string(command);
  switch (command) {
    case Command::kTree: {
      const std::string set = tree_set(job);
      const TreeOfSpheres t = limit_tree(job.family(set), MarkingConvention::kCanonicalChart, job.precision);
      r["set"] = set;
      r["tree"] = tree_json(t);
      out.dot = tree_dot(t);
      break;
    }
    case Command::kCover: {
      const TreeCover c = build_cover(job);
      const ValidationReport v = verify_cover(c);
      r["cover"] = cover_json(c, v);
      out.dot = cover_dot(c);
      if (!v.ok()) out.exit_code = 2;
      break;
    }
    case Command::kRescalings: {
      const RationalMapL f = job.map();
      const auto seeds = rescaling_seeds(job);
      r["seeds"] = Json::array();
      for (const auto& s : seeds) r["seeds"].push_back(ball_json(s));
      r["cycles"] = Json::array();
      for (const auto& c : find_rescalings(f, seeds, job.budget, job.max_period, job.precision)) {
        Json cj;
        cj["period"] = c.cycle.size();
        cj["cycle"] = Json::array();
        for (const auto& x : c.cycle) cj["cycle"].push_back(ball_json(x));
        cj["tangent_maps"] = Json::array();
        for (const auto& m : c.tangent_maps) cj["tangent_maps"].push_back(to_string(m, "u"));
        cj["limit"] = reduced_json(c.limit);
        cj["classification"] = to_string(c.classification);
        cj["rotations"] = Json::array();
        for (std::size_t i = 0; i < c.cycle.size(); ++i) {
          cj["rotations"].push_back(to_string(rescaling_at_basepoint(c, static_cast<int>(i)), "u"));
        }
        r["cycles"].push_back(cj);
      }
      break;
    }
    case Command::kOrbit: {
      const TypeIIPoint start = job.start.value_or(TypeIIPoint::gauss());
      r["orbit"] = orbit_json(orbit_typeII(job.map(), start, job.budget, job.precision));
      break;
    }
    case Command::kReduce: {
      const RationalMapL f = job.map();
      const RationalMapL g = normalize(f);
      const ReducedMap red = reduce_map(f);
      r["normalized"] = {{"num", series_coefficients(g.num())}, {"den", series_coefficients(g.den())}};
      r["reduced"] = reduced_json(red, "z");
      r["cancelled"] = Json::array();
      for (const auto& [factor, k] : red.cancelled) {
        r["cancelled"].push_back({{"factor", factor.to_string("z")}, {"multiplicity", k}});
      }
      r["cancelled_at_infinity"] = red.cancelled_at_infinity;
      break;
    }
    case Command::kEval: {
      r["t0"] = Json::array({job.t0.real(), job.t0.imag()});
      r["branch"] = job.branch;
      r["families"] = Json::array();
      for (const auto& [name, fam] : job.families) {
        Json fj;
        fj["name"] = name;
        fj["points"] = Json::array();
        for (const auto& [label, p] : fam) {
          fj["points"].push_back(
              {{"label", label}, {"series", to_string(p)}, {"value", complex_json(numeric(p, job.t0, job.branch))}});
        }
        r["families"].push_back(fj);
      }
      const std::string set = tree_set(job);
      const Family fam = job.family(set);
      const TreeOfSpheres t = limit_tree(fam, MarkingConvention::kCanonicalChart, job.precision);
      r["markings"] = Json::array();
      for (std::size_t i = 0; i < t.vertices.size(); ++i) {
        const auto& v = t.vertices[i];
        const MoebiusL m = from_triple(*v.triple);
        for (std::size_t k = 0; k < fam.size(); ++k) {
          const auto z = apply_numeric(m, numeric(fam[k].second, job.t0, job.branch), job.t0, job.branch);
          const auto a = numeric(v.marking[k]);
          r["markings"].push_back({{"vertex", vertex_id(*v.point)},
                                   {"label", fam[k].first},
                                   {"marking", to_string(v.marking[k])},
                                   {"normalized", complex_json(z)},
                                   {"chordal_distance", round6(chordal(z, a))}});
        }
      }
      if (job.has_map() && job.portrait) {
        const RationalMapL f = job.map();
        const Family fy = job.family("Y");
        const Family fz = job.family("Z");
        r["map_check"] = Json::array();
        for (const auto& [label, p] : fy) {
          const std::string image = job.portrait->F.at(label);
          const auto it = std::find_if(fz.begin(), fz.end(), [&](const auto& e) { return e.first == image; });
          const auto fp = map_numeric(f, numeric(p, job.t0, job.branch), job.t0, job.branch);
          const auto q = numeric(it->second, job.t0, job.branch);
          r["map_check"].push_back({{"label", label}, {"image", image}, {"chordal_distance", round6(chordal(fp, q))}});
        }
      }
      break;
    }
    case Command::kVerify: {
      if (!job.portrait) fail(ErrorCode::kInvalidArgument, "job: verify needs a portrait");
      const ValidationReport p = portrait_validate(*job.portrait);
      r["portrait"] = report_json(p);
      if (!p.ok()) {
        out.exit_code = 2;
        break;
      }
      try {
        const TreeCover c = build_cover(job);
        const ValidationReport v = verify_cover(c);
        r["cover"] = report_json(v);
        if (!v.ok()) out.exit_code = 2;
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kPrecisionExhausted) throw;
        r["cover"] = error_json(e.code(), e.what())["error"];
        out.exit_code = 2;
      }
      break;
    }
  }
  return out;
}

RunResult run_text(const std::string& job_text, Command command, const Overrides& overrides) {
  try {
    Json doc;
    try {
      doc = Json::parse(job_text);
    } catch (const nlohmann::json::parse_error& e) {
      fail(ErrorCode::kSyntaxError, std::string("job is not valid JSON: ") + e.what());
    }
    JobSpec job = load_job(doc);
    if (overrides.precision) job.precision = *overrides.precision;
    if (overrides.budget) job.budget = *overrides.budget;
    if (overrides.max_period) job.max_period = *overrides.max_period;
    if (overrides.t0) job.t0 = *overrides.t0;
    if (overrides.branch) job.branch = *overrides.branch;
    check_limits(job);
    return run(job, command);
  } catch (const Error& e) {
    return {error_json(e.code(), e.what()), std::nullopt, exit_code_for(e.code())};
  } catch (const nlohmann::json::exception& e) {
    return {error_json(ErrorCode::kInvalidArgument, std::string("job: ") + e.what()), std::nullopt, 2};
  }
}

}  // namespace berktrees::cli
