#pragma once

#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "acute/constructions.hpp"
#include "acute/coxeter.hpp"
#include "acute/duality.hpp"
#include "acute/errors.hpp"
#include "acute/euclidean.hpp"
#include "acute/export.hpp"
#include "acute/fixtures.hpp"
#include "acute/invariants.hpp"
#include "acute/parallel.hpp"
#include "acute/predicates.hpp"
#include "acute/realization.hpp"
#include "acute/slanted_cube.hpp"
#include "acute/spherical.hpp"
#include "acute/triangulation_io.hpp"

namespace acute::cli {

inline constexpr const char* tool_name = "acute_sphere";
inline constexpr const char* tool_version = "1.0.0";

enum ExitCode : int { exit_ok = 0, exit_obstruction = 1, exit_input = 2, exit_solver = 3 };

struct Options {
  std::string labels;
  std::string out;
  unsigned long long seed = 1;
  double tol = 1e-9;
  long long samples = 1000000;
  std::string format = "json";
};

struct DualOptions {
  std::vector<double> triangle;
  std::vector<int> target;
  std::vector<double> target_triangle;
  std::vector<int> map{0, 1, 2};
  double step = 1e-4;
};

/// A JSON report for stdout, a human line for stderr, and the exit code.
struct CommandResult {
  nlohmann::json report;
  std::string summary;
  int exit_code = exit_ok;
  /// Extra document to print instead of the report (construct).
  std::optional<std::string> payload;
};

namespace detail {

inline nlohmann::json ids(const AbstractTriangulation& L, const std::vector<int>& vs) {
  auto a = nlohmann::json::array();
  for (int v : vs) a.push_back(L.id(v));
  return a;
}

inline nlohmann::json exhaustive(const std::string& name, bool value) {
  return {{"name", name}, {"value", value}, {"note", "checked exhaustively"}};
}

inline nlohmann::json with_witness(const std::string& name, bool value, nlohmann::json witness) {
  return {{"name", name}, {"value", value}, {"witness", std::move(witness)}};
}

inline nlohmann::json not_applicable(const std::string& name, const std::string& why) {
  return {{"name", name}, {"value", nullptr}, {"note", "not applicable: " + why}};
}

inline nlohmann::json skeleton(const std::string& command, const std::string& input, const Options& o) {
  return {{"command", command},
          {"input", input},
          {"verdicts", nlohmann::json::array()},
          {"witnesses", nlohmann::json::array()},
          {"metrics", nlohmann::json::object()},
          {"provenance",
           {{"tool", tool_name},
            {"version", tool_version},
            {"seed", o.seed},
            {"threads", thread_budget()},
            {"tolerances", {{"realize_tol", json_number(o.tol)}, {"angle_eps", json_number(default_eps_angle)}}}}}};
}

inline void write_text(const std::string& dir, const std::string& name, const std::string& text,
                       nlohmann::json& report) {
  std::filesystem::create_directories(dir);
  const auto path = (std::filesystem::path(dir) / name).string();
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  report["files"].push_back(path);
}

inline void check_format(const std::string& f) {
  if (f != "json" && f != "off" && f != "svg") throw InputError("unknown format '" + f + "'");
}

/// First failure of the ideal all-right conditions, as a JSON witness.
inline std::optional<nlohmann::json> ideal_allright_violation(const AbstractTriangulation& L) {
  for (const auto& q : four_cycles(L)) {
    if (L.adjacent(q[0], q[2]) || L.adjacent(q[1], q[3])) continue;
    auto comps = components_without(L, {q[0], q[1], q[2], q[3]});
    bool single = std::any_of(comps.begin(), comps.end(), [](const auto& c) { return c.size() == 1; });
    if (!single) {
      return nlohmann::json{{"kind", "chordless-4-cycle-without-single-vertex-side"},
                            {"cycle", ids(L, {q[0], q[1], q[2], q[3]})}};
    }
  }
  for (const auto& e : L.edges()) {
    if (L.degree(e.first) == 4 && L.degree(e.second) == 4) {
      return nlohmann::json{{"kind", "adjacent-degree-4-vertices"}, {"edge", ids(L, {e.first, e.second})}};
    }
  }
  return std::nullopt;
}

inline TriangulationDocument load_with_labels(const std::string& path, const std::string& labels_path) {
  auto doc = load_triangulation(path);
  if (labels_path.empty()) return doc;
  std::ifstream in(labels_path);
  if (!in) throw InputError("cannot open '" + labels_path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  nlohmann::json extra;
  try {
    extra = nlohmann::json::parse(ss.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!extra.is_object() || !extra.contains("labels")) throw InputError("labels file needs a 'labels' array");
  auto merged = to_json(doc.triangulation, doc.labels ? &*doc.labels : nullptr);
  if (!merged.contains("labels")) merged["labels"] = nlohmann::json::array();
  for (const auto& l : extra["labels"]) merged["labels"].push_back(l);
  return parse_triangulation(merged);
}

/// Positions for drawing without a realization: a Tutte embedding of the
/// capped sphere.
inline std::string obstruction_svg(const AbstractTriangulation& L, const std::vector<int>& cycle) {
  const auto capped = L.is_closed() ? CappedSurface{L, L.vertex_count(), L.face_count(), {}, {}} : cap_planar(L);
  const auto pos = acute::detail::tutte_sphere(capped.sphere, 0);
  return to_svg(capped.sphere, pos, nullptr, drawing_pole(capped.sphere, pos), cycle);
}

}  // namespace detail

/// Full combinatorial battery on a parsed document.
inline CommandResult check_document(const TriangulationDocument& doc, const std::string& input, const Options& o) {
  const auto& L = doc.triangulation;
  CommandResult res;
  auto& r = res.report = detail::skeleton("check", input, o);
  r["metrics"] = {{"vertices", L.vertex_count()},
                  {"edges", L.edge_count()},
                  {"faces", L.face_count()},
                  {"euler_characteristic", L.euler_characteristic()},
                  {"boundary_components", L.boundary_cycles().size()},
                  {"closed", L.is_closed()}};
  auto& V = r["verdicts"];
  auto& W = r["witnesses"];

  const auto empty3 = find_empty_triangle(L);
  const auto k4 = find_four_clique(L);
  const bool flag = !empty3 && !k4;
  if (flag) {
    V.push_back(detail::exhaustive("flag", true));
  } else {
    V.push_back(detail::with_witness("flag", false, to_json(L, empty3 ? *empty3 : *k4)));
  }

  if (auto sq = has_chordless_square(L)) {
    V.push_back(detail::with_witness("no_chordless_square", false, to_json(L, *sq)));
  } else {
    V.push_back(detail::exhaustive("no_chordless_square", true));
  }

  const auto seps = separating_cycles(L);
  if (seps.empty()) {
    V.push_back(detail::exhaustive("no_separating_cycle", true));
  } else {
    auto arr = nlohmann::json::array();
    for (const auto& w : seps) arr.push_back(to_json(L, w));
    V.push_back(detail::with_witness("no_separating_cycle", false, arr));
  }

  if (L.is_closed()) {
    V.push_back(detail::exhaustive("flag_no_square_by_cliques", flag_no_square_by_cliques(L)));
    V.push_back(detail::exhaustive("flag_no_square_by_separation", flag_no_square_by_separation(L)));
    const bool itoh = itoh_face_predicate(L.face_count());
    V.push_back(detail::with_witness("itoh_face_count", itoh, {{"face_count", L.face_count()}}));
    if (flag) {
      if (auto bad = detail::ideal_allright_violation(L)) {
        V.push_back(detail::with_witness("ideal_allright", false, *bad));
      } else {
        V.push_back(detail::exhaustive("ideal_allright", true));
      }
    } else {
      V.push_back(detail::not_applicable("ideal_allright", "not flag"));
    }
    if (doc.labels) {
      try {
        if (auto w = coxeter_one_ended_obstruction(L, *doc.labels)) {
          V.push_back(detail::with_witness("coxeter_one_ended", false, to_json(L, *w)));
        } else {
          V.push_back(detail::exhaustive("coxeter_one_ended", true));
        }
      } catch (const PreconditionError& e) {
        V.push_back(detail::not_applicable("coxeter_one_ended", e.what()));
      }
    }
  } else {
    V.push_back(detail::not_applicable("itoh_face_count", "surface has boundary"));
    if (auto w = find_interior_empty_3_cycle(L)) {
      V.push_back(detail::with_witness("no_interior_empty_3_cycle", false, to_json(L, *w)));
    } else {
      V.push_back(detail::exhaustive("no_interior_empty_3_cycle", true));
    }
    if (auto w = find_interior_degree_4_vertex(L)) {
      V.push_back(detail::with_witness("no_interior_degree_4_vertex", false, to_json(L, *w)));
    } else {
      V.push_back(detail::exhaustive("no_interior_degree_4_vertex", true));
    }
    if (doc.labels) V.push_back(detail::not_applicable("coxeter_one_ended", "surface has boundary"));
  }

  auto obstruction = combinatorial_obstruction(L);
  if (!obstruction && !L.is_closed()) obstruction = find_interior_degree_4_vertex(L);
  const char* realizable_name = L.is_closed() ? "flag_no_square" : "flag_no_separating_square";
  if (obstruction) {
    V.push_back(detail::with_witness(realizable_name, false, to_json(L, *obstruction)));
    W.push_back(to_json(L, *obstruction));
  } else {
    V.push_back(detail::exhaustive(realizable_name, true));
  }

  // The planar pipeline also needs the capped sphere to satisfy the ideal
  // all-right conditions; cmd_realize fails the same way.
  if (!obstruction && !L.is_closed()) {
    const auto capped = cap_planar(L);
    if (!is_flag(capped.sphere) || !ideal_allright_conditions(capped.sphere)) {
      throw PreconditionError("capped surface violates the ideal all-right conditions");
    }
    V.push_back(detail::exhaustive("capped_ideal_allright", true));
    r["metrics"]["maehara_caps"] = capped.cap_centres.size();
    r["metrics"]["square_wheels"] = capped.ideal.size();
  }

  r["verdict"] = obstruction ? "not acute-realizable" : "acute-realizable";
  res.exit_code = obstruction ? exit_obstruction : exit_ok;
  res.summary = std::string(obstruction ? "not acute-realizable: " + describe(L, *obstruction) : "acute-realizable") +
                " (" + std::to_string(L.vertex_count()) + " vertices, " + std::to_string(L.face_count()) + " faces)";
  if (o.format == "svg" && !o.out.empty()) {
    detail::write_text(o.out, "check.svg", detail::obstruction_svg(L, obstruction ? obstruction->cycle : std::vector<int>{}),
                       r);
  }
  return res;
}

inline CommandResult cmd_check(const std::string& path, const Options& o) {
  detail::check_format(o.format);
  return check_document(detail::load_with_labels(path, o.labels), path, o);
}

inline CommandResult realize_document(const TriangulationDocument& doc, const std::string& input, const Options& o) {
  const auto& L = doc.triangulation;
  CommandResult res;
  auto& r = res.report = detail::skeleton("realize", input, o);
  RealizeConfig cfg;
  cfg.seed = o.seed;
  cfg.tol = o.tol;
  std::optional<GeodesicRealization> realized;
  try {
    realized = realize_sphere(L, cfg);
  } catch (const CombinatorialRefusal& e) {
    r["verdicts"].push_back(detail::with_witness("realized", false, to_json(L, e.witness())));
    r["witnesses"].push_back(to_json(L, e.witness()));
    r["verdict"] = "not acute-realizable";
    res.exit_code = exit_obstruction;
    res.summary = std::string("refused: ") + e.what();
    if (o.format == "svg" && !o.out.empty()) {
      detail::write_text(o.out, "realization.svg", detail::obstruction_svg(L, e.witness().cycle), r);
    }
    return res;
  }
  const auto& T = *realized;
  const auto acute = verify_acute(T);
  const auto perp = verify_coinciding_perpendiculars(T);
  const auto resid = pattern_residual(T);
  const auto& worst = T.parent.face(acute.worst_face);
  r["verdicts"].push_back(detail::with_witness("realized", true, {{"max_edge_residual", json_number(T.max_edge_residual)}}));
  r["verdicts"].push_back(detail::with_witness(
      "acute", acute.pass,
      {{"worst_face", detail::ids(T.parent, {worst[0], worst[1], worst[2]})}, {"max_angle", json_number(acute.max_angle)}}));
  r["verdicts"].push_back(detail::with_witness("coinciding_perpendiculars", perp.pass,
                                               {{"edges_checked", perp.edges_checked},
                                                {"max_foot_distance", json_number(perp.max_distance)}}));
  auto& m = r["metrics"];
  m["max_angle"] = json_number(acute.max_angle);
  m["min_angle"] = json_number(acute.min_angle);
  m["acute_margin"] = json_number(acute.margin);
  m["max_edge_residual"] = json_number(resid.max_edge);
  m["min_disk_clearance"] = json_number(resid.min_clearance);
  m["max_foot_distance"] = json_number(perp.max_distance);
  m["faces"] = T.scope_faces.size();

  if (!L.is_closed()) {
    try {
      const auto E = project_euclidean(T);
      r["verdicts"].push_back(detail::with_witness("euclidean_acute", E.max_angle < pi / 2,
                                                   {{"viewpoint", T.parent.id(E.viewpoint)},
                                                    {"max_angle", json_number(E.max_angle)}}));
      m["euclidean_max_angle"] = json_number(E.max_angle);
      m["euclidean_orthogonality_error"] = json_number(E.orthogonality_error);
      m["euclidean_foot_ratio_error"] = json_number(E.foot_ratio_error);
    } catch (const PreconditionError& e) {
      r["verdicts"].push_back(detail::with_witness("euclidean_acute", false, {{"reason", e.what()}}));
    }
  }

  const bool ok = acute.pass && perp.pass;
  r["verdict"] = ok ? "acute-realizable" : "realization failed verification";
  res.exit_code = ok ? exit_ok : exit_solver;
  std::ostringstream s;
  s.precision(6);
  s << (ok ? "realized" : "realization failed verification") << ": max angle " << acute.max_angle << " rad, residual "
    << resid.max_edge;
  res.summary = s.str();

  if (o.out.empty()) {
    r["realization"] = to_json(T);
  } else if (o.format == "json") {
    detail::write_text(o.out, "realization.json", to_json(T).dump(1) + "\n", r);
  } else if (o.format == "off") {
    detail::write_text(o.out, "realization.off", to_off(T), r);
  } else {
    detail::write_text(o.out, "realization.svg",
                       to_svg(T.parent, T.positions, &T.radii, drawing_pole(T.parent, T.positions)), r);
  }
  return res;
}

inline CommandResult cmd_realize(const std::string& path, const Options& o) {
  detail::check_format(o.format);
  return realize_document(detail::load_with_labels(path, o.labels), path, o);
}

inline SphericalTriangle triangle_arg(const std::vector<double>& v, const char* what) {
  if (v.size() != 3) throw InputError(std::string(what) + " needs three comma-separated values");
  return SphericalTriangle::from_sides(v[0], v[1], v[2]);
}

inline CommandResult cmd_dual(const DualOptions& d, const Options& o) {
  CommandResult res;
  auto& r = res.report = detail::skeleton("dual", "", o);
  const auto R = triangle_arg(d.triangle, "--triangle");
  if (d.target.empty() == d.target_triangle.empty()) {
    throw InputError("give exactly one of --target and --target-triangle");
  }
  if (d.map.size() != 3) throw InputError("--map needs three corner indices");
  CornerMap map{{d.map[0], d.map[1], d.map[2]}};
  if (!map.valid()) throw InputError("--map is not a permutation of 0,1,2");

  std::optional<DualityWitness> witness;
  std::optional<AbsenceReport> absence;
  SphericalTriangle target;
  std::string solver;
  if (!d.target.empty()) {
    if (d.target.size() != 3) throw InputError("--target needs three labels");
    for (int p : d.target) {
      if (p < 2) throw InputError("target labels must be >= 2");
    }
    target = SphericalTriangle::coxeter(d.target[0], d.target[1], d.target[2]);
    int apex = -1;
    int twos = 0;
    for (int i = 0; i < 3; ++i) {
      if (d.target[i] == 2) {
        ++twos;
      } else {
        apex = i;
      }
    }
    if (twos >= 2) {
      solver = "22p";
      if (apex < 0) apex = 0;
      // Relabel target corners so the apex is corner 0; the two right-angled
      // corners are interchangeable.
      std::array<int, 3> perm{};
      perm[apex] = 0;
      perm[(apex + 1) % 3] = 1;
      perm[(apex + 2) % 3] = 2;
      CornerMap composed{{perm[map[0]], perm[map[1]], perm[map[2]]}};
      witness = solve_dual_22p(R, d.target[apex], composed);
      if (witness) {
        witness->target = target;
        witness->map = map;
      } else {
        AbsenceReport a;
        a.reason = "R is not slimmer than the polar dual of R_{2,2," + std::to_string(d.target[apex]) +
                   "} (exact criterion)";
        absence = a;
      }
    }
  } else {
    target = triangle_arg(d.target_triangle, "--target-triangle");
  }
  if (solver.empty()) {
    solver = "general";
    auto out = solve_dual_general(R, target, map, d.step);
    witness = out.witness;
    absence = out.absence;
  }
  r["metrics"] = {{"R", to_json(R)}, {"target", to_json(target)}, {"map", map.map}, {"solver", solver}};
  if (witness) {
    const auto cube = build_slanted_cube(*witness);
    r["verdicts"].push_back(detail::with_witness("dual", true, to_json(*witness)));
    r["witnesses"].push_back({{"duality", to_json(*witness)}, {"slanted_cube", to_json(cube)}});
    r["metrics"]["max_residual"] = json_number(witness->max_residual());
    r["metrics"]["link_error"] = json_number(cube.link_error);
    r["verdict"] = "dual";
    res.exit_code = exit_ok;
    std::ostringstream s;
    s.precision(10);
    s << "witness x=" << witness->x << " y=" << witness->y << " z=" << witness->z;
    res.summary = s.str();
  } else {
    r["verdicts"].push_back(detail::with_witness("dual", false, to_json(*absence)));
    r["witnesses"].push_back({{"absence", to_json(*absence)}});
    r["verdict"] = "not dual";
    res.exit_code = exit_obstruction;
    res.summary = "no duality: " + absence->reason;
  }
  return res;
}

inline CommandResult invariants_document(const TriangulationDocument& doc, const std::string& input, const Options& o) {
  const auto& L = doc.triangulation;
  CommandResult res;
  auto& r = res.report = detail::skeleton("invariants", input, o);
  r["provenance"]["samples_per_face"] = o.samples;
  auto& m = r["metrics"];
  std::ostringstream s;
  s.precision(8);
  if (L.is_closed()) {
    AlphaConfig ac;
    ac.seed = o.seed;
    const auto a = alpha_estimate(L, ac);
    double lo = a.alpha;
    double hi = a.alpha;
    auto per = nlohmann::json::array();
    for (double v : a.per_start) {
      per.push_back(json_number(v));
      if (std::isfinite(v)) hi = std::max(hi, v);
    }
    m["alpha"] = {{"estimate", json_number(a.alpha)},
                  {"kind", "local minimax upper bound"},
                  {"spread_over_starts", json_number(hi - lo)},
                  {"per_start", per},
                  {"embedded_starts", a.embedded_starts}};
    r["verdicts"].push_back(detail::with_witness("alpha_below_right_angle", a.alpha < pi / 2,
                                                 {{"alpha", json_number(a.alpha)}}));
    s << "alpha " << a.alpha;
  } else {
    r["verdicts"].push_back(detail::not_applicable("alpha_below_right_angle", "surface has boundary"));
  }
  if (o.samples < 1000) throw InputError("--samples must be at least 1000");
  RealizeConfig cfg;
  cfg.seed = o.seed;
  cfg.tol = o.tol;
  try {
    const auto T = realize_sphere(L, cfg);
    const auto b = beta(T, o.samples, o.seed);
    m["beta"] = {{"estimate", json_number(b.value)},
                 {"standard_error", json_number(b.standard_error)},
                 {"samples", b.samples}};
    r["verdicts"].push_back(detail::with_witness("beta_defined", true, {{"acute_faces", T.scope_faces.size()}}));
    s << (s.tellp() > 0 ? ", " : "") << "beta " << b.value << " +- " << b.standard_error;
    res.exit_code = exit_ok;
  } catch (const CombinatorialRefusal& e) {
    r["verdicts"].push_back(detail::with_witness("beta_defined", false, to_json(L, e.witness())));
    r["witnesses"].push_back(to_json(L, e.witness()));
    s << (s.tellp() > 0 ? ", " : "") << "beta refused: " << e.what();
    res.exit_code = exit_obstruction;
  }
  res.summary = s.str();
  return res;
}

inline CommandResult cmd_invariants(const std::string& path, const Options& o) {
  return invariants_document(detail::load_with_labels(path, o.labels), path, o);
}

/// construct cap N | wheel | double PATH | flip PATH U V | fixture NAME
inline CommandResult cmd_construct(const std::vector<std::string>& args, const Options& o) {
  if (args.empty()) throw InputError("construct needs a kind: cap, wheel, double, flip or fixture");
  const std::string& kind = args[0];
  auto need = [&](std::size_t n) {
    if (args.size() != n) throw InputError("construct " + kind + " takes " + std::to_string(n - 1) + " argument(s)");
  };
  std::optional<AbstractTriangulation> built;
  std::string name;
  if (kind == "cap") {
    need(2);
    int n = 0;
    try {
      n = std::stoi(args[1]);
    } catch (const std::exception&) {
      throw InputError("cap size must be an integer");
    }
    if (n < 5) throw InputError("cap size must be at least 5");
    built = maehara_cap(n);
    name = "maehara_cap_" + args[1];
  } else if (kind == "wheel") {
    need(1);
    built = square_wheel();
    name = "square_wheel";
  } else if (kind == "double") {
    need(2);
    built = double_surface(load_triangulation(args[1]).triangulation);
    name = std::filesystem::path(args[1]).stem().string() + "_double";
  } else if (kind == "flip") {
    need(4);
    built = diagonal_flip(load_triangulation(args[1]).triangulation, args[2], args[3]);
    name = std::filesystem::path(args[1]).stem().string() + "_flip";
  } else if (kind == "fixture") {
    need(2);
    built = fixtures::named(args[1]);
    name = args[1];
  } else {
    throw InputError("unknown construction '" + kind + "'");
  }
  const auto& L = *built;
  CommandResult res;
  auto& r = res.report = detail::skeleton("construct", kind, o);
  r["metrics"] = {{"vertices", L.vertex_count()}, {"edges", L.edge_count()}, {"faces", L.face_count()},
                  {"closed", L.is_closed()}};
  r["verdict"] = "constructed";
  res.summary = name + ": " + std::to_string(L.vertex_count()) + " vertices, " + std::to_string(L.face_count()) +
                " faces";
  const std::string text = serialize_triangulation(L) + "\n";
  if (o.out.empty()) {
    res.payload = text;
  } else {
    detail::write_text(o.out, name + ".json", text, r);
  }
  return res;
}

/// Runs a command, turning errors into a report and an exit code.
template <class F>
CommandResult guarded(const std::string& command, const Options& o, F&& run) {
  auto fail = [&](int code, const std::string& type, const std::string& what) {
    CommandResult res;
    res.report = detail::skeleton(command, "", o);
    res.report["verdict"] = "error";
    res.report["error"] = {{"type", type}, {"message", what}};
    res.exit_code = code;
    res.summary = type + ": " + what;
    return res;
  };
  try {
    return run();
  } catch (const InputError& e) {
    return fail(exit_input, "input error", e.what());
  } catch (const InvariantError& e) {
    return fail(exit_input, "invalid triangulation", e.what());
  } catch (const PreconditionError& e) {
    return fail(exit_input, "precondition violated", e.what());
  } catch (const NumericalError& e) {
    return fail(exit_solver, "numerical failure", e.what());
  } catch (const InternalError& e) {
    return fail(exit_solver, "internal error", e.what());
  }
}

}  // namespace acute::cli
