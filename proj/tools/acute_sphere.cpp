#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "acute/cli.hpp"

int main(int argc, char** argv) {
  using namespace acute::cli;
  CLI::App app{"Acute triangulations of the sphere: checks, realizations, duality and invariants"};
  app.require_subcommand(1);
  Options o;
  DualOptions d;
  std::string path;
  std::vector<std::string> construct_args;

  auto common = [&](CLI::App* c) {
    c->add_option("--out", o.out, "Output directory");
    c->add_option("--seed", o.seed, "Random seed");
    c->add_option("--tol", o.tol, "Edge residual tolerance for realizations");
    c->add_option("--format", o.format, "json, off or svg");
  };

  auto* check = app.add_subcommand("check", "Combinatorial battery");
  check->add_option("path", path, "Triangulation JSON")->required();
  check->add_option("--labels", o.labels, "JSON file with a 'labels' array");
  common(check);

  auto* realize = app.add_subcommand("realize", "Acute geodesic realization via circle patterns");
  realize->add_option("path", path, "Triangulation JSON")->required();
  realize->add_option("--labels", o.labels, "JSON file with a 'labels' array");
  common(realize);

  auto* dual = app.add_subcommand("dual", "Hyperbolic duality of two spherical triangles");
  dual->add_option("--triangle", d.triangle, "Sides a,b,c of R")->delimiter(',')->required();
  auto* t1 = dual->add_option("--target", d.target, "Coxeter labels p,q,r")->delimiter(',');
  auto* t2 = dual->add_option("--target-triangle", d.target_triangle, "Sides of the target")->delimiter(',');
  t1->excludes(t2);
  dual->add_option("--map", d.map, "Target corner of each corner of R")->delimiter(',');
  dual->add_option("--step", d.step, "Grid step of the absence certificate");
  common(dual);

  auto* inv = app.add_subcommand("invariants", "Estimate alpha and beta");
  inv->add_option("path", path, "Triangulation JSON")->required();
  inv->add_option("--samples", o.samples, "Monte Carlo samples per face");
  inv->add_option("--labels", o.labels, "JSON file with a 'labels' array");
  common(inv);

  auto* construct = app.add_subcommand("construct", "cap N | wheel | double PATH | flip PATH U V | fixture NAME");
  construct->add_option("args", construct_args, "Construction and its arguments")->required();
  common(construct);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_input;
  }

  CommandResult res;
  if (check->parsed()) {
    res = guarded("check", o, [&] { return cmd_check(path, o); });
  } else if (realize->parsed()) {
    res = guarded("realize", o, [&] { return cmd_realize(path, o); });
  } else if (dual->parsed()) {
    res = guarded("dual", o, [&] { return cmd_dual(d, o); });
  } else if (inv->parsed()) {
    res = guarded("invariants", o, [&] { return cmd_invariants(path, o); });
  } else {
    res = guarded("construct", o, [&] { return cmd_construct(construct_args, o); });
  }
  res.report["exit_code"] = res.exit_code;
  if (res.payload) {
    std::cout << *res.payload;
  } else {
    std::cout << res.report.dump(2) << "\n";
  }
  std::cerr << res.summary << "\n";
  return res.exit_code;
}
