#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>

#include "support.hpp"

#include "acute/cli.hpp"

using namespace acute;
using namespace acute::cli;
using acute::testing::fixture_path;
namespace fs = std::filesystem;

namespace {

struct Run {
  int exit_code = -1;
  std::string out;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run run(const std::string& args) {
  const std::string cmd = std::string(ACUTE_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) throw std::runtime_error("popen failed");
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("acute_cli_test_" + std::to_string(getpid())) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

const nlohmann::json* verdict(const nlohmann::json& report, const std::string& name) {
  for (const auto& v : report["verdicts"]) {
    if (v["name"] == name) return &v;
  }
  return nullptr;
}

}  // namespace

TEST(CliCheck, ExitCodes) {
  EXPECT_EQ(run("check " + fixture_path("icosahedron")).exit_code, 0);
  EXPECT_EQ(run("check " + fixture_path("fig2a")).exit_code, 0);
  EXPECT_EQ(run("check " + fixture_path("fig2b")).exit_code, 0);
  EXPECT_EQ(run("check " + fixture_path("fig1a_disk")).exit_code, 0);
  EXPECT_EQ(run("check " + fixture_path("tetrahedron")).exit_code, 1);
  EXPECT_EQ(run("check " + fixture_path("fig1a_double")).exit_code, 1);
  EXPECT_EQ(run("check /nonexistent/file.json").exit_code, 2);
  const auto dir = scratch("malformed");
  write_file(dir / "bad.json", "{\"vertices\": [\"a\"");
  EXPECT_EQ(run("check " + (dir / "bad.json").string()).exit_code, 2);
  write_file(dir / "nonmanifold.json",
             "{\"vertices\":[\"a\",\"b\",\"c\",\"d\",\"e\"],\"faces\":[[\"a\",\"b\",\"c\"],[\"a\",\"b\",\"d\"],"
             "[\"a\",\"b\",\"e\"]]}");
  EXPECT_EQ(run("check " + (dir / "nonmanifold.json").string()).exit_code, 2);
  EXPECT_EQ(run("frobnicate").exit_code, 2);
  EXPECT_EQ(run("check " + fixture_path("icosahedron") + " --format xml").exit_code, 2);
}

TEST(CliCheck, ReportShape) {
  const auto r = run("check " + fixture_path("fig1a_double"));
  ASSERT_EQ(r.exit_code, 1);
  const auto j = r.json();
  EXPECT_EQ(j["command"], "check");
  EXPECT_EQ(j["exit_code"], 1);
  EXPECT_EQ(j["provenance"]["tool"], "acute_sphere");
  EXPECT_EQ(j["provenance"]["version"], "1.0.0");
  for (const auto& v : j["verdicts"]) {
    EXPECT_TRUE(v.contains("witness") || v.contains("note")) << v.dump();
    if (v["value"] == false && !v.contains("note")) EXPECT_TRUE(v.contains("witness"));
  }
  const auto* sep = verdict(j, "no_separating_cycle");
  ASSERT_NE(sep, nullptr);
  EXPECT_EQ((*sep)["value"], false);
  EXPECT_EQ((*verdict(j, "flag_no_square_by_cliques"))["value"], (*verdict(j, "flag_no_square_by_separation"))["value"]);
}

TEST(CliCheck, ItohFixtures) {
  for (const std::string name : {"fig2a", "fig2b"}) {
    const auto j = run("check " + fixture_path(name)).json();
    EXPECT_EQ((*verdict(j, "itoh_face_count"))["value"], true) << name;
    EXPECT_EQ(j["exit_code"], 0);
  }
}

TEST(CliCheck, LabelsAddCoxeterVerdict) {
  const auto dir = scratch("labels");
  write_file(dir / "labels.json", "{\"labels\": [{\"edge\": [\"t\", \"u0\"], \"m\": 3}]}");
  const auto with = run("check " + fixture_path("icosahedron") + " --labels " + (dir / "labels.json").string());
  ASSERT_EQ(with.exit_code, 0);
  EXPECT_NE(verdict(with.json(), "coxeter_one_ended"), nullptr);
  const auto without = run("check " + fixture_path("icosahedron")).json();
  const auto* v = verdict(without, "coxeter_one_ended");
  if (v != nullptr) EXPECT_TRUE(v->contains("note"));
}

TEST(CliCheck, SvgOutput) {
  const auto dir = scratch("svg");
  const auto r = run("check " + fixture_path("fig1a_double") + " --format svg --out " + dir.string());
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_TRUE(fs::exists(dir / "check.svg"));
}

TEST(CliRealize, IcosahedronAndRefusal) {
  const auto r = run("realize " + fixture_path("icosahedron"));
  ASSERT_EQ(r.exit_code, 0);
  const auto j = r.json();
  EXPECT_NEAR(j["metrics"]["max_angle"].get<double>(), 2 * pi / 5, 1e-6);
  EXPECT_LT(j["metrics"]["max_edge_residual"].get<double>(), 1e-9);
  EXPECT_EQ((*verdict(j, "acute"))["value"], true);
  EXPECT_TRUE(j.contains("realization"));
  const auto bad = run("realize " + fixture_path("fig1a_double"));
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_FALSE(bad.json()["witnesses"].empty());
}

TEST(CliRealize, FilesAndDeterminism) {
  const auto dir = scratch("realize");
  const auto off = run("realize " + fixture_path("fig2a") + " --format off --out " + dir.string());
  ASSERT_EQ(off.exit_code, 0);
  ASSERT_TRUE(fs::exists(dir / "realization.off"));
  std::ifstream in(dir / "realization.off");
  std::string head;
  std::getline(in, head);
  EXPECT_EQ(head, "OFF");
  EXPECT_EQ(run("realize " + fixture_path("fig2b") + " --format svg --out " + dir.string()).exit_code, 0);
  EXPECT_TRUE(fs::exists(dir / "realization.svg"));
  const auto a = run("realize " + fixture_path("fig2b") + " --seed 5");
  const auto b = run("realize " + fixture_path("fig2b") + " --seed 5");
  EXPECT_EQ(a.out, b.out);
}

TEST(CliRealize, PlanarEuclideanVerdict) {
  const auto cap = run("realize " + fixture_path("maehara_cap_5")).json();
  EXPECT_EQ(cap["exit_code"], 0);
  EXPECT_EQ((*verdict(cap, "euclidean_acute"))["value"], true);
  const auto disk = run("realize " + fixture_path("fig1a_disk")).json();
  EXPECT_EQ(disk["exit_code"], 0);
  const auto* e = verdict(disk, "euclidean_acute");
  ASSERT_NE(e, nullptr);
  EXPECT_EQ((*e)["value"], false);
  EXPECT_TRUE((*e)["witness"].contains("reason"));
}

TEST(CliDual, AbsenceWitnessAndErrors) {
  const auto absent = run("dual --triangle 1,0.5,0.6 --target 2,3,5");
  EXPECT_EQ(absent.exit_code, 1);
  EXPECT_EQ(absent.json()["verdict"], "not dual");
  const auto w = run("dual --triangle 1,1,1 --target 2,2,2");
  ASSERT_EQ(w.exit_code, 0);
  EXPECT_NEAR(w.json()["witnesses"][0]["duality"]["x"].get<double>(), 0.7350525871447156, 1e-12);
  EXPECT_EQ(run("dual --triangle 1,1,1 --target 5,2,2").exit_code, 0);
  EXPECT_EQ(run("dual --triangle 1,1,1 --target 2,5,2 --map 1,0,2").exit_code, 0);
  EXPECT_EQ(run("dual --triangle 1,1,4 --target 2,2,2").exit_code, 2);
  EXPECT_EQ(run("dual --triangle 1,1 --target 2,2,2").exit_code, 2);
  EXPECT_EQ(run("dual --triangle 1,1,1 --target 2,2,2 --target-triangle 1,1,1").exit_code, 2);
}

TEST(CliConstruct, CapDoubleFlip) {
  const auto cap = run("construct cap 5");
  ASSERT_EQ(cap.exit_code, 0);
  EXPECT_EQ(cap.json()["faces"].size(), 45u);
  const auto dir = scratch("construct");
  write_file(dir / "cap5.json", cap.out);
  const auto dbl = run("construct double " + (dir / "cap5.json").string());
  ASSERT_EQ(dbl.exit_code, 0);
  EXPECT_EQ(dbl.json()["faces"].size(), 90u);
  const auto L = parse_triangulation(cap.out).triangulation;
  const auto rim = L.boundary_cycles().front();
  EXPECT_EQ(run("construct flip " + (dir / "cap5.json").string() + " " + L.id(rim[0]) + " " + L.id(rim[1])).exit_code,
            2);
  EXPECT_EQ(run("construct fixture nonsense").exit_code, 2);
  EXPECT_EQ(run("construct fixture fig2a").out, run("construct fixture fig2a").out);
}

TEST(CliInvariants, InProcess) {
  Options o;
  o.samples = 2000;
  const auto ico = guarded("invariants", o, [&] { return cmd_invariants(fixture_path("icosahedron"), o); });
  EXPECT_EQ(ico.exit_code, 0);
  EXPECT_NEAR(ico.report["metrics"]["alpha"]["estimate"].get<double>(), 2 * pi / 5, 1e-3);
  const auto tet = guarded("invariants", o, [&] { return cmd_invariants(fixture_path("tetrahedron"), o); });
  EXPECT_EQ(tet.exit_code, 1);
  o.samples = 10;
  const auto few = guarded("invariants", o, [&] { return cmd_invariants(fixture_path("icosahedron"), o); });
  EXPECT_EQ(few.exit_code, 2);
}

TEST(CliCheck, SquareWheelDiskIsRefused) {
  const auto r = run("check " + fixture_path("square_wheel"));
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ((*verdict(r.json(), "no_interior_degree_4_vertex"))["value"], false);
  EXPECT_EQ(run("realize " + fixture_path("square_wheel")).exit_code, 1);
}

TEST(CliAgreement, CheckAndRealizeNeverDisagree) {
  Options o;
  for (const auto& name : fixtures::names()) {
    SCOPED_TRACE(name);
    const auto c = guarded("check", o, [&] { return cmd_check(fixture_path(name), o); });
    const auto r = guarded("realize", o, [&] { return cmd_realize(fixture_path(name), o); });
    ASSERT_NE(c.exit_code, 2);
    EXPECT_EQ(c.exit_code, r.exit_code);
  }
}
