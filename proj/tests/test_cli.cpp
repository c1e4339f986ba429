#include <gtest/gtest.h>

#include <sstream>

#include "svol_cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "svol");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = svol::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(SVOL_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Cli, SeifertVolumes) {
  auto r = run({"seifert", "volumes", "(1; 1/2, 1/2)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0\n1/4 * 4*pi^2\n1 * 4*pi^2\n");
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, SeifertVolumesDecimalWitnessesOracle) {
  auto r = run({"seifert", "volumes", "(1; 1/2, 1/2)", "--decimal", "--witnesses", "0", "--oracle"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "0 = 0\n"
            "1/4 * 4*pi^2 = 9.86960440109\n"
            "1 * 4*pi^2 = 39.4784176044\n"
            "n=(0,0) n=0 zeta=0 z=(0,0)\n"
            "n=(1,1) n=1 zeta=0 z=(1/2,1/2)\n"
            "oracle: agree (window B=8, 3 values)\n");
}

TEST(Cli, SeifertInfoSvFoliationWitnesses) {
  auto info = run({"seifert", "info", "(1; 1/2, 1/2)"});
  EXPECT_EQ(info.out, "manifold: (1; 1/2, 1/2)\ngenus: 1\nexceptional fibers: 2\ne: 1\nchi: -1\ngeometry: SL2R~\n");
  EXPECT_EQ(run({"seifert", "sv", "(4; 3)"}).out, "SV = 12 * 4*pi^2\nchi^2/|e| = 12\n");
  EXPECT_EQ(run({"seifert", "foliation", "(1; 5)"}).out, "horizontal foliation: no\n");
  auto w = run({"seifert", "witnesses", "(2; 1)", "4"});
  EXPECT_EQ(w.code, 0);
  EXPECT_NE(w.out.find("n=(0) n=-2 zeta=2 z=(-2)\n"), std::string::npos) << w.out;
}

TEST(Cli, DomainErrorsGoToStderrOnly) {
  auto r = run({"seifert", "volumes", "(1; 1/0)"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(r.err.rfind("error: parse: ", 0), 0u) << r.err;
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);

  auto w = run({"seifert", "volumes", "(1; 1/2, 1/2)", "--witnesses", "1/3"});
  EXPECT_EQ(w.code, 1);
  EXPECT_TRUE(w.out.empty());
  EXPECT_EQ(w.err.rfind("error: not-attained: ", 0), 0u) << w.err;

  auto g0 = run({"seifert", "volumes", "(0; 1/2, 1/3, 1/7)"});
  EXPECT_EQ(g0.code, 1);
  EXPECT_TRUE(g0.out.empty());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"seifert", "volumes"}).code, 2);
  EXPECT_EQ(run({"cs", "verify", "su3"}).code, 2);
  EXPECT_EQ(run({"covers", "merge", "--degrees", "2,3"}).code, 2);
  auto help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("seifert"), std::string::npos);
}

TEST(Cli, CsVerify) {
  auto r = run({"cs", "verify", "iso-sl2r"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("beta = "), std::string::npos);
  EXPECT_NE(r.out.find("decomposition: Tf = 2 * phiX^phiY^phiZ + d(beta)"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.substr(r.out.size() - 3), "OK\n");

  auto p = run({"cs", "verify", "psl2c"});
  EXPECT_EQ(p.code, 0);
  EXPECT_NE(p.out.find("Tf = -1/4*pi^-2 * phiX^phiY^phiZ"), std::string::npos) << p.out;
}

TEST(Cli, CsJacobi) {
  EXPECT_EQ(run({"cs", "jacobi", data("iso_sl2r.json")}).out, "ok\n");
  EXPECT_EQ(run({"cs", "jacobi", data("jacobi_violation.json")}).out, "Jacobi violation at (X,Y,Z): Y:-2\n");
  auto missing = run({"cs", "jacobi", data("nope.json")});
  EXPECT_EQ(missing.code, 1);
  EXPECT_EQ(missing.err.rfind("error: io: ", 0), 0u);
}

TEST(Cli, Graph) {
  EXPECT_EQ(run({"graph", "validate", data("motegi_2_3_2_5.json")}).out, "ok (closed)\n");
  EXPECT_EQ(run({"graph", "additivity", data("motegi_2_3_2_5.json")}).out, "0\n");
  EXPECT_EQ(run({"graph", "additivity", data("prop73_zero_hv.json")}).out, "default: 0\ns-kill: 0\nh-kill: 0\n");
  EXPECT_EQ(run({"graph", "rw", data("rw_triangle_consistent.json")}).out, "consistent\npotentials: 1 2 6\n");
  auto bad = run({"graph", "rw", data("rw_triangle_inconsistent.json")});
  EXPECT_EQ(bad.code, 0);
  EXPECT_EQ(bad.out.rfind("inconsistent\ncycle: ", 0), 0u);
}

TEST(Cli, Covers) {
  EXPECT_EQ(run({"covers", "merge", "--degrees", "2,3", "--m", "1"}).out,
            "D                     6\ncopies                3 2\nper_torus_elevations  6\n");
  EXPECT_EQ(run({"covers", "merge", "--degrees", "4,6", "--m", "2", "--json"}).out,
            "{\"D\":12,\"copies\":[3,2],\"per_torus_elevations\":6}\n");
  EXPECT_EQ(run({"covers", "colored", "--k", "2,3", "--l", "1,2", "--json"}).out,
            "{\"K\":6,\"corridor_copies\":[3,4],\"j0_negative_copies\":6,\"j0_positive_copies\":6,\"matched\":true}\n");
  EXPECT_EQ(run({"covers", "elevations", "--deg-T", "9", "--deg-s", "3"}).out, "elevations  3\n");
  EXPECT_EQ(run({"covers", "intersection", "--i-fs", "1", "--deg-f", "2", "--deg-s", "3", "--deg-T", "6"}).out,
            "intersection  1\n");
  auto bad = run({"covers", "intersection", "--i-fs", "1", "--deg-f", "2", "--deg-s", "2", "--deg-T", "8"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_TRUE(bad.out.empty());
}

TEST(Cli, Motegi) {
  EXPECT_EQ(run({"cases", "motegi", "2", "3", "2", "5"}).out, "H1 order 59; nontrivial graph manifold: yes; SV = 0\n");
  auto r = run({"cases", "motegi", "2", "2", "2", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "H1 order 15; nontrivial graph manifold: no; SV = 0");
  EXPECT_EQ(run({"cases", "motegi", "2", "3"}).code, 2);
}

TEST(Cli, Deterministic) {
  std::vector<std::vector<std::string>> invocations = {
      {"seifert", "volumes", "(2; 1/3, -2/5)"}, {"cs", "verify", "iso-sl2r"}, {"graph", "rw", data("rw_triangle_inconsistent.json")}};
  for (const auto& inv : invocations) EXPECT_EQ(run(inv).out, run(inv).out);
}
