#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "tropcong/json_io.hpp"

using namespace tropcong;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string line_json() { return std::string(TROPCONG_DATA_DIR) + "/standard_line.json"; }

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "tropcong_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string read(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, EqOnStandardLine) {
  auto r = run({"eq", "--poly", "0 + x*y", "--poly", "0 + x^2", "--complex", line_json()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "equal\n");
  r = run({"eq", "--poly", "0 + x", "--poly", "0 + x^2", "--complex", line_json()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("different"), std::string::npos);
  // Without a complex the comparison is on R^2.
  EXPECT_EQ(run({"eq", "--poly", "0 + x*y", "--poly", "0 + x^2"}).code, 1);
}

TEST(Cli, DeriveThenVerify) {
  auto chain = scratch("chain.json");
  EXPECT_EQ(run({"derive", "--from", "0 + x*y", "--to", "0 + x^2", "-o", chain.string()}).code, 0);
  auto r = run({"verify", chain.string()});
  EXPECT_EQ(r.code, 0) << r.out << r.err;

  // A corrupted step fails replay.
  auto j = io::Json::parse(read(chain));
  ASSERT_FALSE(j["steps"].empty());
  j["steps"][0]["generator"] = io::Json::array({3, 1});
  auto bad = scratch("bad_chain.json");
  write(bad, j.dump());
  EXPECT_EQ(run({"verify", bad.string()}).code, 1);

  EXPECT_EQ(run({"derive", "--from", "0 + x", "--to", "0 + x^2"}).code, 1);
}

TEST(Cli, RefuteThenVerifyAndRoundTrip) {
  auto cands = scratch("cands.json");
  write(cands, R"([["0 + x*y", "0 + x + y + x^2 + x*y + y^2"], {"lhs": "0 + x", "rhs": "0 + x + y"}, ["x", "x"]])");
  auto cert = scratch("cert.json");
  auto r = run({"refute", "--candidates", cands.string(), "--complex", line_json(), "-o", cert.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(run({"verify-cert", cert.string()}).code, 0);

  // Re-serialising the parsed certificate reproduces the file byte for byte.
  auto parsed = io::certificate_from_json(io::Json::parse(read(cert)));
  EXPECT_EQ(io::certificate_to_json(parsed).dump(2) + "\n", read(cert));

  auto j = io::Json::parse(read(cert));
  j["witness"]["eps"] = "1000";
  auto bad = scratch("bad_cert.json");
  write(bad, j.dump());
  auto v = run({"verify-cert", bad.string()});
  EXPECT_EQ(v.code, 1);
  EXPECT_NE(v.out.find("invalid"), std::string::npos);
}

TEST(Cli, RefuteRejectsFullPlane) {
  auto plane = scratch("plane.json");
  write(plane, io::complex_to_json(full_space(2)).dump());
  auto cands = scratch("empty.json");
  write(cands, "[]");
  auto r = run({"refute", "--candidates", cands.string(), "--complex", plane.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("proper"), std::string::npos);
}

TEST(Cli, SmallCommands) {
  EXPECT_EQ(run({"parse", "--poly", "x + 0 + 1*x"}).out, "0 + 1*x\n");
  EXPECT_EQ(run({"eval", "--poly", "0 + x*y", "--point", "1/2,3"}).out, "7/2\n");
  EXPECT_EQ(run({"canon", "--poly", "0 + x + -5*x^2 + x^2"}).out, "0 + x^2\n");
  EXPECT_EQ(run({"newton", "--poly", "0 + x + y"}).out, "[[0,0],[0,1],[1,0]]\n");
  EXPECT_EQ(run({"delta", "--points", "[[0,0],[1,1]]"}).out.substr(0, 20), R"({"a":0,"b":0,"c":2,")");
  EXPECT_EQ(run({"balance", "--complex", line_json()}).code, 0);
  EXPECT_EQ(run({"unbounded", "--complex", line_json()}).code, 0);
  EXPECT_EQ(run({"translate", "--poly", "0 + x", "--dim", "1", "--by", "1"}).out, "0 + 1*x\n");
  auto d = run({"decompose", "--poly", "0 + x*y"});
  EXPECT_EQ(d.code, 0);
  EXPECT_NE(d.out.find("u: "), std::string::npos);
  auto t = io::Json::parse(run({"thin", "--n", "2", "--N", "5"}).out);
  EXPECT_EQ(t["min_dist_sq"], 17);
  EXPECT_EQ(t["determinant"], -1);
}

TEST(Cli, WitnessOnTranslatedLine) {
  auto moved = scratch("moved.json");
  auto r = run({"translate", "--complex", line_json(), "--by", "1,2", "-o", moved.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  auto w = run({"witness", "--complex", moved.string(), "--points", "[[0,0],[2,0],[0,2],[2,2]]", "--u0", "1,1"});
  ASSERT_EQ(w.code, 0) << w.err;
  EXPECT_EQ(io::Json::parse(w.out)["eps"], 1);
}

TEST(Cli, SubspaceCommands) {
  auto w = scratch("w.json");
  write(w, R"({"dim": 2, "span": [[1, 1]]})");
  auto g = io::Json::parse(run({"subspace-gens", "--subspace", w.string()}).out);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g[0]["lhs"], "x*y^-1");
  auto line = scratch("diag.json");
  write(line, R"({"dim": 2, "cells": [
      {"id": "o", "eq": [[1, 0, 0], [0, 1, 0]], "ineq": []},
      {"id": "a", "eq": [[1, -1, 0]], "ineq": [[-1, 0, 0]], "weight": 1},
      {"id": "b", "eq": [[1, -1, 0]], "ineq": [[1, 0, 0]], "weight": 1}],
    "facets": ["a", "b"]})");
  auto r = run({"reduce", "--complex", line.string(), "--subspace", w.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(io::Json::parse(r.out)["dim"], 1);
  auto c = io::Json::parse(run({"reduce", "--subspace", w.string(), "--chart"}).out);
  EXPECT_EQ(c["basis"], io::Json::parse("[[1,1]]"));
}

TEST(Cli, UsageAndInputErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({"parse", "--poly", "2 x"}).code, 2);
  EXPECT_EQ(run({"verify", "/nonexistent/file.json"}).code, 2);
  auto junk = scratch("junk.json");
  write(junk, R"({"dim": 2, "cells": [{"id": "a", "eq": [[1, 2]]}], "facets": ["a"]})");
  EXPECT_EQ(run({"balance", "--complex", junk.string()}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
