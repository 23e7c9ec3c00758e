#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "zck/cli.hpp"

using namespace zck::cli;

namespace {

const std::string kData = ZCK_TEST_DATA;

std::string golden(const std::string& name) {
  std::ifstream f(kData + "/golden/" + name);
  std::stringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

struct Result {
  int code;
  std::string out, err;
};

Result run_with(RunConfig c) {
  std::ostringstream out, err;
  const int code = run(c, out, err);
  return {code, out.str(), err.str()};
}

RunConfig config(Command cmd, const std::string& quiver, const std::string& dim) {
  RunConfig c;
  c.command = cmd;
  c.quiver_path = kData + "/" + quiver;
  c.dim = dim;
  return c;
}

}  // namespace

TEST(Cli, VerifyPasses) {
  const auto r = run_with(config(Command::Verify, "a1.q", "v=2"));
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, golden("a1_v2_verify.json"));
  auto text = config(Command::Verify, "kronecker.q", "1=1,2=1");
  text.format = "text";
  EXPECT_EQ(run_with(text).out, golden("kronecker_11_verify.txt"));
}

TEST(Cli, PresentLocal) {
  auto c = config(Command::Present, "a1.q", "v=2");
  c.format = "json";
  const auto r = run_with(c);
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("\"generators\""), std::string::npos);
  auto text = config(Command::Present, "a2.q", "1=1,2=1");
  text.format = "text";
  EXPECT_EQ(run_with(text).out, golden("a2_11_present.txt"));
}

TEST(Cli, FiberAndExport) {
  auto fiber = config(Command::Fiber, "a1.q", "v=2");
  fiber.point = "v:1=0,v:2=1";
  EXPECT_EQ(run_with(fiber).out, golden("a1_v2_fiber.json"));

  auto random = config(Command::Fiber, "kronecker.q", "1=1,2=2");
  random.seed = 9;
  const auto a = run_with(random), b = run_with(random);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"accepted\": true"), std::string::npos);

  auto m2 = config(Command::Export, "a1.q", "v=2");
  EXPECT_EQ(run_with(m2).out, golden("a1_v2_local.m2"));
  auto sing = m2;
  sing.format = "singular";
  EXPECT_EQ(run_with(sing).out, golden("a1_v2_local.sing"));
  auto json = config(Command::Export, "jordan.q", "v=2");
  json.side = "coulomb";
  json.format = "json";
  EXPECT_EQ(run_with(json).out, golden("jordan_v2_coulomb.json"));
}

TEST(Cli, ParseErrorsExitOne) {
  EXPECT_EQ(run_with(config(Command::Verify, "empty.q", "v=2")).code, kParseError);
  EXPECT_EQ(run_with(config(Command::Verify, "missing.q", "v=2")).code, kParseError);
  EXPECT_EQ(run_with(config(Command::Verify, "a1.q", "w=2")).code, kParseError);
  auto bad_point = config(Command::Fiber, "a1.q", "v=2");
  bad_point.point = "v:1=0";
  const auto r = run_with(bad_point);
  EXPECT_EQ(r.code, kParseError);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("a_v_2"), std::string::npos);
  auto bad_format = config(Command::Present, "a1.q", "v=2");
  bad_format.format = "m2";
  EXPECT_EQ(run_with(bad_format).code, kParseError);
  auto bad_side = config(Command::Present, "a1.q", "v=2");
  bad_side.side = "both";
  EXPECT_EQ(run_with(bad_side).code, kParseError);
}

TEST(Cli, KappaInput) {
  RunConfig c;
  c.command = Command::Present;
  c.kappa = "1,-2;-2,1";
  c.dim = "1=1,2=1";
  c.side = "coulomb";
  EXPECT_EQ(run_with(c).code, kOk);

  c.kappa = "2,0;0,1";
  EXPECT_EQ(run_with(c).code, kNotQuiverType);
  c.command = Command::Verify;
  EXPECT_EQ(run_with(c).code, kNotQuiverType);
  c.command = Command::Export;
  c.side = "local";
  c.dim = "1=2";
  const auto local = run_with(c);
  EXPECT_EQ(local.code, kOk);
  EXPECT_NE(local.out.find("z_1*z_2"), std::string::npos);

  c.kappa = "1,0;1,1";
  EXPECT_EQ(run_with(c).code, kParseError);
  c.kappa = "1,x";
  EXPECT_EQ(run_with(c).code, kParseError);
}
