#include "facschur/error.hpp"
#include "facschur/serialize.hpp"
#include "facschur/verify.hpp"
#include "test_util.hpp"

#include "json.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace facschur;
using namespace facschur::testing;

namespace {

struct Outcome {
  int status = -1;
  std::string out;
};

Outcome run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + FACSCHUR_BIN + std::string(" ") + args + " 2>/dev/null";
  Outcome r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("facschur_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

} // namespace

TEST(Compute, TextOutput) {
  Outcome r = run("compute --what s --lambda 1 --m 1 --n 1 --seq sym:-4:6");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "x1 + y1\n");
  EXPECT_EQ(run("compute --what s --lambda 3,3,3 --m 2 --n 2 --seq zero").out, "0\n");
  EXPECT_EQ(run("compute --what sstar --lambda 1 --m 2 --n 1").out, "u1 + u2 + v1\n");
  EXPECT_EQ(run("compute --what h --lambda 2 --m 1 --n 0 --seq sym:-4:6").out,
            to_text((X(1) - A(1)) * (X(1) - A(2))) + "\n");
  EXPECT_EQ(run("compute --what classical --lambda 1,1 --m 1 --n 1").out, to_text(Y(1) * Y(1) + X(1) * Y(1)) + "\n");
}

TEST(Compute, JsonRoundTrips) {
  Outcome r = run("compute --what s --lambda 2,1 --m 2 --n 1 --format json");
  ASSERT_EQ(r.status, 0);
  Poly p = parse_poly_json(r.out);
  Outcome text = run("compute --what s --lambda 2,1 --m 2 --n 1");
  EXPECT_EQ(to_text(p) + "\n", text.out);
  EXPECT_FALSE(p.is_zero());
}

TEST(Compute, SequenceFromEnvironment) {
  Outcome flag = run("compute --what e --lambda 1 --m 2 --n 1 --seq arith:1/2");
  Outcome env = run("compute --what e --lambda 1 --m 2 --n 1", "FACSCHUR_SEQ=arith:1/2");
  EXPECT_EQ(flag.status, 0);
  EXPECT_EQ(flag.out, env.out);
  EXPECT_NE(flag.out, run("compute --what e --lambda 1 --m 2 --n 1").out);
  // The flag wins over the environment.
  EXPECT_EQ(run("compute --what e --lambda 1 --m 2 --n 1 --seq arith:1/2", "FACSCHUR_SEQ=zero").out, flag.out);
}

TEST(Compute, ErrorsExitWithStatusTwo) {
  EXPECT_EQ(run("compute --what s --lambda 3 --m 2 --n 2 --seq sym:1:2").status, 2);
  EXPECT_EQ(run("compute --what s --lambda 3,x").status, 2);
  EXPECT_EQ(run("compute --what s --lambda 1 --seq nonsense").status, 2);
  EXPECT_EQ(run("compute --what nope --lambda 1").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
}

TEST(Verify, PassesAndIsDeterministic) {
  Outcome a = run("verify --identity sergeev-pragacz --max-weight 3 --m 1 --n 1");
  EXPECT_EQ(a.status, 0);
  EXPECT_NE(a.out.find("PASS"), std::string::npos);
  EXPECT_EQ(a.out, run("verify --identity sergeev-pragacz --max-weight 3 --m 1 --n 1 --jobs 3").out);

  Outcome j = run("verify --identity genseries-h --m 2 --n 1 --trials 3 --rng-seed 7 --format json");
  ASSERT_EQ(j.status, 0);
  nlohmann::json doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["identity"], "genseries-h");
  EXPECT_EQ(doc["passed"], true);
  EXPECT_EQ(doc["seed"], 7);
  EXPECT_EQ(j.out, run("verify --identity genseries-h --m 2 --n 1 --trials 3 --rng-seed 7 --format json").out);
}

TEST(Verify, VanishingStarNotesHookProducts) {
  Outcome r = run("verify --identity vanishing-star --max-weight 3 --m 2 --n 2");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("H([2,1]) = 3"), std::string::npos) << r.out;
}

TEST(Verify, UnknownIdentityIsUsageError) {
  EXPECT_EQ(run("verify --identity nope").status, 2);
  EXPECT_EQ(run("verify").status, 2);
}

TEST(Expand, JsonAndFailures) {
  const std::string sum = write_temp("sum.json", poly_to_json(X(1) + Y(1)).dump());
  Outcome r = run("expand " + sum + " --m 1 --n 1");
  ASSERT_EQ(r.status, 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["coefficients"], nlohmann::json({{"[1]", "1"}}));
  EXPECT_EQ(doc["reconstruction_exact"], true);

  const std::string x1 = write_temp("x1.json", poly_to_json(X(1)).dump());
  EXPECT_EQ(run("expand " + x1 + " --m 2 --n 1").status, 1);

  const std::string bad = write_temp("bad.json", "[{\"coeff\": \"1\", \"mono\": {\"Q:1\": 1}}]");
  EXPECT_EQ(run("expand " + bad + " --m 1 --n 1").status, 2);
  EXPECT_EQ(run("expand /nonexistent/file.json").status, 2);
  EXPECT_EQ(run("expand " + sum + " --m 1 --n 1 --seq sym:-3:3").status, 2);
}

TEST(Expand, TextFormat) {
  const std::string sum = write_temp("sum_text.json", poly_to_json(X(1) + Y(1) + Poly(3)).dump());
  Outcome r = run("expand " + sum + " --m 1 --n 1 --format text");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "[]: 3\n[1]: 1\nreconstruction_exact: true\n");
}

TEST(RunVerify, EveryIdentityPassesOnASmallGrid) {
  for (const std::string& id : identity_names())
    for (auto [m, n] : {std::pair{1, 1}, std::pair{2, 1}}) {
      VerifyOptions o;
      o.identity = id;
      o.max_weight = 3;
      o.m = m;
      o.n = n;
      o.trials = 3;
      VerifyReport r = run_verify(o);
      EXPECT_TRUE(r.passed()) << report_text(r);
      EXPECT_GT(r.cases_run, 0) << id;
    }
}

TEST(RunVerify, FailuresAreReported) {
  // A constant sequence makes expansion impossible; each case fails with the reason.
  VerifyOptions o;
  o.identity = "basis-roundtrip";
  o.seq = ParamSequence::zero();
  VerifyReport r = run_verify(o);
  EXPECT_FALSE(r.passed());
  ASSERT_EQ(static_cast<int>(r.failures.size()), r.cases_run);
  EXPECT_NE(report_text(r).find("FAIL"), std::string::npos);
  o.identity = "no-such-identity";
  EXPECT_THROW(run_verify(o), PreconditionViolated);
}

TEST(RunVerify, JobsDoNotChangeTheReport) {
  VerifyOptions o;
  o.identity = "jacobi-trudi";
  o.max_weight = 4;
  const std::string serial = report_text(run_verify(o));
  o.jobs = 4;
  EXPECT_EQ(report_text(run_verify(o)), serial);
}

TEST(RunVerify, ReportJsonShape) {
  VerifyOptions o;
  o.identity = "dual-cauchy";
  VerifyReport r = run_verify(o);
  nlohmann::json j = report_json(r);
  for (const char* key : {"identity", "grid", "seed", "cases", "failures", "notes", "passed"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["cases"], r.cases_run);
  EXPECT_FALSE(j.contains("wall_seconds"));
}
