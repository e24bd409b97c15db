//
// Copyright 2026 The foleval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "foleval/cli.h"
#include "foleval/corpus.h"
#include "gtest/gtest.h"

namespace foleval {
namespace {

const std::string kFixtures = FOLEVAL_FIXTURES;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string TempDir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("foleval_cli_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir.string();
}

std::string Slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const std::string kCourse = kFixtures + "/course_enrollment.fol";
const std::string kCerts = kFixtures + "/certificates.fol";

TEST(CliTest, Validate) {
  CliRun ok = Cli({"validate", "∀x (p(x) → q(x))"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("score: 1.000000"), std::string::npos);
  CliRun bad = Cli({"validate", "Height(x) > Weight(x)"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("FAIL  comparison_symbols"), std::string::npos);
  CliRun empty = Cli({"validate", ""});
  EXPECT_EQ(empty.code, 1);
}

TEST(CliTest, Parse) {
  CliRun r = Cli({"parse", "forall x (p(x) -> q(x, y))"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("∀x (p(x) → q(x, y))"), std::string::npos);
  EXPECT_NE(r.out.find("free variables: y"), std::string::npos);
  EXPECT_EQ(Cli({"parse", "p(a))"}).code, kExitCompileError);
}

TEST(CliTest, CourseEnrollment) {
  CliRun q1 = Cli({"--closed-world", "entail", kCourse, "completed(Alice, cs101)"});
  EXPECT_EQ(q1.code, kExitFalse);
  EXPECT_NE(q1.out.find("Final Answer: False"), std::string::npos);
  // Flags are accepted after the command too.
  CliRun q3 = Cli({"entail", kCourse, "completed(Bob, cs101)", "--closed-world"});
  EXPECT_EQ(q3.code, kExitTrue);
  CliRun q2 = Cli({"--closed-world", "enumerate", kCourse, "eligible_ta(x)"});
  EXPECT_EQ(q2.code, 0);
  EXPECT_NE(q2.out.find("Answer: Charlie\n"), std::string::npos);
}

TEST(CliTest, CertificatesCandidate) {
  CliRun r = Cli({"entail", kCerts,
               "student(x) ∧ ¬has_cert(x, excel) ⇒ do_thesis(x)"});
  EXPECT_EQ(r.code, kExitUncertain);
  EXPECT_NE(r.out.find("Final Answer: False"), std::string::npos);
}

TEST(CliTest, EntailExitCodes) {
  const std::string dir = TempDir("exit");
  const std::string empty = dir + "/empty.fol";
  std::ofstream(empty).close();
  EXPECT_EQ(Cli({"entail", empty, "p(a) ∨ ¬p(a)"}).code, kExitTrue);
  EXPECT_EQ(Cli({"entail", empty, "p(a) ∨"}).code, kExitCompileError);
  const std::string bad = dir + "/bad.fol";
  std::ofstream(bad) << "p(a)\n¬p(a)\n";
  EXPECT_EQ(Cli({"entail", bad, "q(a)"}).code, kExitEngineError);
  EXPECT_EQ(Cli({"entail", dir + "/missing.fol", "q(a)"}).code,
            kExitEngineError);
  EXPECT_EQ(Cli({"--domain-budget", "3", "entail", kCourse, "p(a)"}).code,
            kExitEngineError);
}

TEST(CliTest, HelpListsEveryFlag) {
  CliRun r = Cli({"--help"});
  EXPECT_EQ(r.code, 0);
  for (const char* flag : {"--closed-world", "--lambda1", "--seed",
                           "--domain-budget", "--format", "--report", "--jobs"}) {
    EXPECT_NE(r.out.find(flag), std::string::npos) << flag;
  }
  for (const char* cmd : {"validate", "parse", "entail", "enumerate", "eval",
                          "export-smt", "split"}) {
    EXPECT_NE(r.out.find(cmd), std::string::npos) << cmd;
  }
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(Cli({}).code, kExitEngineError);
  EXPECT_EQ(Cli({"--lambda1", "2", "validate", "p"}).code, kExitEngineError);
  EXPECT_EQ(Cli({"--format", "csv", "validate", "p"}).code, kExitEngineError);
}

TEST(CliTest, EvalIsDeterministic) {
  const std::string dir = TempDir("eval");
  const std::string corpus = kFixtures + "/worked_examples.jsonl";
  CliRun a = Cli({"eval", corpus, "--closed-world", "--report", dir + "/a.json",
               "--jobs", "1"});
  CliRun b = Cli({"eval", corpus, "--closed-world", "--report", dir + "/b.json",
               "--jobs", "3"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(Slurp(dir + "/a.json"), Slurp(dir + "/b.json"));
  EXPECT_NE(a.out.find("100.0"), std::string::npos);
  EXPECT_NE(Slurp(dir + "/a.json").find("\"closed_world\": true"),
            std::string::npos);
  EXPECT_EQ(Cli({"eval", dir + "/none.jsonl"}).code, kExitEngineError);
}

TEST(CliTest, ExportSmt) {
  CliRun r = Cli({"export-smt", kCerts,
               "student(x) ∧ ¬has_cert(x, excel) ⇒ do_thesis(x)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("(set-logic UF)\n", 0), 0u);
  EXPECT_NE(r.out.find("(check-sat)\n"), std::string::npos);
}

TEST(CliTest, Split) {
  const std::string dir = TempDir("split");
  const std::string corpus = kFixtures + "/worked_examples.jsonl";
  CliRun r = Cli({"split", corpus, dir + "/a", "--seed", "7"});
  ASSERT_EQ(r.code, 0);
  Cli({"split", corpus, dir + "/b", "--seed", "7"});
  EXPECT_EQ(Slurp(dir + "/a/train.jsonl"), Slurp(dir + "/b/train.jsonl"));
  EXPECT_EQ(Slurp(dir + "/a/split.json"), Slurp(dir + "/b/split.json"));
  auto train = LoadCorpus(dir + "/a/train.jsonl");
  auto test = LoadCorpus(dir + "/a/test.jsonl");
  ASSERT_TRUE(train.ok() && test.ok());
  EXPECT_EQ(train->records.size(), 5u);
  EXPECT_EQ(test->records.size(), 1u);
  std::set<std::string> ids;
  for (const auto& rec : train->records) ids.insert(rec.id);
  for (const auto& rec : test->records) ids.insert(rec.id);
  EXPECT_EQ(ids.size(), 6u);
  EXPECT_NE(Slurp(dir + "/a/split.json").find("\"seed\": 7"),
            std::string::npos);
}

}  // namespace
}  // namespace foleval
