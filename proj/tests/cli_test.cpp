// Copyright 2026 The domipoly Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs the built command-line tool through the shell.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "json.hpp"

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run(const std::string& args, const std::string& stdin_text = "") {
  std::string cmd;
  if (!stdin_text.empty()) cmd = "printf '%s' '" + stdin_text + "' | ";
  cmd += std::string(DOMIPOLY_CLI) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

TEST(CliTest, Poly) {
  CliResult r = run("poly --petersen");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x^10 + 10x^9 + 45x^8 + 120x^7 + 200x^6 + 192x^5 + 75x^4 + 10x^3\n");

  r = run("poly", "C~\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x^4 + 4x^3 + 6x^2 + 4x\n");

  const auto empty5 = temp_file("domipoly_empty5.el", "5\n");
  r = run("poly " + empty5.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x^5\n");
  std::filesystem::remove(empty5);

  r = run("poly --output json", "C~\n");
  EXPECT_EQ(r.out, "{\"coeff\":[0,4,6,4,1],\"n\":4}\n");
  r = run("poly --output table", "C~\n");
  EXPECT_EQ(r.out, "i\td(G,i)\n0\t0\n1\t4\n2\t6\n3\t4\n4\t1\n");
}

TEST(CliTest, FormatOverride) {
  // "2" then "1 2": an edge list, never graph6.
  EXPECT_EQ(run("poly --format edgelist", "2\n1 2\n").out, "x^2 + 2x\n");
  EXPECT_EQ(run("poly --format graph6", "2\n1 2\n").code, 2);
  EXPECT_EQ(run("poly", "C~\nBw\n").out, "x^4 + 4x^3 + 6x^2 + 4x\nx^3 + 3x^2 + 3x\n");
}

TEST(CliTest, Gamma) {
  CliResult r = run("gamma --petersen");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "gamma=3, count=10");
  EXPECT_EQ(count_lines(r.out), 11);
  EXPECT_EQ(run("gamma", "C~\n").out, "gamma=1, count=4\n{1}\n{2}\n{3}\n{4}\n");
  r = run("gamma", "5\n1 2\n2 3\n3 4\n4 5\n5 1\n");
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "gamma=2, count=5");
  r = run("gamma --json", "C~\n");
  EXPECT_EQ(r.out, "{\"count\":4,\"gamma\":1,\"sets\":[[1],[2],[3],[4]]}\n");
}

TEST(CliTest, Catalog) {
  CliResult r = run("catalog -n 6 -k 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 2);
  EXPECT_EQ(run("catalog -n 5 -k 3").code, 2);
  EXPECT_EQ(run("catalog -n 30 -k 3").code, 3);

  r = run("catalog -n 10 -k 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 21);
  std::istringstream lines(r.out);
  std::string line;
  std::set<std::string> names;
  while (std::getline(lines, line)) {
    names.insert(nlohmann::json::parse(line).at("paper_name").get<std::string>());
  }
  EXPECT_EQ(names.size(), 21u);
  EXPECT_TRUE(names.count("G17"));

  EXPECT_EQ(run("catalog -n 8 -k 3 --graph6").out.size(), 6u * 7u);  // 6-byte graph6 lines
}

TEST(CliTest, Classify) {
  const auto path = std::filesystem::temp_directory_path() / "domipoly_cli_c10.jsonl";
  ASSERT_EQ(run("catalog -n 10 -k 3 -o " + path.string()).code, 0);
  CliResult r = run("classify " + path.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "18 classes, 3 with more than one member");
  EXPECT_EQ(count_lines(r.out), 19);
  r = run("classify --json " + path.string());
  EXPECT_EQ(nlohmann::json::parse(r.out).size(), 18u);

  const auto one = temp_file("domipoly_cli_one.jsonl",
                             R"({"connected":true,"girth":3,"graph6":"C~","paper_name":null,"poly":[0,4,6,4,1],"s":1,"t":0})"
                             "\n");
  r = run("classify " + one.string());
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "1 classes, 0 with more than one member");

  const auto c8 = std::filesystem::temp_directory_path() / "domipoly_cli_c8.jsonl";
  ASSERT_EQ(run("catalog -n 8 -k 3 -o " + c8.string()).code, 0);
  r = run("classify " + c8.string());
  EXPECT_EQ(r.code, 0);
  // Header plus one line per class, covering the 6 graphs.
  const int classes = std::stoi(r.out);
  EXPECT_GE(classes, 1);
  EXPECT_LE(classes, 6);
  EXPECT_EQ(count_lines(r.out), 1 + classes);

  EXPECT_EQ(run("classify /nonexistent.jsonl").code, 2);
  std::filesystem::remove(path);
  std::filesystem::remove(one);
  std::filesystem::remove(c8);
}

TEST(CliTest, VerifyPaper) {
  CliResult r = run("verify-paper");
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.out.find("PASS  C1"), std::string::npos);
  EXPECT_NE(r.out.find("FAIL  C6"), std::string::npos);

  r = run("verify-paper --json");
  EXPECT_EQ(r.code, 4);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("ok"), false);
  EXPECT_GE(j.at("items").size(), 13u);

  const auto bad = temp_file("domipoly_cli_bad.jsonl",
                             R"({"connected":true,"girth":3,"graph6":"C~","paper_name":null,"poly":[0,4,6,5,1],"s":1,"t":0})"
                             "\n");
  r = run("verify-paper --catalog " + bad.string());
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("recomputed"), std::string::npos);
  std::filesystem::remove(bad);
}

TEST(CliTest, UsageErrorsAndDeterminism) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("poly --bogus").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("poly", "xx\n").code, 2);
  EXPECT_EQ(run("poly --petersen", "C~\n").code, 0);
  EXPECT_EQ(run("poly --petersen /dev/null").code, 2);
  EXPECT_EQ(run("catalog -n 10 -k 3").out, run("catalog -n 10 -k 3").out);
  EXPECT_EQ(run("verify-paper --json").out, run("verify-paper --json").out);
}

}  // namespace
