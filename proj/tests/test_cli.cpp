// Copyright 2026 The lsi Authors
//
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

#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "fixtures.h"
#include "json.hpp"

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args, bool merge_stderr = true) {
  std::string command = std::string(LSI_CLI_PATH) + " " + args;
  command += merge_stderr ? " 2>&1" : " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buffer[4096];
  while (std::size_t n = fread(buffer, 1, sizeof buffer, pipe)) {
    result.output.append(buffer, n);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string corpus_args(const std::string& script, const std::string& social) {
  return "--script " + lsi::test::data_dir() + "/" + script + " --social " +
         lsi::test::data_dir() + "/" + social + " --lexicon " +
         lsi::test::data_dir() + "/lexicon.json";
}

}  // namespace

TEST_CASE("render reproduces the reference transcript through the CLI") {
  CliResult result = run_cli(
      "render " + corpus_args("casablanca_script.json", "casablanca_social_run1.json"));
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("W: Could I help you?") != std::string::npos);
  CHECK(result.output.find("L: You must take us to a table. I am Victor Laszlo.") !=
        std::string::npos);
  CHECK(result.output.find("(Laszlo and Ilsa enter Rick's Cafe)") !=
        std::string::npos);
}

TEST_CASE("render output is byte-identical across invocations") {
  std::string args = "render " +
                     corpus_args("casablanca_script.json",
                                 "casablanca_social_run2.json") +
                     " --seed 7 --prosody --trace";
  CliResult first = run_cli(args);
  CliResult second = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
}

TEST_CASE("LSI_SEED is the fallback for --seed") {
  std::string args =
      "render " + corpus_args("casablanca_script.json", "casablanca_social_run1.json");
  CliResult flagged = run_cli(args + " --seed 123");
  std::string command =
      "LSI_SEED=123 " + std::string(LSI_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[4096];
  while (std::size_t n = fread(buffer, 1, sizeof buffer, pipe)) {
    output.append(buffer, n);
  }
  int status = pclose(pipe);
  CHECK(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 0);
  CHECK(output == flagged.output);
}

TEST_CASE("prosody mode emits one parseable record per utterance") {
  CliResult result = run_cli(
      "render " +
      corpus_args("casablanca_script.json", "casablanca_social_run1.json") +
      " --prosody");
  CHECK(result.exit_code == 0);
  std::istringstream lines(result.output);
  std::string line;
  int records = 0;
  while (std::getline(lines, line)) {
    nlohmann::json record = nlohmann::json::parse(line);
    if (record.contains("stage_direction")) continue;
    ++records;
    CHECK(record.contains("prosody"));
    CHECK(record["prosody"]["affect"].size() == 17);
    for (const auto& token : record["prosody"]["tokens"]) {
      CHECK(token.contains("pos"));
      double accent = token["accent"].get<double>();
      CHECK(accent >= 0.0);
      CHECK(accent <= 1.0);
    }
  }
  CHECK(records == 6);  // five turns, one carrying two acts
}

TEST_CASE("validate exits nonzero on bad input and zero on the corpora") {
  CliResult ok1 = run_cli(
      "validate " + corpus_args("casablanca_script.json", "casablanca_social_run1.json"));
  CHECK(ok1.exit_code == 0);
  CHECK(ok1.output.find("ok") != std::string::npos);
  CliResult ok2 = run_cli(
      "validate " + corpus_args("restaurant_script.json", "restaurant_social.json"));
  CHECK(ok2.exit_code == 0);

  std::string bad_social = "/tmp/lsi_test_bad_social.json";
  {
    std::ofstream out(bad_social);
    out << R"({"format_version":1,
      "pairs":[{"speaker":"laszlo","hearer":"waiter","distance":60,"power":0},
               {"speaker":"waiter","hearer":"laszlo","distance":30,"power":30}],
      "dispositions":{"laszlo":"angry","waiter":"pleasant","ilsa":"neutral"}})";
  }
  CliResult bad = run_cli("validate --script " + lsi::test::data_dir() +
                          "/casablanca_script.json --social " + bad_social +
                          " --lexicon " + lsi::test::data_dir() + "/lexicon.json");
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("range") != std::string::npos);
  std::remove(bad_social.c_str());
}

TEST_CASE("render refuses inputs that fail validation") {
  std::string bad_social = "/tmp/lsi_test_bad_social2.json";
  {
    std::ofstream out(bad_social);
    out << R"({"format_version":1,
      "pairs":[{"speaker":"laszlo","hearer":"waiter","distance":0,"power":0}],
      "dispositions":{"laszlo":"angry"}})";
  }
  CliResult result = run_cli("render --script " + lsi::test::data_dir() +
                             "/casablanca_script.json --social " + bad_social +
                             " --lexicon " + lsi::test::data_dir() +
                             "/lexicon.json");
  CHECK(result.exit_code == 1);
  std::remove(bad_social.c_str());
}

TEST_CASE("strategies lists the whole registry") {
  CliResult result = run_cli("strategies");
  CHECK(result.exit_code == 0);
  int lines = 0;
  for (char c : result.output) {
    if (c == '\n') ++lines;
  }
  CHECK(lines == 16);
  CHECK(result.output.find("realize-direct\tdirect") != std::string::npos);
  CHECK(result.output.find("hedge-inform\tautonomy\tinform") != std::string::npos);
  CHECK(result.output.find("abstract-agent-and-negate-effect\toff-record") !=
        std::string::npos);
}

TEST_CASE("wrong format version is rejected") {
  std::string bad = "/tmp/lsi_test_bad_version.json";
  {
    std::ofstream out(bad);
    out << R"({"format_version":2,"pairs":[],"dispositions":{}})";
  }
  CliResult result = run_cli("validate --script " + lsi::test::data_dir() +
                             "/casablanca_script.json --social " + bad +
                             " --lexicon " + lsi::test::data_dir() +
                             "/lexicon.json");
  CHECK(result.exit_code == 1);
  CHECK(result.output.find("format_version") != std::string::npos);
  std::remove(bad.c_str());
}
