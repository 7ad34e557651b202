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

#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "fixtures.h"
#include "lsi/engine.h"
#include "lsi/io.h"

using namespace lsi;

namespace {

std::vector<std::string> golden_lines(const std::string& name) {
  std::ifstream in(test::golden_dir() + "/" + name);
  REQUIRE(in);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) lines.push_back(normalize_line(line));
  }
  return lines;
}

std::vector<std::string> spoken_lines(const std::vector<TurnOutput>& output) {
  std::vector<std::string> lines;
  for (const TurnOutput& turn : output) {
    if (turn.stage) continue;
    lines.push_back(normalize_line(turn.label + ": " + turn.text));
  }
  return lines;
}

// Single-turn script over the cointreaux plan, for band-targeted runs.
Script single_request_script() {
  Script script;
  script.groups = {{"laszlo-party", {"laszlo", "ilsa"}}};
  script.agents = {{"laszlo", "L", "victor-laszlo", "laszlo-party", "my man"},
                   {"ilsa", "I", "ilsa-name", "laszlo-party", ""},
                   {"waiter", "W", "emil", "", "my man"}};
  script.domain_acts.emplace("serve-cointreaux", test::cointreaux_act());
  ScriptTurn turn;
  turn.speaker = "laszlo";
  turn.hearer = "waiter";
  turn.acts = {{SpeechActType::kRequestAct, "serve-cointreaux", std::nullopt}};
  script.turns = {turn};
  return script;
}

SocialStructure social_for(int distance, int power) {
  SocialStructure social;
  social.set_pair("laszlo", "waiter", distance, power);
  social.set_pair("waiter", "laszlo", distance, power);
  social.set_disposition("laszlo", Disposition::kAngry);
  social.set_disposition("waiter", Disposition::kPleasant);
  social.set_disposition("ilsa", Disposition::kNeutral);
  return social;
}

}  // namespace

TEST_CASE("bundled corpora validate clean") {
  Lexicon lexicon = load_lexicon(test::data_dir() + "/lexicon.json");
  DispositionPalette palette = DispositionPalette::defaults();
  {
    Script script = load_script(test::data_dir() + "/casablanca_script.json");
    SocialStructure social =
        load_social(test::data_dir() + "/casablanca_social_run1.json");
    CHECK(validate(script, social, lexicon, &palette, nullptr).empty());
  }
  {
    Script script = load_script(test::data_dir() + "/restaurant_script.json");
    SocialStructure social =
        load_social(test::data_dir() + "/restaurant_social.json");
    CHECK(validate(script, social, lexicon, &palette, nullptr).empty());
  }
}

TEST_CASE("golden dialogues reproduce with the default seed") {
  Script script = load_script(test::data_dir() + "/casablanca_script.json");
  Lexicon lexicon = load_lexicon(test::data_dir() + "/lexicon.json");
  DispositionPalette palette = DispositionPalette::defaults();
  RunConfig config;  // kDefaultSeed

  SUBCASE("direct and approval oriented run") {
    SocialStructure social =
        load_social(test::data_dir() + "/casablanca_social_run1.json");
    CHECK(spoken_lines(run_dialogue(script, social, lexicon, palette, config)) ==
          golden_lines("run1.txt"));
  }
  SUBCASE("autonomy oriented run") {
    SocialStructure social =
        load_social(test::data_dir() + "/casablanca_social_run2.json");
    CHECK(spoken_lines(run_dialogue(script, social, lexicon, palette, config)) ==
          golden_lines("run2.txt"));
  }
}

TEST_CASE("stage directions pass through in parentheses") {
  Script script = load_script(test::data_dir() + "/casablanca_script.json");
  Lexicon lexicon = load_lexicon(test::data_dir() + "/lexicon.json");
  SocialStructure social =
      load_social(test::data_dir() + "/casablanca_social_run1.json");
  std::vector<TurnOutput> output =
      run_dialogue(script, social, lexicon, DispositionPalette::defaults(), {});
  REQUIRE(output.size() == 7);
  CHECK(output[0].stage);
  CHECK(output[0].text == "(Laszlo and Ilsa enter Rick's Cafe)");
  CHECK(output[4].stage);
}

TEST_CASE("replay determinism, including prosody records") {
  Script script = load_script(test::data_dir() + "/casablanca_script.json");
  Lexicon lexicon = load_lexicon(test::data_dir() + "/lexicon.json");
  SocialStructure social =
      load_social(test::data_dir() + "/casablanca_social_run2.json");
  DispositionPalette palette = DispositionPalette::defaults();
  RunConfig config;
  config.seed = 99;
  config.want_prosody = true;
  config.want_trace = true;

  auto serialize = [](const std::vector<TurnOutput>& output) {
    std::ostringstream out;
    for (const TurnOutput& turn : output) {
      out << turn.label << "|" << turn.text << "\n";
      for (const ActOutput& act : turn.acts) {
        out << trace_to_json(act.trace).dump();
        if (act.prosody) out << prosody_to_json(*act.prosody).dump();
        out << "\n";
      }
    }
    return out.str();
  };
  std::string first =
      serialize(run_dialogue(script, social, lexicon, palette, config));
  std::string second =
      serialize(run_dialogue(script, social, lexicon, palette, config));
  CHECK(first == second);
  CHECK_FALSE(first.empty());
}

TEST_CASE("trace entries are internally consistent") {
  Script script = load_script(test::data_dir() + "/casablanca_script.json");
  Lexicon lexicon = load_lexicon(test::data_dir() + "/lexicon.json");
  DispositionPalette palette = DispositionPalette::defaults();
  for (const char* social_file :
       {"/casablanca_social_run1.json", "/casablanca_social_run2.json"}) {
    SocialStructure social = load_social(test::data_dir() + social_file);
    for (std::uint64_t seed : {1ULL, 7ULL, 42ULL}) {
      RunConfig config;
      config.seed = seed;
      for (const TurnOutput& turn :
           run_dialogue(script, social, lexicon, palette, config)) {
        for (const ActOutput& act : turn.acts) {
          CHECK(act.trace.theta ==
                act.trace.distance + act.trace.power + act.trace.ranking);
          CHECK(act.trace.band == select_band(ThreatValue{act.trace.theta}));
          if (act.trace.substituted) {
            CHECK(act.trace.band == StrategyBand::kOffRecord);
            CHECK(strategy_info(act.trace.strategy).band == StrategyBand::kAutonomy);
          }
        }
      }
    }
  }
}

TEST_CASE("seed variation produces distinct realizations in a shared band") {
  Script script = single_request_script();
  SocialStructure social = social_for(30, 0);  // theta 75: approval band
  Lexicon lexicon = load_lexicon(test::data_dir() + "/lexicon.json");
  DispositionPalette palette = DispositionPalette::defaults();
  std::set<std::string> seen;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    RunConfig config;
    config.seed = seed;
    seen.insert(run_dialogue(script, social, lexicon, palette, config)[0].text);
  }
  CHECK(seen.size() >= 2);
}

TEST_CASE("empty script runs to empty output") {
  Script script;
  SocialStructure social;
  Lexicon lexicon = load_lexicon(test::data_dir() + "/lexicon.json");
  CHECK(run_dialogue(script, social, lexicon, DispositionPalette::defaults(), {})
            .empty());
}

TEST_CASE("validation reports ranges, references and constraints") {
  Lexicon lexicon = load_lexicon(test::data_dir() + "/lexicon.json");
  DispositionPalette palette = DispositionPalette::defaults();
  Script script = single_request_script();

  SUBCASE("out-of-range distance") {
    SocialStructure social = social_for(30, 0);
    social.set_pair("laszlo", "waiter", 60, 0);
    std::vector<Diagnostic> diags =
        validate(script, social, lexicon, &palette, nullptr);
    REQUIRE_FALSE(diags.empty());
    CHECK(diags.front().category == ErrorCategory::kRange);
    CHECK_THROWS_AS(run_dialogue(script, social, lexicon, palette, {}), Error);
  }
  SUBCASE("broken content reference") {
    Script broken = script;
    broken.turns[0].acts[0].domain_act = "no-such-plan";
    std::vector<Diagnostic> diags =
        validate(broken, social_for(0, 0), lexicon, &palette, nullptr);
    REQUIRE_FALSE(diags.empty());
    CHECK(diags.front().category == ErrorCategory::kReference);
    CHECK(diags.front().turn == 0);
  }
  SUBCASE("request whose domain agent is the speaker") {
    Script wrong = script;
    ScriptTurn turn;
    turn.speaker = "waiter";  // the serve plan's own agent
    turn.hearer = "laszlo";
    turn.acts = {{SpeechActType::kRequestAct, "serve-cointreaux", std::nullopt}};
    wrong.turns = {turn};
    std::vector<Diagnostic> diags =
        validate(wrong, social_for(0, 0), lexicon, &palette, nullptr);
    REQUIRE_FALSE(diags.empty());
    CHECK(diags.front().category == ErrorCategory::kConstraint);
  }
  SUBCASE("missing disposition") {
    SocialStructure social = social_for(0, 0);
    SocialStructure no_disposition;
    no_disposition.set_pair("laszlo", "waiter", 0, 0);
    std::vector<Diagnostic> diags =
        validate(script, no_disposition, lexicon, &palette, nullptr);
    REQUIRE_FALSE(diags.empty());
    bool found = false;
    for (const Diagnostic& d : diags) {
      found |= d.category == ErrorCategory::kReference &&
               d.message.find("disposition") != std::string::npos;
    }
    CHECK(found);
  }
  SUBCASE("missing lexeme surfaces as a lexicon diagnostic") {
    Script hole = script;
    DomainAct act = test::cointreaux_act();
    act.decomposition = {
        Proposition("bring", {{"agent", Term::agent("waiter")},
                              {"theme", Term::phrase("absent-lexeme")}})};
    hole.domain_acts.clear();
    hole.domain_acts.emplace("serve-cointreaux", act);
    std::vector<Diagnostic> diags =
        validate(hole, social_for(0, 0), lexicon, &palette, nullptr);
    REQUIRE_FALSE(diags.empty());
    CHECK(diags.front().category == ErrorCategory::kLexicon);
  }
}

TEST_CASE("normalize_line lowers case and strips terminal punctuation") {
  CHECK(normalize_line("Bring us two cointreaux, right away.") ==
        "bring us two cointreaux, right away");
  CHECK(normalize_line("Bring us two cointreaux, right away") ==
        "bring us two cointreaux, right away");
  CHECK(normalize_line("Could I help you?") == "could i help you");
  CHECK(normalize_line("  A   b  ") == "a b");
  CHECK(normalize_line("It's a pleasure.") == "it's a pleasure");
}

TEST_CASE("imposition override shifts the band") {
  Script script = single_request_script();
  SocialStructure social = social_for(0, 0);
  Lexicon lexicon = load_lexicon(test::data_dir() + "/lexicon.json");
  DispositionPalette palette = DispositionPalette::defaults();
  RunConfig config;
  ImpositionTable table;
  table.set_ranking(SpeechActType::kRequestAct, 5);
  config.imposition = table;
  std::vector<TurnOutput> output =
      run_dialogue(script, social, lexicon, palette, config);
  CHECK(output[0].acts[0].trace.ranking == 5);
  CHECK(output[0].acts[0].trace.theta == 5);
}
