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

#ifndef LSI_ENGINE_H_
#define LSI_ENGINE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lsi/affect.h"
#include "lsi/realizer.h"
#include "lsi/social.h"
#include "lsi/speech_act.h"
#include "lsi/strategy.h"

namespace lsi {

// Seed the bundled dialogues are documented against.
inline constexpr std::uint64_t kDefaultSeed = 28076;

struct AgentInfo {
  std::string id;
  std::string label;         // line prefix in text output
  std::string name_lexeme;   // proper-noun lexeme; optional
  std::string group_id;      // party the agent speaks for; optional
  std::string address_form;  // in-group address persona, default "my man"
};

struct GroupInfo {
  std::string id;
  std::vector<std::string> members;
};

// One speech act of a scripted turn: a domain plan reference or an inline
// proposition, depending on the act type.
struct ActSpec {
  SpeechActType type = SpeechActType::kInform;
  std::string domain_act;               // plan-bearing acts
  std::optional<Proposition> proposition;  // informational acts
};

// A turn is either a stage direction or a speaker/hearer pair with one or
// more acts realized as consecutive sentences on one line.
struct ScriptTurn {
  std::string speaker;
  std::string hearer;
  std::vector<ActSpec> acts;
  std::string stage_direction;

  bool is_stage() const { return !stage_direction.empty(); }
};

struct Script {
  int format_version = 1;
  std::string title;
  std::vector<AgentInfo> agents;
  std::vector<GroupInfo> groups;
  std::map<std::string, DomainAct> domain_acts;
  std::vector<ScriptTurn> turns;

  const AgentInfo* find_agent(const std::string& id) const;
  const GroupInfo* find_group(const std::string& id) const;
};

struct RunConfig {
  std::uint64_t seed = kDefaultSeed;
  std::optional<ImpositionTable> imposition;  // defaults when absent
  double offrecord_substitution = 0.5;        // in [0,1]
  bool contractions = true;
  bool want_prosody = false;
  bool want_trace = false;
};

struct ActTrace {
  SpeechActType type = SpeechActType::kInform;
  int distance = 0;
  int power = 0;
  int ranking = 0;
  int theta = 0;
  StrategyBand band = StrategyBand::kDirect;
  double position = 0.0;
  StrategyId strategy = StrategyId::kRealizeDirect;
  bool substituted = false;  // off-record act realized with an autonomy form
};

struct ActOutput {
  std::string text;
  ActTrace trace;
  std::optional<ProsodyRecord> prosody;
};

struct TurnOutput {
  bool stage = false;
  std::string speaker;
  std::string label;
  std::string text;  // stage direction, or the acts' sentences joined
  std::vector<ActOutput> acts;
};

struct Diagnostic {
  ErrorCategory category = ErrorCategory::kConstraint;
  int turn = -1;  // -1 when not tied to a turn
  std::string message;
};

// Realizes the whole script in order. Identical inputs and seed give
// byte-identical output. Throws Error when validation would report problems.
std::vector<TurnOutput> run_dialogue(const Script& script,
                                     const SocialStructure& social,
                                     const Lexicon& lexicon,
                                     const DispositionPalette& palette,
                                     const RunConfig& config);

// Full preflight: empty result means run_dialogue cannot fail on these
// inputs under any seed.
std::vector<Diagnostic> validate(const Script& script, const SocialStructure& social,
                                 const Lexicon& lexicon,
                                 const DispositionPalette* palette,
                                 const ImpositionTable* imposition);

// Comparison form for transcript lines: lowercased, trailing terminal
// punctuation stripped, whitespace collapsed.
std::string normalize_line(const std::string& line);

}  // namespace lsi

#endif  // LSI_ENGINE_H_
