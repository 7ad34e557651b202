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

#ifndef LSI_SPEECH_ACT_H_
#define LSI_SPEECH_ACT_H_

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lsi/error.h"

namespace lsi {

// The ten communicative intention types. The first four initiate an
// exchange; the remaining six respond to one of the initiating types.
enum class SpeechActType {
  kInform,
  kOffer,
  kRequestInfo,
  kRequestAct,
  kAcceptInform,
  kAcceptOffer,
  kAcceptRequest,
  kRejectInform,
  kRejectOffer,
  kRejectRequest,
};

inline constexpr int kSpeechActTypeCount = 10;

bool is_initiating(SpeechActType type);
bool is_responding(SpeechActType type);

// For a responding type, the initiating type it answers.
SpeechActType responded_type(SpeechActType type);

// True when the act's content is a domain plan rather than a proposition.
bool is_plan_bearing(SpeechActType type);

const char* to_string(SpeechActType type);
std::optional<SpeechActType> speech_act_type_from_string(const std::string& s);

// All ten types, in declaration order.
const std::vector<SpeechActType>& all_speech_act_types();

enum class Polarity { kPositive, kNegative };

class Proposition;

// One argument slot of a proposition. Terms name agents, agent groups,
// lexical noun phrases, the existential placeholder, or (one level deep)
// a nested action proposition.
struct Term {
  enum class Kind { kAgent, kGroup, kPhrase, kSomeone, kAction };

  Kind kind = Kind::kPhrase;
  std::string id;                             // agent id, group id, phrase lexeme
  std::vector<std::string> members;           // group members, kGroup only
  std::shared_ptr<const Proposition> action;  // kAction only
  std::string prep;                           // surface preposition, e.g. "to"

  static Term agent(std::string agent_id);
  static Term group(std::string group_id, std::vector<std::string> member_ids);
  static Term phrase(std::string lexeme, std::string preposition = "");
  static Term someone();
  static Term action_ref(Proposition p);

  bool operator==(const Term& other) const;
};

struct RoleArg {
  std::string role;
  Term term;

  bool operator==(const RoleArg& other) const = default;
};

// Predicate-logic content with role-labelled arguments and a polarity.
// Role labels are unique within a proposition; the first argument acts as
// the clause subject when the proposition is realized.
class Proposition {
 public:
  Proposition(std::string predicate, std::vector<RoleArg> args,
              Polarity polarity = Polarity::kPositive);

  const std::string& predicate() const { return predicate_; }
  const std::vector<RoleArg>& args() const { return args_; }
  Polarity polarity() const { return polarity_; }
  bool positive() const { return polarity_ == Polarity::kPositive; }

  const Term* find(const std::string& role) const;
  Proposition with_polarity(Polarity p) const;

  bool operator==(const Proposition& other) const;

 private:
  std::string predicate_;
  std::vector<RoleArg> args_;
  Polarity polarity_;
};

// Flips the polarity and nothing else; involutive.
Proposition negate(const Proposition& p);

// Replaces the agent role with the existential placeholder "someone".
// Idempotent; throws Error(kReference) when no agent role is present.
Proposition abstract_agent(const Proposition& p);

// A domain plan operator: header roles, preconditions, a decomposition,
// and effects. The decomposition's first step is the action surface
// realizations are built from.
struct DomainAct {
  std::string name;
  std::string verb;  // lexeme of the header verb
  Term agent;
  std::optional<Term> recipient;
  std::optional<Term> theme;
  std::vector<Proposition> preconditions;
  std::vector<Proposition> decomposition;
  std::vector<Proposition> effects;

  // Agent must be a single agent; decomposition and effects nonempty.
  void validate() const;
};

// A speech act bound to a speaker, hearer and content. The schema's derived
// propositions are filled in exactly once, at construction:
//
//   request-act: want/cando preconditions, want/know effects, with the
//                hearer as the actor of the referenced plan;
//   offer:       the mirror image, with the speaker as actor;
//   inform:      know effect on the hearer;
//   request-info: know effect on the speaker;
//   responses:   the fields of the initiating act they answer.
struct SpeechActInstance {
  SpeechActType type = SpeechActType::kInform;
  std::string speaker;
  std::string hearer;
  std::optional<DomainAct> act;      // plan-bearing acts
  std::optional<Proposition> prop;   // informational acts
  std::optional<Proposition> want_precondition;
  std::optional<Proposition> cando_precondition;
  std::optional<Proposition> want_effect;
  std::optional<Proposition> know_effect;
};

// Plan-bearing construction. initiator_party, when given, is the group the
// requesting side speaks for, so first-person content can surface as
// "we"/"us". For responses the initiator is the current hearer.
SpeechActInstance instantiate_act(SpeechActType type, const std::string& speaker,
                                  const std::string& hearer, const DomainAct& act,
                                  const Term* initiator_party = nullptr);

// Informational construction (inform / request-info and their responses).
SpeechActInstance instantiate_act(SpeechActType type, const std::string& speaker,
                                  const std::string& hearer, const Proposition& prop,
                                  const Term* initiator_party = nullptr);

// Rendering viewpoint: who is speaking, for whom, and to whom.
struct Perspective {
  std::string speaker;
  std::string speaker_group_id;
  std::set<std::string> speaker_group;  // contains speaker when nonempty
  std::string hearer;
  std::map<std::string, std::string> display_names;  // agent id -> proper name
};

}  // namespace lsi

#endif  // LSI_SPEECH_ACT_H_
