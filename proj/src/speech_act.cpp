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

#include "lsi/speech_act.h"

#include <algorithm>
#include <utility>

namespace lsi {

const char* to_string(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kRange: return "range";
    case ErrorCategory::kReference: return "reference";
    case ErrorCategory::kConstraint: return "constraint";
    case ErrorCategory::kLexicon: return "lexicon";
    case ErrorCategory::kFormat: return "format";
  }
  return "unknown";
}

bool is_initiating(SpeechActType type) {
  switch (type) {
    case SpeechActType::kInform:
    case SpeechActType::kOffer:
    case SpeechActType::kRequestInfo:
    case SpeechActType::kRequestAct:
      return true;
    default:
      return false;
  }
}

bool is_responding(SpeechActType type) { return !is_initiating(type); }

SpeechActType responded_type(SpeechActType type) {
  switch (type) {
    case SpeechActType::kAcceptInform:
    case SpeechActType::kRejectInform:
      return SpeechActType::kInform;
    case SpeechActType::kAcceptOffer:
    case SpeechActType::kRejectOffer:
      return SpeechActType::kOffer;
    case SpeechActType::kAcceptRequest:
    case SpeechActType::kRejectRequest:
      return SpeechActType::kRequestAct;
    default:
      throw Error(ErrorCategory::kConstraint,
                  std::string(to_string(type)) + " is not a responding act");
  }
}

bool is_plan_bearing(SpeechActType type) {
  switch (type) {
    case SpeechActType::kRequestAct:
    case SpeechActType::kOffer:
    case SpeechActType::kAcceptOffer:
    case SpeechActType::kAcceptRequest:
    case SpeechActType::kRejectOffer:
    case SpeechActType::kRejectRequest:
      return true;
    default:
      return false;
  }
}

const char* to_string(SpeechActType type) {
  switch (type) {
    case SpeechActType::kInform: return "inform";
    case SpeechActType::kOffer: return "offer";
    case SpeechActType::kRequestInfo: return "request-info";
    case SpeechActType::kRequestAct: return "request-act";
    case SpeechActType::kAcceptInform: return "accept-inform";
    case SpeechActType::kAcceptOffer: return "accept-offer";
    case SpeechActType::kAcceptRequest: return "accept-request";
    case SpeechActType::kRejectInform: return "reject-inform";
    case SpeechActType::kRejectOffer: return "reject-offer";
    case SpeechActType::kRejectRequest: return "reject-request";
  }
  return "unknown";
}

std::optional<SpeechActType> speech_act_type_from_string(const std::string& s) {
  for (SpeechActType type : all_speech_act_types()) {
    if (s == to_string(type)) return type;
  }
  return std::nullopt;
}

const std::vector<SpeechActType>& all_speech_act_types() {
  static const std::vector<SpeechActType> kAll = {
      SpeechActType::kInform,        SpeechActType::kOffer,
      SpeechActType::kRequestInfo,   SpeechActType::kRequestAct,
      SpeechActType::kAcceptInform,  SpeechActType::kAcceptOffer,
      SpeechActType::kAcceptRequest, SpeechActType::kRejectInform,
      SpeechActType::kRejectOffer,   SpeechActType::kRejectRequest,
  };
  return kAll;
}

Term Term::agent(std::string agent_id) {
  Term t;
  t.kind = Kind::kAgent;
  t.id = std::move(agent_id);
  return t;
}

Term Term::group(std::string group_id, std::vector<std::string> member_ids) {
  Term t;
  t.kind = Kind::kGroup;
  t.id = std::move(group_id);
  t.members = std::move(member_ids);
  return t;
}

Term Term::phrase(std::string lexeme, std::string preposition) {
  Term t;
  t.kind = Kind::kPhrase;
  t.id = std::move(lexeme);
  t.prep = std::move(preposition);
  return t;
}

Term Term::someone() {
  Term t;
  t.kind = Kind::kSomeone;
  t.id = "someone";
  return t;
}

Term Term::action_ref(Proposition p) {
  Term t;
  t.kind = Kind::kAction;
  t.action = std::make_shared<const Proposition>(std::move(p));
  return t;
}

bool Term::operator==(const Term& other) const {
  if (kind != other.kind || id != other.id || members != other.members ||
      prep != other.prep) {
    return false;
  }
  if (static_cast<bool>(action) != static_cast<bool>(other.action)) return false;
  return !action || *action == *other.action;
}

Proposition::Proposition(std::string predicate, std::vector<RoleArg> args,
                         Polarity polarity)
    : predicate_(std::move(predicate)), args_(std::move(args)), polarity_(polarity) {
  if (predicate_.empty()) {
    throw Error(ErrorCategory::kConstraint, "proposition predicate is empty");
  }
  for (std::size_t i = 0; i < args_.size(); ++i) {
    for (std::size_t j = i + 1; j < args_.size(); ++j) {
      if (args_[i].role == args_[j].role) {
        throw Error(ErrorCategory::kConstraint,
                    "duplicate role '" + args_[i].role + "' in " + predicate_);
      }
    }
  }
}

const Term* Proposition::find(const std::string& role) const {
  for (const RoleArg& arg : args_) {
    if (arg.role == role) return &arg.term;
  }
  return nullptr;
}

Proposition Proposition::with_polarity(Polarity p) const {
  Proposition copy = *this;
  copy.polarity_ = p;
  return copy;
}

bool Proposition::operator==(const Proposition& other) const {
  return predicate_ == other.predicate_ && polarity_ == other.polarity_ &&
         args_ == other.args_;
}

Proposition negate(const Proposition& p) {
  return p.with_polarity(p.positive() ? Polarity::kNegative : Polarity::kPositive);
}

Proposition abstract_agent(const Proposition& p) {
  const Term* agent = p.find("agent");
  if (agent == nullptr) {
    throw Error(ErrorCategory::kReference,
                "proposition " + p.predicate() + " has no agent role");
  }
  if (agent->kind == Term::Kind::kSomeone) return p;
  std::vector<RoleArg> args = p.args();
  for (RoleArg& arg : args) {
    if (arg.role == "agent") arg.term = Term::someone();
  }
  return Proposition(p.predicate(), std::move(args), p.polarity());
}

void DomainAct::validate() const {
  if (agent.kind != Term::Kind::kAgent || agent.id.empty()) {
    throw Error(ErrorCategory::kConstraint,
                "domain act '" + name + "' needs a single agent");
  }
  if (decomposition.empty()) {
    throw Error(ErrorCategory::kConstraint,
                "domain act '" + name + "' has an empty decomposition");
  }
  if (effects.empty()) {
    throw Error(ErrorCategory::kConstraint,
                "domain act '" + name + "' has no effects");
  }
}

namespace {

Term initiator_term(const std::string& initiator, const Term* party) {
  if (party != nullptr && party->kind == Term::Kind::kGroup) return *party;
  return Term::agent(initiator);
}

Proposition make_want(Term experiencer, Term object) {
  return Proposition("want", {{"experiencer", std::move(experiencer)},
                              {"action", std::move(object)}});
}

Proposition make_cando(Term actor, Term action) {
  return Proposition("cando",
                     {{"agent", std::move(actor)}, {"action", std::move(action)}});
}

Proposition make_know(Term experiencer, Term content) {
  return Proposition("know", {{"experiencer", std::move(experiencer)},
                              {"content", std::move(content)}});
}

// Fills the derived fields for an initiating act. For plan-bearing acts the
// action term is the first decomposition step of the domain plan.
void fill_schema(SpeechActInstance& inst, const Term* initiator_party) {
  switch (inst.type) {
    case SpeechActType::kRequestAct: {
      Term action = Term::action_ref(inst.act->decomposition.front());
      inst.want_precondition =
          make_want(initiator_term(inst.speaker, initiator_party), action);
      inst.cando_precondition = make_cando(Term::agent(inst.hearer), action);
      inst.want_effect = make_want(Term::agent(inst.hearer), action);
      inst.know_effect = make_know(
          Term::agent(inst.hearer),
          Term::action_ref(make_want(Term::agent(inst.speaker), action)));
      break;
    }
    case SpeechActType::kOffer: {
      Term action = Term::action_ref(inst.act->decomposition.front());
      inst.want_precondition = make_want(Term::agent(inst.speaker), action);
      inst.cando_precondition = make_cando(Term::agent(inst.speaker), action);
      inst.want_effect = make_want(Term::agent(inst.hearer), action);
      inst.know_effect = make_know(
          Term::agent(inst.hearer),
          Term::action_ref(make_want(Term::agent(inst.speaker), action)));
      break;
    }
    case SpeechActType::kInform:
      inst.know_effect = make_know(Term::agent(inst.hearer),
                                   Term::action_ref(*inst.prop));
      break;
    case SpeechActType::kRequestInfo:
      inst.know_effect = make_know(Term::agent(inst.speaker),
                                   Term::action_ref(*inst.prop));
      break;
    default:
      break;
  }
}

// A response carries the fields of the act it answers, reconstructed with
// the original roles: the responder was the hearer of the initiating act.
template <typename Content>
SpeechActInstance make_response(SpeechActType type, const std::string& speaker,
                                const std::string& hearer, const Content& content,
                                const Term* initiator_party) {
  SpeechActInstance initiating =
      instantiate_act(responded_type(type), hearer, speaker, content, initiator_party);
  initiating.type = type;
  initiating.speaker = speaker;
  initiating.hearer = hearer;
  return initiating;
}

}  // namespace

SpeechActInstance instantiate_act(SpeechActType type, const std::string& speaker,
                                  const std::string& hearer, const DomainAct& act,
                                  const Term* initiator_party) {
  if (!is_plan_bearing(type)) {
    throw Error(ErrorCategory::kConstraint,
                std::string(to_string(type)) + " takes a proposition, not a plan");
  }
  act.validate();
  if (is_responding(type)) {
    return make_response(type, speaker, hearer, act, initiator_party);
  }

  // The constraint field of the plan operator: requests are performed by the
  // hearer, offers by the speaker.
  const std::string& actor =
      type == SpeechActType::kRequestAct ? hearer : speaker;
  if (act.agent.id != actor) {
    throw Error(ErrorCategory::kConstraint,
                "domain act '" + act.name + "' is performed by '" + act.agent.id +
                    "', not by the " +
                    (type == SpeechActType::kRequestAct ? "hearer '" : "speaker '") +
                    actor + "'");
  }

  SpeechActInstance inst;
  inst.type = type;
  inst.speaker = speaker;
  inst.hearer = hearer;
  inst.act = act;
  fill_schema(inst, initiator_party);
  return inst;
}

SpeechActInstance instantiate_act(SpeechActType type, const std::string& speaker,
                                  const std::string& hearer, const Proposition& prop,
                                  const Term* initiator_party) {
  if (is_plan_bearing(type)) {
    throw Error(ErrorCategory::kConstraint,
                std::string(to_string(type)) + " takes a domain plan, not a proposition");
  }
  if (is_responding(type)) {
    return make_response(type, speaker, hearer, prop, initiator_party);
  }

  SpeechActInstance inst;
  inst.type = type;
  inst.speaker = speaker;
  inst.hearer = hearer;
  inst.prop = prop;
  fill_schema(inst, initiator_party);
  return inst;
}

}  // namespace lsi
