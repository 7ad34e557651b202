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

#ifndef LSI_TESTS_FIXTURES_H_
#define LSI_TESTS_FIXTURES_H_

#include <string>

#include "lsi/engine.h"
#include "lsi/io.h"
#include "lsi/realizer.h"

namespace lsi::test {

inline std::string data_dir() { return LSI_DATA_DIR; }
inline std::string golden_dir() { return LSI_GOLDEN_DIR; }

inline const Lexicon& lexicon() {
  static const Lexicon lex = load_lexicon(data_dir() + "/lexicon.json");
  return lex;
}

inline Term party() { return Term::group("laszlo-party", {"laszlo", "ilsa"}); }

inline DomainAct cointreaux_act() {
  DomainAct act;
  act.name = "serve-cointreaux";
  act.verb = "serve";
  act.agent = Term::agent("waiter");
  act.recipient = party();
  act.theme = Term::phrase("two-cointreaux");
  act.preconditions = {Proposition("has", {{"owner", Term::phrase("restaurant")},
                                           {"theme", Term::phrase("two-cointreaux")}})};
  act.decomposition = {
      Proposition("bring", {{"agent", Term::agent("waiter")},
                            {"recipient", party()},
                            {"theme", Term::phrase("two-cointreaux")}})};
  act.effects = {Proposition(
      "has", {{"owner", party()}, {"theme", Term::phrase("two-cointreaux")}})};
  return act;
}

inline DomainAct seat_act() {
  DomainAct act;
  act.name = "seat-party";
  act.verb = "seat";
  act.agent = Term::agent("waiter");
  act.recipient = party();
  act.theme = Term::phrase("table");
  act.preconditions = {Proposition(
      "reserved", {{"agent", Term::agent("laszlo")}, {"theme", Term::phrase("table")}})};
  act.decomposition = {
      Proposition("take", {{"agent", Term::agent("waiter")},
                           {"recipient", party()},
                           {"destination", Term::phrase("table", "to")}})};
  act.effects = {
      Proposition("has", {{"owner", party()}, {"theme", Term::phrase("table")}})};
  return act;
}

inline Proposition reserved_prop() {
  return Proposition("reserved", {{"agent", Term::agent("laszlo")},
                                  {"theme", Term::phrase("table")}});
}

inline Proposition stock_prop() {
  return Proposition("has", {{"owner", Term::phrase("restaurant")},
                             {"theme", Term::phrase("two-cointreaux")}});
}

inline Perspective perspective(const std::string& speaker, const std::string& hearer) {
  Perspective p;
  p.speaker = speaker;
  p.hearer = hearer;
  if (speaker == "laszlo" || speaker == "ilsa") {
    p.speaker_group_id = "laszlo-party";
    p.speaker_group = {"laszlo", "ilsa"};
  }
  p.display_names = {{"laszlo", "Victor Laszlo"},
                     {"ilsa", "Ilsa"},
                     {"waiter", "Emil"}};
  return p;
}

inline SpeechActInstance cointreaux_request() {
  Term group = party();
  return instantiate_act(SpeechActType::kRequestAct, "laszlo", "waiter",
                         cointreaux_act(), &group);
}

inline StrategyContext context(const std::string& speaker, const std::string& hearer,
                               double threat_fraction = 0.3, Rng* rng = nullptr) {
  StrategyContext ctx;
  ctx.perspective = perspective(speaker, hearer);
  ctx.threat_fraction = threat_fraction;
  ctx.address_form = "my man";
  ctx.rng = rng;
  return ctx;
}

// One representative instance per act type over the bundled domain.
inline SpeechActInstance instance_for(SpeechActType type) {
  Term group = party();
  switch (type) {
    case SpeechActType::kRequestAct:
      return instantiate_act(type, "laszlo", "waiter", cointreaux_act(), &group);
    case SpeechActType::kOffer:
      return instantiate_act(type, "waiter", "laszlo", cointreaux_act(), &group);
    case SpeechActType::kInform:
      return instantiate_act(type, "laszlo", "waiter", reserved_prop(), &group);
    case SpeechActType::kRequestInfo:
      return instantiate_act(type, "laszlo", "waiter", stock_prop(), &group);
    case SpeechActType::kAcceptRequest:
    case SpeechActType::kRejectRequest:
      return instantiate_act(type, "waiter", "laszlo", cointreaux_act(), &group);
    case SpeechActType::kAcceptOffer:
    case SpeechActType::kRejectOffer:
      return instantiate_act(type, "laszlo", "waiter", cointreaux_act(), &group);
    case SpeechActType::kAcceptInform:
    case SpeechActType::kRejectInform:
      return instantiate_act(type, "waiter", "laszlo", reserved_prop(), &group);
  }
  throw Error(ErrorCategory::kReference, "unknown act type");
}

}  // namespace lsi::test

#endif  // LSI_TESTS_FIXTURES_H_
