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

#include <random>

#include "doctest.h"
#include "fixtures.h"
#include "lsi/speech_act.h"

using namespace lsi;

TEST_CASE("ten act types split into four initiating and six responding") {
  CHECK(all_speech_act_types().size() == kSpeechActTypeCount);
  int initiating = 0;
  int responding = 0;
  for (SpeechActType type : all_speech_act_types()) {
    if (is_initiating(type)) ++initiating;
    if (is_responding(type)) ++responding;
    CHECK(is_initiating(type) != is_responding(type));
    CHECK(speech_act_type_from_string(to_string(type)) == type);
  }
  CHECK(initiating == 4);
  CHECK(responding == 6);
}

TEST_CASE("request-act fills the schema with concrete bindings") {
  SpeechActInstance inst = test::cointreaux_request();

  REQUIRE(inst.want_effect.has_value());
  CHECK(inst.want_effect->predicate() == "want");
  CHECK(inst.want_effect->args()[0].term == Term::agent("waiter"));
  const Term& action = inst.want_effect->args()[1].term;
  REQUIRE(action.kind == Term::Kind::kAction);
  CHECK(action.action->predicate() == "bring");
  CHECK(*action.action->find("recipient") == test::party());

  REQUIRE(inst.cando_precondition.has_value());
  CHECK(inst.cando_precondition->args()[0].term == Term::agent("waiter"));
  REQUIRE(inst.want_precondition.has_value());
  // Laszlo speaks for the party, so the want precondition surfaces as "we".
  CHECK(inst.want_precondition->args()[0].term == test::party());
  CHECK(inst.know_effect.has_value());
}

TEST_CASE("inform derives only the know effect") {
  Proposition reserved = test::reserved_prop();
  SpeechActInstance inst =
      instantiate_act(SpeechActType::kInform, "laszlo", "waiter", reserved);
  CHECK_FALSE(inst.want_precondition.has_value());
  CHECK_FALSE(inst.cando_precondition.has_value());
  CHECK_FALSE(inst.want_effect.has_value());
  REQUIRE(inst.know_effect.has_value());
  CHECK(inst.know_effect->predicate() == "know");
  CHECK(inst.know_effect->args()[0].term == Term::agent("waiter"));
  CHECK(*inst.know_effect->args()[1].term.action == reserved);
}

TEST_CASE("instantiate_act rejects constraint violations") {
  DomainAct act = test::cointreaux_act();
  // The domain agent is the waiter, so Laszlo cannot be asked to perform it.
  CHECK_THROWS_AS(
      instantiate_act(SpeechActType::kRequestAct, "waiter", "laszlo", act), Error);
  try {
    instantiate_act(SpeechActType::kRequestAct, "waiter", "laszlo", act);
  } catch (const Error& e) {
    CHECK(e.category() == ErrorCategory::kConstraint);
  }
  // Offers mirror the constraint with the speaker as actor.
  CHECK_THROWS_AS(instantiate_act(SpeechActType::kOffer, "laszlo", "waiter", act),
                  Error);
}

TEST_CASE("instantiate_act rejects mismatched content kinds") {
  CHECK_THROWS_AS(instantiate_act(SpeechActType::kInform, "laszlo", "waiter",
                                  test::cointreaux_act()),
                  Error);
  CHECK_THROWS_AS(instantiate_act(SpeechActType::kRequestAct, "laszlo", "waiter",
                                  test::reserved_prop()),
                  Error);
}

TEST_CASE("responses carry the initiating act's fields") {
  SpeechActInstance accept = instantiate_act(SpeechActType::kAcceptRequest,
                                             "waiter", "laszlo",
                                             test::cointreaux_act());
  REQUIRE(accept.want_effect.has_value());
  // The accepter is the one the request wanted to act.
  CHECK(accept.want_effect->args()[0].term == Term::agent("waiter"));
  CHECK(accept.type == SpeechActType::kAcceptRequest);
  CHECK(accept.speaker == "waiter");
  CHECK(accept.hearer == "laszlo");
  CHECK(responded_type(SpeechActType::kAcceptRequest) == SpeechActType::kRequestAct);
}

TEST_CASE("instantiate_act is pure") {
  SpeechActInstance a = test::cointreaux_request();
  SpeechActInstance b = test::cointreaux_request();
  CHECK(*a.want_effect == *b.want_effect);
  CHECK(*a.want_precondition == *b.want_precondition);
  CHECK(*a.cando_precondition == *b.cando_precondition);
  CHECK(*a.know_effect == *b.know_effect);
}

TEST_CASE("negate flips polarity and nothing else") {
  Proposition p = test::stock_prop();
  Proposition n = negate(p);
  CHECK(n.polarity() == Polarity::kNegative);
  CHECK(n.predicate() == p.predicate());
  CHECK(n.args() == p.args());
  CHECK(negate(n) == p);
}

TEST_CASE("negate and abstract_agent properties over generated propositions") {
  std::mt19937 gen(7);
  const std::vector<std::string> predicates = {"bring", "take", "help", "has"};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<RoleArg> args;
    bool with_agent = gen() % 2 == 0;
    if (with_agent) {
      args.push_back({"agent", gen() % 2 ? Term::agent("waiter") : Term::someone()});
    } else {
      args.push_back({"owner", Term::phrase("restaurant")});
    }
    if (gen() % 2) args.push_back({"theme", Term::phrase("two-cointreaux")});
    Polarity polarity = gen() % 2 ? Polarity::kPositive : Polarity::kNegative;
    Proposition p(predicates[gen() % predicates.size()], args, polarity);

    CHECK(negate(negate(p)) == p);
    if (with_agent) {
      Proposition abstracted = abstract_agent(p);
      CHECK(abstracted.find("agent")->kind == Term::Kind::kSomeone);
      CHECK(abstract_agent(abstracted) == abstracted);
    } else {
      CHECK_THROWS_AS(abstract_agent(p), Error);
    }
  }
}

TEST_CASE("abstract_agent replaces the agent role") {
  const Proposition bring = test::cointreaux_act().decomposition.front();
  Proposition abstracted = abstract_agent(bring);
  CHECK(abstracted.find("agent")->kind == Term::Kind::kSomeone);
  CHECK(*abstracted.find("recipient") == test::party());
  CHECK(abstract_agent(abstracted) == abstracted);
  CHECK_THROWS_AS(abstract_agent(test::stock_prop()), Error);
}

TEST_CASE("propositions reject empty predicates and duplicate roles") {
  CHECK_THROWS_AS(Proposition("", {}), Error);
  CHECK_THROWS_AS(Proposition("has", {{"theme", Term::phrase("table")},
                                      {"theme", Term::phrase("table")}}),
                  Error);
}

TEST_CASE("domain act validation") {
  DomainAct act = test::cointreaux_act();
  CHECK_NOTHROW(act.validate());
  DomainAct no_effects = act;
  no_effects.effects.clear();
  CHECK_THROWS_AS(no_effects.validate(), Error);
  DomainAct no_decomposition = act;
  no_decomposition.decomposition.clear();
  CHECK_THROWS_AS(no_decomposition.validate(), Error);
  DomainAct no_agent = act;
  no_agent.agent = Term::phrase("restaurant");
  CHECK_THROWS_AS(no_agent.validate(), Error);
}
