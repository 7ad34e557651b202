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

#include "lsi/social.h"

namespace lsi {

namespace {

void check_social_value(const char* what, int value) {
  if (value < 0 || value > kSocialMax) {
    throw Error(ErrorCategory::kRange,
                std::string(what) + " value " + std::to_string(value) +
                    " outside [0," + std::to_string(kSocialMax) + "]");
  }
}

}  // namespace

void SocialStructure::set_pair(const std::string& speaker, const std::string& hearer,
                               int distance, int power) {
  // Stored as given; ranges are reported by validate() and enforced by
  // threat(), so a bad configuration file surfaces as a diagnostic rather
  // than a load failure.
  pairs_[{speaker, hearer}] = {distance, power};
}

bool SocialStructure::has_pair(const std::string& speaker,
                               const std::string& hearer) const {
  return pairs_.count({speaker, hearer}) > 0;
}

int SocialStructure::distance(const std::string& speaker,
                              const std::string& hearer) const {
  auto it = pairs_.find({speaker, hearer});
  if (it == pairs_.end()) {
    throw Error(ErrorCategory::kReference,
                "no social entry for pair (" + speaker + ", " + hearer + ")");
  }
  return it->second.first;
}

int SocialStructure::power(const std::string& speaker,
                           const std::string& hearer) const {
  auto it = pairs_.find({speaker, hearer});
  if (it == pairs_.end()) {
    throw Error(ErrorCategory::kReference,
                "no social entry for pair (" + speaker + ", " + hearer + ")");
  }
  return it->second.second;
}

void SocialStructure::set_disposition(const std::string& agent, Disposition d) {
  dispositions_[agent] = d;
}

std::optional<Disposition> SocialStructure::disposition(
    const std::string& agent) const {
  auto it = dispositions_.find(agent);
  if (it == dispositions_.end()) return std::nullopt;
  return it->second;
}

ImpositionTable::ImpositionTable() {
  auto set = [this](SpeechActType type, int value) {
    values_[static_cast<std::size_t>(type)] = value;
  };
  set(SpeechActType::kAcceptRequest, 5);
  set(SpeechActType::kAcceptInform, 5);
  set(SpeechActType::kAcceptOffer, 10);
  set(SpeechActType::kInform, 15);
  set(SpeechActType::kRequestInfo, 20);
  set(SpeechActType::kOffer, 25);
  set(SpeechActType::kRejectOffer, 30);
  set(SpeechActType::kRejectInform, 35);
  set(SpeechActType::kRejectRequest, 40);
  set(SpeechActType::kRequestAct, 45);
}

int ImpositionTable::ranking(SpeechActType type) const {
  return values_[static_cast<std::size_t>(type)];
}

void ImpositionTable::set_ranking(SpeechActType type, int value) {
  check_social_value("imposition", value);
  values_[static_cast<std::size_t>(type)] = value;
}

ThreatValue threat(int distance, int power, int ranking) {
  check_social_value("distance", distance);
  check_social_value("power", power);
  check_social_value("imposition", ranking);
  return ThreatValue{distance + power + ranking};
}

const char* to_string(StrategyBand band) {
  switch (band) {
    case StrategyBand::kDirect: return "direct";
    case StrategyBand::kApproval: return "approval";
    case StrategyBand::kAutonomy: return "autonomy";
    case StrategyBand::kOffRecord: return "off-record";
  }
  return "unknown";
}

StrategyBand select_band(ThreatValue theta) {
  if (theta.value < 0 || theta.value > 150) {
    throw Error(ErrorCategory::kRange,
                "threat " + std::to_string(theta.value) + " outside [0,150]");
  }
  if (theta.value <= 50) return StrategyBand::kDirect;
  if (theta.value <= 80) return StrategyBand::kApproval;
  if (theta.value <= 120) return StrategyBand::kAutonomy;
  return StrategyBand::kOffRecord;
}

BandRange band_range(StrategyBand band) {
  switch (band) {
    case StrategyBand::kDirect: return {0, 50};
    case StrategyBand::kApproval: return {51, 80};
    case StrategyBand::kAutonomy: return {81, 120};
    case StrategyBand::kOffRecord: return {121, 150};
  }
  return {0, 0};
}

double band_position(ThreatValue theta) {
  BandRange range = band_range(select_band(theta));
  return static_cast<double>(theta.value - range.lo) /
         static_cast<double>(range.hi - range.lo);
}

}  // namespace lsi
