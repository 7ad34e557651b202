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

#include "lsi/affect.h"

#include <cctype>

#include "lsi/social.h"

namespace lsi {

const char* to_string(Disposition d) {
  switch (d) {
    case Disposition::kAngry: return "angry";
    case Disposition::kAnnoyed: return "annoyed";
    case Disposition::kDisgusted: return "disgusted";
    case Disposition::kDistraught: return "distraught";
    case Disposition::kGruff: return "gruff";
    case Disposition::kPleasant: return "pleasant";
    case Disposition::kSad: return "sad";
    case Disposition::kNeutral: return "neutral";
  }
  return "unknown";
}

std::optional<Disposition> disposition_from_string(const std::string& s) {
  std::string lowered = s;
  for (char& c : lowered) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  for (Disposition d : all_dispositions()) {
    if (lowered == to_string(d)) return d;
  }
  return std::nullopt;
}

const std::vector<Disposition>& all_dispositions() {
  static const std::vector<Disposition> kAll = {
      Disposition::kAngry,   Disposition::kAnnoyed,  Disposition::kDisgusted,
      Disposition::kDistraught, Disposition::kGruff, Disposition::kPleasant,
      Disposition::kSad,     Disposition::kNeutral,
  };
  return kAll;
}

const std::array<std::string, AffectVector::kParamCount>&
AffectVector::param_names() {
  static const std::array<std::string, kParamCount> kNames = {
      // pitch
      "accent-shape", "average-pitch", "contour-slope", "final-lowering",
      "pitch-range", "reference-line",
      // timing
      "speech-rate", "fluent-pauses", "hesitation-pauses", "stress-frequency",
      "exaggeration",
      // voice quality
      "loudness", "breathiness", "brilliance", "laryngealization", "tremor",
      // articulation
      "precision",
  };
  return kNames;
}

const char* AffectVector::group_of(int index) {
  if (index < 6) return "pitch";
  if (index < 11) return "timing";
  if (index < 16) return "voice-quality";
  return "articulation";
}

bool AffectVector::is_zero() const {
  for (double v : values) {
    if (v != 0.0) return false;
  }
  return true;
}

void AffectVector::check_range() const {
  for (int i = 0; i < kParamCount; ++i) {
    double v = values[static_cast<std::size_t>(i)];
    if (v < -10.0 || v > 10.0) {
      throw Error(ErrorCategory::kRange,
                  "affect parameter '" + param_names()[static_cast<std::size_t>(i)] +
                      "' outside [-10,10]");
    }
  }
}

DispositionPalette DispositionPalette::defaults() {
  DispositionPalette palette;
  auto set = [&palette](Disposition d, std::array<double, 17> v) {
    AffectVector vec;
    vec.values = v;
    palette.set(d, vec);
  };
  // Shipped configuration, ordered as param_names():
  //   accent-shape, average-pitch, contour-slope, final-lowering, pitch-range,
  //   reference-line, speech-rate, fluent-pauses, hesitation-pauses,
  //   stress-frequency, exaggeration, loudness, breathiness, brilliance,
  //   laryngealization, tremor, precision
  set(Disposition::kAngry,
      {6, 3, 4, 5, 8, -2, 5, -4, -6, 6, 4, 8, -6, 7, 3, 1, 7});
  set(Disposition::kAnnoyed,
      {3, 1, 2, 3, 4, -1, 2, -2, -3, 3, 2, 4, -3, 4, 2, 0, 4});
  set(Disposition::kDisgusted,
      {2, -3, -4, 4, 2, -3, -4, 3, 2, 2, 3, 2, -2, -4, 6, 0, 3});
  set(Disposition::kDistraught,
      {-3, 8, 2, -6, 7, 6, -3, 6, 8, -2, 3, -2, 5, -3, 0, 6, -6});
  set(Disposition::kGruff,
      {1, -6, -2, 5, -4, -6, -2, 2, 0, 1, -2, 3, -4, -6, 8, 0, -3});
  set(Disposition::kPleasant,
      {2, 2, 1, -1, 3, 1, 0, 1, -1, 1, 0, 1, 2, 3, -2, 0, 2});
  set(Disposition::kSad,
      {-4, -5, -3, -4, -6, -4, -6, 6, 5, -4, -3, -5, 6, -5, 2, 3, -5});
  set(Disposition::kNeutral, {});
  return palette;
}

void DispositionPalette::set(Disposition d, AffectVector v) {
  v.check_range();
  vectors_[d] = v;
}

bool DispositionPalette::has(Disposition d) const { return vectors_.count(d) > 0; }

const AffectVector& DispositionPalette::at(Disposition d) const {
  auto it = vectors_.find(d);
  if (it == vectors_.end()) {
    throw Error(ErrorCategory::kReference,
                std::string("palette missing disposition '") + to_string(d) + "'");
  }
  return it->second;
}

void DispositionPalette::validate() const {
  for (Disposition d : all_dispositions()) {
    at(d).check_range();
  }
}

AffectVector disposition_vector(Disposition d, const DispositionPalette& palette) {
  if (d == Disposition::kNeutral) return AffectVector{};
  return palette.at(d);
}

namespace {

bool is_punct_token(const std::string& token) {
  for (char c : token) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '\'') return false;
  }
  return !token.empty();
}

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::string word;
  auto flush = [&]() {
    if (!word.empty()) {
      tokens.push_back(word);
      word.clear();
    }
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '\'' ||
               c == '-') {
      word.push_back(c);
    } else {
      flush();
      tokens.push_back(std::string(1, c));
    }
  }
  flush();
  return tokens;
}

std::string lowered(const std::string& s) {
  std::string out = s;
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

// Adjunct words that open a clause-final adjunct ("right away", "yet", ...).
bool is_adjunct_word(const std::string& word) {
  return word == "right" || word == "away" || word == "yet" || word == "please";
}

}  // namespace

AnnotatedUtterance Annotator::annotate(const std::string& text) {
  std::vector<std::string> raw = tokenize(text);
  if (raw.empty()) {
    throw Error(ErrorCategory::kFormat, "cannot annotate empty text");
  }

  AnnotatedUtterance out;
  for (const std::string& token : raw) {
    AnnotatedToken annotated;
    annotated.surface = token;
    if (is_punct_token(token)) {
      annotated.pos = "punct";
      annotated.accent = 0.0;
    } else {
      const Lexicon::WordInfo* info = lexicon_->lookup_word(token);
      std::string pos = info != nullptr ? info->pos : "unknown";
      std::string lemma = info != nullptr ? info->lemma : lowered(token);
      double base = lexicon_->accent_for(pos);
      // Focus decays with givenness: each prior mention of the lemma in this
      // dialogue lowers the stress likelihood.
      int prior = mentions_[lemma]++;
      annotated.pos = pos;
      annotated.accent = base / (1.0 + static_cast<double>(prior));
    }
    out.tokens.push_back(annotated);
  }

  // Phrase boundaries: before punctuation, and before the final adjunct
  // region when one is present.
  int n = static_cast<int>(out.tokens.size());
  std::vector<bool> mark(static_cast<std::size_t>(n), false);
  for (int i = 1; i < n; ++i) {
    if (out.tokens[static_cast<std::size_t>(i)].pos == "punct") {
      mark[static_cast<std::size_t>(i)] = true;
    }
  }
  int tail = n;
  while (tail > 0) {
    const AnnotatedToken& token = out.tokens[static_cast<std::size_t>(tail - 1)];
    if (token.pos == "punct" || is_adjunct_word(lowered(token.surface))) {
      --tail;
    } else {
      break;
    }
  }
  if (tail > 0 && tail < n) mark[static_cast<std::size_t>(tail)] = true;
  for (int i = 1; i < n; ++i) {
    if (mark[static_cast<std::size_t>(i)]) out.boundaries.push_back(i);
  }
  return out;
}

ProsodyRecord emit_record(const AnnotatedUtterance& utterance,
                          const std::string& speaker, const SocialStructure& social,
                          const DispositionPalette& palette) {
  std::optional<Disposition> d = social.disposition(speaker);
  if (!d) {
    throw Error(ErrorCategory::kReference,
                "speaker '" + speaker + "' has no disposition in the social structure");
  }
  ProsodyRecord record;
  record.speaker = speaker;
  record.disposition = *d;
  record.affect = disposition_vector(*d, palette);
  record.utterance = utterance;
  return record;
}

}  // namespace lsi
