// Copyright 2026 The revgen Authors.
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

#ifndef REVGEN_PATTERN_LEARNER_H_
#define REVGEN_PATTERN_LEARNER_H_

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "revgen/shallow_parser.h"

namespace revgen {

// Syntactic templates plus the n-gram templates. The n-gram kinds are
// exactly {ADJ_NOUN, ADJ_ADJ, ADV_ADJ, ADV_ADV_ADJ}.
enum class PatternKind {
  SUBJ_PASSVP,
  SUBJ_ACTVP,
  SUBJ_ACTVP_DOBJ,
  SUBJ_ACTINFVP_DOBJ,
  SUBJ_AUXVP_ADJ,
  ACTVP_PREP_NP,
  PASSVP_PREP_NP,
  NP_PREP_NP,
  ADJ_NOUN,
  ADJ_ADJ,
  ADV_ADJ,
  ADV_ADV_ADJ,
};

enum class SlotRole { SUBJ, NP, NONE };

const char* pattern_kind_name(PatternKind kind);
bool parse_pattern_kind(const std::string& name, PatternKind* kind);
SlotRole slot_for_kind(PatternKind kind);
bool is_ngram_kind(PatternKind kind);

struct PatternInstance {
  PatternKind kind = PatternKind::ADJ_NOUN;
  // Lowercased lexical words filling the template's fixed positions, in
  // surface order; be/have auxiliaries citation-normalized, "n't" -> "not".
  std::vector<std::string> anchor;
  SlotRole slot = SlotRole::NONE;

  // Token spans in the source sentence. span covers all matched material;
  // realization covers the adjective material used for brackets and pair
  // realizations. Identity for counting is (kind, anchor) only.
  int span_begin = -1;
  int span_end = -1;
  int real_begin = -1;
  int real_end = -1;

  std::string anchor_text() const;

  friend bool operator==(const PatternInstance& a, const PatternInstance& b) {
    return a.kind == b.kind && a.anchor == b.anchor;
  }
  friend bool operator<(const PatternInstance& a, const PatternInstance& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.anchor < b.anchor;
  }
};

struct PatternStats {
  int freq_target = 0;
  int freq_other = 0;
  double prob = 0.0;  // freq_target / (freq_target + freq_other)
};

using PatternStatsMap = std::map<PatternInstance, PatternStats>;

// All matches of all 12 kinds, duplicates preserved, in left-to-right order
// of span start.
std::vector<PatternInstance> extract_patterns(const ParsedSentence& sentence);

PatternStatsMap learn(const std::vector<ParsedSentence>& target,
                      const std::vector<ParsedSentence>& contrast);

// Keeps p iff freq_target >= min_freq and prob >= min_prob. Throws on
// min_freq < 1 or min_prob outside [0, 1].
std::set<PatternInstance> filter_patterns(const PatternStatsMap& stats,
                                          int min_freq = 3,
                                          double min_prob = 0.75);

// filter_patterns with the stats retained for the survivors.
PatternStatsMap filter_stats(const PatternStatsMap& stats, int min_freq = 3,
                             double min_prob = 0.75);

bool is_adjective_pattern(PatternKind kind);
bool is_adjective_pattern(const PatternInstance& p);

// Tab-separated dump: kind, anchor, freq_target, freq_other, prob (6 dp),
// sorted by (-prob, -freq_target, anchor, kind).
std::string render_pattern_dump(const PatternStatsMap& stats);
void write_pattern_dump(const std::filesystem::path& path,
                        const PatternStatsMap& stats);
PatternStatsMap read_pattern_dump(const std::filesystem::path& path);

}  // namespace revgen

#endif  // REVGEN_PATTERN_LEARNER_H_
