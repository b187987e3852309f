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

#include "revgen/pattern_learner.h"

#include <algorithm>
#include <stdexcept>

#include "revgen/util.h"

namespace revgen {

namespace {

struct KindName {
  PatternKind kind;
  const char* name;
};

const KindName kKindNames[] = {
    {PatternKind::SUBJ_PASSVP, "SUBJ_PASSVP"},
    {PatternKind::SUBJ_ACTVP, "SUBJ_ACTVP"},
    {PatternKind::SUBJ_ACTVP_DOBJ, "SUBJ_ACTVP_DOBJ"},
    {PatternKind::SUBJ_ACTINFVP_DOBJ, "SUBJ_ACTINFVP_DOBJ"},
    {PatternKind::SUBJ_AUXVP_ADJ, "SUBJ_AUXVP_ADJ"},
    {PatternKind::ACTVP_PREP_NP, "ACTVP_PREP_NP"},
    {PatternKind::PASSVP_PREP_NP, "PASSVP_PREP_NP"},
    {PatternKind::NP_PREP_NP, "NP_PREP_NP"},
    {PatternKind::ADJ_NOUN, "ADJ_NOUN"},
    {PatternKind::ADJ_ADJ, "ADJ_ADJ"},
    {PatternKind::ADV_ADJ, "ADV_ADJ"},
    {PatternKind::ADV_ADV_ADJ, "ADV_ADV_ADJ"},
};

std::string normalize_negation(const std::string& lower) {
  return lower == "n't" ? "not" : lower;
}

// Verbal anchor words for a VERB-headed VP: negation adverbs (normalized)
// plus verb surfaces; auxiliaries and plain adverbs are dropped.
std::vector<std::string> verb_material(const ParsedSentence& s, const Chunk& vp) {
  std::vector<std::string> words;
  for (int k = vp.begin; k <= vp.end; ++k) {
    const Token& t = s.tokens[k];
    if (t.pos == Pos::VERB) {
      words.push_back(t.lower);
    } else if (t.pos == Pos::ADV && is_negation_adverb(t.lower)) {
      words.push_back(normalize_negation(t.lower));
    }
  }
  return words;
}

}  // namespace

const char* pattern_kind_name(PatternKind kind) {
  for (const KindName& kn : kKindNames) {
    if (kn.kind == kind) return kn.name;
  }
  return "UNKNOWN";
}

bool parse_pattern_kind(const std::string& name, PatternKind* kind) {
  for (const KindName& kn : kKindNames) {
    if (name == kn.name) {
      *kind = kn.kind;
      return true;
    }
  }
  return false;
}

SlotRole slot_for_kind(PatternKind kind) {
  switch (kind) {
    case PatternKind::SUBJ_PASSVP:
    case PatternKind::SUBJ_ACTVP:
    case PatternKind::SUBJ_ACTVP_DOBJ:
    case PatternKind::SUBJ_ACTINFVP_DOBJ:
    case PatternKind::SUBJ_AUXVP_ADJ:
      return SlotRole::SUBJ;
    case PatternKind::ACTVP_PREP_NP:
    case PatternKind::PASSVP_PREP_NP:
    case PatternKind::NP_PREP_NP:
      return SlotRole::NP;
    default:
      return SlotRole::NONE;
  }
}

bool is_ngram_kind(PatternKind kind) {
  return kind == PatternKind::ADJ_NOUN || kind == PatternKind::ADJ_ADJ ||
         kind == PatternKind::ADV_ADJ || kind == PatternKind::ADV_ADV_ADJ;
}

std::string PatternInstance::anchor_text() const {
  return join(anchor, " ");
}

bool is_adjective_pattern(PatternKind kind) {
  switch (kind) {
    case PatternKind::ADJ_ADJ:
    case PatternKind::ADV_ADJ:
    case PatternKind::ADV_ADV_ADJ:
    case PatternKind::SUBJ_AUXVP_ADJ:
    case PatternKind::ADJ_NOUN:
      return true;
    default:
      return false;
  }
}

bool is_adjective_pattern(const PatternInstance& p) {
  return is_adjective_pattern(p.kind);
}

std::vector<PatternInstance> extract_patterns(const ParsedSentence& s) {
  std::vector<PatternInstance> out;
  const auto& tokens = s.tokens;
  const auto& chunks = s.chunks;

  auto make = [&](PatternKind kind, std::vector<std::string> anchor,
                  int span_b, int span_e, int real_b, int real_e) {
    if (anchor.empty()) return;
    for (const std::string& w : anchor) {
      if (w.empty()) return;
    }
    PatternInstance p;
    p.kind = kind;
    p.anchor = std::move(anchor);
    p.slot = slot_for_kind(kind);
    p.span_begin = span_b;
    p.span_end = span_e;
    p.real_begin = real_b;
    p.real_end = real_e;
    out.push_back(std::move(p));
  };

  int nc = static_cast<int>(chunks.size());
  for (int ci = 0; ci < nc; ++ci) {
    const Chunk& c = chunks[ci];
    if (c.kind != ChunkKind::VP) continue;
    bool has_subject = s.subject_of.count(ci) > 0;
    auto dobj_it = s.dobj_of.find(ci);

    if (c.voice == Voice::PASSIVE) {
      if (has_subject) {
        make(PatternKind::SUBJ_PASSVP, verb_material(s, c), c.begin, c.end,
             c.begin, c.end);
      }
      for (const auto& [holder, pp] : s.prep_attach) {
        if (holder != ci) continue;
        std::vector<std::string> anchor = verb_material(s, c);
        anchor.push_back(tokens[chunks[pp].head].lower);
        make(PatternKind::PASSVP_PREP_NP, std::move(anchor), c.begin,
             chunks[pp].head, c.begin, chunks[pp].head);
      }
    } else if (c.voice == Voice::ACTIVE) {
      if (has_subject) {
        make(PatternKind::SUBJ_ACTVP, verb_material(s, c), c.begin, c.end,
             c.begin, c.end);
        if (dobj_it != s.dobj_of.end()) {
          const Chunk& obj = chunks[dobj_it->second];
          std::vector<std::string> anchor = verb_material(s, c);
          anchor.push_back(tokens[obj.head].lower);
          make(PatternKind::SUBJ_ACTVP_DOBJ, std::move(anchor), c.begin,
               obj.end, c.begin, obj.end);
        }
      }
      for (const auto& [holder, pp] : s.prep_attach) {
        if (holder != ci) continue;
        std::vector<std::string> anchor = verb_material(s, c);
        anchor.push_back(tokens[chunks[pp].head].lower);
        make(PatternKind::ACTVP_PREP_NP, std::move(anchor), c.begin,
             chunks[pp].head, c.begin, chunks[pp].head);
      }
      // governing VP of an infinitive with a direct object
      for (const auto& [inf_vp, gov] : s.infinitive_of) {
        if (gov != ci || !has_subject) continue;
        auto inf_dobj = s.dobj_of.find(inf_vp);
        if (inf_dobj == s.dobj_of.end()) continue;
        std::vector<std::string> anchor = verb_material(s, c);
        auto tail = verb_material(s, chunks[inf_vp]);
        anchor.insert(anchor.end(), tail.begin(), tail.end());
        make(PatternKind::SUBJ_ACTINFVP_DOBJ, std::move(anchor), c.begin,
             chunks[inf_vp].end, c.begin, chunks[inf_vp].end);
      }
    } else if (c.voice == Voice::AUXILIARY) {
      // <subj> AuxVP Adj: adjective token immediately after the chunk.
      int adj = c.end + 1;
      if (has_subject && adj < static_cast<int>(tokens.size()) &&
          tokens[adj].pos == Pos::ADJ) {
        bool any_be = false, any_have = false;
        for (int k = c.begin; k <= c.end; ++k) {
          if (tokens[k].pos != Pos::AUX) continue;
          any_be = any_be || is_be_form(tokens[k].lower);
          any_have = any_have || is_have_form(tokens[k].lower);
        }
        std::string copula = any_be ? "be" : (any_have ? "have" : "");
        std::vector<std::string> anchor;
        int real_b = adj;
        bool copula_done = false;
        for (int k = c.begin; k <= c.end; ++k) {
          const Token& t = tokens[k];
          if (t.pos == Pos::AUX) {
            if (!copula_done && !copula.empty() &&
                (is_be_form(t.lower) || is_have_form(t.lower))) {
              anchor.push_back(copula);
              copula_done = true;
            }
          } else if (t.pos == Pos::ADV) {
            anchor.push_back(normalize_negation(t.lower));
            if (real_b == adj) real_b = k;
          }
        }
        if (copula.empty() && !copula_done) {
          // pure-modal chunk; keep the last auxiliary as-is
          anchor.push_back(tokens[c.head].lower);
        }
        anchor.push_back(tokens[adj].lower);
        make(PatternKind::SUBJ_AUXVP_ADJ, std::move(anchor), c.begin, adj,
             real_b, adj);
      }
    }
  }

  // NpPrep <Np>
  for (const auto& [holder, pp] : s.prep_attach) {
    if (chunks[holder].kind != ChunkKind::NP) continue;
    const Chunk& np = chunks[holder];
    make(PatternKind::NP_PREP_NP,
         {tokens[np.head].lower, tokens[chunks[pp].head].lower}, np.head,
         chunks[pp].head, np.head, chunks[pp].head);
  }

  // n-gram templates over consecutive token POS sequences
  int n = static_cast<int>(tokens.size());
  for (int i = 0; i + 1 < n; ++i) {
    Pos a = tokens[i].pos, b = tokens[i + 1].pos;
    if (a == Pos::ADJ && b == Pos::NOUN) {
      make(PatternKind::ADJ_NOUN, {tokens[i].lower, tokens[i + 1].lower}, i,
           i + 1, i, i + 1);
    }
    if (a == Pos::ADJ && b == Pos::ADJ) {
      make(PatternKind::ADJ_ADJ, {tokens[i].lower, tokens[i + 1].lower}, i,
           i + 1, i, i + 1);
    }
    if (a == Pos::ADV && b == Pos::ADJ) {
      make(PatternKind::ADV_ADJ, {tokens[i].lower, tokens[i + 1].lower}, i,
           i + 1, i, i + 1);
    }
    if (i + 2 < n && a == Pos::ADV && b == Pos::ADV &&
        tokens[i + 2].pos == Pos::ADJ) {
      make(PatternKind::ADV_ADV_ADJ,
           {tokens[i].lower, tokens[i + 1].lower, tokens[i + 2].lower}, i,
           i + 2, i, i + 2);
    }
  }

  std::stable_sort(out.begin(), out.end(),
                   [](const PatternInstance& a, const PatternInstance& b) {
                     return a.span_begin < b.span_begin;
                   });
  return out;
}

PatternStatsMap learn(const std::vector<ParsedSentence>& target,
                      const std::vector<ParsedSentence>& contrast) {
  PatternStatsMap stats;
  for (const ParsedSentence& s : target) {
    for (const PatternInstance& p : extract_patterns(s)) {
      stats[p].freq_target += 1;
    }
  }
  for (const ParsedSentence& s : contrast) {
    for (const PatternInstance& p : extract_patterns(s)) {
      stats[p].freq_other += 1;
    }
  }
  for (auto& [pattern, st] : stats) {
    (void)pattern;
    st.prob = static_cast<double>(st.freq_target) /
              static_cast<double>(st.freq_target + st.freq_other);
  }
  return stats;
}

std::set<PatternInstance> filter_patterns(const PatternStatsMap& stats,
                                          int min_freq, double min_prob) {
  if (min_freq < 1) throw std::runtime_error("min_freq must be >= 1");
  if (min_prob < 0.0 || min_prob > 1.0)
    throw std::runtime_error("min_prob must be within [0, 1]");
  std::set<PatternInstance> kept;
  for (const auto& [pattern, st] : stats) {
    if (st.freq_target >= min_freq && st.prob >= min_prob) kept.insert(pattern);
  }
  return kept;
}

PatternStatsMap filter_stats(const PatternStatsMap& stats, int min_freq,
                             double min_prob) {
  PatternStatsMap kept;
  for (const PatternInstance& p : filter_patterns(stats, min_freq, min_prob)) {
    kept[p] = stats.at(p);
  }
  return kept;
}

std::string render_pattern_dump(const PatternStatsMap& stats) {
  std::vector<std::pair<PatternInstance, PatternStats>> rows(stats.begin(),
                                                             stats.end());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.second.prob != b.second.prob) return a.second.prob > b.second.prob;
    if (a.second.freq_target != b.second.freq_target)
      return a.second.freq_target > b.second.freq_target;
    std::string aa = a.first.anchor_text(), bb = b.first.anchor_text();
    if (aa != bb) return aa < bb;
    return a.first.kind < b.first.kind;
  });
  std::string out = "kind\tanchor\tfreq_target\tfreq_other\tprob\n";
  for (const auto& [p, st] : rows) {
    out += pattern_kind_name(p.kind);
    out += '\t';
    out += p.anchor_text();
    out += '\t';
    out += std::to_string(st.freq_target);
    out += '\t';
    out += std::to_string(st.freq_other);
    out += '\t';
    out += format_double(st.prob, 6);
    out += '\n';
  }
  return out;
}

void write_pattern_dump(const std::filesystem::path& path,
                        const PatternStatsMap& stats) {
  write_file(path, render_pattern_dump(stats));
}

PatternStatsMap read_pattern_dump(const std::filesystem::path& path) {
  PatternStatsMap stats;
  bool first = true;
  for (const std::string& line : read_lines(path)) {
    if (first) {
      first = false;
      continue;  // header
    }
    if (trim_copy(line).empty()) continue;
    auto cols = split(line, '\t');
    if (cols.size() != 5)
      throw std::runtime_error("pattern dump: bad line \"" + line + "\"");
    PatternInstance p;
    if (!parse_pattern_kind(cols[0], &p.kind))
      throw std::runtime_error("pattern dump: unknown kind \"" + cols[0] + "\"");
    p.anchor = split(cols[1], ' ');
    p.slot = slot_for_kind(p.kind);
    PatternStats st;
    st.freq_target = std::stoi(cols[2]);
    st.freq_other = std::stoi(cols[3]);
    st.prob = std::stod(cols[4]);
    stats[p] = st;
  }
  return stats;
}

}  // namespace revgen
