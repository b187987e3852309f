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

#include "revgen/templates.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "revgen/util.h"

namespace revgen {

namespace {

const char* relation_name(FrameRelation r) {
  switch (r) {
    case FrameRelation::HAD: return "HAD";
    case FrameRelation::IS_WAS: return "IS_WAS";
    case FrameRelation::LOOKED_TASTED: return "LOOKED_TASTED";
  }
  return "HAD";
}

bool is_perception_verb(const std::string& lower) {
  static const std::set<std::string> kVerbs = {
      "taste", "tasted", "tastes", "look",   "looked", "looks",
      "smell", "smelled", "smells", "seem",  "seemed", "seems"};
  return kVerbs.count(lower) > 0;
}

// The VP a predicative pattern hangs off: the pattern's adjective material
// must adjoin the chunk boundary (the chunk may have absorbed leading
// adverbs, "was almost | raw").
int predicative_vp(const ParsedSentence& s, int real_begin, int real_end) {
  for (int ci = 0; ci < static_cast<int>(s.chunks.size()); ++ci) {
    const Chunk& c = s.chunks[ci];
    if (c.kind != ChunkKind::VP) continue;
    if (c.end + 1 >= real_begin && c.end + 1 <= real_end) return ci;
  }
  return -1;
}

bool is_copular_or_perception(const ParsedSentence& s, const Chunk& vp) {
  if (vp.voice == Voice::AUXILIARY) {
    for (int k = vp.begin; k <= vp.end; ++k) {
      if (s.tokens[k].pos == Pos::AUX && is_be_form(s.tokens[k].lower))
        return true;
    }
    return false;
  }
  return is_perception_verb(s.tokens[vp.head].lower);
}

bool mention_in_chunk(const EntityMention& m, const Chunk& c) {
  return m.begin >= c.begin && m.end <= c.end;
}

std::string realization_text(const ParsedSentence& s, int real_begin,
                             int real_end, const EntityMention& mention) {
  std::vector<std::string> words;
  for (int k = real_begin; k <= real_end; ++k) {
    if (k >= mention.begin && k <= mention.end) continue;
    if (s.tokens[k].pos == Pos::PUNCT) continue;
    words.push_back(s.tokens[k].lower);
  }
  return join(words, " ");
}

// Filtered adjective-pattern instances present in the sentence.
std::vector<PatternInstance> filtered_adjective_instances(
    const ParsedSentence& s, const PatternStatsMap& filtered) {
  std::vector<PatternInstance> out;
  for (PatternInstance& p : extract_patterns(s)) {
    if (!is_adjective_pattern(p)) continue;
    if (filtered.count(p) == 0) continue;
    out.push_back(std::move(p));
  }
  return out;
}

std::string upper_copy(const std::string& s) {
  std::string out = s;
  for (char& c : out)
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

bool is_punct_token_text(const std::string& tok) {
  if (tok.empty()) return false;
  for (char c : tok) {
    if (std::isalnum(static_cast<unsigned char>(c))) return false;
    if (c == '<' || c == '>') return false;  // placeholders
  }
  return true;
}

}  // namespace

const char* polarity_name(Polarity p) {
  return p == Polarity::POSITIVE ? "positive" : "negative";
}

bool parse_polarity(const std::string& name, Polarity* p) {
  std::string n = lower_copy(name);
  if (n == "positive") {
    *p = Polarity::POSITIVE;
    return true;
  }
  if (n == "negative") {
    *p = Polarity::NEGATIVE;
    return true;
  }
  return false;
}

std::string BasicFrame::id() const {
  std::string id = std::string("frame:") + relation_name(relation) + ":" +
                   entity_type_key(entity);
  if (combined_types.has_value()) {
    id += std::string("+") + entity_type_key(combined_types->second);
  }
  return id;
}

std::vector<BasicFrame> basic_frames() {
  std::vector<BasicFrame> frames;
  for (EntityType e : kAllEntityTypes) {
    BasicFrame had;
    had.text = "They had [adj] (entity).";
    had.relation = FrameRelation::HAD;
    had.entity = e;
    frames.push_back(had);

    BasicFrame is_was;
    is_was.text = "The (entity) {verb} [adj].";
    is_was.relation = FrameRelation::IS_WAS;
    is_was.entity = e;
    is_was.verb_options = {"was", "is"};
    frames.push_back(is_was);

    if (e == EntityType::FOOD) {
      BasicFrame perception;
      perception.text = "The (entity) {verb} [adj].";
      perception.relation = FrameRelation::LOOKED_TASTED;
      perception.entity = e;
      perception.verb_options = {"looked", "tasted"};
      frames.push_back(perception);
    }
  }
  BasicFrame rc;
  rc.text = "They had [adj] (entity) at this (entity2).";
  rc.relation = FrameRelation::HAD;
  rc.arity = FrameArity::COMBINED;
  rc.entity = EntityType::CUISINE;
  rc.combined_types = {{EntityType::CUISINE, EntityType::RESTAURANT}};
  frames.push_back(rc);

  BasicFrame ss;
  ss.text = "The (entity2) gave us [adj] (entity).";
  ss.relation = FrameRelation::HAD;
  ss.arity = FrameArity::COMBINED;
  ss.entity = EntityType::SERVICE;
  ss.combined_types = {{EntityType::SERVICE, EntityType::STAFF}};
  frames.push_back(ss);
  return frames;
}

std::vector<HyperbolicPair> extract_hyperbolic_pairs(
    const std::vector<HarvestSentence>& corpus, Polarity polarity,
    const PatternStatsMap& filtered) {
  std::vector<HyperbolicPair> pairs;
  std::set<std::string> seen;
  for (const HarvestSentence& hs : corpus) {
    if (hs.delex.mentions.size() != 1) continue;
    const EntityMention& mention = hs.delex.mentions[0];
    const ParsedSentence& s = hs.parsed;

    for (const PatternInstance& p : filtered_adjective_instances(s, filtered)) {
      bool qualifies = false;
      if (p.kind == PatternKind::SUBJ_AUXVP_ADJ) {
        // the mention NP is the subject of the pattern's VP
        for (int ci = 0; ci < static_cast<int>(s.chunks.size()); ++ci) {
          const Chunk& c = s.chunks[ci];
          if (c.kind != ChunkKind::VP || c.begin != p.span_begin) continue;
          auto subj = s.subject_of.find(ci);
          qualifies = subj != s.subject_of.end() &&
                      mention_in_chunk(mention, s.chunks[subj->second]);
          break;
        }
      } else {
        // predicative: adjoins a copular/perception VP whose subject holds
        // the mention
        int vp = predicative_vp(s, p.real_begin, p.real_end);
        if (vp >= 0 && is_copular_or_perception(s, s.chunks[vp])) {
          auto subj = s.subject_of.find(vp);
          if (subj != s.subject_of.end() &&
              mention_in_chunk(mention, s.chunks[subj->second])) {
            qualifies = true;
          }
        }
        // attributive: immediately modifies the mention
        if (!qualifies && p.real_end + 1 == mention.begin) qualifies = true;
        if (!qualifies && p.kind == PatternKind::ADJ_NOUN &&
            p.span_end >= mention.begin && p.span_begin < mention.begin) {
          qualifies = true;  // the pattern's noun is the mention itself
        }
      }
      if (!qualifies) continue;
      std::string realization =
          realization_text(s, p.real_begin, p.real_end, mention);
      if (realization.empty()) continue;
      std::string key = std::string(entity_type_key(mention.type)) + "\t" +
                        pattern_kind_name(p.kind) + "\t" + p.anchor_text();
      if (!seen.insert(key).second) continue;
      HyperbolicPair pair;
      pair.entity_type = mention.type;
      pair.pattern = p;
      pair.polarity = polarity;
      pair.realization = realization;
      const PatternStats& st = filtered.at(p);
      pair.freq = st.freq_target;
      pair.prob = st.prob;
      pairs.push_back(std::move(pair));
    }
  }
  return pairs;
}

std::vector<CreativeTemplate> extract_creative_templates(
    const std::vector<HarvestSentence>& corpus, Polarity polarity,
    const PatternStatsMap& filtered) {
  std::vector<CreativeTemplate> templates;
  std::set<std::string> seen_text;
  for (const HarvestSentence& hs : corpus) {
    if (hs.delex.mentions.size() != 1) continue;
    if (hs.delex.word_count < 5 || hs.delex.word_count > 15) continue;
    const EntityMention& mention = hs.delex.mentions[0];
    const ParsedSentence& s = hs.parsed;

    std::vector<PatternInstance> instances =
        filtered_adjective_instances(s, filtered);
    if (instances.empty()) continue;

    // Overlapping realization spans count as one pattern occurrence
    // (an AdvAdvAdj always contains an AdvAdj; a copular pattern shares its
    // adjective with the n-gram on the same tokens). Distinct spans mean
    // distinct occurrences and disqualify the sentence.
    std::sort(instances.begin(), instances.end(),
              [](const PatternInstance& a, const PatternInstance& b) {
                if (a.real_begin != b.real_begin) return a.real_begin < b.real_begin;
                if (a.real_end != b.real_end) return a.real_end > b.real_end;
                return a.kind < b.kind;
              });
    int groups = 0;
    int group_end = -1;
    const PatternInstance* representative = nullptr;
    for (const PatternInstance& p : instances) {
      if (p.real_begin > group_end) {
        ++groups;
        group_end = p.real_end;
        if (groups == 1) representative = &p;
      } else {
        group_end = std::max(group_end, p.real_end);
      }
    }
    if (groups != 1) continue;
    // widest span in the group wins the bracket
    for (const PatternInstance& p : instances) {
      if (p.real_end - p.real_begin >
          representative->real_end - representative->real_begin) {
        representative = &p;
      }
    }

    // Render space-joined tokens with the placeholder and bracket markup.
    std::vector<std::string> words;
    std::vector<bool> bracketed;
    for (int i = 0; i < static_cast<int>(s.tokens.size()); ++i) {
      bool in_bracket = i >= representative->real_begin &&
                        i <= representative->real_end;
      if (i == mention.begin) {
        words.push_back(placeholder_for(mention.type));
        bracketed.push_back(in_bracket);
        continue;
      }
      if (i > mention.begin && i <= mention.end) {
        // collapsed into the placeholder; keep the bracket open if needed
        if (in_bracket && !bracketed.empty()) {
          bracketed.back() = bracketed.back() || in_bracket;
        }
        continue;
      }
      std::string w = s.tokens[i].surface;
      if (in_bracket) w = upper_copy(w);
      words.push_back(std::move(w));
      bracketed.push_back(in_bracket);
    }
    // placeholders are never uppercased; attach brackets
    for (size_t i = 0; i < words.size(); ++i) {
      bool prev = i > 0 && bracketed[i - 1];
      bool next = i + 1 < words.size() && bracketed[i + 1];
      if (bracketed[i] && !prev) words[i] = "[" + words[i];
      if (bracketed[i] && !next) words[i] += "]";
    }
    std::string text = join(words, " ");
    if (!seen_text.insert(lower_copy(text)).second) continue;

    CreativeTemplate t;
    t.entity_type = mention.type;
    t.polarity = polarity;
    t.text = std::move(text);
    t.source_pattern = *representative;
    const PatternStats& st = filtered.at(*representative);
    t.freq = st.freq_target;
    t.prob = st.prob;
    t.word_count = hs.delex.word_count;
    templates.push_back(std::move(t));
  }
  return templates;
}

std::vector<const HyperbolicPair*> TemplateStore::pairs_for(
    EntityType type, Polarity polarity) const {
  std::vector<const HyperbolicPair*> out;
  for (const HyperbolicPair& p : pairs) {
    if (p.entity_type == type && p.polarity == polarity) out.push_back(&p);
  }
  return out;
}

std::vector<const CreativeTemplate*> TemplateStore::creatives_for(
    EntityType type, Polarity polarity) const {
  std::vector<const CreativeTemplate*> out;
  for (const CreativeTemplate& t : creatives) {
    if (t.entity_type == type && t.polarity == polarity) out.push_back(&t);
  }
  return out;
}

std::string creative_template_id(const CreativeTemplate& t) {
  return std::string("creative:") + polarity_name(t.polarity) + ":" +
         entity_type_key(t.entity_type) + ":" + fnv1a64_hex(t.text);
}

std::string hyperbolic_pair_id(const HyperbolicPair& p) {
  return std::string("pair:") + polarity_name(p.polarity) + ":" +
         entity_type_key(p.entity_type) + ":" +
         pattern_kind_name(p.pattern.kind) + ":" + p.pattern.anchor_text();
}

const CreativeTemplate* TemplateStore::find_creative(const std::string& id) const {
  for (const CreativeTemplate& t : creatives) {
    if (creative_template_id(t) == id) return &t;
  }
  return nullptr;
}

const HyperbolicPair* TemplateStore::find_pair(const std::string& id) const {
  for (const HyperbolicPair& p : pairs) {
    if (hyperbolic_pair_id(p) == id) return &p;
  }
  return nullptr;
}

namespace {

struct StoreRow {
  std::string family;
  std::string polarity;
  std::string entity;
  std::string text;
  std::string kind;
  std::string anchor;
  int freq = 0;
  double prob = 0.0;
  int word_count = 0;
};

bool row_less(const StoreRow& a, const StoreRow& b) {
  if (a.polarity != b.polarity) return a.polarity < b.polarity;
  if (a.entity != b.entity) return a.entity < b.entity;
  if (a.prob != b.prob) return a.prob > b.prob;
  if (a.text != b.text) return a.text < b.text;
  if (a.family != b.family) return a.family < b.family;
  return a.anchor < b.anchor;
}

}  // namespace

void write_template_store(const std::filesystem::path& path,
                          const TemplateStore& store) {
  std::vector<StoreRow> rows;
  for (const HyperbolicPair& p : store.pairs) {
    StoreRow r;
    r.family = "hyperbolic";
    r.polarity = polarity_name(p.polarity);
    r.entity = entity_type_key(p.entity_type);
    r.text = p.realization;
    r.kind = pattern_kind_name(p.pattern.kind);
    r.anchor = p.pattern.anchor_text();
    r.freq = p.freq;
    r.prob = p.prob;
    r.word_count = static_cast<int>(split(p.realization, ' ').size());
    rows.push_back(std::move(r));
  }
  for (const CreativeTemplate& t : store.creatives) {
    StoreRow r;
    r.family = "creative";
    r.polarity = polarity_name(t.polarity);
    r.entity = entity_type_key(t.entity_type);
    r.text = t.text;
    r.kind = pattern_kind_name(t.source_pattern.kind);
    r.anchor = t.source_pattern.anchor_text();
    r.freq = t.freq;
    r.prob = t.prob;
    r.word_count = t.word_count;
    rows.push_back(std::move(r));
  }
  std::sort(rows.begin(), rows.end(), row_less);
  std::string out =
      "family\tpolarity\tentity_type\ttext\tpattern_kind\tpattern_anchor\t"
      "freq\tprob\tword_count\n";
  for (const StoreRow& r : rows) {
    out += r.family + "\t" + r.polarity + "\t" + r.entity + "\t" + r.text +
           "\t" + r.kind + "\t" + r.anchor + "\t" + std::to_string(r.freq) +
           "\t" + format_double(r.prob, 6) + "\t" +
           std::to_string(r.word_count) + "\n";
  }
  write_file(path, out);
}

TemplateStore read_template_store(const std::filesystem::path& path) {
  TemplateStore store;
  bool first = true;
  for (const std::string& line : read_lines(path)) {
    if (first) {
      first = false;
      continue;
    }
    if (trim_copy(line).empty()) continue;
    auto cols = split(line, '\t');
    if (cols.size() != 9)
      throw std::runtime_error("template store: bad line \"" + line + "\"");
    Polarity polarity;
    EntityType entity;
    PatternKind kind;
    if (!parse_polarity(cols[1], &polarity) ||
        !parse_entity_type(cols[2], &entity) ||
        !parse_pattern_kind(cols[4], &kind)) {
      throw std::runtime_error("template store: bad field in \"" + line + "\"");
    }
    PatternInstance pattern;
    pattern.kind = kind;
    pattern.anchor = split(cols[5], ' ');
    pattern.slot = slot_for_kind(kind);
    if (cols[0] == "hyperbolic") {
      HyperbolicPair p;
      p.entity_type = entity;
      p.polarity = polarity;
      p.realization = cols[3];
      p.pattern = std::move(pattern);
      p.freq = std::stoi(cols[6]);
      p.prob = std::stod(cols[7]);
      store.pairs.push_back(std::move(p));
    } else if (cols[0] == "creative") {
      CreativeTemplate t;
      t.entity_type = entity;
      t.polarity = polarity;
      t.text = cols[3];
      t.source_pattern = std::move(pattern);
      t.freq = std::stoi(cols[6]);
      t.prob = std::stod(cols[7]);
      t.word_count = std::stoi(cols[8]);
      store.creatives.push_back(std::move(t));
    } else {
      throw std::runtime_error("template store: unknown family \"" + cols[0] + "\"");
    }
  }
  return store;
}

std::vector<std::string> validate_creative_store(const TemplateStore& store) {
  std::vector<std::string> violations;
  for (const CreativeTemplate& t : store.creatives) {
    std::string id = creative_template_id(t);
    if (count_placeholders(t.text) != 1) {
      violations.push_back(id + ": placeholder count != 1");
    } else if (t.text.find(placeholder_for(t.entity_type)) == std::string::npos) {
      violations.push_back(id + ": placeholder type mismatch");
    }
    int opens = static_cast<int>(std::count(t.text.begin(), t.text.end(), '['));
    int closes = static_cast<int>(std::count(t.text.begin(), t.text.end(), ']'));
    if (opens != 1 || closes != 1 ||
        t.text.find('[') > t.text.find(']')) {
      violations.push_back(id + ": expected exactly one bracket group");
    }
    int words = 0;
    for (const std::string& raw : split(t.text, ' ')) {
      std::string tok = raw;
      tok.erase(std::remove(tok.begin(), tok.end(), '['), tok.end());
      tok.erase(std::remove(tok.begin(), tok.end(), ']'), tok.end());
      if (tok.empty() || is_punct_token_text(tok)) continue;
      ++words;
    }
    if (words != t.word_count) {
      violations.push_back(id + ": stored word_count " +
                           std::to_string(t.word_count) + " != recomputed " +
                           std::to_string(words));
    }
    if (words < 5 || words > 15) {
      violations.push_back(id + ": word count " + std::to_string(words) +
                           " outside 5-15");
    }
    if (!is_adjective_pattern(t.source_pattern.kind)) {
      violations.push_back(id + ": source pattern is not an adjective pattern");
    }
  }
  return violations;
}

}  // namespace revgen
