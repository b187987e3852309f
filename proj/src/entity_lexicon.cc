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

#include "revgen/entity_lexicon.h"

#include <stdexcept>

#include "revgen/util.h"

namespace revgen {

namespace {

// Singular form under the suffix rule, or empty if the word has no plural
// shape. Tries "-s" first, then "-es".
std::vector<std::string> singular_candidates(const std::string& word) {
  std::vector<std::string> out;
  if (word.size() > 1 && word.back() == 's') {
    out.push_back(word.substr(0, word.size() - 1));
    if (word.size() > 2 && word[word.size() - 2] == 'e') {
      out.push_back(word.substr(0, word.size() - 2));
    }
  }
  return out;
}

}  // namespace

const char* entity_type_name(EntityType type) {
  switch (type) {
    case EntityType::RESTAURANT: return "RESTAURANT";
    case EntityType::CUISINE: return "CUISINE";
    case EntityType::FOOD: return "FOOD";
    case EntityType::SERVICE: return "SERVICE";
    case EntityType::STAFF: return "STAFF";
  }
  return "FOOD";
}

const char* entity_type_key(EntityType type) {
  switch (type) {
    case EntityType::RESTAURANT: return "restaurant";
    case EntityType::CUISINE: return "cuisine";
    case EntityType::FOOD: return "food";
    case EntityType::SERVICE: return "service";
    case EntityType::STAFF: return "staff";
  }
  return "food";
}

bool parse_entity_type(const std::string& key, EntityType* type) {
  std::string k = lower_copy(key);
  for (EntityType t : kAllEntityTypes) {
    if (k == entity_type_key(t) || key == entity_type_name(t)) {
      *type = t;
      return true;
    }
  }
  return false;
}

std::string placeholder_for(EntityType type) {
  return std::string("<") + entity_type_name(type) + "_ENTITY>";
}

void EntityLexicon::add(EntityType type, const std::string& phrase) {
  entries_[type].insert(phrase);
  by_phrase_.emplace(phrase, type);
}

bool EntityLexicon::contains(EntityType type, const std::string& phrase) const {
  auto it = entries_.find(type);
  return it != entries_.end() && it->second.count(phrase) > 0;
}

std::optional<EntityType> EntityLexicon::type_of(const std::string& phrase) const {
  auto it = by_phrase_.find(phrase);
  if (it == by_phrase_.end()) return std::nullopt;
  return it->second;
}

const std::set<std::string>& EntityLexicon::phrases(EntityType type) const {
  static const std::set<std::string> kEmpty;
  auto it = entries_.find(type);
  return it == entries_.end() ? kEmpty : it->second;
}

EntityLexicon load_lexicon(
    const std::map<EntityType, std::filesystem::path>& paths,
    std::vector<std::string>* warnings,
    const std::array<EntityType, 5>& priority) {
  auto warn = [&](const std::string& msg) {
    log_warn(msg);
    if (warnings) warnings->push_back(msg);
  };
  EntityLexicon lexicon;
  for (EntityType type : priority) {
    auto it = paths.find(type);
    if (it == paths.end()) {
      throw std::runtime_error(std::string("no lexicon file given for type ") +
                               entity_type_name(type));
    }
    size_t added = 0;
    for (const std::string& raw : read_lines(it->second)) {
      std::string line = trim_copy(raw);
      if (line.empty() || line[0] == '#') continue;
      std::string phrase = lower_copy(line);
      size_t words = split(phrase, ' ').size();
      if (words < 1 || words > 4) {
        warn("lexicon " + it->second.string() + ": phrase \"" + phrase +
             "\" is not 1-4 words, skipped");
        continue;
      }
      auto existing = lexicon.type_of(phrase);
      if (existing.has_value()) {
        if (*existing != type) {
          warn(std::string("lexicon conflict: \"") + phrase + "\" already " +
               entity_type_name(*existing) + ", dropped from " +
               entity_type_name(type));
        }
        continue;
      }
      lexicon.add(type, phrase);
      ++added;
    }
    if (added == 0) {
      warn(std::string("lexicon for ") + entity_type_name(type) +
           " is empty (" + it->second.string() + ")");
    }
  }
  return lexicon;
}

std::vector<EntityMention> find_entities(const std::vector<Token>& tokens,
                                         const EntityLexicon& lexicon) {
  std::vector<EntityMention> mentions;
  int n = static_cast<int>(tokens.size());
  int i = 0;
  while (i < n) {
    if (tokens[i].pos == Pos::PUNCT) {
      ++i;
      continue;
    }
    bool matched = false;
    for (int len = 4; len >= 1 && !matched; --len) {
      if (i + len > n) continue;
      bool has_punct = false;
      std::vector<std::string> words;
      for (int k = i; k < i + len; ++k) {
        if (tokens[k].pos == Pos::PUNCT) {
          has_punct = true;
          break;
        }
        words.push_back(tokens[k].lower);
      }
      if (has_punct) continue;
      std::vector<std::string> candidates;
      candidates.push_back(join(words, " "));
      for (const std::string& sing : singular_candidates(words.back())) {
        std::vector<std::string> alt = words;
        alt.back() = sing;
        candidates.push_back(join(alt, " "));
      }
      for (const std::string& candidate : candidates) {
        auto type = lexicon.type_of(candidate);
        if (!type.has_value()) continue;
        EntityMention m;
        m.type = *type;
        m.begin = i;
        m.end = i + len - 1;
        // surface = original text of the span, internal spacing preserved
        std::string surface = tokens[i].surface;
        for (int k = i + 1; k <= m.end; ++k) {
          surface += tokens[k].space_before + tokens[k].surface;
        }
        m.surface = std::move(surface);
        mentions.push_back(std::move(m));
        i += len;
        matched = true;
        break;
      }
    }
    if (!matched) ++i;
  }
  return mentions;
}

DelexicalizedSentence delexicalize(const std::string& sentence,
                                   const ParsedSentence& parsed,
                                   const EntityLexicon& lexicon) {
  (void)sentence;
  DelexicalizedSentence out;
  out.mentions = find_entities(parsed.tokens, lexicon);

  std::string text;
  size_t next_mention = 0;
  int skip_until = -1;
  int words = 0;
  for (const Token& t : parsed.tokens) {
    if (next_mention < out.mentions.size() &&
        t.index == out.mentions[next_mention].begin) {
      text += t.space_before;
      text += placeholder_for(out.mentions[next_mention].type);
      skip_until = out.mentions[next_mention].end;
      ++next_mention;
      ++words;
      continue;
    }
    if (t.index <= skip_until) continue;
    text += t.space_before;
    text += t.surface;
    if (t.pos != Pos::PUNCT) ++words;
  }
  out.template_text = std::move(text);
  out.word_count = words;
  return out;
}

int count_placeholders(const std::string& text) {
  int count = 0;
  for (EntityType type : kAllEntityTypes) {
    std::string ph = placeholder_for(type);
    size_t pos = 0;
    while ((pos = text.find(ph, pos)) != std::string::npos) {
      ++count;
      pos += ph.size();
    }
  }
  return count;
}

std::string relexicalize(const std::string& template_text,
                         const std::map<EntityType, std::string>& values) {
  std::string out;
  size_t i = 0;
  while (i < template_text.size()) {
    if (template_text[i] != '<') {
      out += template_text[i++];
      continue;
    }
    bool replaced = false;
    for (EntityType type : kAllEntityTypes) {
      std::string ph = placeholder_for(type);
      if (template_text.compare(i, ph.size(), ph) == 0) {
        auto it = values.find(type);
        if (it == values.end()) {
          throw std::runtime_error(std::string("no value for placeholder ") +
                                   entity_type_name(type));
        }
        out += it->second;
        i += ph.size();
        replaced = true;
        break;
      }
    }
    if (!replaced) out += template_text[i++];
  }
  return out;
}

}  // namespace revgen
