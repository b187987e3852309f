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

#ifndef REVGEN_ENTITY_LEXICON_H_
#define REVGEN_ENTITY_LEXICON_H_

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "revgen/shallow_parser.h"

namespace revgen {

enum class EntityType { RESTAURANT, CUISINE, FOOD, SERVICE, STAFF };

inline constexpr std::array<EntityType, 5> kAllEntityTypes = {
    EntityType::RESTAURANT, EntityType::CUISINE, EntityType::FOOD,
    EntityType::SERVICE, EntityType::STAFF};

const char* entity_type_name(EntityType type);      // "RESTAURANT"
const char* entity_type_key(EntityType type);       // "restaurant"
bool parse_entity_type(const std::string& key, EntityType* type);
std::string placeholder_for(EntityType type);       // "<RESTAURANT_ENTITY>"

// Lookup priority (and lexicon load order) for cross-type conflicts.
inline constexpr std::array<EntityType, 5> kEntityPriority = {
    EntityType::FOOD, EntityType::CUISINE, EntityType::RESTAURANT,
    EntityType::STAFF, EntityType::SERVICE};

class EntityLexicon {
 public:
  void add(EntityType type, const std::string& phrase);
  bool contains(EntityType type, const std::string& phrase) const;
  std::optional<EntityType> type_of(const std::string& phrase) const;
  const std::set<std::string>& phrases(EntityType type) const;

 private:
  std::map<EntityType, std::set<std::string>> entries_;
  std::map<std::string, EntityType> by_phrase_;
};

// Loads the five phrase-per-line files (lowercased, deduplicated, 1-4 words).
// Cross-type conflicts keep the first-loaded type per `priority`; conflicts
// and empty files are reported through `warnings` when given. Missing files
// throw.
EntityLexicon load_lexicon(
    const std::map<EntityType, std::filesystem::path>& paths,
    std::vector<std::string>* warnings = nullptr,
    const std::array<EntityType, 5>& priority = kEntityPriority);

struct EntityMention {
  EntityType type = EntityType::FOOD;
  std::string surface;  // matched text as it appears in the sentence
  int begin = 0;        // inclusive token index
  int end = 0;          // inclusive token index
};

// Case-insensitive longest match over token n-grams (n up to 4), left to
// right, non-overlapping; a final token ending in "s"/"es" also matches the
// singular lexicon phrase.
std::vector<EntityMention> find_entities(const std::vector<Token>& tokens,
                                         const EntityLexicon& lexicon);

struct DelexicalizedSentence {
  std::string template_text;
  std::vector<EntityMention> mentions;
  // Non-punctuation tokens, with each placeholder counted as one word.
  int word_count = 0;
};

DelexicalizedSentence delexicalize(const std::string& sentence,
                                   const ParsedSentence& parsed,
                                   const EntityLexicon& lexicon);

// Substitutes placeholders in order. Throws if a placeholder's type has no
// value, naming the type.
std::string relexicalize(const std::string& template_text,
                         const std::map<EntityType, std::string>& values);

int count_placeholders(const std::string& text);

}  // namespace revgen

#endif  // REVGEN_ENTITY_LEXICON_H_
