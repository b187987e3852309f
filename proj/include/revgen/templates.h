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

#ifndef REVGEN_TEMPLATES_H_
#define REVGEN_TEMPLATES_H_

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "revgen/entity_lexicon.h"
#include "revgen/pattern_learner.h"
#include "revgen/shallow_parser.h"

namespace revgen {

enum class Polarity { POSITIVE, NEGATIVE };

const char* polarity_name(Polarity p);  // "positive" / "negative"
bool parse_polarity(const std::string& name, Polarity* p);

enum class FrameRelation { HAD, IS_WAS, LOOKED_TASTED };
enum class FrameArity { SINGLE, COMBINED };

// Hand-written frame. `text` carries named entity slots "(food)", an
// optional verb slot "{verb}" resolved from verb_options, and one "[adj]"
// slot bound to `entity`.
struct BasicFrame {
  std::string text;
  FrameRelation relation = FrameRelation::HAD;
  FrameArity arity = FrameArity::SINGLE;
  EntityType entity = EntityType::FOOD;  // entity the [adj] slot describes
  std::optional<std::pair<EntityType, EntityType>> combined_types;
  std::vector<std::string> verb_options;

  std::string id() const;
};

// The fixed inventory: three frame shapes per entity type (looked|tasted
// only for food), plus combined frames for (service, staff) and
// (restaurant, cuisine).
std::vector<BasicFrame> basic_frames();

struct HyperbolicPair {
  EntityType entity_type = EntityType::FOOD;
  PatternInstance pattern;
  Polarity polarity = Polarity::POSITIVE;
  std::string realization;  // adjective material, lowercased surface
  int freq = 0;
  double prob = 0.0;
};

struct CreativeTemplate {
  EntityType entity_type = EntityType::FOOD;
  Polarity polarity = Polarity::POSITIVE;
  // Space-joined tokens with one placeholder and the pattern realization in
  // uppercase square brackets.
  std::string text;
  PatternInstance source_pattern;
  int freq = 0;
  double prob = 0.0;
  int word_count = 0;
};

// One polarity class worth of harvested material.
struct HarvestSentence {
  ParsedSentence parsed;
  DelexicalizedSentence delex;
};

std::vector<HyperbolicPair> extract_hyperbolic_pairs(
    const std::vector<HarvestSentence>& corpus, Polarity polarity,
    const PatternStatsMap& filtered);

std::vector<CreativeTemplate> extract_creative_templates(
    const std::vector<HarvestSentence>& corpus, Polarity polarity,
    const PatternStatsMap& filtered);

struct TemplateStore {
  std::vector<HyperbolicPair> pairs;
  std::vector<CreativeTemplate> creatives;

  std::vector<const HyperbolicPair*> pairs_for(EntityType type,
                                               Polarity polarity) const;
  std::vector<const CreativeTemplate*> creatives_for(EntityType type,
                                                     Polarity polarity) const;
  const CreativeTemplate* find_creative(const std::string& id) const;
  const HyperbolicPair* find_pair(const std::string& id) const;
};

std::string creative_template_id(const CreativeTemplate& t);
std::string hyperbolic_pair_id(const HyperbolicPair& p);

// Line-delimited store with fields {family, polarity, entity_type, text,
// pattern_kind, pattern_anchor, freq, prob, word_count}, sorted by
// (polarity, entity_type, -prob, text).
void write_template_store(const std::filesystem::path& path,
                          const TemplateStore& store);
TemplateStore read_template_store(const std::filesystem::path& path);

// Re-checks the harvested constraints (one placeholder of the stated type,
// one bracket group, 5-15 words) directly from the stored text. Returns one
// message per violation.
std::vector<std::string> validate_creative_store(const TemplateStore& store);

}  // namespace revgen

#endif  // REVGEN_TEMPLATES_H_
