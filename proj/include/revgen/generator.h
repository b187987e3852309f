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

#ifndef REVGEN_GENERATOR_H_
#define REVGEN_GENERATOR_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "revgen/templates.h"

namespace revgen {

struct MeaningRepresentation {
  std::map<EntityType, std::string> slots;  // all five present, non-empty
  Polarity polarity = Polarity::POSITIVE;
};

class MrParseError : public std::runtime_error {
 public:
  MrParseError(const std::string& message, size_t offset)
      : std::runtime_error(message), offset_(offset) {}
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

// Parses comma/newline-separated `key[value]` pairs with keys
// {restaurant, cuisine, food, service, staff, polarity}.
MeaningRepresentation parse_mr(const std::string& text);
std::string render_mr(const MeaningRepresentation& mr);

// Per polarity and entity type adjective lists for the basic frames.
class AdjectiveLists {
 public:
  static AdjectiveLists load(const std::filesystem::path& path);
  void add(Polarity polarity, EntityType type, const std::string& adjective);
  const std::vector<std::string>& lists(Polarity polarity, EntityType type) const;

 private:
  std::map<std::pair<int, int>, std::vector<std::string>> lists_;
};

enum class Variant { BASIC, HYPERBOLIC, CREATIVE };
const char* variant_name(Variant v);  // "basic" / "hyperbolic" / "creative"
bool parse_variant(const std::string& name, Variant* v);

struct SentenceProvenance {
  std::string source_id;       // frame id, pair id, or creative template id
  std::string pattern_kind;    // empty for basic sentences
  std::string pattern_anchor;  // empty for basic sentences
  std::string adjective;       // chosen adjective or pair realization
};

struct GeneratedReview {
  Variant variant = Variant::BASIC;
  std::string text;
  std::vector<SentenceProvenance> provenance;
  uint64_t seed = 0;
  MeaningRepresentation mr;
};

// Fixed entity order restaurant -> cuisine -> food -> service -> staff.
inline constexpr std::array<EntityType, 5> kGenerationOrder = {
    EntityType::RESTAURANT, EntityType::CUISINE, EntityType::FOOD,
    EntityType::SERVICE, EntityType::STAFF};

// `combine_probability` is the seeded chance that a combinable pair
// (restaurant+cuisine, service+staff) collapses into one sentence.
GeneratedReview generate_basic(const MeaningRepresentation& mr,
                               const std::vector<BasicFrame>& frames,
                               const AdjectiveLists& adjectives, uint64_t seed,
                               double combine_probability = 0.5);

GeneratedReview generate_hyperbolic(const MeaningRepresentation& mr,
                                    const std::vector<BasicFrame>& frames,
                                    const TemplateStore& store, uint64_t seed,
                                    double combine_probability = 0.5);

GeneratedReview generate_creative(const MeaningRepresentation& mr,
                                  const TemplateStore& store, uint64_t seed);

struct ReviewTriple {
  std::string id;
  MeaningRepresentation mr;
  uint64_t seed = 0;
  // Canonical order basic, hyperbolic, creative.
  std::array<GeneratedReview, 3> reviews;
  // Seeded presentation permutation of the three variants.
  std::array<Variant, 3> display_order = {Variant::BASIC, Variant::HYPERBOLIC,
                                          Variant::CREATIVE};
};

ReviewTriple generate_triple(const MeaningRepresentation& mr,
                             const std::vector<BasicFrame>& frames,
                             const AdjectiveLists& adjectives,
                             const TemplateStore& store, uint64_t seed,
                             const std::string& id = "");

std::string triple_to_json(const ReviewTriple& triple);
ReviewTriple triple_from_json(const std::string& line);
void write_triples(const std::filesystem::path& path,
                   const std::vector<ReviewTriple>& triples);
std::vector<ReviewTriple> read_triples(const std::filesystem::path& path);

std::string review_to_json(const GeneratedReview& review);

}  // namespace revgen

#endif  // REVGEN_GENERATOR_H_
