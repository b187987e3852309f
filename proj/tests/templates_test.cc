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
#include <set>

#include "doctest.h"
#include "revgen/util.h"
#include "test_util.h"

using namespace revgen;
using revgen_test::fresh_temp_dir;
using revgen_test::make_lexicon;
using revgen_test::make_parser;

namespace {

std::vector<HarvestSentence> harvest_corpus(const std::vector<std::string>& texts) {
  static const ShallowParser parser = make_parser();
  static const EntityLexicon lexicon = make_lexicon();
  std::vector<HarvestSentence> out;
  for (const std::string& text : texts) {
    HarvestSentence hs;
    hs.parsed = parser.parse(text);
    hs.delex = delexicalize(text, hs.parsed, lexicon);
    out.push_back(std::move(hs));
  }
  return out;
}

// A filtered-pattern map holding every adjective pattern that occurs in the
// given corpus, with synthetic counts clearing the default thresholds.
PatternStatsMap all_adjective_patterns(const std::vector<HarvestSentence>& corpus) {
  PatternStatsMap filtered;
  for (const HarvestSentence& hs : corpus) {
    for (const PatternInstance& p : extract_patterns(hs.parsed)) {
      if (!is_adjective_pattern(p)) continue;
      PatternStats st;
      st.freq_target = 5;
      st.freq_other = 0;
      st.prob = 1.0;
      filtered[p] = st;
    }
  }
  return filtered;
}

bool has_pair(const std::vector<HyperbolicPair>& pairs, EntityType type,
              const std::string& realization) {
  for (const HyperbolicPair& p : pairs) {
    if (p.entity_type == type && p.realization == realization) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("basic_frames inventory") {
  auto frames = basic_frames();

  SUBCASE("the verbatim frame shapes exist") {
    bool had = false, is_was = false, looked_tasted = false;
    for (const BasicFrame& f : frames) {
      if (f.text == "They had [adj] (entity)." && f.arity == FrameArity::SINGLE) had = true;
      if (f.text == "The (entity) {verb} [adj]." && f.relation == FrameRelation::IS_WAS)
        is_was = true;
      if (f.relation == FrameRelation::LOOKED_TASTED) looked_tasted = true;
    }
    CHECK(had);
    CHECK(is_was);
    CHECK(looked_tasted);
  }

  SUBCASE("looked|tasted frames exist only for food") {
    for (const BasicFrame& f : frames) {
      if (f.relation == FrameRelation::LOOKED_TASTED) {
        CHECK(f.entity == EntityType::FOOD);
        CHECK(f.verb_options == std::vector<std::string>{"looked", "tasted"});
      }
    }
  }

  SUBCASE("every entity type has the three basic shapes") {
    for (EntityType e : kAllEntityTypes) {
      int count = 0;
      for (const BasicFrame& f : frames) {
        if (f.arity == FrameArity::SINGLE && f.entity == e) ++count;
      }
      CHECK(count == (e == EntityType::FOOD ? 3 : 2));
    }
  }

  SUBCASE("combined frames render two entities") {
    int combined = 0;
    for (const BasicFrame& f : frames) {
      if (f.arity != FrameArity::COMBINED) continue;
      ++combined;
      REQUIRE(f.combined_types.has_value());
      int slots = 0;
      for (const char* slot : {"(entity)", "(entity2)"}) {
        if (f.text.find(slot) != std::string::npos) ++slots;
      }
      CHECK(slots == 2);
    }
    CHECK(combined == 2);
  }
}

TEST_CASE("extract_hyperbolic_pairs examples") {
  SUBCASE("predicative negative food pattern") {
    auto corpus = harvest_corpus({"the salmon was almost raw ."});
    auto pairs = extract_hyperbolic_pairs(corpus, Polarity::NEGATIVE,
                                          all_adjective_patterns(corpus));
    CHECK(has_pair(pairs, EntityType::FOOD, "almost raw"));
    for (const HyperbolicPair& p : pairs) {
      CHECK(p.polarity == Polarity::NEGATIVE);
      CHECK(is_adjective_pattern(p.pattern));
    }
  }

  SUBCASE("plural staff mention with positive pattern") {
    auto corpus = harvest_corpus({"the waiters were super helpful ."});
    auto pairs = extract_hyperbolic_pairs(corpus, Polarity::POSITIVE,
                                          all_adjective_patterns(corpus));
    CHECK(has_pair(pairs, EntityType::STAFF, "super helpful"));
  }

  SUBCASE("two different entity mentions yield no pair") {
    auto corpus = harvest_corpus({"the waiters brought amazing sushi ."});
    CHECK(extract_hyperbolic_pairs(corpus, Polarity::POSITIVE,
                                   all_adjective_patterns(corpus))
              .empty());
  }

  SUBCASE("attributive pattern immediately before the mention") {
    auto corpus = harvest_corpus({"we got perfectly crispy fries today ."});
    auto pairs = extract_hyperbolic_pairs(corpus, Polarity::POSITIVE,
                                          all_adjective_patterns(corpus));
    CHECK(has_pair(pairs, EntityType::FOOD, "perfectly crispy"));
  }

  SUBCASE("duplicates collapse to one pair") {
    auto corpus = harvest_corpus(
        {"the salmon was almost raw .", "the steak was almost raw ."});
    auto pairs = extract_hyperbolic_pairs(corpus, Polarity::NEGATIVE,
                                          all_adjective_patterns(corpus));
    int count = 0;
    for (const HyperbolicPair& p : pairs) {
      if (p.entity_type == EntityType::FOOD && p.realization == "almost raw" &&
          p.pattern.kind == PatternKind::ADV_ADJ)
        ++count;
    }
    CHECK(count == 1);
  }

  SUBCASE("unfiltered patterns never pair") {
    auto corpus = harvest_corpus({"the salmon was almost raw ."});
    CHECK(extract_hyperbolic_pairs(corpus, Polarity::NEGATIVE, {}).empty());
  }
}

TEST_CASE("extract_creative_templates constraints") {
  SUBCASE("the negative food row is harvested verbatim") {
    auto corpus = harvest_corpus({"Salmon smelled very bad and tasted worse ."});
    auto templates = extract_creative_templates(corpus, Polarity::NEGATIVE,
                                                all_adjective_patterns(corpus));
    REQUIRE(templates.size() == 1);
    CHECK(templates[0].text ==
          "<FOOD_ENTITY> smelled [VERY BAD] and tasted worse .");
    CHECK(templates[0].entity_type == EntityType::FOOD);
    CHECK(templates[0].word_count == 7);
    CHECK(is_adjective_pattern(templates[0].source_pattern));
  }

  SUBCASE("four-word sentences are rejected") {
    auto corpus = harvest_corpus({"Salmon was very bad ."});
    CHECK(extract_creative_templates(corpus, Polarity::NEGATIVE,
                                     all_adjective_patterns(corpus))
              .empty());
  }

  SUBCASE("sixteen-word sentences are rejected") {
    auto corpus = harvest_corpus(
        {"The salmon was very bad for me and for her and for him and even more ."});
    CHECK(extract_creative_templates(corpus, Polarity::NEGATIVE,
                                     all_adjective_patterns(corpus))
              .empty());
  }

  SUBCASE("two distinct filtered adjective patterns disqualify the sentence") {
    auto corpus = harvest_corpus({"The salmon was almost raw and very bad ."});
    CHECK(extract_creative_templates(corpus, Polarity::NEGATIVE,
                                     all_adjective_patterns(corpus))
              .empty());
  }

  SUBCASE("nested n-gram instances count as one occurrence") {
    auto corpus = harvest_corpus({"The sushi is always so fresh here friends ."});
    auto templates = extract_creative_templates(corpus, Polarity::POSITIVE,
                                                all_adjective_patterns(corpus));
    REQUIRE(templates.size() == 1);
    CHECK(templates[0].text ==
          "The <FOOD_ENTITY> is [ALWAYS SO FRESH] here friends .");
  }

  SUBCASE("two mentions of different types are rejected") {
    auto corpus = harvest_corpus({"The waiters served the salmon almost raw ."});
    CHECK(extract_creative_templates(corpus, Polarity::NEGATIVE,
                                     all_adjective_patterns(corpus))
              .empty());
  }

  SUBCASE("a bracket may span the placeholder itself") {
    auto corpus = harvest_corpus({"We found some amazing falafel around the corner ."});
    auto templates = extract_creative_templates(corpus, Polarity::POSITIVE,
                                                all_adjective_patterns(corpus));
    REQUIRE(templates.size() == 1);
    CHECK(templates[0].text ==
          "We found some [AMAZING <FOOD_ENTITY>] around the corner .");
    CHECK(templates[0].word_count == 8);
    CHECK(validate_creative_store({{}, templates}).empty());
  }

  SUBCASE("extraction is deterministic and order-preserving") {
    auto corpus = harvest_corpus({"The salmon was almost raw .",
                                  "The steak was barely warm ."});
    auto filtered = all_adjective_patterns(corpus);
    auto a = extract_creative_templates(corpus, Polarity::NEGATIVE, filtered);
    auto b = extract_creative_templates(corpus, Polarity::NEGATIVE, filtered);
    REQUIRE(a.size() == b.size());
    REQUIRE(a.size() == 2);
    CHECK(a[0].text.find("ALMOST RAW") != std::string::npos);
    CHECK(a[1].text.find("BARELY WARM") != std::string::npos);
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].text == b[i].text);
  }
}

TEST_CASE("template store io and validation") {
  auto corpus = harvest_corpus({
      "The salmon was almost raw .",
      "The waiters were super helpful .",
      "Salmon smelled very bad and tasted worse .",
  });
  auto filtered = all_adjective_patterns(corpus);
  TemplateStore store;
  store.pairs = extract_hyperbolic_pairs(corpus, Polarity::NEGATIVE, filtered);
  store.creatives = extract_creative_templates(corpus, Polarity::NEGATIVE, filtered);
  REQUIRE(!store.pairs.empty());
  REQUIRE(!store.creatives.empty());

  CHECK(validate_creative_store(store).empty());

  auto dir = fresh_temp_dir("template_store");
  write_template_store(dir / "templates.tsv", store);
  TemplateStore reread = read_template_store(dir / "templates.tsv");
  CHECK(reread.pairs.size() == store.pairs.size());
  CHECK(reread.creatives.size() == store.creatives.size());
  CHECK(validate_creative_store(reread).empty());

  SUBCASE("validator flags corrupted rows") {
    TemplateStore broken = reread;
    broken.creatives[0].text = "No placeholder [HERE] at all .";
    CHECK(!validate_creative_store(broken).empty());

    TemplateStore wrong_count = reread;
    wrong_count.creatives[0].word_count = 3;
    CHECK(!validate_creative_store(wrong_count).empty());
  }

  SUBCASE("malformed store lines are rejected") {
    auto bad = fresh_temp_dir("template_store_bad");
    revgen_test::write_text(bad / "short.tsv",
                            "family\tpolarity\tentity_type\ttext\n"
                            "creative\tpositive\tfood\toops\n");
    CHECK_THROWS(read_template_store(bad / "short.tsv"));
    revgen_test::write_text(
        bad / "family.tsv",
        "family\tpolarity\tentity_type\ttext\tpattern_kind\tpattern_anchor\t"
        "freq\tprob\tword_count\n"
        "exotic\tpositive\tfood\tx\tADV_ADJ\tso good\t5\t1.0\t5\n");
    CHECK_THROWS(read_template_store(bad / "family.tsv"));
  }

  SUBCASE("store lookups resolve ids") {
    for (const CreativeTemplate& t : reread.creatives) {
      CHECK(reread.find_creative(creative_template_id(t)) != nullptr);
    }
    for (const HyperbolicPair& p : reread.pairs) {
      CHECK(reread.find_pair(hyperbolic_pair_id(p)) != nullptr);
    }
    CHECK(reread.find_creative("creative:positive:food:badbadbad") == nullptr);
  }
}

TEST_CASE("polarity partition: no template text in both stores") {
  auto pos_corpus = harvest_corpus({"The sushi was so delicious ."});
  auto neg_corpus = harvest_corpus({"The salmon was almost raw ."});
  TemplateStore store;
  auto pos = extract_creative_templates(pos_corpus, Polarity::POSITIVE,
                                        all_adjective_patterns(pos_corpus));
  auto neg = extract_creative_templates(neg_corpus, Polarity::NEGATIVE,
                                        all_adjective_patterns(neg_corpus));
  std::set<std::string> pos_texts, neg_texts;
  for (const CreativeTemplate& t : pos) pos_texts.insert(lower_copy(t.text));
  for (const CreativeTemplate& t : neg) neg_texts.insert(lower_copy(t.text));
  for (const std::string& t : pos_texts) CHECK(neg_texts.count(t) == 0);
}
