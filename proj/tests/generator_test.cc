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

#include "revgen/generator.h"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "revgen/util.h"
#include "test_util.h"

using namespace revgen;
using revgen_test::data_dir;
using revgen_test::fresh_temp_dir;
using revgen_test::make_lexicon;
using revgen_test::make_parser;

namespace {

const char* kMrText =
    "restaurant[bar], cuisine[Japanese], food[udon], "
    "service[customer service], staff[hosts], polarity[positive]";

MeaningRepresentation sample_mr(Polarity polarity = Polarity::POSITIVE) {
  MeaningRepresentation mr = parse_mr(kMrText);
  mr.polarity = polarity;
  return mr;
}

AdjectiveLists load_adjectives() {
  return AdjectiveLists::load(data_dir() / "adjectives.txt");
}

HyperbolicPair make_pair(EntityType type, Polarity polarity,
                         const std::string& realization) {
  HyperbolicPair p;
  p.entity_type = type;
  p.polarity = polarity;
  p.realization = realization;
  p.pattern.kind = PatternKind::ADV_ADJ;
  p.pattern.anchor = split(realization, ' ');
  p.pattern.slot = SlotRole::NONE;
  p.freq = 5;
  p.prob = 1.0;
  return p;
}

CreativeTemplate make_creative(EntityType type, Polarity polarity,
                               const std::string& text, int word_count) {
  CreativeTemplate t;
  t.entity_type = type;
  t.polarity = polarity;
  t.text = text;
  t.source_pattern.kind = PatternKind::ADV_ADJ;
  t.source_pattern.anchor = {"very", "good"};
  t.freq = 5;
  t.prob = 1.0;
  t.word_count = word_count;
  return t;
}

TemplateStore full_store(Polarity polarity) {
  TemplateStore store;
  store.pairs.push_back(make_pair(EntityType::RESTAURANT, polarity, "so cozy"));
  store.pairs.push_back(make_pair(EntityType::CUISINE, polarity, "so authentic"));
  store.pairs.push_back(make_pair(EntityType::FOOD, polarity, "so delicious"));
  store.pairs.push_back(make_pair(EntityType::SERVICE, polarity, "super quick"));
  store.pairs.push_back(make_pair(EntityType::STAFF, polarity, "super friendly"));
  store.creatives.push_back(make_creative(
      EntityType::RESTAURANT, polarity,
      "This <RESTAURANT_ENTITY> is [REALLY SPECIAL] to us .", 7));
  store.creatives.push_back(make_creative(
      EntityType::CUISINE, polarity,
      "The <CUISINE_ENTITY> cuisine here is [SO AUTHENTIC] .", 7));
  store.creatives.push_back(make_creative(
      EntityType::FOOD, polarity,
      "The <FOOD_ENTITY> is not cheap , but [WELL WORTH] it .", 9));
  store.creatives.push_back(make_creative(
      EntityType::SERVICE, polarity,
      "The <SERVICE_ENTITY> is [ALWAYS FRIENDLY] and fast .", 7));
  store.creatives.push_back(make_creative(
      EntityType::STAFF, polarity,
      "[ITS YOUR] typical <STAFF_ENTITY> crew , nothing to rave about .", 10));
  return store;
}

}  // namespace

TEST_CASE("parse_mr accepts the full six-key dialect") {
  MeaningRepresentation mr = parse_mr(kMrText);
  CHECK(mr.slots.at(EntityType::RESTAURANT) == "bar");
  CHECK(mr.slots.at(EntityType::CUISINE) == "Japanese");
  CHECK(mr.slots.at(EntityType::FOOD) == "udon");
  CHECK(mr.slots.at(EntityType::SERVICE) == "customer service");
  CHECK(mr.slots.at(EntityType::STAFF) == "hosts");
  CHECK(mr.polarity == Polarity::POSITIVE);

  SUBCASE("newline separators work too") {
    MeaningRepresentation nl = parse_mr(
        "restaurant[bar]\ncuisine[Thai]\nfood[pad thai]\nservice[service]\n"
        "staff[staff]\npolarity[negative]");
    CHECK(nl.polarity == Polarity::NEGATIVE);
  }
}

TEST_CASE("parse_mr error cases") {
  SUBCASE("empty input lists all six missing keys") {
    try {
      parse_mr("");
      FAIL("expected error");
    } catch (const MrParseError& e) {
      std::string msg = e.what();
      for (const char* key : {"restaurant", "cuisine", "food", "service",
                              "staff", "polarity"}) {
        CHECK(msg.find(key) != std::string::npos);
      }
    }
  }

  SUBCASE("unclosed bracket reports the offset") {
    try {
      parse_mr("food[udon");
      FAIL("expected error");
    } catch (const MrParseError& e) {
      CHECK(e.offset() == 9);
      CHECK(std::string(e.what()).find("unclosed") != std::string::npos);
    }
  }

  SUBCASE("duplicate and unknown keys") {
    CHECK_THROWS_AS(parse_mr("food[udon], food[sushi]"), MrParseError);
    CHECK_THROWS_AS(parse_mr("dessert[flan]"), MrParseError);
    CHECK_THROWS_AS(parse_mr("polarity[sideways]"), MrParseError);
  }
}

TEST_CASE("generate_basic") {
  auto frames = basic_frames();
  auto adjectives = load_adjectives();
  MeaningRepresentation mr = sample_mr();

  SUBCASE("deterministic under a fixed seed") {
    auto a = generate_basic(mr, frames, adjectives, 123);
    auto b = generate_basic(mr, frames, adjectives, 123);
    CHECK(a.text == b.text);
    auto c = generate_basic(mr, frames, adjectives, 124);
    (void)c;  // different seed must still succeed
  }

  SUBCASE("some seed reproduces the looked|tasted food sentence") {
    bool found = false;
    for (uint64_t seed = 0; seed < 4000 && !found; ++seed) {
      auto review = generate_basic(mr, frames, adjectives, seed);
      if (review.text.find("The udon looked excellent.") != std::string::npos)
        found = true;
    }
    CHECK(found);
  }

  SUBCASE("negative polarity draws only negative adjectives") {
    MeaningRepresentation neg = sample_mr(Polarity::NEGATIVE);
    for (uint64_t seed = 0; seed < 50; ++seed) {
      auto review = generate_basic(neg, frames, adjectives, seed);
      for (const SentenceProvenance& prov : review.provenance) {
        bool in_negative = false;
        for (EntityType type : kAllEntityTypes) {
          const auto& list = adjectives.lists(Polarity::NEGATIVE, type);
          if (std::find(list.begin(), list.end(), prov.adjective) != list.end())
            in_negative = true;
        }
        CHECK(in_negative);
      }
    }
  }

  SUBCASE("empty adjective list is an error") {
    AdjectiveLists empty;
    CHECK_THROWS(generate_basic(mr, frames, empty, 1));
  }
}

TEST_CASE("generate_hyperbolic") {
  auto frames = basic_frames();
  MeaningRepresentation mr = sample_mr();
  TemplateStore store = full_store(Polarity::POSITIVE);

  SUBCASE("fills frames with pair realizations") {
    bool found = false;
    for (uint64_t seed = 0; seed < 3000 && !found; ++seed) {
      auto review = generate_hyperbolic(mr, frames, store, seed);
      if (review.text.find("The udon looked so delicious.") != std::string::npos)
        found = true;
    }
    CHECK(found);
  }

  SUBCASE("a singleton pair is always chosen") {
    // when the staff slot draws a pair at all (it may be folded into a
    // combined service+staff frame), it must be the only one in the store
    size_t staff_draws = 0;
    for (uint64_t seed = 0; seed < 30; ++seed) {
      auto review = generate_hyperbolic(mr, frames, store, seed);
      for (const SentenceProvenance& prov : review.provenance) {
        if (prov.source_id.find(":staff:") != std::string::npos) {
          ++staff_draws;
          CHECK(prov.adjective == "super friendly");
        }
      }
    }
    CHECK(staff_draws > 0);
  }

  SUBCASE("every chosen realization originates from a filtered pattern") {
    for (uint64_t seed = 0; seed < 60; ++seed) {
      auto review = generate_hyperbolic(mr, frames, store, seed);
      for (const SentenceProvenance& prov : review.provenance) {
        const HyperbolicPair* pair = store.find_pair(prov.source_id);
        REQUIRE(pair != nullptr);
        CHECK(pair->prob >= 0.75);
        CHECK(pair->freq >= 3);
      }
    }
  }

  SUBCASE("a type without pairs is an error naming the type") {
    TemplateStore missing = store;
    missing.pairs.erase(
        std::remove_if(missing.pairs.begin(), missing.pairs.end(),
                       [](const HyperbolicPair& p) {
                         return p.entity_type == EntityType::CUISINE;
                       }),
        missing.pairs.end());
    try {
      generate_hyperbolic(mr, frames, missing, 1);
      FAIL("expected error");
    } catch (const std::exception& e) {
      CHECK(std::string(e.what()).find("cuisine") != std::string::npos);
    }
  }
}

TEST_CASE("generate_creative") {
  MeaningRepresentation mr = sample_mr();
  TemplateStore store = full_store(Polarity::POSITIVE);

  SUBCASE("detokenizes, lowercases brackets, substitutes the slot") {
    auto review = generate_creative(mr, store, 5);
    CHECK(review.text.find("The udon is not cheap, but well worth it.") !=
          std::string::npos);
    CHECK(review.text.find("The customer service is always friendly and fast.") !=
          std::string::npos);
    // sentence-initial bracket word gets capitalized
    CHECK(review.text.find("Its your typical hosts crew, nothing to rave about.") !=
          std::string::npos);
  }

  SUBCASE("deterministic under a fixed seed") {
    CHECK(generate_creative(mr, store, 9).text ==
          generate_creative(mr, store, 9).text);
  }

  SUBCASE("a bracket spanning the placeholder lowercases only the words") {
    TemplateStore spanning = store;
    for (CreativeTemplate& t : spanning.creatives) {
      if (t.entity_type == EntityType::FOOD) {
        t.text = "We found some [AMAZING <FOOD_ENTITY>] around the corner .";
        t.word_count = 8;
      }
    }
    auto review = generate_creative(mr, spanning, 3);
    CHECK(review.text.find("We found some amazing udon around the corner.") !=
          std::string::npos);
  }

  SUBCASE("no markup leaks into the output") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
      auto review = generate_creative(mr, store, seed);
      CHECK(review.text.find('[') == std::string::npos);
      CHECK(review.text.find(']') == std::string::npos);
      CHECK(review.text.find("_ENTITY>") == std::string::npos);
    }
  }

  SUBCASE("provenance ids resolve in the store") {
    auto review = generate_creative(mr, store, 11);
    REQUIRE(review.provenance.size() == 5);
    for (const SentenceProvenance& prov : review.provenance) {
      CHECK(store.find_creative(prov.source_id) != nullptr);
    }
  }

  SUBCASE("missing templates for a type is an error naming the type") {
    TemplateStore missing = store;
    missing.creatives.erase(
        std::remove_if(missing.creatives.begin(), missing.creatives.end(),
                       [](const CreativeTemplate& t) {
                         return t.entity_type == EntityType::STAFF;
                       }),
        missing.creatives.end());
    try {
      generate_creative(mr, missing, 1);
      FAIL("expected error");
    } catch (const std::exception& e) {
      CHECK(std::string(e.what()).find("staff") != std::string::npos);
    }
  }
}

TEST_CASE("generate_triple") {
  auto frames = basic_frames();
  auto adjectives = load_adjectives();
  MeaningRepresentation mr = sample_mr();
  TemplateStore store = full_store(Polarity::POSITIVE);

  SUBCASE("all three variants share the MR") {
    ReviewTriple triple = generate_triple(mr, frames, adjectives, store, 77, "t1");
    for (const GeneratedReview& r : triple.reviews) {
      CHECK(r.mr.slots == mr.slots);
      CHECK(r.mr.polarity == mr.polarity);
    }
    CHECK(triple.reviews[0].variant == Variant::BASIC);
    CHECK(triple.reviews[1].variant == Variant::HYPERBOLIC);
    CHECK(triple.reviews[2].variant == Variant::CREATIVE);
  }

  SUBCASE("display order is a seeded permutation of the three variants") {
    std::set<std::array<Variant, 3>> orders;
    for (uint64_t seed = 0; seed < 40; ++seed) {
      ReviewTriple triple = generate_triple(mr, frames, adjectives, store, seed);
      std::set<Variant> distinct(triple.display_order.begin(),
                                 triple.display_order.end());
      CHECK(distinct.size() == 3);
      orders.insert(triple.display_order);
      ReviewTriple again = generate_triple(mr, frames, adjectives, store, seed);
      CHECK(again.display_order == triple.display_order);
    }
    CHECK(orders.size() > 1);  // the shuffle actually varies
  }

  SUBCASE("json round-trip") {
    ReviewTriple triple = generate_triple(mr, frames, adjectives, store, 31, "t9");
    std::string json = triple_to_json(triple);
    ReviewTriple back = triple_from_json(json);
    CHECK(back.id == triple.id);
    CHECK(back.seed == triple.seed);
    CHECK(back.display_order == triple.display_order);
    for (size_t i = 0; i < 3; ++i) {
      CHECK(back.reviews[i].text == triple.reviews[i].text);
      CHECK(back.reviews[i].provenance.size() ==
            triple.reviews[i].provenance.size());
    }
    CHECK(triple_to_json(back) == json);
  }
}
