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
#include <cctype>

#include "json.hpp"
#include "revgen/util.h"

namespace revgen {

namespace {

bool is_key_char(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

bool is_pair_separator(char c) {
  return c == ',' || c == '\n' || c == '\r' || c == ' ' || c == '\t';
}

std::string rendered_slot(EntityType type, const MeaningRepresentation& mr) {
  std::string value = lower_copy(mr.slots.at(type));
  if (type == EntityType::CUISINE) {
    // "Japanese" -> "japanese cuisine"; values already naming the cuisine
    // noun are left alone.
    if (value.size() < 7 ||
        value.compare(value.size() - 7, 7, "cuisine") != 0) {
      value += " cuisine";
    }
  }
  return value;
}

void replace_all(std::string* text, const std::string& from,
                 const std::string& to) {
  size_t pos = 0;
  while ((pos = text->find(from, pos)) != std::string::npos) {
    text->replace(pos, from.size(), to);
    pos += to.size();
  }
}

std::string capitalize_first(std::string text) {
  for (char& c : text) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      break;
    }
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '"' && c != '\'')
      break;
  }
  return text;
}

std::string render_frame(const BasicFrame& frame,
                         const MeaningRepresentation& mr,
                         const std::string& adj, const std::string& verb) {
  std::string text = frame.text;
  replace_all(&text, "[adj]", adj);
  if (!verb.empty()) replace_all(&text, "{verb}", verb);
  replace_all(&text, "(entity)", rendered_slot(frame.entity, mr));
  if (frame.combined_types.has_value()) {
    replace_all(&text, "(entity2)",
                rendered_slot(frame.combined_types->second, mr));
  }
  return capitalize_first(text);
}

bool no_space_before(const std::string& tok) {
  if (tok.empty()) return true;
  if (tok == "n't") return true;
  if (tok[0] == '\'') return true;
  for (char c : tok) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '<') return false;
  }
  return true;  // punctuation-only token
}

// Strips bracket markup (lowercasing the previously uppercased words),
// substitutes the placeholder, and detokenizes.
std::string render_creative_text(const std::string& template_text,
                                 const MeaningRepresentation& mr) {
  std::string relexed;
  bool in_bracket = false;
  std::string out;
  for (const std::string& raw : split(template_text, ' ')) {
    if (raw.empty()) continue;
    std::string tok = raw;
    bool opens = tok.front() == '[';
    if (opens) tok.erase(tok.begin());
    bool closes = !tok.empty() && tok.back() == ']';
    if (closes) tok.pop_back();
    bool bracketed = in_bracket || opens;
    if (opens) in_bracket = true;
    if (closes) in_bracket = false;
    if (tok.empty()) continue;

    bool replaced = false;
    for (EntityType type : kAllEntityTypes) {
      if (tok == placeholder_for(type)) {
        tok = lower_copy(mr.slots.at(type));
        replaced = true;
        break;
      }
    }
    if (!replaced && bracketed) tok = lower_copy(tok);

    if (out.empty()) {
      out = tok;
    } else if (no_space_before(tok)) {
      out += tok;
    } else {
      out += " " + tok;
    }
  }
  relexed = capitalize_first(out);
  return relexed;
}

}  // namespace

MeaningRepresentation parse_mr(const std::string& text) {
  MeaningRepresentation mr;
  std::map<std::string, std::string> seen;
  size_t i = 0;
  size_t n = text.size();
  while (i < n) {
    while (i < n && is_pair_separator(text[i])) ++i;
    if (i >= n) break;
    size_t key_begin = i;
    while (i < n && is_key_char(text[i])) ++i;
    std::string key = lower_copy(text.substr(key_begin, i - key_begin));
    if (key.empty() || i >= n || text[i] != '[') {
      throw MrParseError("expected key[value] at offset " +
                             std::to_string(key_begin),
                         key_begin);
    }
    ++i;  // '['
    size_t value_begin = i;
    while (i < n && text[i] != ']') ++i;
    if (i >= n) {
      throw MrParseError("unclosed bracket at offset " + std::to_string(n), n);
    }
    std::string value = trim_copy(text.substr(value_begin, i - value_begin));
    ++i;  // ']'

    if (seen.count(key) > 0) {
      throw MrParseError("duplicate key \"" + key + "\" at offset " +
                             std::to_string(key_begin),
                         key_begin);
    }
    EntityType type;
    if (key == "polarity") {
      if (!parse_polarity(value, &mr.polarity)) {
        throw MrParseError("polarity must be positive or negative at offset " +
                               std::to_string(value_begin),
                           value_begin);
      }
    } else if (parse_entity_type(key, &type)) {
      if (value.empty()) {
        throw MrParseError("empty value for key \"" + key + "\" at offset " +
                               std::to_string(value_begin),
                           value_begin);
      }
      mr.slots[type] = value;
    } else {
      throw MrParseError("unknown key \"" + key + "\" at offset " +
                             std::to_string(key_begin),
                         key_begin);
    }
    seen[key] = value;
  }
  std::vector<std::string> missing;
  for (EntityType type : kAllEntityTypes) {
    if (mr.slots.count(type) == 0) missing.push_back(entity_type_key(type));
  }
  if (seen.count("polarity") == 0) missing.push_back("polarity");
  if (!missing.empty()) {
    throw MrParseError("missing keys: " + join(missing, ", "), 0);
  }
  return mr;
}

std::string render_mr(const MeaningRepresentation& mr) {
  std::vector<std::string> parts;
  for (EntityType type : kGenerationOrder) {
    parts.push_back(std::string(entity_type_key(type)) + "[" +
                    mr.slots.at(type) + "]");
  }
  parts.push_back(std::string("polarity[") + polarity_name(mr.polarity) + "]");
  return join(parts, ", ");
}

AdjectiveLists AdjectiveLists::load(const std::filesystem::path& path) {
  AdjectiveLists lists;
  for (const std::string& raw : read_lines(path)) {
    std::string line = trim_copy(raw);
    if (line.empty() || line[0] == '#') continue;
    auto cols = split(line, '\t');
    if (cols.size() != 3) {
      log_warn("adjective list: bad line \"" + line + "\"");
      continue;
    }
    Polarity polarity;
    EntityType type;
    if (!parse_polarity(cols[0], &polarity) ||
        !parse_entity_type(cols[1], &type)) {
      log_warn("adjective list: bad polarity/entity in \"" + line + "\"");
      continue;
    }
    lists.add(polarity, type, lower_copy(trim_copy(cols[2])));
  }
  return lists;
}

void AdjectiveLists::add(Polarity polarity, EntityType type,
                         const std::string& adjective) {
  lists_[{static_cast<int>(polarity), static_cast<int>(type)}].push_back(adjective);
}

const std::vector<std::string>& AdjectiveLists::lists(Polarity polarity,
                                                      EntityType type) const {
  static const std::vector<std::string> kEmpty;
  auto it = lists_.find({static_cast<int>(polarity), static_cast<int>(type)});
  return it == lists_.end() ? kEmpty : it->second;
}

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::BASIC: return "basic";
    case Variant::HYPERBOLIC: return "hyperbolic";
    case Variant::CREATIVE: return "creative";
  }
  return "basic";
}

bool parse_variant(const std::string& name, Variant* v) {
  std::string n = lower_copy(name);
  if (n == "basic") *v = Variant::BASIC;
  else if (n == "hyperbolic") *v = Variant::HYPERBOLIC;
  else if (n == "creative") *v = Variant::CREATIVE;
  else return false;
  return true;
}

namespace {

void check_mr(const MeaningRepresentation& mr) {
  for (EntityType type : kAllEntityTypes) {
    auto it = mr.slots.find(type);
    if (it == mr.slots.end() || trim_copy(it->second).empty()) {
      throw std::runtime_error(std::string("MR slot missing or empty: ") +
                               entity_type_key(type));
    }
  }
}

// Shared frame-walk for the basic and hyperbolic variants; `fill` supplies
// the [adj] material for the bound entity.
template <typename FillFn>
GeneratedReview generate_framed(const MeaningRepresentation& mr,
                                const std::vector<BasicFrame>& frames,
                                uint64_t seed, Variant variant,
                                double combine_probability, FillFn fill) {
  check_mr(mr);
  GeneratedReview review;
  review.variant = variant;
  review.seed = seed;
  review.mr = mr;

  Rng rng(seed);
  bool combine_rc = rng.uniform() < combine_probability;
  bool combine_ss = rng.uniform() < combine_probability;

  std::vector<std::string> sentences;
  for (EntityType e : kGenerationOrder) {
    if (combine_rc && e == EntityType::CUISINE) continue;
    if (combine_ss && e == EntityType::STAFF) continue;

    const BasicFrame* frame = nullptr;
    if (combine_rc && e == EntityType::RESTAURANT) {
      for (const BasicFrame& f : frames) {
        if (f.arity == FrameArity::COMBINED && f.entity == EntityType::CUISINE)
          frame = &f;
      }
    } else if (combine_ss && e == EntityType::SERVICE) {
      for (const BasicFrame& f : frames) {
        if (f.arity == FrameArity::COMBINED && f.entity == EntityType::SERVICE)
          frame = &f;
      }
    } else {
      std::vector<const BasicFrame*> options;
      for (const BasicFrame& f : frames) {
        if (f.arity == FrameArity::SINGLE && f.entity == e)
          options.push_back(&f);
      }
      if (options.empty())
        throw std::runtime_error(std::string("no frame for entity type ") +
                                 entity_type_key(e));
      frame = options[rng.bounded(options.size())];
    }
    std::string verb;
    if (!frame->verb_options.empty()) verb = frame->verb_options[rng.bounded(frame->verb_options.size())];

    SentenceProvenance prov;
    prov.source_id = frame->id();
    std::string adj = fill(frame->entity, &rng, &prov);
    sentences.push_back(render_frame(*frame, mr, adj, verb));
    review.provenance.push_back(std::move(prov));
  }
  review.text = join(sentences, " ");
  return review;
}

}  // namespace

GeneratedReview generate_basic(const MeaningRepresentation& mr,
                               const std::vector<BasicFrame>& frames,
                               const AdjectiveLists& adjectives, uint64_t seed,
                               double combine_probability) {
  return generate_framed(
      mr, frames, seed, Variant::BASIC, combine_probability,
      [&](EntityType type, Rng* rng, SentenceProvenance* prov) {
        const auto& options = adjectives.lists(mr.polarity, type);
        if (options.empty()) {
          throw std::runtime_error(
              std::string("empty adjective list for type ") +
              entity_type_key(type));
        }
        std::string adj = options[rng->bounded(options.size())];
        prov->adjective = adj;
        return adj;
      });
}

GeneratedReview generate_hyperbolic(const MeaningRepresentation& mr,
                                    const std::vector<BasicFrame>& frames,
                                    const TemplateStore& store, uint64_t seed,
                                    double combine_probability) {
  return generate_framed(
      mr, frames, seed, Variant::HYPERBOLIC, combine_probability,
      [&](EntityType type, Rng* rng, SentenceProvenance* prov) {
        auto options = store.pairs_for(type, mr.polarity);
        if (options.empty()) {
          throw std::runtime_error(
              std::string("no hyperbolic pairs for type ") +
              entity_type_key(type));
        }
        const HyperbolicPair* pair = options[rng->bounded(options.size())];
        prov->source_id = hyperbolic_pair_id(*pair);
        prov->pattern_kind = pattern_kind_name(pair->pattern.kind);
        prov->pattern_anchor = pair->pattern.anchor_text();
        prov->adjective = pair->realization;
        return pair->realization;
      });
}

GeneratedReview generate_creative(const MeaningRepresentation& mr,
                                  const TemplateStore& store, uint64_t seed) {
  check_mr(mr);
  GeneratedReview review;
  review.variant = Variant::CREATIVE;
  review.seed = seed;
  review.mr = mr;

  Rng rng(seed);
  std::vector<std::string> sentences;
  for (EntityType e : kGenerationOrder) {
    auto options = store.creatives_for(e, mr.polarity);
    if (options.empty()) {
      throw std::runtime_error(std::string("no creative templates for type ") +
                               entity_type_key(e));
    }
    const CreativeTemplate* t = options[rng.bounded(options.size())];
    sentences.push_back(render_creative_text(t->text, mr));
    SentenceProvenance prov;
    prov.source_id = creative_template_id(*t);
    prov.pattern_kind = pattern_kind_name(t->source_pattern.kind);
    prov.pattern_anchor = t->source_pattern.anchor_text();
    review.provenance.push_back(std::move(prov));
  }
  review.text = join(sentences, " ");
  return review;
}

ReviewTriple generate_triple(const MeaningRepresentation& mr,
                             const std::vector<BasicFrame>& frames,
                             const AdjectiveLists& adjectives,
                             const TemplateStore& store, uint64_t seed,
                             const std::string& id) {
  ReviewTriple triple;
  triple.id = id.empty() ? ("t" + fnv1a64_hex(render_mr(mr) + std::to_string(seed)))
                         : id;
  triple.mr = mr;
  triple.seed = seed;

  Rng rng(seed);
  uint64_t seed_basic = rng.next();
  uint64_t seed_hyperbolic = rng.next();
  uint64_t seed_creative = rng.next();
  uint64_t seed_shuffle = rng.next();

  triple.reviews[0] = generate_basic(mr, frames, adjectives, seed_basic);
  triple.reviews[1] = generate_hyperbolic(mr, frames, store, seed_hyperbolic);
  triple.reviews[2] = generate_creative(mr, store, seed_creative);

  std::vector<Variant> order = {Variant::BASIC, Variant::HYPERBOLIC,
                                Variant::CREATIVE};
  Rng shuffle_rng(seed_shuffle);
  shuffle_rng.shuffle(order);
  std::copy(order.begin(), order.end(), triple.display_order.begin());
  return triple;
}

namespace {

nlohmann::json provenance_to_json(const std::vector<SentenceProvenance>& prov) {
  nlohmann::json arr = nlohmann::json::array();
  for (const SentenceProvenance& p : prov) {
    nlohmann::json o;
    o["source"] = p.source_id;
    if (!p.pattern_kind.empty()) o["pattern_kind"] = p.pattern_kind;
    if (!p.pattern_anchor.empty()) o["pattern_anchor"] = p.pattern_anchor;
    if (!p.adjective.empty()) o["adjective"] = p.adjective;
    arr.push_back(o);
  }
  return arr;
}

std::vector<SentenceProvenance> provenance_from_json(const nlohmann::json& arr) {
  std::vector<SentenceProvenance> out;
  for (const auto& o : arr) {
    SentenceProvenance p;
    p.source_id = o.value("source", "");
    p.pattern_kind = o.value("pattern_kind", "");
    p.pattern_anchor = o.value("pattern_anchor", "");
    p.adjective = o.value("adjective", "");
    out.push_back(std::move(p));
  }
  return out;
}

nlohmann::json review_json(const GeneratedReview& r) {
  nlohmann::json o;
  o["variant"] = variant_name(r.variant);
  o["text"] = r.text;
  o["seed"] = r.seed;
  o["provenance"] = provenance_to_json(r.provenance);
  return o;
}

nlohmann::json mr_json(const MeaningRepresentation& mr) {
  nlohmann::json o;
  for (EntityType type : kAllEntityTypes) {
    o[entity_type_key(type)] = mr.slots.at(type);
  }
  o["polarity"] = polarity_name(mr.polarity);
  return o;
}

MeaningRepresentation mr_from_json(const nlohmann::json& o) {
  MeaningRepresentation mr;
  for (EntityType type : kAllEntityTypes) {
    mr.slots[type] = o.at(entity_type_key(type)).get<std::string>();
  }
  parse_polarity(o.at("polarity").get<std::string>(), &mr.polarity);
  return mr;
}

}  // namespace

std::string review_to_json(const GeneratedReview& review) {
  nlohmann::json o = review_json(review);
  o["mr"] = mr_json(review.mr);
  return o.dump();
}

std::string triple_to_json(const ReviewTriple& triple) {
  nlohmann::json o;
  o["id"] = triple.id;
  o["seed"] = triple.seed;
  o["mr"] = mr_json(triple.mr);
  nlohmann::json reviews = nlohmann::json::array();
  for (const GeneratedReview& r : triple.reviews) reviews.push_back(review_json(r));
  o["reviews"] = reviews;
  nlohmann::json order = nlohmann::json::array();
  for (Variant v : triple.display_order) order.push_back(variant_name(v));
  o["display_order"] = order;
  return o.dump();
}

ReviewTriple triple_from_json(const std::string& line) {
  nlohmann::json o = nlohmann::json::parse(line);
  ReviewTriple triple;
  triple.id = o.at("id").get<std::string>();
  triple.seed = o.at("seed").get<uint64_t>();
  triple.mr = mr_from_json(o.at("mr"));
  const auto& reviews = o.at("reviews");
  for (size_t i = 0; i < 3; ++i) {
    GeneratedReview r;
    parse_variant(reviews.at(i).at("variant").get<std::string>(), &r.variant);
    r.text = reviews.at(i).at("text").get<std::string>();
    r.seed = reviews.at(i).at("seed").get<uint64_t>();
    r.provenance = provenance_from_json(reviews.at(i).at("provenance"));
    r.mr = triple.mr;
    triple.reviews[i] = std::move(r);
  }
  const auto& order = o.at("display_order");
  for (size_t i = 0; i < 3; ++i) {
    parse_variant(order.at(i).get<std::string>(), &triple.display_order[i]);
  }
  return triple;
}

void write_triples(const std::filesystem::path& path,
                   const std::vector<ReviewTriple>& triples) {
  std::string out;
  for (const ReviewTriple& t : triples) {
    out += triple_to_json(t);
    out += "\n";
  }
  write_file(path, out);
}

std::vector<ReviewTriple> read_triples(const std::filesystem::path& path) {
  std::vector<ReviewTriple> triples;
  for (const std::string& line : read_lines(path)) {
    if (trim_copy(line).empty()) continue;
    triples.push_back(triple_from_json(line));
  }
  return triples;
}

}  // namespace revgen
