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

#include "revgen/pipeline.h"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "revgen/analysis.h"
#include "revgen/corpus.h"
#include "revgen/entity_lexicon.h"
#include "revgen/generator.h"
#include "revgen/pattern_learner.h"
#include "revgen/shallow_parser.h"
#include "revgen/templates.h"
#include "revgen/util.h"

namespace revgen {

namespace {

constexpr const char* kToolVersion = "revgen 0.1.0";

// One stage at a time per output directory.
class StageLock {
 public:
  explicit StageLock(const std::filesystem::path& dir)
      : path_(dir / ".revgen.lock") {
    std::FILE* f = std::fopen(path_.string().c_str(), "wx");
    if (!f) {
      throw std::runtime_error("another stage appears to be running in " +
                               dir.string() + " (remove " + path_.string() +
                               " if stale)");
    }
    std::fclose(f);
  }
  ~StageLock() {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }
  StageLock(const StageLock&) = delete;
  StageLock& operator=(const StageLock&) = delete;

 private:
  std::filesystem::path path_;
};

class Manifest {
 public:
  void add_config(const std::string& key, const std::string& value) {
    lines_.push_back("config." + key + "=" + value);
  }
  void add_file(const char* role, const std::string& name,
                const std::filesystem::path& path) {
    lines_.push_back(std::string(role) + "." + name + "=" +
                     fnv1a64_hex(read_file(path)));
  }
  void write(const std::filesystem::path& out_dir, const std::string& stage) {
    lines_.push_back(std::string("tool=") + kToolVersion);
    std::sort(lines_.begin(), lines_.end());
    std::string content;
    for (const std::string& line : lines_) content += line + "\n";
    write_file(out_dir / (stage + ".manifest"), content);
  }

 private:
  std::vector<std::string> lines_;
};

void require_artifact(const std::filesystem::path& path,
                      const std::string& producing_stage) {
  if (!std::filesystem::exists(path)) {
    throw std::runtime_error("missing artifact " + path.string() +
                             "; run the " + producing_stage + " stage first");
  }
}

ShallowParser make_parser(const PipelineConfig& config) {
  return ShallowParser(
      TagLexicon::load(config.tagger_lexicon(), config.tagger_participles()));
}

EntityLexicon make_lexicon(const PipelineConfig& config,
                           std::map<EntityType, std::filesystem::path>* paths_out) {
  std::map<EntityType, std::filesystem::path> paths;
  for (EntityType t : kAllEntityTypes) {
    paths[t] = config.lexicon_file(entity_type_key(t));
  }
  if (paths_out) *paths_out = paths;
  return load_lexicon(paths);
}

std::vector<ParsedSentence> parse_reviews(const ShallowParser& parser,
                                          const std::vector<RawReview>& reviews) {
  std::vector<ParsedSentence> sentences;
  for (const RawReview& r : reviews) {
    for (const std::string& s : segment_sentences(r.text)) {
      sentences.push_back(parser.parse(s));
    }
  }
  return sentences;
}

int stage_ingest(const PipelineConfig& config) {
  if (config.reviews.empty()) {
    throw std::runtime_error("ingest: no reviews file configured");
  }
  LoadStats stats;
  std::vector<RawReview> reviews = load_reviews(config.reviews, &stats);
  ClassifiedCorpus corpus = split_by_stars(reviews);
  corpus = balance_positive(corpus, config.balance_seed);

  write_review_file(config.out_dir / "corpus_positive.jsonl", corpus.positive);
  write_review_file(config.out_dir / "corpus_neutral.jsonl", corpus.neutral);
  write_review_file(config.out_dir / "corpus_negative.jsonl", corpus.negative);

  Manifest manifest;
  manifest.add_config("balance_seed", std::to_string(config.balance_seed));
  manifest.add_config("skipped_records", std::to_string(stats.skipped));
  manifest.add_file("input", "reviews", config.reviews);
  manifest.add_file("output", "corpus_positive", config.out_dir / "corpus_positive.jsonl");
  manifest.add_file("output", "corpus_neutral", config.out_dir / "corpus_neutral.jsonl");
  manifest.add_file("output", "corpus_negative", config.out_dir / "corpus_negative.jsonl");
  manifest.write(config.out_dir, "ingest");
  return 0;
}

int stage_learn(const PipelineConfig& config) {
  for (const char* name : {"corpus_positive.jsonl", "corpus_neutral.jsonl",
                           "corpus_negative.jsonl"}) {
    require_artifact(config.out_dir / name, "ingest");
  }
  ShallowParser parser = make_parser(config);
  auto positive = parse_reviews(parser, load_reviews(config.out_dir / "corpus_positive.jsonl"));
  auto neutral = parse_reviews(parser, load_reviews(config.out_dir / "corpus_neutral.jsonl"));
  auto negative = parse_reviews(parser, load_reviews(config.out_dir / "corpus_negative.jsonl"));

  write_pattern_dump(config.out_dir / "patterns_positive.tsv", learn(positive, neutral));
  write_pattern_dump(config.out_dir / "patterns_negative.tsv", learn(negative, neutral));

  Manifest manifest;
  manifest.add_file("input", "corpus_positive", config.out_dir / "corpus_positive.jsonl");
  manifest.add_file("input", "corpus_neutral", config.out_dir / "corpus_neutral.jsonl");
  manifest.add_file("input", "corpus_negative", config.out_dir / "corpus_negative.jsonl");
  manifest.add_file("input", "tagger_lexicon", config.tagger_lexicon());
  manifest.add_file("input", "tagger_participles", config.tagger_participles());
  manifest.add_file("output", "patterns_positive", config.out_dir / "patterns_positive.tsv");
  manifest.add_file("output", "patterns_negative", config.out_dir / "patterns_negative.tsv");
  manifest.write(config.out_dir, "learn");
  return 0;
}

int stage_filter(const PipelineConfig& config) {
  require_artifact(config.out_dir / "patterns_positive.tsv", "learn");
  require_artifact(config.out_dir / "patterns_negative.tsv", "learn");

  for (const char* polarity : {"positive", "negative"}) {
    PatternStatsMap stats = read_pattern_dump(
        config.out_dir / ("patterns_" + std::string(polarity) + ".tsv"));
    PatternStatsMap kept = filter_stats(stats, config.min_freq, config.min_prob);
    write_pattern_dump(
        config.out_dir / ("filtered_" + std::string(polarity) + ".tsv"), kept);
  }

  Manifest manifest;
  manifest.add_config("min_freq", std::to_string(config.min_freq));
  manifest.add_config("min_prob", format_double(config.min_prob, 6));
  manifest.add_file("input", "patterns_positive", config.out_dir / "patterns_positive.tsv");
  manifest.add_file("input", "patterns_negative", config.out_dir / "patterns_negative.tsv");
  manifest.add_file("output", "filtered_positive", config.out_dir / "filtered_positive.tsv");
  manifest.add_file("output", "filtered_negative", config.out_dir / "filtered_negative.tsv");
  manifest.write(config.out_dir, "filter");
  return 0;
}

int stage_harvest(const PipelineConfig& config) {
  require_artifact(config.out_dir / "corpus_positive.jsonl", "ingest");
  require_artifact(config.out_dir / "corpus_negative.jsonl", "ingest");
  require_artifact(config.out_dir / "filtered_positive.tsv", "filter");
  require_artifact(config.out_dir / "filtered_negative.tsv", "filter");

  ShallowParser parser = make_parser(config);
  std::map<EntityType, std::filesystem::path> lexicon_paths;
  EntityLexicon lexicon = make_lexicon(config, &lexicon_paths);

  TemplateStore store;
  for (Polarity polarity : {Polarity::POSITIVE, Polarity::NEGATIVE}) {
    const char* name = polarity_name(polarity);
    PatternStatsMap filtered = read_pattern_dump(
        config.out_dir / ("filtered_" + std::string(name) + ".tsv"));
    std::vector<RawReview> reviews =
        load_reviews(config.out_dir / ("corpus_" + std::string(name) + ".jsonl"));
    std::vector<HarvestSentence> sentences;
    for (const RawReview& r : reviews) {
      for (const std::string& s : segment_sentences(r.text)) {
        HarvestSentence hs;
        hs.parsed = parser.parse(s);
        hs.delex = delexicalize(s, hs.parsed, lexicon);
        sentences.push_back(std::move(hs));
      }
    }
    auto pairs = extract_hyperbolic_pairs(sentences, polarity, filtered);
    auto creatives = extract_creative_templates(sentences, polarity, filtered);
    store.pairs.insert(store.pairs.end(), pairs.begin(), pairs.end());
    store.creatives.insert(store.creatives.end(), creatives.begin(),
                           creatives.end());
  }
  write_template_store(config.out_dir / "templates.tsv", store);

  Manifest manifest;
  manifest.add_file("input", "corpus_positive", config.out_dir / "corpus_positive.jsonl");
  manifest.add_file("input", "corpus_negative", config.out_dir / "corpus_negative.jsonl");
  manifest.add_file("input", "filtered_positive", config.out_dir / "filtered_positive.tsv");
  manifest.add_file("input", "filtered_negative", config.out_dir / "filtered_negative.tsv");
  for (const auto& [type, path] : lexicon_paths) {
    manifest.add_file("input", std::string("lexicon_") + entity_type_key(type), path);
  }
  manifest.add_file("output", "templates", config.out_dir / "templates.tsv");
  manifest.write(config.out_dir, "harvest");
  return 0;
}

int stage_generate(const PipelineConfig& config) {
  require_artifact(config.out_dir / "templates.tsv", "harvest");
  TemplateStore store = read_template_store(config.out_dir / "templates.tsv");
  AdjectiveLists adjectives = AdjectiveLists::load(config.adjectives_file());
  std::vector<BasicFrame> frames = basic_frames();

  // MR file: one key[value] MR per line.
  std::vector<MeaningRepresentation> positive_mrs, negative_mrs;
  for (const std::string& raw : read_lines(config.mrs_file())) {
    std::string line = trim_copy(raw);
    if (line.empty() || line[0] == '#') continue;
    MeaningRepresentation mr = parse_mr(line);
    (mr.polarity == Polarity::POSITIVE ? positive_mrs : negative_mrs)
        .push_back(std::move(mr));
  }
  if (positive_mrs.empty() || negative_mrs.empty()) {
    throw std::runtime_error("generate: MR file needs MRs of both polarities");
  }

  int per_polarity = config.triple_count / 2;
  Rng seeder(config.generation_seed);
  std::vector<ReviewTriple> triples;
  char id_buf[16];
  for (int i = 0; i < per_polarity * 2; ++i) {
    bool positive = i < per_polarity;
    const auto& mrs = positive ? positive_mrs : negative_mrs;
    const MeaningRepresentation& mr =
        mrs[static_cast<size_t>(positive ? i : i - per_polarity) % mrs.size()];
    std::snprintf(id_buf, sizeof(id_buf), "t%04d", i);
    triples.push_back(
        generate_triple(mr, frames, adjectives, store, seeder.next(), id_buf));
  }
  write_triples(config.out_dir / "triples.jsonl", triples);

  Manifest manifest;
  manifest.add_config("triple_count", std::to_string(per_polarity * 2));
  manifest.add_config("generation_seed", std::to_string(config.generation_seed));
  manifest.add_file("input", "templates", config.out_dir / "templates.tsv");
  manifest.add_file("input", "adjectives", config.adjectives_file());
  manifest.add_file("input", "mrs", config.mrs_file());
  manifest.add_file("output", "triples", config.out_dir / "triples.jsonl");
  manifest.write(config.out_dir, "generate");
  return 0;
}

std::string render_distribution_report(const std::vector<DistributionRow>& rows) {
  std::string out = "variant\tcriterion\thigh\tmed\tlow\tno_consensus\titems\n";
  for (const DistributionRow& r : rows) {
    out += std::string(variant_name(r.variant)) + "\t" +
           criterion_name(r.criterion) + "\t" + format_double(r.high, 2) +
           "\t" + format_double(r.med, 2) + "\t" + format_double(r.low, 2) +
           "\t" + format_double(r.no_consensus, 2) + "\t" +
           std::to_string(r.items) + "\n";
  }
  return out;
}

int stage_evaluate(const PipelineConfig& config) {
  require_artifact(config.out_dir / "triples.jsonl", "generate");
  std::vector<ReviewTriple> triples = read_triples(config.out_dir / "triples.jsonl");
  export_hits(triples, config.out_dir / "hits.csv",
              config.out_dir / "hits_labels.tsv");

  Manifest manifest;
  manifest.add_file("input", "triples", config.out_dir / "triples.jsonl");
  manifest.add_file("output", "hits", config.out_dir / "hits.csv");
  manifest.add_file("output", "hits_labels", config.out_dir / "hits_labels.tsv");

  if (!config.judgements.empty()) {
    JudgementBatch batch =
        import_judgements(config.judgements, config.out_dir / "hits_labels.tsv");

    std::string majority_tsv = "triple_id\tvariant\tcriterion\tmajority\n";
    for (const auto& [key, records] : batch.items()) {
      if (records.size() != 5) continue;
      auto majority = majority_vote(records);
      majority_tsv += std::get<0>(key) + "\t" +
                      variant_name(std::get<1>(key)) + "\t" +
                      criterion_name(std::get<2>(key)) + "\t" +
                      (majority.has_value() ? rating_name(*majority)
                                            : "no_consensus") +
                      "\n";
    }
    write_file(config.out_dir / "judgement_majority.tsv", majority_tsv);
    write_file(config.out_dir / "judgement_distribution.tsv",
               render_distribution_report(distribution(batch)));
    std::string agreement_tsv = "metric\tvalue\n";
    agreement_tsv += "per_judgement\t" + format_double(agreement(batch, false), 6) + "\n";
    agreement_tsv += "per_item\t" + format_double(agreement(batch, true), 6) + "\n";
    write_file(config.out_dir / "judgement_agreement.tsv", agreement_tsv);
    std::string completeness = "item\tstatus\n";
    for (const std::string& line : batch.incomplete) {
      completeness += line + "\tincomplete\n";
    }
    write_file(config.out_dir / "judgement_completeness.tsv", completeness);

    manifest.add_file("input", "judgements", config.judgements);
    manifest.add_file("output", "judgement_majority", config.out_dir / "judgement_majority.tsv");
    manifest.add_file("output", "judgement_distribution", config.out_dir / "judgement_distribution.tsv");
    manifest.add_file("output", "judgement_agreement", config.out_dir / "judgement_agreement.tsv");
    manifest.add_file("output", "judgement_completeness", config.out_dir / "judgement_completeness.tsv");
  }
  manifest.write(config.out_dir, "evaluate");
  return 0;
}

int stage_analyze(const PipelineConfig& config) {
  require_artifact(config.out_dir / "triples.jsonl", "generate");
  std::vector<ReviewTriple> triples = read_triples(config.out_dir / "triples.jsonl");
  CategoryLexicon dict = load_category_lexicon(config.dict_file());

  std::vector<CategoryProfile> positive, negative;
  std::string profiles_tsv = "review_id\tpolarity\tcategory\tpercent\n";
  for (const ReviewTriple& t : triples) {
    for (const GeneratedReview& r : t.reviews) {
      if (r.variant != Variant::CREATIVE) continue;
      CategoryProfile prof = profile(r.text, dict, t.id);
      for (const auto& [category, pct] : prof.percent) {
        profiles_tsv += t.id + "\t" + polarity_name(t.mr.polarity) + "\t" +
                        category + "\t" + format_double(pct, 4) + "\n";
      }
      (t.mr.polarity == Polarity::POSITIVE ? positive : negative)
          .push_back(std::move(prof));
    }
  }
  write_file(config.out_dir / "analysis_profiles.tsv", profiles_tsv);

  std::string significant_tsv =
      "category\tdirection\tp_value\tmean_positive\tmean_negative\n";
  if (positive.size() >= 2 && negative.size() >= 2) {
    for (const CategoryComparison& c : compare_classes(positive, negative)) {
      significant_tsv += c.category + "\t" +
                         (c.direction == Polarity::POSITIVE ? "positive" : "negative") +
                         "\t" + format_double(c.p_value, 6) + "\t" +
                         format_double(c.mean_positive, 4) + "\t" +
                         format_double(c.mean_negative, 4) + "\n";
    }
  }
  write_file(config.out_dir / "analysis_significant.tsv", significant_tsv);

  Manifest manifest;
  manifest.add_file("input", "triples", config.out_dir / "triples.jsonl");
  manifest.add_file("input", "dictionary", config.dict_file());
  manifest.add_file("output", "profiles", config.out_dir / "analysis_profiles.tsv");
  manifest.add_file("output", "significant", config.out_dir / "analysis_significant.tsv");
  manifest.write(config.out_dir, "analyze");
  return 0;
}

}  // namespace

int run_stage(const std::string& name, const PipelineConfig& config) {
  if (config.out_dir.empty()) {
    throw std::runtime_error("no output directory configured (--out)");
  }
  std::filesystem::create_directories(config.out_dir);
  StageLock lock(config.out_dir);
  if (name == "ingest") return stage_ingest(config);
  if (name == "learn") return stage_learn(config);
  if (name == "filter") return stage_filter(config);
  if (name == "harvest") return stage_harvest(config);
  if (name == "generate") return stage_generate(config);
  if (name == "evaluate") return stage_evaluate(config);
  if (name == "analyze") return stage_analyze(config);
  throw std::runtime_error("unknown stage: " + name);
}

void apply_config_entry(PipelineConfig* config, const std::string& key,
                        const std::string& value) {
  if (key == "data") config->data_dir = value;
  else if (key == "out") config->out_dir = value;
  else if (key == "reviews") config->reviews = value;
  else if (key == "mrs") config->mrs = value;
  else if (key == "dict") config->dict = value;
  else if (key == "judgements") config->judgements = value;
  else if (key == "min_freq") config->min_freq = std::stoi(value);
  else if (key == "min_prob") config->min_prob = std::stod(value);
  else if (key == "balance_seed") config->balance_seed = std::stoull(value);
  else if (key == "seed") config->generation_seed = std::stoull(value);
  else if (key == "triple_count") config->triple_count = std::stoi(value);
  else throw std::runtime_error("unknown config key: " + key);
}

PipelineConfig load_config_file(const std::filesystem::path& path) {
  PipelineConfig config;
  for (const std::string& raw : read_lines(path)) {
    std::string line = trim_copy(raw);
    if (line.empty() || line[0] == '#') continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("config file: expected key=value, got \"" + line + "\"");
    }
    apply_config_entry(&config, trim_copy(line.substr(0, eq)),
                       trim_copy(line.substr(eq + 1)));
  }
  return config;
}

}  // namespace revgen
