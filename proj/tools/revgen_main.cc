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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "revgen/analysis.h"
#include "revgen/generator.h"
#include "revgen/pipeline.h"
#include "revgen/templates.h"
#include "revgen/util.h"

namespace {

using revgen::PipelineConfig;

struct CommonOptions {
  std::string config_file;
  std::string data_dir;
  std::string out_dir;
  std::string reviews;
  std::string mrs;
  std::string dict;
  std::string judgements;
  std::optional<int> min_freq;
  std::optional<double> min_prob;
  std::optional<uint64_t> seed;
  std::optional<uint64_t> balance_seed;
  std::optional<int> count;
};

PipelineConfig build_config(const CommonOptions& opts) {
  PipelineConfig config;
  if (!opts.config_file.empty()) {
    config = revgen::load_config_file(opts.config_file);
  }
  if (!opts.data_dir.empty()) config.data_dir = opts.data_dir;
  if (!opts.out_dir.empty()) config.out_dir = opts.out_dir;
  if (!opts.reviews.empty()) config.reviews = opts.reviews;
  if (!opts.mrs.empty()) config.mrs = opts.mrs;
  if (!opts.dict.empty()) config.dict = opts.dict;
  if (!opts.judgements.empty()) config.judgements = opts.judgements;
  if (opts.min_freq.has_value()) config.min_freq = *opts.min_freq;
  if (opts.min_prob.has_value()) config.min_prob = *opts.min_prob;
  if (opts.seed.has_value()) config.generation_seed = *opts.seed;
  if (opts.balance_seed.has_value()) config.balance_seed = *opts.balance_seed;
  if (opts.count.has_value()) config.triple_count = *opts.count;
  return config;
}

void add_common_flags(CLI::App* cmd, CommonOptions* opts) {
  cmd->add_option("--config", opts->config_file, "key=value configuration file");
  cmd->add_option("--data", opts->data_dir, "bundled data directory (default: data)");
  cmd->add_option("--out", opts->out_dir, "pipeline output directory");
}

// Single-shot generation per the generator interface: one MR, one variant
// (or a triple), records to stdout or --out.
int run_single_generate(const std::string& mr_arg, const std::string& variant_arg,
                        const std::string& polarity_arg,
                        const std::string& stores_dir,
                        const PipelineConfig& config, uint64_t seed,
                        const std::string& out_file) {
  std::string mr_text = mr_arg;
  if (mr_arg.find('[') == std::string::npos) {
    mr_text = revgen::read_file(mr_arg);  // file path, not inline
  }
  revgen::MeaningRepresentation mr = revgen::parse_mr(mr_text);
  if (!polarity_arg.empty()) {
    if (!revgen::parse_polarity(polarity_arg, &mr.polarity)) {
      throw std::runtime_error("unknown polarity: " + polarity_arg);
    }
  }
  if (stores_dir.empty()) {
    throw std::runtime_error("--mr needs --stores <dir> holding templates.tsv");
  }
  revgen::TemplateStore store = revgen::read_template_store(
      std::filesystem::path(stores_dir) / "templates.tsv");
  revgen::AdjectiveLists adjectives =
      revgen::AdjectiveLists::load(config.adjectives_file());
  std::vector<revgen::BasicFrame> frames = revgen::basic_frames();

  std::vector<std::string> lines;
  if (variant_arg == "triple") {
    revgen::ReviewTriple triple =
        revgen::generate_triple(mr, frames, adjectives, store, seed);
    lines.push_back(revgen::triple_to_json(triple));
  } else {
    revgen::Variant variant;
    if (!revgen::parse_variant(variant_arg, &variant)) {
      throw std::runtime_error("unknown variant: " + variant_arg);
    }
    revgen::GeneratedReview review;
    switch (variant) {
      case revgen::Variant::BASIC:
        review = revgen::generate_basic(mr, frames, adjectives, seed);
        break;
      case revgen::Variant::HYPERBOLIC:
        review = revgen::generate_hyperbolic(mr, frames, store, seed);
        break;
      case revgen::Variant::CREATIVE:
        review = revgen::generate_creative(mr, store, seed);
        break;
    }
    lines.push_back(revgen::review_to_json(review));
  }
  std::string payload = revgen::join(lines, "\n") + "\n";
  if (out_file.empty()) {
    std::cout << payload;
  } else {
    revgen::write_file(out_file, payload);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Review-template harvesting and generation toolkit"};
  app.require_subcommand(1);

  CommonOptions opts;
  std::string mr_arg, variant_arg = "triple", polarity_arg, stores_dir;
  std::string stage_to_run;

  for (const char* stage : revgen::kStageNames) {
    CLI::App* cmd = app.add_subcommand(
        stage, std::string("run the ") + stage + " stage");
    add_common_flags(cmd, &opts);
    if (std::string(stage) == "ingest") {
      cmd->add_option("--reviews", opts.reviews, "line-delimited review records");
      cmd->add_option("--seed", opts.balance_seed, "balancing seed");
    }
    if (std::string(stage) == "filter") {
      cmd->add_option("--min-freq", opts.min_freq, "frequency threshold (default 3)");
      cmd->add_option("--min-prob", opts.min_prob, "probability threshold (default 0.75)");
    }
    if (std::string(stage) == "generate") {
      cmd->add_option("--mr", mr_arg, "single MR, inline key[value] pairs or a file");
      cmd->add_option("--variant", variant_arg,
                      "basic|hyperbolic|creative|triple (with --mr)");
      cmd->add_option("--polarity", polarity_arg, "override the MR polarity");
      cmd->add_option("--stores", stores_dir, "directory holding templates.tsv");
      cmd->add_option("--mrs", opts.mrs, "MR file for batch generation");
      cmd->add_option("--count", opts.count, "triples to generate (default 200)");
      cmd->add_option("--seed", opts.seed, "generation seed");
    }
    if (std::string(stage) == "evaluate") {
      cmd->add_option("--judgements", opts.judgements,
                      "judgement CSV to import and aggregate");
    }
    if (std::string(stage) == "analyze") {
      cmd->add_option("--dict", opts.dict, "category dictionary");
    }
    cmd->callback([&, stage]() { stage_to_run = stage; });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    PipelineConfig config = build_config(opts);
    if (stage_to_run == "generate" && !mr_arg.empty()) {
      // single-shot mode: --out names the record file, not a stage directory
      return run_single_generate(mr_arg, variant_arg, polarity_arg, stores_dir,
                                 config, config.generation_seed, opts.out_dir);
    }
    return revgen::run_stage(stage_to_run, config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
