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

#ifndef REVGEN_PIPELINE_H_
#define REVGEN_PIPELINE_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace revgen {

// File-based stage configuration. All stages share one output directory;
// each writes its artifacts plus a `<stage>.manifest` recording input
// hashes, configuration, and output hashes, so reruns with unchanged inputs
// are byte-identical.
struct PipelineConfig {
  std::filesystem::path data_dir = "data";
  std::filesystem::path out_dir;
  std::filesystem::path reviews;     // ingest input
  std::filesystem::path mrs;         // generate input; default data/mrs.txt
  std::filesystem::path dict;        // analyze input; default data/categories.dic
  std::filesystem::path judgements;  // evaluate import mode when set

  int min_freq = 3;
  double min_prob = 0.75;
  uint64_t balance_seed = 1;
  uint64_t generation_seed = 7;
  int triple_count = 200;

  std::filesystem::path tagger_lexicon() const { return data_dir / "tagger" / "open_class.txt"; }
  std::filesystem::path tagger_participles() const { return data_dir / "tagger" / "participles.txt"; }
  std::filesystem::path lexicon_file(const char* name) const { return data_dir / "lexicons" / (std::string(name) + ".txt"); }
  std::filesystem::path adjectives_file() const { return data_dir / "adjectives.txt"; }
  std::filesystem::path mrs_file() const { return mrs.empty() ? data_dir / "mrs.txt" : mrs; }
  std::filesystem::path dict_file() const { return dict.empty() ? data_dir / "categories.dic" : dict; }
};

inline constexpr const char* kStageNames[] = {
    "ingest", "learn", "filter", "harvest", "generate", "evaluate", "analyze"};

// Runs one stage; throws on configuration or I/O errors. Returns 0 on
// success so callers can forward it as an exit status.
int run_stage(const std::string& name, const PipelineConfig& config);

// key=value configuration file ('#' comments). Unknown keys throw.
PipelineConfig load_config_file(const std::filesystem::path& path);
void apply_config_entry(PipelineConfig* config, const std::string& key,
                        const std::string& value);

}  // namespace revgen

#endif  // REVGEN_PIPELINE_H_
