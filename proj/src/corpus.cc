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

#include "revgen/corpus.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "revgen/util.h"

namespace revgen {

std::vector<RawReview> load_reviews(const std::filesystem::path& path,
                                    LoadStats* stats) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open review file: " + path.string());

  std::vector<RawReview> reviews;
  LoadStats local;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim_copy(line).empty()) continue;
    nlohmann::json record = nlohmann::json::parse(line, nullptr, false);
    auto skip = [&](const char* why) {
      log_warn("reviews line " + std::to_string(line_no) + ": " + why + ", skipped");
      ++local.skipped;
    };
    if (record.is_discarded() || !record.is_object()) {
      skip("malformed record");
      continue;
    }
    if (!record.contains("stars") || !record["stars"].is_number_integer()) {
      skip("missing integer \"stars\"");
      continue;
    }
    if (!record.contains("text") || !record["text"].is_string()) {
      skip("missing string \"text\"");
      continue;
    }
    int stars = record["stars"].get<int>();
    std::string text = record["text"].get<std::string>();
    if (stars < 1 || stars > 5) {
      skip("stars outside 1..5");
      continue;
    }
    if (trim_copy(text).empty()) {
      skip("empty text");
      continue;
    }
    RawReview review;
    if (record.contains("review_id") && record["review_id"].is_string()) {
      review.id = record["review_id"].get<std::string>();
    } else if (record.contains("id") && record["id"].is_string()) {
      review.id = record["id"].get<std::string>();
    } else {
      review.id = "line" + std::to_string(line_no);
    }
    review.stars = stars;
    review.text = std::move(text);
    reviews.push_back(std::move(review));
    ++local.loaded;
  }
  if (stats) *stats = local;
  return reviews;
}

ClassifiedCorpus split_by_stars(const std::vector<RawReview>& reviews) {
  ClassifiedCorpus corpus;
  for (const RawReview& r : reviews) {
    switch (r.stars) {
      case 1:
      case 2:
        corpus.negative.push_back(r);
        break;
      case 3:
        corpus.neutral.push_back(r);
        break;
      case 5:
        corpus.positive.push_back(r);
        break;
      default:
        break;  // 4-star reviews are dropped
    }
  }
  return corpus;
}

ClassifiedCorpus balance_positive(const ClassifiedCorpus& corpus, uint64_t seed) {
  if (corpus.positive.size() < corpus.negative.size()) {
    throw std::runtime_error(
        "cannot balance: positive class (" + std::to_string(corpus.positive.size()) +
        ") smaller than negative class (" + std::to_string(corpus.negative.size()) + ")");
  }
  if (corpus.positive.size() == corpus.negative.size()) return corpus;

  Rng rng(seed);
  std::vector<size_t> keep =
      rng.sample_indices(corpus.positive.size(), corpus.negative.size());
  ClassifiedCorpus out;
  out.neutral = corpus.neutral;
  out.negative = corpus.negative;
  out.positive.reserve(keep.size());
  for (size_t i : keep) out.positive.push_back(corpus.positive[i]);
  return out;
}

void write_review_file(const std::filesystem::path& path,
                       const std::vector<RawReview>& reviews) {
  std::ostringstream out;
  for (const RawReview& r : reviews) {
    nlohmann::json record;
    record["review_id"] = r.id;
    record["stars"] = r.stars;
    record["text"] = r.text;
    out << record.dump() << "\n";
  }
  write_file(path, out.str());
}

}  // namespace revgen
