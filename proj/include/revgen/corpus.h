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

#ifndef REVGEN_CORPUS_H_
#define REVGEN_CORPUS_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace revgen {

struct RawReview {
  std::string id;
  int stars = 0;  // 1..5
  std::string text;
};

// Reviews partitioned into polarity classes: negative = 1-2 stars,
// neutral = 3 stars, positive = 5 stars. 4-star reviews are excluded.
struct ClassifiedCorpus {
  std::vector<RawReview> positive;
  std::vector<RawReview> neutral;
  std::vector<RawReview> negative;
};

struct LoadStats {
  size_t loaded = 0;
  size_t skipped = 0;
};

// Reads line-delimited JSON records, one review per line. Records missing
// `stars` or `text` (or with stars outside 1..5 / blank text) are skipped
// with a per-line warning. Unreadable file throws.
std::vector<RawReview> load_reviews(const std::filesystem::path& path,
                                    LoadStats* stats = nullptr);

ClassifiedCorpus split_by_stars(const std::vector<RawReview>& reviews);

// Downsamples the positive class to |negative| without replacement using a
// deterministic seeded draw. Throws if |positive| < |negative|.
ClassifiedCorpus balance_positive(const ClassifiedCorpus& corpus, uint64_t seed);

void write_review_file(const std::filesystem::path& path,
                       const std::vector<RawReview>& reviews);

}  // namespace revgen

#endif  // REVGEN_CORPUS_H_
