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

#ifndef REVGEN_ANALYSIS_H_
#define REVGEN_ANALYSIS_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "revgen/generator.h"

namespace revgen {

// Category dictionary: literal words plus prefix patterns (trailing '*').
// Categories flagged `punct` also match punctuation tokens.
struct CategoryLexicon {
  struct Category {
    std::string name;
    bool punct = false;
    std::vector<std::string> literals;
    std::vector<std::string> prefixes;  // '*' stripped
  };
  std::map<std::string, Category> categories;
};

// %-delimited two-section format: header lines `id<TAB>name[<TAB>punct]`,
// body lines `word<TAB>id[,id...]`. Unknown category ids are fatal with the
// line number.
CategoryLexicon load_category_lexicon(const std::filesystem::path& path);

struct CategoryProfile {
  std::string id;
  std::map<std::string, double> percent;  // 100 * hits / total_tokens
  int total_tokens = 0;                   // non-punctuation tokens
};

// Tokenizes with the parser rules, lowercases, and matches every
// non-punctuation token against every category (punctuation-flagged
// categories also see punctuation tokens). Throws on token-free text.
CategoryProfile profile(const std::string& text, const CategoryLexicon& lexicon,
                        const std::string& id = "");

struct TTestResult {
  double t_statistic = 0.0;
  double degrees_of_freedom = 0.0;
  double p_value = 1.0;
};

// Welch's unequal-variance two-sample t-test, two-sided p via the
// regularized incomplete beta (continued fraction). Sizes must be >= 2;
// two zero-variance samples with equal means give p = 1 by convention.
TTestResult welch_t_test(const std::vector<double>& a,
                         const std::vector<double>& b);

struct CategoryComparison {
  std::string category;
  Polarity direction = Polarity::POSITIVE;  // class with the higher mean
  double p_value = 1.0;
  double mean_positive = 0.0;
  double mean_negative = 0.0;
};

// Per-category Welch test over per-review percentages; keeps p < alpha,
// sorted ascending by p. `bonferroni` divides alpha by the category count.
std::vector<CategoryComparison> compare_classes(
    const std::vector<CategoryProfile>& positive,
    const std::vector<CategoryProfile>& negative, double alpha = 0.05,
    bool bonferroni = false);

enum class Rating { HIGH, MED, LOW };
enum class Criterion { CONVINCINGNESS, INTERESTINGNESS, NATURALNESS, GRAMMAR };

const char* rating_name(Rating r);
bool parse_rating(const std::string& name, Rating* r);
const char* criterion_name(Criterion c);
bool parse_criterion(const std::string& name, Criterion* c);

struct JudgementRecord {
  std::string triple_id;
  Variant variant = Variant::BASIC;
  Criterion criterion = Criterion::CONVINCINGNESS;
  Rating rating = Rating::MED;
  std::string worker_id;
};

using ItemKey = std::tuple<std::string, Variant, Criterion>;

struct JudgementBatch {
  std::vector<JudgementRecord> records;
  // Items with a judgement count other than 5, from the completeness check.
  std::vector<std::string> incomplete;

  std::map<ItemKey, std::vector<JudgementRecord>> items() const;
};

// Majority label across exactly 5 records of one item; nullopt when no
// rating reaches 3 votes. Throws when given anything but 5 records of the
// same item.
std::optional<Rating> majority_vote(const std::vector<JudgementRecord>& records);

// Fraction of individual judgements that equal their item's majority label,
// over items that have one. `per_item` averages the per-item fractions
// instead. Throws when no item has a majority.
double agreement(const JudgementBatch& batch, bool per_item = false);

struct DistributionRow {
  Variant variant = Variant::BASIC;
  Criterion criterion = Criterion::CONVINCINGNESS;
  double high = 0.0;
  double med = 0.0;
  double low = 0.0;
  double no_consensus = 0.0;
  int items = 0;
};

std::vector<DistributionRow> distribution(const JudgementBatch& batch);

// Writes one CSV row per triple with the texts in display order under
// anonymous slots A/B/C, and the slot -> variant map in a sidecar file.
void export_hits(const std::vector<ReviewTriple>& triples,
                 const std::filesystem::path& csv_path,
                 const std::filesystem::path& sidecar_path);

// Joins a judgement CSV (`triple_id,variant_slot,criterion,rating,worker_id`)
// against the sidecar. Unknown triple ids throw; items without exactly five
// judgements land in the completeness report.
JudgementBatch import_judgements(const std::filesystem::path& judgements_csv,
                                 const std::filesystem::path& sidecar_path);

}  // namespace revgen

#endif  // REVGEN_ANALYSIS_H_
