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

#include "revgen/analysis.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "revgen/shallow_parser.h"
#include "revgen/util.h"

namespace revgen {

CategoryLexicon load_category_lexicon(const std::filesystem::path& path) {
  CategoryLexicon lexicon;
  std::map<std::string, std::string> id_to_name;
  std::vector<std::string> lines = read_lines(path);
  int section = 0;  // 0: preamble, 1: header, 2: body
  size_t line_no = 0;
  for (const std::string& raw : lines) {
    ++line_no;
    std::string line = trim_copy(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line == "%") {
      ++section;
      continue;
    }
    if (section == 0) {
      // tolerate dictionaries that omit the opening '%'
      section = 1;
    }
    auto cols = split(line, '\t');
    if (section == 1) {
      if (cols.size() < 2) {
        throw std::runtime_error("category dictionary line " +
                                 std::to_string(line_no) + ": expected id<TAB>name");
      }
      std::string id = trim_copy(cols[0]);
      std::string name = lower_copy(trim_copy(cols[1]));
      id_to_name[id] = name;
      CategoryLexicon::Category& cat = lexicon.categories[name];
      cat.name = name;
      if (cols.size() > 2 && trim_copy(cols[2]) == "punct") cat.punct = true;
    } else {
      if (cols.size() < 2) {
        throw std::runtime_error("category dictionary line " +
                                 std::to_string(line_no) + ": expected word<TAB>ids");
      }
      std::string word = lower_copy(trim_copy(cols[0]));
      for (const std::string& id_raw : split(cols[1], ',')) {
        std::string id = trim_copy(id_raw);
        auto it = id_to_name.find(id);
        if (it == id_to_name.end()) {
          throw std::runtime_error("category dictionary line " +
                                   std::to_string(line_no) +
                                   ": unknown category id \"" + id + "\"");
        }
        CategoryLexicon::Category& cat = lexicon.categories[it->second];
        if (!word.empty() && word.back() == '*') {
          cat.prefixes.push_back(word.substr(0, word.size() - 1));
        } else {
          cat.literals.push_back(word);
        }
      }
    }
  }
  if (lexicon.categories.empty()) {
    log_warn("category dictionary " + path.string() + " is empty");
  }
  return lexicon;
}

namespace {

bool category_matches(const CategoryLexicon::Category& cat,
                      const std::string& word) {
  for (const std::string& lit : cat.literals) {
    if (word == lit) return true;
  }
  for (const std::string& prefix : cat.prefixes) {
    if (word.size() >= prefix.size() &&
        word.compare(0, prefix.size(), prefix) == 0) {
      return true;
    }
  }
  return false;
}

}  // namespace

CategoryProfile profile(const std::string& text, const CategoryLexicon& lexicon,
                        const std::string& id) {
  // Only tokenization is needed here; the closed-class lexicon suffices to
  // separate punctuation from words.
  static const ShallowParser kTokenizer{TagLexicon()};
  CategoryProfile prof;
  prof.id = id;

  std::vector<Token> tokens;
  for (const std::string& sentence : segment_sentences(text)) {
    std::vector<Token> ts = kTokenizer.tokenize_and_tag(sentence);
    tokens.insert(tokens.end(), ts.begin(), ts.end());
  }
  int total = 0;
  for (const Token& t : tokens) {
    if (t.pos != Pos::PUNCT) ++total;
  }
  if (total == 0) throw std::runtime_error("profile: text has no tokens");
  prof.total_tokens = total;

  for (const auto& [name, cat] : lexicon.categories) {
    int hits = 0;
    for (const Token& t : tokens) {
      if (t.pos == Pos::PUNCT && !cat.punct) continue;
      if (category_matches(cat, t.lower)) ++hits;
    }
    prof.percent[name] = 100.0 * hits / total;
  }
  return prof;
}

namespace {

// Continued-fraction evaluation of the regularized incomplete beta
// (modified Lentz).
double incomplete_beta_cf(double a, double b, double x) {
  const double tiny = 1e-300;
  const double eps = 1e-15;
  double qab = a + b;
  double qap = a + 1.0;
  double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 500; ++m) {
    int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < eps) break;
  }
  return h;
}

double regularized_incomplete_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                    a * std::log(x) + b * std::log1p(-x);
  double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * incomplete_beta_cf(a, b, x) / a;
  }
  return 1.0 - front * incomplete_beta_cf(b, a, 1.0 - x) / b;
}

double student_t_two_sided_p(double t, double df) {
  double x = df / (df + t * t);
  return regularized_incomplete_beta(df / 2.0, 0.5, x);
}

void mean_and_variance(const std::vector<double>& v, double* mean, double* var) {
  double sum = 0.0;
  for (double x : v) sum += x;
  double m = sum / static_cast<double>(v.size());
  double rss = 0.0;
  for (double x : v) rss += (x - m) * (x - m);
  *mean = m;
  *var = rss / static_cast<double>(v.size() - 1);
}

}  // namespace

TTestResult welch_t_test(const std::vector<double>& a,
                         const std::vector<double>& b) {
  if (a.size() < 2 || b.size() < 2) {
    throw std::runtime_error("welch_t_test: both samples need size >= 2");
  }
  double n1 = static_cast<double>(a.size());
  double n2 = static_cast<double>(b.size());
  double mean1, var1, mean2, var2;
  mean_and_variance(a, &mean1, &var1);
  mean_and_variance(b, &mean2, &var2);

  TTestResult result;
  if (var1 == 0.0 && var2 == 0.0) {
    result.degrees_of_freedom = n1 + n2 - 2.0;
    if (mean1 == mean2) {
      result.t_statistic = 0.0;
      result.p_value = 1.0;
    } else {
      result.t_statistic = mean1 > mean2
                               ? std::numeric_limits<double>::infinity()
                               : -std::numeric_limits<double>::infinity();
      result.p_value = 0.0;
    }
    return result;
  }
  double ratio1 = var1 / n1;
  double ratio2 = var2 / n2;
  result.t_statistic = (mean1 - mean2) / std::sqrt(ratio1 + ratio2);
  result.degrees_of_freedom =
      (ratio1 + ratio2) * (ratio1 + ratio2) /
      (ratio1 * ratio1 / (n1 - 1.0) + ratio2 * ratio2 / (n2 - 1.0));
  result.p_value =
      student_t_two_sided_p(result.t_statistic, result.degrees_of_freedom);
  return result;
}

std::vector<CategoryComparison> compare_classes(
    const std::vector<CategoryProfile>& positive,
    const std::vector<CategoryProfile>& negative, double alpha,
    bool bonferroni) {
  if (positive.empty() || negative.empty()) {
    throw std::runtime_error("compare_classes: both profile sets must be non-empty");
  }
  std::set<std::string> names;
  for (const CategoryProfile& p : positive) {
    for (const auto& [name, pct] : p.percent) {
      (void)pct;
      names.insert(name);
    }
  }
  for (const CategoryProfile& p : negative) {
    for (const auto& [name, pct] : p.percent) {
      (void)pct;
      names.insert(name);
    }
  }
  double cutoff = bonferroni && !names.empty()
                      ? alpha / static_cast<double>(names.size())
                      : alpha;
  std::vector<CategoryComparison> out;
  for (const std::string& name : names) {
    std::vector<double> pos, neg;
    for (const CategoryProfile& p : positive) {
      auto it = p.percent.find(name);
      pos.push_back(it == p.percent.end() ? 0.0 : it->second);
    }
    for (const CategoryProfile& p : negative) {
      auto it = p.percent.find(name);
      neg.push_back(it == p.percent.end() ? 0.0 : it->second);
    }
    if (pos.size() < 2 || neg.size() < 2) continue;
    TTestResult test = welch_t_test(pos, neg);
    if (!(test.p_value < cutoff)) continue;
    CategoryComparison cmp;
    cmp.category = name;
    double mp = 0.0, mn = 0.0;
    for (double x : pos) mp += x;
    for (double x : neg) mn += x;
    mp /= static_cast<double>(pos.size());
    mn /= static_cast<double>(neg.size());
    cmp.mean_positive = mp;
    cmp.mean_negative = mn;
    cmp.direction = mp >= mn ? Polarity::POSITIVE : Polarity::NEGATIVE;
    cmp.p_value = test.p_value;
    out.push_back(std::move(cmp));
  }
  std::sort(out.begin(), out.end(),
            [](const CategoryComparison& a, const CategoryComparison& b) {
              if (a.p_value != b.p_value) return a.p_value < b.p_value;
              return a.category < b.category;
            });
  return out;
}

const char* rating_name(Rating r) {
  switch (r) {
    case Rating::HIGH: return "high";
    case Rating::MED: return "med";
    case Rating::LOW: return "low";
  }
  return "med";
}

bool parse_rating(const std::string& name, Rating* r) {
  std::string n = lower_copy(trim_copy(name));
  if (n == "high" || n == "h") *r = Rating::HIGH;
  else if (n == "med" || n == "medium" || n == "m") *r = Rating::MED;
  else if (n == "low" || n == "l") *r = Rating::LOW;
  else return false;
  return true;
}

const char* criterion_name(Criterion c) {
  switch (c) {
    case Criterion::CONVINCINGNESS: return "convincingness";
    case Criterion::INTERESTINGNESS: return "interestingness";
    case Criterion::NATURALNESS: return "naturalness";
    case Criterion::GRAMMAR: return "grammar";
  }
  return "convincingness";
}

bool parse_criterion(const std::string& name, Criterion* c) {
  std::string n = lower_copy(trim_copy(name));
  if (n == "convincingness") *c = Criterion::CONVINCINGNESS;
  else if (n == "interestingness") *c = Criterion::INTERESTINGNESS;
  else if (n == "naturalness") *c = Criterion::NATURALNESS;
  else if (n == "grammar") *c = Criterion::GRAMMAR;
  else return false;
  return true;
}

std::map<ItemKey, std::vector<JudgementRecord>> JudgementBatch::items() const {
  std::map<ItemKey, std::vector<JudgementRecord>> out;
  for (const JudgementRecord& r : records) {
    out[{r.triple_id, r.variant, r.criterion}].push_back(r);
  }
  return out;
}

std::optional<Rating> majority_vote(const std::vector<JudgementRecord>& records) {
  if (records.size() != 5) {
    throw std::runtime_error("majority_vote: expected exactly 5 records, got " +
                             std::to_string(records.size()));
  }
  for (const JudgementRecord& r : records) {
    if (r.triple_id != records[0].triple_id ||
        r.variant != records[0].variant ||
        r.criterion != records[0].criterion) {
      throw std::runtime_error("majority_vote: records span multiple items");
    }
  }
  int counts[3] = {0, 0, 0};
  for (const JudgementRecord& r : records) ++counts[static_cast<int>(r.rating)];
  for (int i = 0; i < 3; ++i) {
    if (counts[i] >= 3) return static_cast<Rating>(i);
  }
  return std::nullopt;
}

double agreement(const JudgementBatch& batch, bool per_item) {
  size_t items_with_majority = 0;
  size_t judgements = 0;
  size_t matches = 0;
  double per_item_sum = 0.0;
  for (const auto& [key, records] : batch.items()) {
    (void)key;
    if (records.size() != 5) continue;
    std::optional<Rating> majority = majority_vote(records);
    if (!majority.has_value()) continue;
    ++items_with_majority;
    size_t item_matches = 0;
    for (const JudgementRecord& r : records) {
      if (r.rating == *majority) ++item_matches;
    }
    judgements += records.size();
    matches += item_matches;
    per_item_sum += static_cast<double>(item_matches) / 5.0;
  }
  if (items_with_majority == 0) {
    throw std::runtime_error("agreement: no item has a majority");
  }
  if (per_item) return per_item_sum / static_cast<double>(items_with_majority);
  return static_cast<double>(matches) / static_cast<double>(judgements);
}

std::vector<DistributionRow> distribution(const JudgementBatch& batch) {
  struct Counts {
    int high = 0, med = 0, low = 0, none = 0;
  };
  std::map<std::pair<int, int>, Counts> counts;
  for (const auto& [key, records] : batch.items()) {
    if (records.size() != 5) continue;
    auto& c = counts[{static_cast<int>(std::get<1>(key)),
                      static_cast<int>(std::get<2>(key))}];
    std::optional<Rating> majority = majority_vote(records);
    if (!majority.has_value()) ++c.none;
    else if (*majority == Rating::HIGH) ++c.high;
    else if (*majority == Rating::MED) ++c.med;
    else ++c.low;
  }
  std::vector<DistributionRow> rows;
  for (const auto& [key, c] : counts) {
    DistributionRow row;
    row.variant = static_cast<Variant>(key.first);
    row.criterion = static_cast<Criterion>(key.second);
    row.items = c.high + c.med + c.low + c.none;
    double total = static_cast<double>(row.items);
    row.high = 100.0 * c.high / total;
    row.med = 100.0 * c.med / total;
    row.low = 100.0 * c.low / total;
    row.no_consensus = 100.0 * c.none / total;
    rows.push_back(row);
  }
  return rows;
}

void export_hits(const std::vector<ReviewTriple>& triples,
                 const std::filesystem::path& csv_path,
                 const std::filesystem::path& sidecar_path) {
  std::string csv = "triple_id,slot_a,slot_b,slot_c\n";
  std::string sidecar = "triple_id\tslot\tvariant\n";
  const char* slot_names[3] = {"A", "B", "C"};
  for (const ReviewTriple& t : triples) {
    std::vector<std::string> fields = {csv_escape(t.id)};
    for (size_t slot = 0; slot < 3; ++slot) {
      Variant v = t.display_order[slot];
      const GeneratedReview* review = nullptr;
      for (const GeneratedReview& r : t.reviews) {
        if (r.variant == v) review = &r;
      }
      fields.push_back(csv_escape(review->text));
      sidecar += t.id;
      sidecar += '\t';
      sidecar += slot_names[slot];
      sidecar += '\t';
      sidecar += variant_name(v);
      sidecar += '\n';
    }
    csv += join(fields, ",") + "\n";
  }
  write_file(csv_path, csv);
  write_file(sidecar_path, sidecar);
}

JudgementBatch import_judgements(const std::filesystem::path& judgements_csv,
                                 const std::filesystem::path& sidecar_path) {
  // sidecar: triple_id -> slot -> variant
  std::map<std::string, std::map<std::string, Variant>> labels;
  bool first = true;
  for (const std::string& line : read_lines(sidecar_path)) {
    if (first) {
      first = false;
      continue;
    }
    if (trim_copy(line).empty()) continue;
    auto cols = split(line, '\t');
    if (cols.size() != 3) {
      throw std::runtime_error("sidecar: bad line \"" + line + "\"");
    }
    Variant v;
    if (!parse_variant(cols[2], &v)) {
      throw std::runtime_error("sidecar: unknown variant \"" + cols[2] + "\"");
    }
    labels[cols[0]][lower_copy(cols[1])] = v;
  }

  JudgementBatch batch;
  auto rows = parse_csv(read_file(judgements_csv));
  size_t row_no = 0;
  for (const auto& row : rows) {
    ++row_no;
    if (row_no == 1) continue;  // header
    if (row.size() == 1 && trim_copy(row[0]).empty()) continue;
    if (row.size() != 5) {
      throw std::runtime_error("judgements row " + std::to_string(row_no) +
                               ": expected 5 fields");
    }
    JudgementRecord rec;
    rec.triple_id = trim_copy(row[0]);
    auto triple_it = labels.find(rec.triple_id);
    if (triple_it == labels.end()) {
      throw std::runtime_error("judgements row " + std::to_string(row_no) +
                               ": unknown triple id \"" + rec.triple_id + "\"");
    }
    std::string slot = lower_copy(trim_copy(row[1]));
    auto slot_it = triple_it->second.find(slot);
    if (slot_it == triple_it->second.end()) {
      // accept direct variant names as well
      if (!parse_variant(slot, &rec.variant)) {
        throw std::runtime_error("judgements row " + std::to_string(row_no) +
                                 ": unknown variant slot \"" + row[1] + "\"");
      }
    } else {
      rec.variant = slot_it->second;
    }
    if (!parse_criterion(row[2], &rec.criterion)) {
      throw std::runtime_error("judgements row " + std::to_string(row_no) +
                               ": unknown criterion \"" + row[2] + "\"");
    }
    if (!parse_rating(row[3], &rec.rating)) {
      throw std::runtime_error("judgements row " + std::to_string(row_no) +
                               ": unknown rating \"" + row[3] + "\"");
    }
    rec.worker_id = trim_copy(row[4]);
    batch.records.push_back(std::move(rec));
  }

  // completeness: every exported (triple, variant, criterion over the batch's
  // criteria) must have exactly 5 judgements
  std::set<Criterion> criteria;
  for (const JudgementRecord& r : batch.records) criteria.insert(r.criterion);
  auto grouped = batch.items();
  for (const auto& [triple_id, slots] : labels) {
    for (const auto& [slot, variant] : slots) {
      (void)slot;
      for (Criterion c : criteria) {
        auto it = grouped.find({triple_id, variant, c});
        size_t have = it == grouped.end() ? 0 : it->second.size();
        if (have != 5) {
          batch.incomplete.push_back(triple_id + "/" +
                                     variant_name(variant) + "/" +
                                     criterion_name(c) + ": " +
                                     std::to_string(have) + " of 5");
        }
      }
    }
  }
  if (criteria.empty()) {
    for (const auto& [triple_id, slots] : labels) {
      (void)slots;
      batch.incomplete.push_back(triple_id + ": no judgements");
    }
  }
  std::sort(batch.incomplete.begin(), batch.incomplete.end());
  return batch;
}

}  // namespace revgen
