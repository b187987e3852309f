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

#ifndef REVGEN_UTIL_H_
#define REVGEN_UTIL_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace revgen {

// Deterministic splitmix64 generator. Every seeded choice in the toolkit
// goes through this so that outputs are bit-identical across platforms
// (std::uniform_int_distribution is not portable).
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next();

  // Uniform draw in [0, n). n must be > 0.
  uint64_t bounded(uint64_t n);

  // Uniform double in [0, 1).
  double uniform();

  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[bounded(items.size())];
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[bounded(i)]);
    }
  }

  // k distinct indices from [0, n), returned in increasing order.
  std::vector<size_t> sample_indices(size_t n, size_t k);

 private:
  uint64_t state_;
};

uint64_t fnv1a64(std::string_view data);
std::string fnv1a64_hex(std::string_view data);

std::string lower_copy(std::string_view s);
std::string trim_copy(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);
bool is_ascii_upper_word(std::string_view s);

// Fixed-precision decimal rendering (locale-independent).
std::string format_double(double value, int decimals);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);
std::vector<std::string> read_lines(const std::filesystem::path& path);

void log_warn(const std::string& message);

// Minimal CSV support (RFC-4180 style quoting; fields may contain commas,
// quotes and newlines).
std::string csv_escape(std::string_view field);
std::vector<std::vector<std::string>> parse_csv(std::string_view content);

}  // namespace revgen

#endif  // REVGEN_UTIL_H_
