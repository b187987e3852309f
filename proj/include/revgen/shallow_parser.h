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

#ifndef REVGEN_SHALLOW_PARSER_H_
#define REVGEN_SHALLOW_PARSER_H_

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace revgen {

// Coarse tagset; the pattern templates only need these distinctions.
enum class Pos { NOUN, VERB, AUX, ADJ, ADV, DET, PREP, PRON, NUM, PUNCT, OTHER };

const char* pos_name(Pos pos);

struct Token {
  std::string surface;
  std::string lower;
  Pos pos = Pos::OTHER;
  int index = 0;
  // Exact whitespace preceding the token in the original sentence, so that
  // detokenize() reproduces the input byte for byte.
  std::string space_before;
};

// Concatenates space_before + surface over all tokens.
std::string detokenize(const std::vector<Token>& tokens);

enum class ChunkKind { NP, VP, PP };
enum class Voice { ACTIVE, PASSIVE, AUXILIARY, NONE };

struct Chunk {
  ChunkKind kind = ChunkKind::NP;
  int begin = 0;  // inclusive token index
  int end = 0;    // inclusive token index
  int head = 0;   // head token index within [begin, end]
  Voice voice = Voice::NONE;
  bool infinitive = false;  // VP introduced by "to"
};

struct ParsedSentence {
  std::string text;
  std::vector<Token> tokens;
  std::vector<Chunk> chunks;
  // Chunk-index maps. A VP has at most one subject and one direct object.
  std::map<int, int> subject_of;     // VP chunk -> NP chunk
  std::map<int, int> dobj_of;        // VP chunk -> NP chunk
  std::map<int, int> infinitive_of;  // infinitive VP -> governing VP
  std::vector<std::pair<int, int>> prep_attach;  // (VP-or-NP chunk, PP chunk)
};

// Word -> tag entries for the tagger plus the irregular participle list used
// for passive-voice detection. The closed-class vocabulary (determiners,
// prepositions, pronouns, auxiliaries, common adverbs) is compiled in; the
// open-class file extends it and never overrides a closed-class entry.
class TagLexicon {
 public:
  TagLexicon();  // closed-class entries only

  static TagLexicon load(const std::filesystem::path& open_class_file,
                         const std::filesystem::path& participle_file);

  void add_open_class(const std::string& word, Pos pos);
  void add_participle(const std::string& form);

  bool lookup(const std::string& lower, Pos* pos) const;
  bool is_verb_stem(const std::string& lower) const;
  bool is_irregular_participle(const std::string& lower) const;

 private:
  std::map<std::string, Pos> closed_;
  std::map<std::string, Pos> open_;
  std::set<std::string> participles_;
};

// Splits on {. ! ?} followed by whitespace and a capital/digit (or end of
// text), with an abbreviation guard; runs of identical terminators stay with
// their sentence.
std::vector<std::string> segment_sentences(const std::string& text);

class ShallowParser {
 public:
  explicit ShallowParser(TagLexicon lexicon) : lexicon_(std::move(lexicon)) {}

  std::vector<Token> tokenize_and_tag(const std::string& sentence) const;
  std::vector<Chunk> chunk(const std::vector<Token>& tokens) const;
  ParsedSentence find_relations(const std::vector<Token>& tokens,
                                const std::vector<Chunk>& chunks) const;

  // tokenize_and_tag + chunk + find_relations.
  ParsedSentence parse(const std::string& sentence) const;

  const TagLexicon& lexicon() const { return lexicon_; }

 private:
  Pos tag_word(const std::string& lower) const;
  bool is_participle_form(const std::string& lower) const;

  TagLexicon lexicon_;
};

// True for be/have/do forms and modals; used by the chunker and the anchor
// builder in the pattern learner.
bool is_be_form(const std::string& lower);
bool is_have_form(const std::string& lower);
bool is_negation_adverb(const std::string& lower);

}  // namespace revgen

#endif  // REVGEN_SHALLOW_PARSER_H_
