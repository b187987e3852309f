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

#include "revgen/shallow_parser.h"

#include <cctype>
#include <cstring>
#include <stdexcept>

#include "revgen/util.h"

namespace revgen {

namespace {

bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

const std::set<std::string>& abbreviation_guard() {
  static const std::set<std::string> kGuard = {
      "mr.",  "mrs.", "ms.",  "dr.",   "st.",  "etc.", "vs.",  "inc.",
      "ltd.", "co.",  "jr.",  "sr.",   "prof.", "approx.", "dept.", "est.",
      "min.", "max.", "oz.",  "lb.",   "ave.", "blvd.", "apt.", "no.",
      "fig.", "ft.",  "hr.",  "tbsp.", "tsp.", "a.m.", "p.m.",
  };
  return kGuard;
}

bool is_punct_char(char c) {
  switch (c) {
    case '.': case ',': case '!': case '?': case ';': case ':':
    case '"': case '(': case ')': case '[': case ']': case '{':
    case '}': case '*': case '/': case '\\': case '|': case '<':
    case '>': case '~': case '@': case '#': case '$': case '%':
    case '^': case '&': case '+': case '=': case '`':
      return true;
    default:
      return false;
  }
}

bool is_number_token(const std::string& s) {
  if (s.empty() || !std::isdigit(static_cast<unsigned char>(s[0])) ||
      !std::isdigit(static_cast<unsigned char>(s.back()))) {
    return false;
  }
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '.' && c != ',' &&
        c != ':')
      return false;
  }
  return true;
}

struct ClosedEntry {
  const char* word;
  Pos pos;
};

// Closed-class vocabulary. Possessives are tagged ADJ (classical possessive
// adjectives) so that attributive patterns like "my fav" surface; "no" is
// tagged ADJ for the same reason ("no way", "still no").
const ClosedEntry kClosedClass[] = {
    // determiners
    {"a", Pos::DET}, {"an", Pos::DET}, {"the", Pos::DET}, {"this", Pos::DET},
    {"that", Pos::DET}, {"these", Pos::DET}, {"those", Pos::DET},
    {"every", Pos::DET}, {"each", Pos::DET}, {"some", Pos::DET},
    {"any", Pos::DET}, {"all", Pos::DET}, {"both", Pos::DET},
    {"another", Pos::DET}, {"either", Pos::DET}, {"neither", Pos::DET},
    // possessive adjectives + "no"
    {"my", Pos::ADJ}, {"your", Pos::ADJ}, {"his", Pos::ADJ}, {"her", Pos::ADJ},
    {"its", Pos::ADJ}, {"our", Pos::ADJ}, {"their", Pos::ADJ},
    {"no", Pos::ADJ},
    // prepositions
    {"in", Pos::PREP}, {"on", Pos::PREP}, {"at", Pos::PREP}, {"by", Pos::PREP},
    {"for", Pos::PREP}, {"with", Pos::PREP}, {"from", Pos::PREP},
    {"to", Pos::PREP}, {"of", Pos::PREP}, {"into", Pos::PREP},
    {"onto", Pos::PREP}, {"over", Pos::PREP}, {"under", Pos::PREP},
    {"about", Pos::PREP}, {"after", Pos::PREP}, {"before", Pos::PREP},
    {"between", Pos::PREP}, {"during", Pos::PREP}, {"without", Pos::PREP},
    {"within", Pos::PREP}, {"near", Pos::PREP}, {"off", Pos::PREP},
    {"through", Pos::PREP}, {"against", Pos::PREP}, {"around", Pos::PREP},
    {"behind", Pos::PREP}, {"beside", Pos::PREP}, {"past", Pos::PREP},
    {"per", Pos::PREP}, {"until", Pos::PREP}, {"upon", Pos::PREP},
    {"via", Pos::PREP}, {"across", Pos::PREP}, {"along", Pos::PREP},
    {"among", Pos::PREP}, {"toward", Pos::PREP}, {"towards", Pos::PREP},
    {"inside", Pos::PREP}, {"outside", Pos::PREP}, {"despite", Pos::PREP},
    {"except", Pos::PREP},
    // pronouns
    {"i", Pos::PRON}, {"you", Pos::PRON}, {"he", Pos::PRON},
    {"she", Pos::PRON}, {"it", Pos::PRON}, {"we", Pos::PRON},
    {"they", Pos::PRON}, {"me", Pos::PRON}, {"him", Pos::PRON},
    {"us", Pos::PRON}, {"them", Pos::PRON}, {"myself", Pos::PRON},
    {"yourself", Pos::PRON}, {"himself", Pos::PRON}, {"herself", Pos::PRON},
    {"itself", Pos::PRON}, {"ourselves", Pos::PRON}, {"themselves", Pos::PRON},
    {"someone", Pos::PRON}, {"something", Pos::PRON}, {"anyone", Pos::PRON},
    {"anything", Pos::PRON}, {"everyone", Pos::PRON}, {"everything", Pos::PRON},
    {"nobody", Pos::PRON}, {"nothing", Pos::PRON}, {"who", Pos::PRON},
    {"whom", Pos::PRON}, {"what", Pos::PRON}, {"which", Pos::PRON},
    {"mine", Pos::PRON}, {"yours", Pos::PRON}, {"hers", Pos::PRON},
    {"ours", Pos::PRON}, {"theirs", Pos::PRON},
    // auxiliaries: be/have/do forms, modals, and contraction pieces
    {"am", Pos::AUX}, {"is", Pos::AUX}, {"are", Pos::AUX}, {"was", Pos::AUX},
    {"were", Pos::AUX}, {"be", Pos::AUX}, {"been", Pos::AUX},
    {"being", Pos::AUX}, {"has", Pos::AUX}, {"have", Pos::AUX},
    {"had", Pos::AUX}, {"having", Pos::AUX}, {"do", Pos::AUX},
    {"does", Pos::AUX}, {"did", Pos::AUX}, {"doing", Pos::AUX},
    {"will", Pos::AUX}, {"would", Pos::AUX}, {"can", Pos::AUX},
    {"could", Pos::AUX}, {"shall", Pos::AUX}, {"should", Pos::AUX},
    {"may", Pos::AUX}, {"might", Pos::AUX}, {"must", Pos::AUX},
    {"ca", Pos::AUX}, {"wo", Pos::AUX}, {"sha", Pos::AUX}, {"ai", Pos::AUX},
    {"'s", Pos::AUX}, {"'re", Pos::AUX}, {"'m", Pos::AUX}, {"'ve", Pos::AUX},
    {"'d", Pos::AUX}, {"'ll", Pos::AUX},
    // common adverbs (negation included)
    {"not", Pos::ADV}, {"never", Pos::ADV}, {"n't", Pos::ADV},
    {"very", Pos::ADV}, {"so", Pos::ADV}, {"too", Pos::ADV},
    {"really", Pos::ADV}, {"quite", Pos::ADV}, {"rather", Pos::ADV},
    {"pretty", Pos::ADV}, {"just", Pos::ADV}, {"still", Pos::ADV},
    {"even", Pos::ADV}, {"also", Pos::ADV}, {"only", Pos::ADV},
    {"almost", Pos::ADV}, {"always", Pos::ADV}, {"often", Pos::ADV},
    {"sometimes", Pos::ADV}, {"usually", Pos::ADV}, {"again", Pos::ADV},
    {"here", Pos::ADV}, {"there", Pos::ADV}, {"now", Pos::ADV},
    {"then", Pos::ADV}, {"once", Pos::ADV}, {"twice", Pos::ADV},
    {"ever", Pos::ADV}, {"yet", Pos::ADV}, {"already", Pos::ADV},
    {"soon", Pos::ADV}, {"well", Pos::ADV}, {"most", Pos::ADV},
    {"more", Pos::ADV}, {"less", Pos::ADV}, {"much", Pos::ADV},
    {"far", Pos::ADV}, {"super", Pos::ADV}, {"such", Pos::ADV},
    {"kinda", Pos::ADV}, {"maybe", Pos::ADV}, {"perhaps", Pos::ADV},
    {"wow", Pos::ADV}, {"enough", Pos::ADV}, {"somewhat", Pos::ADV},
    {"anywhere", Pos::ADV}, {"everywhere", Pos::ADV}, {"elsewhere", Pos::ADV},
    // conjunctions and fillers
    {"and", Pos::OTHER}, {"or", Pos::OTHER}, {"but", Pos::OTHER},
    {"nor", Pos::OTHER}, {"if", Pos::OTHER}, {"because", Pos::OTHER},
    {"while", Pos::OTHER}, {"when", Pos::OTHER}, {"where", Pos::OTHER},
    {"as", Pos::OTHER}, {"than", Pos::OTHER}, {"though", Pos::OTHER},
    {"although", Pos::OTHER}, {"since", Pos::OTHER}, {"unless", Pos::OTHER},
    {"however", Pos::OTHER}, {"plus", Pos::OTHER}, {"whether", Pos::OTHER},
    // small numerals
    {"one", Pos::NUM}, {"two", Pos::NUM}, {"three", Pos::NUM},
    {"four", Pos::NUM}, {"five", Pos::NUM}, {"six", Pos::NUM},
    {"seven", Pos::NUM}, {"eight", Pos::NUM}, {"nine", Pos::NUM},
    {"ten", Pos::NUM},
};

}  // namespace

const char* pos_name(Pos pos) {
  switch (pos) {
    case Pos::NOUN: return "NOUN";
    case Pos::VERB: return "VERB";
    case Pos::AUX: return "AUX";
    case Pos::ADJ: return "ADJ";
    case Pos::ADV: return "ADV";
    case Pos::DET: return "DET";
    case Pos::PREP: return "PREP";
    case Pos::PRON: return "PRON";
    case Pos::NUM: return "NUM";
    case Pos::PUNCT: return "PUNCT";
    case Pos::OTHER: return "OTHER";
  }
  return "OTHER";
}

bool is_be_form(const std::string& lower) {
  static const std::set<std::string> kBe = {"am",   "is",   "are", "was",
                                            "were", "be",   "been", "being",
                                            "'s",   "'re",  "'m"};
  return kBe.count(lower) > 0;
}

bool is_have_form(const std::string& lower) {
  static const std::set<std::string> kHave = {"has",  "have", "had",
                                              "having", "'ve", "'d"};
  return kHave.count(lower) > 0;
}

bool is_negation_adverb(const std::string& lower) {
  return lower == "not" || lower == "never" || lower == "n't";
}

std::string detokenize(const std::vector<Token>& tokens) {
  std::string out;
  for (const Token& t : tokens) {
    out += t.space_before;
    out += t.surface;
  }
  return out;
}

TagLexicon::TagLexicon() {
  for (const ClosedEntry& e : kClosedClass) closed_[e.word] = e.pos;
}

TagLexicon TagLexicon::load(const std::filesystem::path& open_class_file,
                            const std::filesystem::path& participle_file) {
  TagLexicon lex;
  for (const std::string& raw : read_lines(open_class_file)) {
    std::string line = trim_copy(raw);
    if (line.empty() || line[0] == '#') continue;
    auto cols = split(line, '\t');
    if (cols.size() != 2) {
      log_warn("tagger lexicon: bad line \"" + line + "\"");
      continue;
    }
    std::string word = lower_copy(trim_copy(cols[0]));
    std::string tag = trim_copy(cols[1]);
    Pos pos;
    if (tag == "NOUN") pos = Pos::NOUN;
    else if (tag == "VERB") pos = Pos::VERB;
    else if (tag == "ADJ") pos = Pos::ADJ;
    else if (tag == "ADV") pos = Pos::ADV;
    else if (tag == "NUM") pos = Pos::NUM;
    else if (tag == "OTHER") pos = Pos::OTHER;
    else {
      log_warn("tagger lexicon: unknown tag \"" + tag + "\" for \"" + word + "\"");
      continue;
    }
    lex.add_open_class(word, pos);
  }
  for (const std::string& raw : read_lines(participle_file)) {
    std::string line = trim_copy(raw);
    if (line.empty() || line[0] == '#') continue;
    lex.add_participle(lower_copy(line));
  }
  return lex;
}

void TagLexicon::add_open_class(const std::string& word, Pos pos) {
  open_[word] = pos;
}

void TagLexicon::add_participle(const std::string& form) {
  participles_.insert(form);
}

bool TagLexicon::lookup(const std::string& lower, Pos* pos) const {
  auto it = closed_.find(lower);
  if (it != closed_.end()) {
    *pos = it->second;
    return true;
  }
  it = open_.find(lower);
  if (it != open_.end()) {
    *pos = it->second;
    return true;
  }
  return false;
}

bool TagLexicon::is_verb_stem(const std::string& lower) const {
  auto it = open_.find(lower);
  return it != open_.end() && it->second == Pos::VERB;
}

bool TagLexicon::is_irregular_participle(const std::string& lower) const {
  return participles_.count(lower) > 0;
}

std::vector<std::string> segment_sentences(const std::string& text) {
  std::vector<std::string> sentences;
  size_t n = text.size();
  size_t start = 0;
  auto emit = [&](size_t from, size_t to) {
    std::string s = trim_copy(std::string_view(text).substr(from, to - from));
    if (!s.empty()) sentences.push_back(std::move(s));
  };
  size_t i = 0;
  while (i < n) {
    if (!is_terminator(text[i])) {
      ++i;
      continue;
    }
    size_t run_end = i;
    while (run_end + 1 < n && is_terminator(text[run_end + 1])) ++run_end;
    size_t next = run_end + 1;
    size_t after_ws = next;
    while (after_ws < n && std::isspace(static_cast<unsigned char>(text[after_ws])))
      ++after_ws;
    bool at_end = after_ws >= n;
    bool boundary = false;
    if (at_end) {
      boundary = true;
    } else if (after_ws > next &&
               (std::isupper(static_cast<unsigned char>(text[after_ws])) ||
                std::isdigit(static_cast<unsigned char>(text[after_ws])))) {
      boundary = true;
      if (run_end == i && text[i] == '.') {
        // abbreviation guard on the word directly before the period
        size_t w_end = i;
        size_t w_begin = w_end;
        while (w_begin > start &&
               (std::isalnum(static_cast<unsigned char>(text[w_begin - 1])) ||
                text[w_begin - 1] == '.')) {
          --w_begin;
        }
        std::string word = lower_copy(std::string_view(text).substr(w_begin, w_end - w_begin)) + ".";
        if (abbreviation_guard().count(word) > 0 || w_end - w_begin == 1) {
          boundary = false;
        }
      }
    }
    if (boundary) {
      emit(start, run_end + 1);
      start = after_ws;
      i = after_ws;
    } else {
      i = run_end + 1;
    }
  }
  if (start < n) emit(start, n);
  return sentences;
}

Pos ShallowParser::tag_word(const std::string& lower) const {
  Pos pos;
  if (lexicon_.lookup(lower, &pos)) return pos;
  if (is_number_token(lower)) return Pos::NUM;
  size_t len = lower.size();
  auto ends_with = [&](const char* suffix) {
    size_t sl = std::strlen(suffix);
    return len > sl && lower.compare(len - sl, sl, suffix) == 0;
  };
  if (ends_with("ly") && len >= 4) return Pos::ADV;
  if (ends_with("ed") || ends_with("ing")) {
    size_t cut = ends_with("ed") ? 2 : 3;
    std::string stem = lower.substr(0, len - cut);
    if (lexicon_.is_verb_stem(stem) || lexicon_.is_verb_stem(stem + "e")) {
      return Pos::VERB;
    }
    if (stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2] &&
        lexicon_.is_verb_stem(stem.substr(0, stem.size() - 1))) {
      return Pos::VERB;
    }
  }
  if (ends_with("ous") || ends_with("ful") || ends_with("able") ||
      ends_with("ible") || ends_with("ive")) {
    return Pos::ADJ;
  }
  return Pos::NOUN;
}

bool ShallowParser::is_participle_form(const std::string& lower) const {
  if (lower.size() > 2 && lower.compare(lower.size() - 2, 2, "ed") == 0)
    return true;
  return lexicon_.is_irregular_participle(lower);
}

std::vector<Token> ShallowParser::tokenize_and_tag(const std::string& sentence) const {
  std::vector<Token> tokens;
  auto push = [&](std::string surface, std::string space, Pos forced,
                  bool force) {
    Token t;
    t.lower = lower_copy(surface);
    t.surface = std::move(surface);
    t.space_before = std::move(space);
    t.pos = force ? forced : tag_word(t.lower);
    t.index = static_cast<int>(tokens.size());
    tokens.push_back(std::move(t));
  };

  size_t i = 0;
  size_t n = sentence.size();
  while (i < n) {
    size_t ws_begin = i;
    while (i < n && std::isspace(static_cast<unsigned char>(sentence[i]))) ++i;
    std::string space = sentence.substr(ws_begin, i - ws_begin);
    if (i >= n) break;
    size_t w_begin = i;
    while (i < n && !std::isspace(static_cast<unsigned char>(sentence[i]))) ++i;
    std::string word = sentence.substr(w_begin, i - w_begin);

    // Numbers with internal punctuation stay whole ("3.50").
    if (is_number_token(word)) {
      push(word, space, Pos::NUM, true);
      continue;
    }

    // Peel leading punctuation.
    size_t b = 0;
    while (b < word.size() && (is_punct_char(word[b]) ||
                               (word[b] == '\'' && b + 1 < word.size() &&
                                is_punct_char(word[b + 1])))) {
      push(std::string(1, word[b]), b == 0 ? space : "", Pos::PUNCT, true);
      if (b == 0) space.clear();
      ++b;
    }
    if (b < word.size() && word[b] == '\'' &&
        (b + 1 >= word.size() ||
         !std::isalpha(static_cast<unsigned char>(word[b + 1])))) {
      push("'", b == 0 ? space : "", Pos::PUNCT, true);
      if (b == 0) space.clear();
      ++b;
    }
    // Peel trailing punctuation (collect, emit after core).
    size_t e = word.size();
    std::vector<char> trail;
    while (e > b && (is_punct_char(word[e - 1]) ||
                     (word[e - 1] == '\'' && e - 1 > b &&
                      !std::isalpha(static_cast<unsigned char>(word[e - 2]))))) {
      trail.push_back(word[e - 1]);
      --e;
    }
    // A bare apostrophe left at the end ("friends'") is punctuation too.
    if (e > b && word[e - 1] == '\'' && e - 1 == b) {
      trail.push_back(word[e - 1]);
      --e;
    }

    std::string core = word.substr(b, e - b);
    if (!core.empty()) {
      if (is_number_token(core)) {
        push(core, space, Pos::NUM, true);
      } else {
        // Contraction split: "don't" -> do + n't; "it's" -> it + 's.
        std::string lower = lower_copy(core);
        size_t cut = std::string::npos;
        if (lower.size() > 3 && lower.compare(lower.size() - 3, 3, "n't") == 0) {
          cut = core.size() - 3;
        } else {
          for (const char* suf : {"'s", "'re", "'m", "'ve", "'d", "'ll"}) {
            size_t sl = std::strlen(suf);
            if (lower.size() > sl &&
                lower.compare(lower.size() - sl, sl, suf) == 0) {
              cut = core.size() - sl;
              break;
            }
          }
        }
        if (cut != std::string::npos && cut > 0) {
          push(core.substr(0, cut), space, Pos::OTHER, false);
          push(core.substr(cut), "", Pos::OTHER, false);
        } else {
          push(core, space, Pos::OTHER, false);
        }
      }
      space.clear();
    }
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
      push(std::string(1, *it), space, Pos::PUNCT, true);
      space.clear();
    }
  }
  return tokens;
}

namespace {

struct NpMatch {
  bool ok = false;
  int end = 0;   // inclusive
  int head = 0;  // last noun (or the pronoun)
};

NpMatch match_np(const std::vector<Token>& t, int i) {
  NpMatch m;
  int n = static_cast<int>(t.size());
  if (i >= n) return m;
  if (t[i].pos == Pos::PRON) {
    m.ok = true;
    m.end = i;
    m.head = i;
    return m;
  }
  int j = i;
  if (t[j].pos == Pos::DET) ++j;
  while (j < n && (t[j].pos == Pos::ADJ || t[j].pos == Pos::ADV ||
                   t[j].pos == Pos::NUM)) {
    ++j;
  }
  if (j >= n || t[j].pos != Pos::NOUN) return m;
  while (j < n && t[j].pos == Pos::NOUN) ++j;
  m.ok = true;
  m.end = j - 1;
  m.head = j - 1;
  return m;
}

struct VpMatch {
  bool ok = false;
  int end = 0;
  int head = 0;  // last verb, or last be/have aux for auxiliary-only VPs
  bool has_main_verb = false;
  bool infinitive = false;
};

VpMatch match_vp(const std::vector<Token>& t, int i) {
  VpMatch m;
  int n = static_cast<int>(t.size());
  int j = i;
  if (j < n && t[j].lower == "to" && j + 1 < n &&
      (t[j + 1].pos == Pos::VERB || t[j + 1].pos == Pos::AUX ||
       (t[j + 1].pos == Pos::ADV && j + 2 < n && t[j + 2].pos == Pos::VERB))) {
    m.infinitive = true;
    ++j;
  } else if (t[i].pos != Pos::AUX && t[i].pos != Pos::VERB &&
             t[i].pos != Pos::ADV) {
    return m;
  }
  int run_begin = j;
  bool saw_aux = false;
  while (j < n && (t[j].pos == Pos::AUX || t[j].pos == Pos::ADV)) {
    saw_aux = saw_aux || t[j].pos == Pos::AUX;
    ++j;
  }
  if (j < n && t[j].pos == Pos::VERB) {
    while (j < n && t[j].pos == Pos::VERB) ++j;
    m.ok = true;
    m.end = j - 1;
    m.head = j - 1;
    m.has_main_verb = true;
    return m;
  }
  // Auxiliary-only VP: must start with an auxiliary (or "to"); trailing
  // adverbs stay inside the chunk ("is always", "will not be").
  if (saw_aux && (t[run_begin].pos == Pos::AUX)) {
    m.ok = true;
    m.end = j - 1;
    for (int k = j - 1; k >= run_begin; --k) {
      if (t[k].pos == Pos::AUX) {
        m.head = k;
        break;
      }
    }
    m.has_main_verb = false;
    return m;
  }
  return VpMatch{};
}

}  // namespace

std::vector<Chunk> ShallowParser::chunk(const std::vector<Token>& tokens) const {
  std::vector<Chunk> chunks;
  int n = static_cast<int>(tokens.size());

  auto vp_chunk = [&](int begin, const VpMatch& vm) {
    Chunk c;
    c.kind = ChunkKind::VP;
    c.begin = begin;
    c.end = vm.end;
    c.head = vm.head;
    c.infinitive = vm.infinitive;
    if (!vm.has_main_verb) {
      c.voice = Voice::AUXILIARY;
    } else {
      // Passive: participle head with a be-form auxiliary before it inside
      // the chunk.
      bool be_aux = false;
      for (int k = vm.head - 1; k >= begin; --k) {
        if (tokens[k].pos == Pos::AUX) {
          be_aux = is_be_form(tokens[k].lower);
          break;
        }
      }
      c.voice = (be_aux && is_participle_form(tokens[vm.head].lower))
                    ? Voice::PASSIVE
                    : Voice::ACTIVE;
    }
    return c;
  };

  int i = 0;
  while (i < n) {
    const Token& tok = tokens[i];
    if (tok.pos == Pos::PUNCT || tok.pos == Pos::OTHER) {
      ++i;
      continue;
    }
    // Infinitive VP beats PP at "to".
    if (tok.pos == Pos::PREP) {
      VpMatch vm = match_vp(tokens, i);
      if (vm.ok && vm.infinitive) {
        chunks.push_back(vp_chunk(i, vm));
        i = vm.end + 1;
        continue;
      }
      NpMatch nm = match_np(tokens, i + 1);
      if (nm.ok) {
        Chunk c;
        c.kind = ChunkKind::PP;
        c.begin = i;
        c.end = nm.end;
        c.head = i;
        c.voice = Voice::NONE;
        chunks.push_back(c);
        i = nm.end + 1;
        continue;
      }
      ++i;
      continue;
    }
    if (tok.pos == Pos::AUX || tok.pos == Pos::VERB || tok.pos == Pos::ADV) {
      VpMatch vm = match_vp(tokens, i);
      if (vm.ok) {
        chunks.push_back(vp_chunk(i, vm));
        i = vm.end + 1;
        continue;
      }
      if (tok.pos == Pos::ADV) {
        NpMatch nm = match_np(tokens, i);
        if (nm.ok) {
          Chunk c;
          c.kind = ChunkKind::NP;
          c.begin = i;
          c.end = nm.end;
          c.head = nm.head;
          c.voice = Voice::NONE;
          chunks.push_back(c);
          i = nm.end + 1;
          continue;
        }
      }
      ++i;
      continue;
    }
    NpMatch nm = match_np(tokens, i);
    if (nm.ok) {
      Chunk c;
      c.kind = ChunkKind::NP;
      c.begin = i;
      c.end = nm.end;
      c.head = nm.head;
      c.voice = Voice::NONE;
      chunks.push_back(c);
      i = nm.end + 1;
      continue;
    }
    ++i;
  }
  return chunks;
}

ParsedSentence ShallowParser::find_relations(const std::vector<Token>& tokens,
                                             const std::vector<Chunk>& chunks) const {
  ParsedSentence out;
  out.tokens = tokens;
  out.chunks = chunks;
  out.text = detokenize(tokens);

  auto token_between = [&](int from_tok, int to_tok, auto pred) {
    for (int k = from_tok + 1; k < to_tok; ++k) {
      if (pred(tokens[k])) return true;
    }
    return false;
  };

  int nc = static_cast<int>(chunks.size());
  for (int ci = 0; ci < nc; ++ci) {
    if (chunks[ci].kind != ChunkKind::VP) continue;
    // subject: nearest preceding NP with no intervening VP
    for (int cj = ci - 1; cj >= 0; --cj) {
      if (chunks[cj].kind == ChunkKind::VP) break;
      if (chunks[cj].kind == ChunkKind::NP) {
        out.subject_of[ci] = cj;
        break;
      }
    }
    // direct object: nearest following NP with no intervening PREP/PUNCT token
    if (chunks[ci].voice == Voice::ACTIVE) {
      for (int cj = ci + 1; cj < nc; ++cj) {
        if (chunks[cj].kind != ChunkKind::NP) {
          if (chunks[cj].kind == ChunkKind::PP) break;  // starts with PREP
          continue;
        }
        if (!token_between(chunks[ci].end, chunks[cj].begin, [](const Token& t) {
              return t.pos == Pos::PREP || t.pos == Pos::PUNCT;
            })) {
          out.dobj_of[ci] = cj;
        }
        break;
      }
    }
    // infinitive attachment: "to"-led VP (or one abutting the previous VP)
    // links to the nearest preceding VP with no NP between
    bool abuts_prev_vp = false;
    for (int cj = ci - 1; cj >= 0; --cj) {
      if (chunks[cj].kind == ChunkKind::VP) {
        abuts_prev_vp = chunks[cj].end + 1 == chunks[ci].begin;
        break;
      }
    }
    if (chunks[ci].infinitive || abuts_prev_vp) {
      for (int cj = ci - 1; cj >= 0; --cj) {
        if (chunks[cj].kind == ChunkKind::NP) break;
        if (chunks[cj].kind == ChunkKind::VP) {
          out.infinitive_of[ci] = cj;
          break;
        }
      }
    }
  }
  // PP attachment: closest preceding VP or NP with no punctuation between
  for (int ci = 0; ci < nc; ++ci) {
    if (chunks[ci].kind != ChunkKind::PP) continue;
    for (int cj = ci - 1; cj >= 0; --cj) {
      if (chunks[cj].kind != ChunkKind::VP && chunks[cj].kind != ChunkKind::NP)
        continue;
      if (!token_between(chunks[cj].end, chunks[ci].begin, [](const Token& t) {
            return t.pos == Pos::PUNCT;
          })) {
        out.prep_attach.emplace_back(cj, ci);
      }
      break;
    }
  }
  return out;
}

ParsedSentence ShallowParser::parse(const std::string& sentence) const {
  std::vector<Token> tokens = tokenize_and_tag(sentence);
  std::vector<Chunk> chunks = chunk(tokens);
  ParsedSentence parsed = find_relations(tokens, chunks);
  parsed.text = sentence;
  return parsed;
}

}  // namespace revgen
