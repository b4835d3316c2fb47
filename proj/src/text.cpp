#include "meetsum/text.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "meetsum/error.hpp"

namespace meetsum {

namespace {

bool is_word_byte(unsigned char c) {
  return std::isalnum(c) || c >= 0x80 || c == '_';
}

bool is_space_byte(unsigned char c) { return std::isspace(c) != 0; }

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && is_space_byte(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && is_space_byte(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

const char* to_string(Pos pos) {
  switch (pos) {
    case Pos::Noun: return "NOUN";
    case Pos::Verb: return "VERB";
    case Pos::Adj: return "ADJ";
    case Pos::Adv: return "ADV";
    case Pos::Pron: return "PRON";
    case Pos::Det: return "DET";
    case Pos::Adp: return "ADP";
    case Pos::Num: return "NUM";
    case Pos::Conj: return "CONJ";
    case Pos::Prt: return "PRT";
    case Pos::Punct: return "PUNCT";
    case Pos::X: return "X";
  }
  return "X";
}

std::optional<Pos> pos_from_string(std::string_view name) {
  static const std::array<Pos, 12> all = {
      Pos::Noun, Pos::Verb, Pos::Adj,  Pos::Adv, Pos::Pron, Pos::Det,
      Pos::Adp,  Pos::Num,  Pos::Conj, Pos::Prt, Pos::Punct, Pos::X};
  for (Pos p : all) {
    if (name == to_string(p)) return p;
  }
  return std::nullopt;
}

std::string to_lower_ascii(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

Lexicons Lexicons::load_dir(const std::string& data_dir) {
  return load(data_dir + "/stopwords.txt", data_dir + "/abbreviations.txt",
              data_dir + "/pos_lexicon.txt");
}

namespace {

void read_lines(const std::string& path,
                const std::function<void(const std::string&)>& fn) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open lexicon file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string entry = trim(line);
    if (entry.empty() || entry[0] == '#') continue;
    fn(entry);
  }
}

}  // namespace

Lexicons Lexicons::load(const std::string& stopwords_path,
                        const std::string& abbreviations_path,
                        const std::string& pos_lexicon_path) {
  Lexicons lx;
  read_lines(stopwords_path, [&](const std::string& e) {
    lx.stopwords_.insert(to_lower_ascii(e));
  });
  read_lines(abbreviations_path, [&](const std::string& e) {
    lx.abbreviations_.insert(to_lower_ascii(e));
  });
  read_lines(pos_lexicon_path, [&](const std::string& e) {
    std::istringstream ss(e);
    std::string word, tag;
    if (!(ss >> word >> tag)) {
      throw ParseError("pos lexicon entry needs <word> <TAG>: '" + e + "' in " +
                       pos_lexicon_path);
    }
    auto pos = pos_from_string(tag);
    if (!pos) {
      throw ParseError("unknown POS tag '" + tag + "' in " + pos_lexicon_path);
    }
    lx.pos_lexicon_[to_lower_ascii(word)] = *pos;
  });
  return lx;
}

bool Lexicons::is_stopword(std::string_view lower) const {
  return stopwords_.count(std::string(lower)) > 0;
}

bool Lexicons::is_abbreviation(std::string_view lower) const {
  return abbreviations_.count(std::string(lower)) > 0;
}

std::optional<Pos> Lexicons::lookup_pos(std::string_view lower) const {
  auto it = pos_lexicon_.find(std::string(lower));
  if (it == pos_lexicon_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> split_sentences(std::string_view text,
                                         const Lexicons& lexicons) {
  std::vector<std::string> out;
  std::size_t start = 0;
  auto emit = [&](std::size_t end) {
    std::string s = trim(text.substr(start, end - start));
    if (!s.empty()) out.push_back(std::move(s));
    start = end;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c != '.' && c != '?' && c != '!') continue;
    bool at_boundary =
        i + 1 == text.size() ||
        is_space_byte(static_cast<unsigned char>(text[i + 1]));
    if (!at_boundary) continue;
    if (c == '.') {
      // Back-scan the preceding word (dots included, so "e.g." matches).
      std::size_t e = i, b = i;
      while (b > start) {
        unsigned char prev = static_cast<unsigned char>(text[b - 1]);
        if (is_word_byte(prev) || prev == '.' || prev == '\'') {
          --b;
        } else {
          break;
        }
      }
      std::string word = to_lower_ascii(text.substr(b, e - b));
      while (!word.empty() && word.back() == '.') word.pop_back();
      if (!word.empty() && lexicons.is_abbreviation(word)) continue;
    }
    emit(i + 1);
  }
  emit(text.size());
  return out;
}

std::vector<std::string> tokenize_words(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (is_space_byte(c)) {
      ++i;
      continue;
    }
    if (is_word_byte(c)) {
      std::size_t j = i + 1;
      while (j < n) {
        unsigned char cj = static_cast<unsigned char>(text[j]);
        if (is_word_byte(cj)) {
          ++j;
        } else if ((cj == '\'' || cj == '-') && j + 1 < n &&
                   is_word_byte(static_cast<unsigned char>(text[j + 1]))) {
          j += 2;
        } else {
          break;
        }
      }
      tokens.emplace_back(text.substr(i, j - i));
      i = j;
    } else {
      tokens.emplace_back(1, text[i]);
      ++i;
    }
  }
  return tokens;
}

namespace {

bool is_punct_token(const std::string& token) {
  return token.size() == 1 &&
         !is_word_byte(static_cast<unsigned char>(token[0]));
}

bool is_number_token(std::string_view lower) {
  bool has_digit = false;
  for (unsigned char c : lower) {
    if (std::isdigit(c)) {
      has_digit = true;
    } else if (c != '.' && c != ',' && c != '-' && c != '%') {
      return false;
    }
  }
  return has_digit;
}

struct SuffixRule {
  const char* suffix;
  std::size_t min_length;
  Pos pos;
};

// Ordered: first match wins.
constexpr SuffixRule kSuffixRules[] = {
    {"ly", 5, Pos::Adv},    {"ing", 6, Pos::Verb},  {"tion", 5, Pos::Noun},
    {"sion", 5, Pos::Noun}, {"ment", 5, Pos::Noun}, {"ness", 5, Pos::Noun},
    {"ship", 6, Pos::Noun}, {"ity", 5, Pos::Noun},  {"ance", 5, Pos::Noun},
    {"ence", 5, Pos::Noun}, {"ous", 5, Pos::Adj},   {"ful", 5, Pos::Adj},
    {"ive", 5, Pos::Adj},   {"able", 5, Pos::Adj},  {"ible", 5, Pos::Adj},
    {"less", 6, Pos::Adj},  {"ical", 5, Pos::Adj},  {"ize", 5, Pos::Verb},
    {"ise", 5, Pos::Verb},  {"ify", 5, Pos::Verb},  {"ed", 4, Pos::Verb},
    {"ist", 5, Pos::Noun},  {"er", 5, Pos::Noun},   {"or", 5, Pos::Noun},
    {"al", 5, Pos::Adj},    {"ic", 5, Pos::Adj},
};

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

Pos tag_word(std::string_view lower, const Lexicons& lexicons) {
  if (auto pos = lexicons.lookup_pos(lower)) return *pos;
  if (is_number_token(lower)) return Pos::Num;
  for (const auto& rule : kSuffixRules) {
    if (lower.size() >= rule.min_length && ends_with(lower, rule.suffix)) {
      return rule.pos;
    }
  }
  return Pos::Noun;
}

TaggedSentence tag_sentence(std::string_view sentence,
                            const Lexicons& lexicons) {
  if (trim(sentence).empty()) {
    throw std::invalid_argument("tag_sentence: empty input");
  }
  TaggedSentence out;
  for (auto& surface : tokenize_words(sentence)) {
    TaggedToken tok;
    tok.lower = to_lower_ascii(surface);
    tok.pos = is_punct_token(surface) ? Pos::Punct : tag_word(tok.lower, lexicons);
    tok.is_stopword = lexicons.is_stopword(tok.lower);
    tok.surface = std::move(surface);
    out.tokens.push_back(std::move(tok));
  }
  return out;
}

std::string join_tokens(const std::vector<std::string>& tokens,
                        const std::vector<bool>& is_punct) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0 && !(i < is_punct.size() && is_punct[i])) out += ' ';
    out += tokens[i];
  }
  return out;
}

}  // namespace meetsum
