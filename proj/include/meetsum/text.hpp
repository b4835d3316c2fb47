#ifndef MEETSUM_TEXT_HPP
#define MEETSUM_TEXT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace meetsum {

// Coarse tagset. Only verb detection and merge keys depend on it, so a
// lexicon + suffix-rule tagger is enough; no trained models.
enum class Pos {
  Noun,
  Verb,
  Adj,
  Adv,
  Pron,
  Det,
  Adp,
  Num,
  Conj,
  Prt,
  Punct,
  X,
};

const char* to_string(Pos pos);
std::optional<Pos> pos_from_string(std::string_view name);

struct TaggedToken {
  std::string surface;
  std::string lower;
  Pos pos = Pos::X;
  bool is_stopword = false;

  bool is_content() const { return !is_stopword && pos != Pos::Punct; }
};

struct TaggedSentence {
  std::vector<TaggedToken> tokens;
  int utterance_index = 0;
  int sentence_index = 0;
};

// Stopwords, sentence-split abbreviation guards and the POS lexicon are
// plain-text data files, one entry per line ('#' starts a comment).
class Lexicons {
 public:
  static Lexicons load_dir(const std::string& data_dir);
  static Lexicons load(const std::string& stopwords_path,
                       const std::string& abbreviations_path,
                       const std::string& pos_lexicon_path);

  bool is_stopword(std::string_view lower) const;
  bool is_abbreviation(std::string_view lower) const;
  std::optional<Pos> lookup_pos(std::string_view lower) const;

  std::size_t stopword_count() const { return stopwords_.size(); }

 private:
  std::unordered_set<std::string> stopwords_;
  std::unordered_set<std::string> abbreviations_;
  std::unordered_map<std::string, Pos> pos_lexicon_;
};

std::string to_lower_ascii(std::string_view text);

// Splits at [.?!] followed by whitespace or end of text, guarded by the
// abbreviation list. Text without terminal punctuation is one sentence.
std::vector<std::string> split_sentences(std::string_view text,
                                         const Lexicons& lexicons);

// Word tokens are maximal runs of [alnum | byte >= 0x80], with interior
// apostrophes/hyphens kept; any other character is a one-char token.
std::vector<std::string> tokenize_words(std::string_view text);

// Lexicon lookup, then suffix rules, then NOUN.
Pos tag_word(std::string_view lower, const Lexicons& lexicons);

// Throws std::invalid_argument on empty input.
TaggedSentence tag_sentence(std::string_view sentence, const Lexicons& lexicons);

// Joins tokens with single spaces, with no space before punctuation tokens.
std::string join_tokens(const std::vector<std::string>& tokens,
                        const std::vector<bool>& is_punct);

}  // namespace meetsum

#endif
