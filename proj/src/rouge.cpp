#include "meetsum/rouge.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "meetsum/error.hpp"
#include "meetsum/text.hpp"

namespace meetsum {

PRF make_prf(double precision, double recall) {
  PRF prf;
  prf.precision = precision;
  prf.recall = recall;
  prf.f1 = precision + recall > 0.0
               ? 2.0 * precision * recall / (precision + recall)
               : 0.0;
  return prf;
}

namespace {

bool is_token_byte(unsigned char c) { return std::isalnum(c) || c >= 0x80; }

}  // namespace

std::vector<std::string> tokenize_for_rouge(std::string_view text,
                                            const RougeOptions& options) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&]() {
    if (current.empty()) return;
    if (options.remove_stopwords) {
      if (options.lexicons == nullptr) {
        throw UsageError("tokenize_for_rouge: stopword removal needs lexicons");
      }
      if (options.lexicons->is_stopword(current)) {
        current.clear();
        return;
      }
    }
    if (options.stemming) current = porter_stem(current);
    tokens.push_back(std::move(current));
    current.clear();
  };
  for (char ch : text) {
    unsigned char c = static_cast<unsigned char>(ch);
    if (is_token_byte(c)) {
      current += static_cast<char>(std::tolower(c));
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

PRF rouge_n(const std::vector<std::string>& candidate,
            const std::vector<std::string>& reference, int n) {
  if (n != 1 && n != 2) {
    throw UsageError("rouge_n: n must be 1 or 2");
  }
  const std::size_t un = static_cast<std::size_t>(n);
  const std::size_t cand_grams =
      candidate.size() >= un ? candidate.size() - un + 1 : 0;
  const std::size_t ref_grams =
      reference.size() >= un ? reference.size() - un + 1 : 0;

  auto gram_counts = [un](const std::vector<std::string>& tokens) {
    std::map<std::vector<std::string>, std::size_t> counts;
    if (tokens.size() < un) return counts;
    for (std::size_t i = 0; i + un <= tokens.size(); ++i) {
      ++counts[std::vector<std::string>(tokens.begin() + i,
                                        tokens.begin() + i + un)];
    }
    return counts;
  };

  const auto cand_counts = gram_counts(candidate);
  const auto ref_counts = gram_counts(reference);
  std::size_t matches = 0;
  for (const auto& [gram, count] : ref_counts) {
    auto it = cand_counts.find(gram);
    if (it != cand_counts.end()) matches += std::min(count, it->second);
  }

  const double precision =
      cand_grams > 0 ? static_cast<double>(matches) / cand_grams : 0.0;
  const double recall =
      ref_grams > 0 ? static_cast<double>(matches) / ref_grams : 0.0;
  return make_prf(precision, recall);
}

PRF rouge_l(const std::vector<std::string>& candidate,
            const std::vector<std::string>& reference) {
  const std::size_t m = candidate.size(), n = reference.size();
  if (m == 0 || n == 0) return make_prf(0.0, 0.0);

  // Row-rolling LCS.
  std::vector<std::size_t> prev(n + 1, 0), curr(n + 1, 0);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (candidate[i - 1] == reference[j - 1]) {
        curr[j] = prev[j - 1] + 1;
      } else {
        curr[j] = std::max(prev[j], curr[j - 1]);
      }
    }
    std::swap(prev, curr);
  }
  const double lcs = static_cast<double>(prev[n]);
  return make_prf(lcs / m, lcs / n);
}

RougeReport score_rouge(std::string_view candidate, std::string_view reference,
                        const RougeOptions& options) {
  const auto cand = tokenize_for_rouge(candidate, options);
  const auto ref = tokenize_for_rouge(reference, options);
  RougeReport report;
  report.rouge1 = rouge_n(cand, ref, 1);
  report.rouge2 = rouge_n(cand, ref, 2);
  report.rougeL = rouge_l(cand, ref);
  return report;
}

RougeReport aggregate(const std::vector<RougeReport>& reports) {
  if (reports.empty()) {
    throw UsageError("aggregate: empty report set");
  }
  RougeReport mean;
  auto add = [](PRF& acc, const PRF& x) {
    acc.precision += x.precision;
    acc.recall += x.recall;
    acc.f1 += x.f1;
  };
  for (const auto& r : reports) {
    add(mean.rouge1, r.rouge1);
    add(mean.rouge2, r.rouge2);
    add(mean.rougeL, r.rougeL);
  }
  const double n = static_cast<double>(reports.size());
  auto div = [n](PRF& acc) {
    acc.precision /= n;
    acc.recall /= n;
    acc.f1 /= n;
  };
  div(mean.rouge1);
  div(mean.rouge2);
  div(mean.rougeL);
  return mean;
}

// ---------------------------------------------------------------------------
// Porter (1980) stemmer.

namespace {

class Porter {
 public:
  explicit Porter(std::string word) : w_(std::move(word)) {}

  std::string run() {
    if (w_.size() <= 2) return w_;
    step1a();
    step1b();
    step1c();
    step2();
    step3();
    step4();
    step5();
    return w_;
  }

 private:
  std::string w_;
  std::size_t stem_ = 0;  // length of the stem a matched suffix leaves

  bool is_consonant(std::size_t i) const {
    switch (w_[i]) {
      case 'a': case 'e': case 'i': case 'o': case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !is_consonant(i - 1);
      default:
        return true;
    }
  }

  // Number of VC sequences in w_[0, len).
  int measure(std::size_t len) const {
    int m = 0;
    std::size_t i = 0;
    while (i < len && is_consonant(i)) ++i;
    while (i < len) {
      while (i < len && !is_consonant(i)) ++i;
      if (i == len) break;
      ++m;
      while (i < len && is_consonant(i)) ++i;
    }
    return m;
  }

  bool has_vowel(std::size_t len) const {
    for (std::size_t i = 0; i < len; ++i) {
      if (!is_consonant(i)) return true;
    }
    return false;
  }

  bool double_consonant() const {
    const std::size_t n = w_.size();
    return n >= 2 && w_[n - 1] == w_[n - 2] && is_consonant(n - 1);
  }

  // Stem ends consonant-vowel-consonant where the final consonant is not
  // w, x or y; used to restore a final 'e'.
  bool cvc(std::size_t len) const {
    if (len < 3) return false;
    if (!is_consonant(len - 3) || is_consonant(len - 2) ||
        !is_consonant(len - 1)) {
      return false;
    }
    const char c = w_[len - 1];
    return c != 'w' && c != 'x' && c != 'y';
  }

  bool ends(const char* suffix) {
    const std::size_t sn = std::char_traits<char>::length(suffix);
    if (w_.size() < sn) return false;
    if (w_.compare(w_.size() - sn, sn, suffix) != 0) return false;
    stem_ = w_.size() - sn;
    return true;
  }

  void set_to(const char* replacement) {
    w_.resize(stem_);
    w_ += replacement;
  }

  void replace_if_m_gt0(const char* replacement) {
    if (measure(stem_) > 0) set_to(replacement);
  }

  void step1a() {
    if (ends("sses")) {
      set_to("ss");
    } else if (ends("ies")) {
      set_to("i");
    } else if (ends("ss")) {
      // keep
    } else if (ends("s")) {
      set_to("");
    }
  }

  void step1b() {
    if (ends("eed")) {
      if (measure(stem_) > 0) set_to("ee");
      return;
    }
    bool stripped = false;
    if (ends("ed") && has_vowel(stem_)) {
      set_to("");
      stripped = true;
    } else if (ends("ing") && has_vowel(stem_)) {
      set_to("");
      stripped = true;
    }
    if (!stripped) return;
    if (ends("at")) {
      set_to("ate");
    } else if (ends("bl")) {
      set_to("ble");
    } else if (ends("iz")) {
      set_to("ize");
    } else if (double_consonant()) {
      const char c = w_.back();
      if (c != 'l' && c != 's' && c != 'z') w_.pop_back();
    } else if (measure(w_.size()) == 1 && cvc(w_.size())) {
      w_ += 'e';
    }
  }

  void step1c() {
    if (ends("y") && has_vowel(stem_)) set_to("i");
  }

  void step2() {
    static const std::pair<const char*, const char*> rules[] = {
        {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},
        {"anci", "ance"},   {"izer", "ize"},    {"abli", "able"},
        {"alli", "al"},     {"entli", "ent"},   {"eli", "e"},
        {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
        {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"},
        {"fulness", "ful"}, {"ousness", "ous"}, {"aliti", "al"},
        {"iviti", "ive"},   {"biliti", "ble"},
    };
    for (const auto& [suffix, replacement] : rules) {
      if (ends(suffix)) {
        replace_if_m_gt0(replacement);
        return;
      }
    }
  }

  void step3() {
    static const std::pair<const char*, const char*> rules[] = {
        {"icate", "ic"}, {"ative", ""},  {"alize", "al"}, {"iciti", "ic"},
        {"ical", "ic"},  {"ful", ""},    {"ness", ""},
    };
    for (const auto& [suffix, replacement] : rules) {
      if (ends(suffix)) {
        replace_if_m_gt0(replacement);
        return;
      }
    }
  }

  void step4() {
    static const char* suffixes[] = {
        "al", "ance", "ence", "er",  "ic",  "able", "ible", "ant", "ement",
        "ment", "ent", "ion", "ou",  "ism", "ate",  "iti",  "ous", "ive",
        "ize",
    };
    for (const char* suffix : suffixes) {
      if (!ends(suffix)) continue;
      // "ement" must win over "ment"/"ent": ends() matched the first listed
      // suffix; longer variants appear earlier in the list above.
      if (std::string_view(suffix) == "ion") {
        if (stem_ > 0 && (w_[stem_ - 1] == 's' || w_[stem_ - 1] == 't') &&
            measure(stem_) > 1) {
          set_to("");
        }
      } else if (measure(stem_) > 1) {
        set_to("");
      }
      return;
    }
  }

  void step5() {
    if (!w_.empty() && w_.back() == 'e') {
      const std::size_t len = w_.size() - 1;
      const int m = measure(len);
      if (m > 1 || (m == 1 && !cvc(len))) w_.pop_back();
    }
    if (w_.size() >= 2 && w_.back() == 'l' && double_consonant() &&
        measure(w_.size()) > 1) {
      w_.pop_back();
    }
  }
};

}  // namespace

std::string porter_stem(const std::string& word) {
  return Porter(word).run();
}

}  // namespace meetsum
