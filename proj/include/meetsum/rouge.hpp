#ifndef MEETSUM_ROUGE_HPP
#define MEETSUM_ROUGE_HPP

#include <string>
#include <string_view>
#include <vector>

namespace meetsum {

class Lexicons;

struct PRF {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

PRF make_prf(double precision, double recall);

struct RougeReport {
  PRF rouge1;
  PRF rouge2;
  PRF rougeL;
};

struct RougeOptions {
  bool stemming = false;
  bool remove_stopwords = false;
  const Lexicons* lexicons = nullptr;  // required when remove_stopwords
};

// Case-fold and split on non-alphanumeric runs; no stemming or stopword
// removal unless toggled on.
std::vector<std::string> tokenize_for_rouge(std::string_view text,
                                            const RougeOptions& options = {});

// Clipped n-gram precision/recall; zero denominators score 0.
PRF rouge_n(const std::vector<std::string>& candidate,
            const std::vector<std::string>& reference, int n);

// Summary-level longest common subsequence.
PRF rouge_l(const std::vector<std::string>& candidate,
            const std::vector<std::string>& reference);

RougeReport score_rouge(std::string_view candidate, std::string_view reference,
                        const RougeOptions& options = {});

// Arithmetic mean of every component; throws UsageError on an empty set.
RougeReport aggregate(const std::vector<RougeReport>& reports);

// Porter (1980) stemmer, ASCII lowercase input.
std::string porter_stem(const std::string& word);

}  // namespace meetsum

#endif
