#ifndef MEETSUM_CORPUS_HPP
#define MEETSUM_CORPUS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "meetsum/text.hpp"

namespace meetsum {

enum class Split { Train, Test };

const char* to_string(Split split);

struct Turn {
  int index = 0;
  std::string speaker;
  std::string content;
};

struct Meeting {
  std::string id;
  std::vector<Turn> turns;
  Split split = Split::Train;
};

struct Span {
  int begin = 0;
  int end = 0;

  bool operator==(const Span&) const = default;
};

struct QueryInstance {
  std::string id;
  std::string meeting_id;
  std::string query;
  std::string reference_summary;
  std::vector<Span> spans;
  Split split = Split::Train;
  bool general = false;
};

struct NewsArticle {
  std::string id;
  std::vector<std::string> body;        // sentences
  std::vector<std::string> highlights;  // reference summary sentences
};

struct CorpusStats {
  int meeting_count = 0;
  int train_instance_count = 0;
  int test_instance_count = 0;
  std::map<std::string, int> per_meeting_queries;
};

struct Corpus {
  std::vector<Meeting> meetings;
  std::vector<QueryInstance> instances;

  const Meeting* find_meeting(const std::string& id) const;
};

// One QMSum-format JSON document -> the meeting plus one instance per query.
// General queries (no span annotation) get the whole-meeting span.
std::pair<Meeting, std::vector<QueryInstance>> parse_meeting_file(
    const std::string& raw_document, const std::string& meeting_id, Split split);

// Inverse of parse_meeting_file, field-level.
std::string serialize_meeting(const Meeting& meeting,
                              const std::vector<QueryInstance>& instances);

// Reads <root>/train/* and <root>/test/*, files in name order.
Corpus load_corpus(const std::string& root);

// Re-checks every corpus invariant; throws ValidationError on violation.
// Appends non-fatal findings (reserved speaker, duplicate query pairing)
// to *warnings when given.
CorpusStats validate_corpus(const Corpus& corpus,
                            std::vector<std::string>* warnings = nullptr);

// Plain-text story with "@highlight" markers.
NewsArticle parse_news_story(const std::string& raw_story,
                             const std::string& article_id,
                             const Lexicons& lexicons);

// Body sentences grouped into turns of segment_size; highlights joined with
// spaces become the reference summary of a single general query.
std::pair<Meeting, QueryInstance> news_to_pseudo_meeting(
    const NewsArticle& article, int segment_size,
    const std::string& query_prompt);

struct RankedNews {
  std::size_t article_index = 0;
  double score = 0.0;
};

// Cosine similarity between each article's tf-idf vector and the reference
// corpus centroid; top-k, ties by article id ascending.
std::vector<RankedNews> rank_news_by_relatedness(
    const std::vector<NewsArticle>& articles,
    const std::vector<Meeting>& reference_corpus, std::size_t k,
    std::vector<std::string>* warnings = nullptr);

}  // namespace meetsum

#endif
