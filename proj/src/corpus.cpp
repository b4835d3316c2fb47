#include "meetsum/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "meetsum/error.hpp"
#include "meetsum/rouge.hpp"

namespace meetsum {

namespace fs = std::filesystem;
using nlohmann::json;

const char* to_string(Split split) {
  return split == Split::Train ? "train" : "test";
}

const Meeting* Corpus::find_meeting(const std::string& id) const {
  for (const auto& m : meetings) {
    if (m.id == id) return &m;
  }
  return nullptr;
}

namespace {

std::string trimmed(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

const json& require_field(const json& obj, const char* field,
                          const std::string& where) {
  auto it = obj.find(field);
  if (it == obj.end()) {
    throw ParseError(where + ": missing field '" + field + "'");
  }
  return *it;
}

std::string require_string(const json& obj, const char* field,
                           const std::string& where) {
  const json& v = require_field(obj, field, where);
  if (!v.is_string()) {
    throw ParseError(where + ": field '" + field + "' must be a string");
  }
  return v.get<std::string>();
}

// Span indices arrive as strings in the public release; accept both forms.
int span_index(const json& v, const std::string& where) {
  if (v.is_number_integer()) return v.get<int>();
  if (v.is_string()) {
    const std::string s = trimmed(v.get<std::string>());
    if (!s.empty() &&
        std::all_of(s.begin(), s.end(), [](unsigned char c) {
          return std::isdigit(c) != 0;
        })) {
      return std::stoi(s);
    }
  }
  throw ParseError(where + ": span index must be an integer or numeric string");
}

void check_span(const Span& span, int turn_count,
                const std::string& instance_id) {
  if (span.begin < 0 || span.begin > span.end || span.end >= turn_count) {
    std::ostringstream msg;
    msg << instance_id << ": span (" << span.begin << "," << span.end
        << ") out of bounds for " << turn_count << " turns";
    throw ValidationError(msg.str());
  }
}

}  // namespace

std::pair<Meeting, std::vector<QueryInstance>> parse_meeting_file(
    const std::string& raw_document, const std::string& meeting_id,
    Split split) {
  json doc;
  try {
    doc = json::parse(raw_document);
  } catch (const json::parse_error& e) {
    throw ParseError(meeting_id + ": invalid JSON document: " + e.what());
  }
  if (!doc.is_object()) {
    throw ParseError(meeting_id + ": document root must be an object");
  }

  Meeting meeting;
  meeting.id = meeting_id;
  meeting.split = split;

  const json& transcripts =
      require_field(doc, "meeting_transcripts", meeting_id);
  if (!transcripts.is_array() || transcripts.empty()) {
    throw ParseError(meeting_id +
                     ": field 'meeting_transcripts' must be a nonempty array");
  }
  for (std::size_t i = 0; i < transcripts.size(); ++i) {
    const std::string where =
        meeting_id + ": meeting_transcripts[" + std::to_string(i) + "]";
    Turn turn;
    turn.index = static_cast<int>(i);
    turn.speaker = require_string(transcripts[i], "speaker", where);
    turn.content = require_string(transcripts[i], "content", where);
    if (trimmed(turn.speaker).empty()) {
      throw ParseError(where + ": field 'speaker' is empty");
    }
    meeting.turns.push_back(std::move(turn));
  }
  const int n_turns = static_cast<int>(meeting.turns.size());

  std::vector<QueryInstance> instances;
  auto base_instance = [&](const json& q, const std::string& where,
                           const std::string& id, bool general) {
    QueryInstance inst;
    inst.id = id;
    inst.meeting_id = meeting_id;
    inst.split = split;
    inst.general = general;
    inst.query = require_string(q, "query", where);
    inst.reference_summary = require_string(q, "answer", where);
    if (trimmed(inst.query).empty()) {
      throw ParseError(where + ": field 'query' is empty");
    }
    if (trimmed(inst.reference_summary).empty()) {
      throw ParseError(where + ": field 'answer' is empty");
    }
    return inst;
  };

  if (auto it = doc.find("general_query_list"); it != doc.end()) {
    if (!it->is_array()) {
      throw ParseError(meeting_id + ": field 'general_query_list' must be an array");
    }
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string where =
          meeting_id + ": general_query_list[" + std::to_string(i) + "]";
      QueryInstance inst = base_instance(
          (*it)[i], where, meeting_id + "#g" + std::to_string(i), true);
      inst.spans = {Span{0, n_turns - 1}};
      instances.push_back(std::move(inst));
    }
  }
  if (auto it = doc.find("specific_query_list"); it != doc.end()) {
    if (!it->is_array()) {
      throw ParseError(meeting_id + ": field 'specific_query_list' must be an array");
    }
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string where =
          meeting_id + ": specific_query_list[" + std::to_string(i) + "]";
      QueryInstance inst = base_instance(
          (*it)[i], where, meeting_id + "#s" + std::to_string(i), false);
      const json& spans = require_field((*it)[i], "relevant_text_span", where);
      if (!spans.is_array() || spans.empty()) {
        throw ParseError(where +
                         ": field 'relevant_text_span' must be a nonempty array");
      }
      for (const auto& pair : spans) {
        if (!pair.is_array() || pair.size() != 2) {
          throw ParseError(where +
                           ": each relevant_text_span entry must be a [begin, end] pair");
        }
        Span span{span_index(pair[0], where), span_index(pair[1], where)};
        check_span(span, n_turns, inst.id);
        inst.spans.push_back(span);
      }
      instances.push_back(std::move(inst));
    }
  }

  return {std::move(meeting), std::move(instances)};
}

std::string serialize_meeting(const Meeting& meeting,
                              const std::vector<QueryInstance>& instances) {
  json doc;
  doc["meeting_transcripts"] = json::array();
  for (const auto& turn : meeting.turns) {
    doc["meeting_transcripts"].push_back(
        {{"speaker", turn.speaker}, {"content", turn.content}});
  }
  doc["general_query_list"] = json::array();
  doc["specific_query_list"] = json::array();
  for (const auto& inst : instances) {
    if (inst.general) {
      doc["general_query_list"].push_back(
          {{"query", inst.query}, {"answer", inst.reference_summary}});
    } else {
      json spans = json::array();
      for (const auto& span : inst.spans) {
        spans.push_back({span.begin, span.end});
      }
      doc["specific_query_list"].push_back({{"query", inst.query},
                                            {"answer", inst.reference_summary},
                                            {"relevant_text_span", spans}});
    }
  }
  return doc.dump(2) + "\n";
}

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void load_split(const fs::path& dir, Split split, Corpus& corpus) {
  if (!fs::exists(dir)) return;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    auto [meeting, instances] =
        parse_meeting_file(read_file(path), path.stem().string(), split);
    corpus.meetings.push_back(std::move(meeting));
    corpus.instances.insert(corpus.instances.end(),
                            std::make_move_iterator(instances.begin()),
                            std::make_move_iterator(instances.end()));
  }
}

}  // namespace

Corpus load_corpus(const std::string& root) {
  const fs::path base(root);
  if (!fs::exists(base)) {
    throw ParseError("corpus root does not exist: " + root);
  }
  Corpus corpus;
  load_split(base / "train", Split::Train, corpus);
  load_split(base / "test", Split::Test, corpus);
  if (corpus.meetings.empty() && !fs::exists(base / "train") &&
      !fs::exists(base / "test")) {
    throw ParseError("corpus root has neither train/ nor test/: " + root);
  }
  return corpus;
}

CorpusStats validate_corpus(const Corpus& corpus,
                            std::vector<std::string>* warnings) {
  CorpusStats stats;
  stats.meeting_count = static_cast<int>(corpus.meetings.size());

  std::set<std::string> meeting_ids;
  for (const auto& meeting : corpus.meetings) {
    if (!meeting_ids.insert(meeting.id).second) {
      throw ValidationError("duplicate meeting id: " + meeting.id);
    }
    for (std::size_t i = 0; i < meeting.turns.size(); ++i) {
      const Turn& turn = meeting.turns[i];
      if (turn.index != static_cast<int>(i)) {
        throw ValidationError(meeting.id + ": turn index " +
                              std::to_string(turn.index) + " at position " +
                              std::to_string(i));
      }
      if (trimmed(turn.speaker).empty()) {
        throw ValidationError(meeting.id + ": empty speaker at turn " +
                              std::to_string(i));
      }
      if (warnings && trimmed(turn.speaker) == "questioner") {
        warnings->push_back(meeting.id + ": turn " + std::to_string(i) +
                            " uses the reserved speaker 'questioner'");
      }
    }
  }

  std::set<std::string> instance_ids;
  std::set<std::pair<std::string, std::string>> query_pairs;
  for (const auto& inst : corpus.instances) {
    if (!instance_ids.insert(inst.id).second) {
      throw ValidationError("duplicate instance id: " + inst.id);
    }
    const Meeting* meeting = corpus.find_meeting(inst.meeting_id);
    if (meeting == nullptr) {
      throw ValidationError(inst.id + ": references unknown meeting '" +
                            inst.meeting_id + "'");
    }
    if (trimmed(inst.query).empty() || trimmed(inst.reference_summary).empty()) {
      throw ValidationError(inst.id + ": empty query or reference summary");
    }
    for (const auto& span : inst.spans) {
      check_span(span, static_cast<int>(meeting->turns.size()), inst.id);
    }
    if (warnings &&
        !query_pairs.insert({inst.meeting_id, inst.query}).second) {
      warnings->push_back(inst.id + ": duplicate (query, meeting) pairing");
    }
    if (inst.split == Split::Train) {
      ++stats.train_instance_count;
    } else {
      ++stats.test_instance_count;
    }
    ++stats.per_meeting_queries[inst.meeting_id];
  }
  return stats;
}

NewsArticle parse_news_story(const std::string& raw_story,
                             const std::string& article_id,
                             const Lexicons& lexicons) {
  static const std::string kMarker = "@highlight";
  NewsArticle article;
  article.id = article_id;

  std::vector<std::string> sections;
  std::size_t pos = 0;
  while (true) {
    std::size_t hit = raw_story.find(kMarker, pos);
    if (hit == std::string::npos) {
      sections.push_back(raw_story.substr(pos));
      break;
    }
    sections.push_back(raw_story.substr(pos, hit - pos));
    pos = hit + kMarker.size();
  }
  if (sections.size() < 2) {
    throw ParseError(article_id + ": no @highlight markers");
  }

  article.body = split_sentences(sections.front(), lexicons);
  if (article.body.empty()) {
    throw ParseError(article_id + ": story body is empty");
  }
  for (std::size_t i = 1; i < sections.size(); ++i) {
    // A highlight section may span lines; collapse whitespace runs.
    std::istringstream ss(sections[i]);
    std::string word, highlight;
    while (ss >> word) {
      if (!highlight.empty()) highlight += ' ';
      highlight += word;
    }
    if (highlight.empty()) {
      throw ParseError(article_id + ": empty @highlight section " +
                       std::to_string(i));
    }
    article.highlights.push_back(std::move(highlight));
  }
  return article;
}

std::pair<Meeting, QueryInstance> news_to_pseudo_meeting(
    const NewsArticle& article, int segment_size,
    const std::string& query_prompt) {
  if (segment_size < 1) {
    throw UsageError("news_to_pseudo_meeting: segment_size must be >= 1");
  }
  if (article.body.empty() || article.highlights.empty()) {
    throw ValidationError(article.id + ": article has empty body or highlights");
  }

  Meeting meeting;
  meeting.id = article.id;
  meeting.split = Split::Train;
  for (std::size_t begin = 0; begin < article.body.size();
       begin += static_cast<std::size_t>(segment_size)) {
    const std::size_t end = std::min(
        begin + static_cast<std::size_t>(segment_size), article.body.size());
    Turn turn;
    turn.index = static_cast<int>(meeting.turns.size());
    turn.speaker = "speaker_" + std::to_string(meeting.turns.size());
    for (std::size_t i = begin; i < end; ++i) {
      if (i > begin) turn.content += ' ';
      turn.content += article.body[i];
    }
    meeting.turns.push_back(std::move(turn));
  }

  QueryInstance inst;
  inst.id = article.id + "#g0";
  inst.meeting_id = meeting.id;
  inst.query = query_prompt;
  inst.general = true;
  inst.split = Split::Train;
  for (std::size_t i = 0; i < article.highlights.size(); ++i) {
    if (i > 0) inst.reference_summary += ' ';
    inst.reference_summary += article.highlights[i];
  }
  inst.spans = {Span{0, static_cast<int>(meeting.turns.size()) - 1}};
  return {std::move(meeting), std::move(inst)};
}

namespace {

std::map<std::string, int> term_counts(const std::vector<std::string>& texts) {
  std::map<std::string, int> counts;
  for (const auto& text : texts) {
    for (auto& token : tokenize_for_rouge(text)) {
      ++counts[token];
    }
  }
  return counts;
}

}  // namespace

std::vector<RankedNews> rank_news_by_relatedness(
    const std::vector<NewsArticle>& articles,
    const std::vector<Meeting>& reference_corpus, std::size_t k,
    std::vector<std::string>* warnings) {
  if (reference_corpus.empty()) {
    throw UsageError("rank_news_by_relatedness: empty reference corpus");
  }

  // Document frequencies and the centroid of L2-normalized tf-idf vectors
  // over the reference meetings. std::map keeps summation order fixed.
  const std::size_t n_docs = reference_corpus.size();
  std::vector<std::map<std::string, int>> doc_counts;
  doc_counts.reserve(n_docs);
  std::map<std::string, int> df;
  for (const auto& meeting : reference_corpus) {
    std::vector<std::string> texts;
    texts.reserve(meeting.turns.size());
    for (const auto& turn : meeting.turns) texts.push_back(turn.content);
    doc_counts.push_back(term_counts(texts));
    for (const auto& [term, count] : doc_counts.back()) {
      (void)count;
      ++df[term];
    }
  }
  auto idf = [&](const std::string& term) {
    auto it = df.find(term);
    const int d = it == df.end() ? 0 : it->second;
    return std::log((1.0 + static_cast<double>(n_docs)) / (1.0 + d)) + 1.0;
  };

  std::map<std::string, double> centroid;
  for (const auto& counts : doc_counts) {
    double norm_sq = 0.0;
    for (const auto& [term, count] : counts) {
      const double v = count * idf(term);
      norm_sq += v * v;
    }
    const double norm = std::sqrt(norm_sq);
    if (norm == 0.0) continue;
    for (const auto& [term, count] : counts) {
      centroid[term] += count * idf(term) / norm;
    }
  }
  double centroid_norm_sq = 0.0;
  for (const auto& [term, v] : centroid) centroid_norm_sq += v * v;
  const double centroid_norm = std::sqrt(centroid_norm_sq);

  std::vector<RankedNews> ranked;
  ranked.reserve(articles.size());
  for (std::size_t i = 0; i < articles.size(); ++i) {
    const auto counts = term_counts(articles[i].body);
    double dot = 0.0, norm_sq = 0.0;
    for (const auto& [term, count] : counts) {
      const double v = count * idf(term);
      norm_sq += v * v;
      auto it = centroid.find(term);
      if (it != centroid.end()) dot += v * it->second;
    }
    const double denom = std::sqrt(norm_sq) * centroid_norm;
    ranked.push_back({i, denom > 0.0 ? dot / denom : 0.0});
  }

  std::sort(ranked.begin(), ranked.end(),
            [&](const RankedNews& a, const RankedNews& b) {
              if (a.score != b.score) return a.score > b.score;
              return articles[a.article_index].id < articles[b.article_index].id;
            });
  if (k < ranked.size()) {
    ranked.resize(k);
  } else if (k > ranked.size() && warnings) {
    warnings->push_back("rank_news_by_relatedness: requested " +
                        std::to_string(k) + " articles but only " +
                        std::to_string(ranked.size()) + " available");
  }
  return ranked;
}

}  // namespace meetsum
