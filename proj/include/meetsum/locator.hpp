#ifndef MEETSUM_LOCATOR_HPP
#define MEETSUM_LOCATOR_HPP

#include <string>
#include <vector>

#include "meetsum/corpus.hpp"

namespace meetsum {

inline constexpr const char* kQuestionerSpeaker = "questioner";

struct SpanSelection {
  std::string instance_id;
  std::vector<Turn> turns;  // ascending original meeting order, deduplicated
  bool query_prepended = false;
};

// Union of the instance's inclusive span ranges, ascending, deduplicated.
SpanSelection extract_spans(const Meeting& meeting,
                            const QueryInstance& instance);

// Inserts the query as a synthetic first turn spoken by "questioner".
// Throws UsageError if the selection is already query-prepended.
SpanSelection prepend_query_turn(SpanSelection selection,
                                 const std::string& query);

}  // namespace meetsum

#endif
