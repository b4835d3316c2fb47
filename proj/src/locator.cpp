#include "meetsum/locator.hpp"

#include <set>
#include <sstream>

#include "meetsum/error.hpp"

namespace meetsum {

SpanSelection extract_spans(const Meeting& meeting,
                            const QueryInstance& instance) {
  if (instance.meeting_id != meeting.id) {
    throw ValidationError(instance.id + ": instance references meeting '" +
                          instance.meeting_id + "', got '" + meeting.id + "'");
  }
  const int n_turns = static_cast<int>(meeting.turns.size());
  std::set<int> indices;
  for (const auto& span : instance.spans) {
    if (span.begin < 0 || span.begin > span.end || span.end >= n_turns) {
      std::ostringstream msg;
      msg << instance.id << ": span (" << span.begin << "," << span.end
          << ") out of bounds for " << n_turns << " turns";
      throw ValidationError(msg.str());
    }
    for (int i = span.begin; i <= span.end; ++i) indices.insert(i);
  }

  SpanSelection selection;
  selection.instance_id = instance.id;
  for (int i : indices) {
    selection.turns.push_back(meeting.turns[static_cast<std::size_t>(i)]);
  }
  return selection;
}

SpanSelection prepend_query_turn(SpanSelection selection,
                                 const std::string& query) {
  if (selection.query_prepended) {
    throw UsageError(selection.instance_id +
                     ": selection already has a query turn");
  }
  Turn query_turn;
  query_turn.index = -1;  // synthetic; not a meeting position
  query_turn.speaker = kQuestionerSpeaker;
  query_turn.content = query;
  selection.turns.insert(selection.turns.begin(), std::move(query_turn));
  selection.query_prepended = true;
  return selection;
}

}  // namespace meetsum
