#include "trackeval/ranking.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace trackeval {

RankList make_rank_list(std::vector<SequenceScore> scores,
                        const std::vector<std::string>& expected_sequences) {
  if (scores.empty()) throw EmptyInput("rank list needs at least one score");

  std::set<std::string> seen;
  for (const auto& s : scores)
    if (!seen.insert(s.sequence_name).second)
      throw DuplicateSequence("duplicate sequence in rank list: " +
                              s.sequence_name);
  if (!expected_sequences.empty()) {
    for (const auto& name : expected_sequences)
      if (!seen.count(name))
        throw MissingSequence("sequence missing from rank list: " + name);
    if (scores.size() != expected_sequences.size())
      throw DuplicateSequence("rank list has sequences beyond the manifest");
  }

  std::sort(scores.begin(), scores.end(),
            [](const SequenceScore& a, const SequenceScore& b) {
              if (a.aor != b.aor) return a.aor > b.aor;
              return a.sequence_name < b.sequence_name;
            });

  RankList list;
  list.tracker_name = scores.front().tracker_name;
  list.tasks.reserve(scores.size());
  list.scores.reserve(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    list.tasks.push_back(scores[i].sequence_name);
    list.scores.push_back(scores[i].aor);
    if (i > 0 && scores[i].aor == scores[i - 1].aor) list.had_ties = true;
  }
  return list;
}

std::vector<int> to_permutation(const RankList& reference,
                                const RankList& other) {
  if (reference.size() != other.size())
    throw TaskSetMismatch("rank lists have different task counts");

  std::map<std::string, int> rank_of;
  for (std::size_t i = 0; i < reference.tasks.size(); ++i)
    rank_of[reference.tasks[i]] = static_cast<int>(i) + 1;

  std::vector<int> permutation;
  permutation.reserve(other.size());
  for (const auto& task : other.tasks) {
    const auto it = rank_of.find(task);
    if (it == rank_of.end())
      throw TaskSetMismatch("task '" + task + "' not present in both lists");
    permutation.push_back(it->second);
  }
  return permutation;
}

namespace {

std::uint64_t merge_count(std::vector<int>& values, std::vector<int>& buffer,
                          std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::uint64_t count =
      merge_count(values, buffer, lo, mid) + merge_count(values, buffer, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (values[j] < values[i]) {
      count += mid - i;  // values[i..mid) all exceed values[j]
      buffer[k++] = values[j++];
    } else {
      buffer[k++] = values[i++];
    }
  }
  while (i < mid) buffer[k++] = values[i++];
  while (j < hi) buffer[k++] = values[j++];
  std::copy(buffer.begin() + lo, buffer.begin() + hi, values.begin() + lo);
  return count;
}

}  // namespace

std::uint64_t count_inversions(const std::vector<int>& permutation) {
  const std::size_t n = permutation.size();
  std::vector<bool> seen(n, false);
  for (int v : permutation) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[v - 1])
      throw NotAPermutation("input is not a permutation of 1..n");
    seen[v - 1] = true;
  }
  std::vector<int> values = permutation;
  std::vector<int> buffer(n);
  return merge_count(values, buffer, 0, n);
}

double tracker_distance(const RankList& a, const RankList& b,
                        TdNormalizer normalizer) {
  const std::size_t n = a.size();
  if (n < 2)
    throw TooFewTasks("tracker distance needs at least 2 tasks");
  const std::uint64_t inversions = count_inversions(to_permutation(a, b));
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1);
  const double denom =
      normalizer == TdNormalizer::OrderedPairs ? pairs : pairs / 2.0;
  return static_cast<double>(inversions) / denom;
}

TdMatrix td_matrix(const std::vector<RankList>& lists, TdNormalizer normalizer) {
  if (lists.size() < 2)
    throw TooFewTasks("tracker distance matrix needs at least 2 trackers");

  TdMatrix matrix;
  matrix.trackers.reserve(lists.size());
  for (const auto& l : lists) {
    matrix.trackers.push_back(l.tracker_name);
    matrix.any_ties = matrix.any_ties || l.had_ties;
  }
  matrix.values.assign(lists.size(), std::vector<double>(lists.size(), 0.0));
  for (std::size_t i = 0; i < lists.size(); ++i)
    for (std::size_t j = i + 1; j < lists.size(); ++j) {
      const double d = tracker_distance(lists[i], lists[j], normalizer);
      matrix.values[i][j] = d;
      matrix.values[j][i] = d;
    }
  return matrix;
}

}  // namespace trackeval
