#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trackeval/metrics.hpp"

namespace trackeval {

// A tracker's sequences ordered by descending AOR. Equal scores fall back
// to ascending sequence name so the ordering is deterministic; had_ties
// records that the fallback fired.
struct RankList {
  std::string tracker_name;
  std::vector<std::string> tasks;
  std::vector<double> scores;  // parallel to tasks, non-increasing
  bool had_ties = false;

  std::size_t size() const { return tasks.size(); }
};

// Normalizer for the inversion count. OrderedPairs divides by n(n-1),
// giving the [0, 0.5] scale; MaxInversions divides by n(n-1)/2 for [0, 1].
enum class TdNormalizer { OrderedPairs, MaxInversions };

struct TdMatrix {
  std::vector<std::string> trackers;
  std::vector<std::vector<double>> values;  // symmetric, zero diagonal
  bool any_ties = false;
};

// Sorts one tracker's per-sequence scores into a rank list. When
// `expected_sequences` is non-empty the score set must cover it exactly.
RankList make_rank_list(std::vector<SequenceScore> scores,
                        const std::vector<std::string>& expected_sequences = {});

// Relabels `other` by the 1-based rank ids that `reference` assigns to
// each task; the result is a permutation of 1..n.
std::vector<int> to_permutation(const RankList& reference,
                                const RankList& other);

// Number of out-of-order pairs, by merge-sort counting in O(n log n).
std::uint64_t count_inversions(const std::vector<int>& permutation);

// Inversion count of `other` relabeled by `reference`, normalized.
double tracker_distance(const RankList& a, const RankList& b,
                        TdNormalizer normalizer = TdNormalizer::OrderedPairs);

// Full pairwise distance matrix over >= 2 trackers with a shared task set.
TdMatrix td_matrix(const std::vector<RankList>& lists,
                   TdNormalizer normalizer = TdNormalizer::OrderedPairs);

}  // namespace trackeval
