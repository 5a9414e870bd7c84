#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "trackeval/ranking.hpp"

namespace trackeval {

struct EvalConfig {
  std::filesystem::path manifest;
  std::filesystem::path out_dir;
  AbsentPolicy absent_policy = AbsentPolicy::CountAsZero;
  std::size_t success_thresholds = 21;
  bool strict_success = true;
  bool skip_first_frame = false;
  TdNormalizer normalizer = TdNormalizer::OrderedPairs;
  // report.txt rank-list excerpt control; 0 prints the full list.
  std::size_t top = 0;
  std::size_t bottom = 0;
};

struct PlotBundle {
  std::string tracker_name;
  std::string sequence_name;
  SuccessCurve success;
  PrecisionCurve precision;
  std::vector<double> bars;  // descending overlap ratios
};

struct TrackerReport {
  AggregateScore aggregate;
  double precision_at_20 = 0.0;  // pooled over all evaluated frames
  RankList rank_list;
};

// One row of the per-(tracker, sequence) score table, in rank order.
struct SequenceRow {
  SequenceScore score;
  double precision_at_20 = 0.0;
  std::size_t rank = 0;  // 1-based within the tracker's rank list
};

struct Report {
  EvalConfig config;
  std::string config_hash;
  std::string dataset_name;
  std::vector<TrackerReport> trackers;    // sorted by tracker name
  std::vector<SequenceRow> sequence_rows; // (tracker asc, rank asc)
  std::optional<TdMatrix> td;             // present when >= 2 trackers
  std::vector<PlotBundle> plots;          // (tracker asc, sequence asc)
  std::vector<std::string> warnings;
};

struct CompareConfig {
  std::filesystem::path manifest_a;
  std::filesystem::path manifest_b;
  std::filesystem::path out_dir;
  ComparisonMode mode = ComparisonMode::QuadExact;
  AbsentPolicy absent_policy = AbsentPolicy::Skip;
};

struct AnnotationComparison {
  CompareConfig config;
  std::string config_hash;
  std::string dataset_a;
  std::string dataset_b;
  std::vector<SequenceScore> per_sequence;  // sorted by sequence name
  double pooled_aor = 0.0;
  double macro_aor = 0.0;
  std::size_t total_frames = 0;
  std::vector<std::string> warnings;
};

// Full pipeline: ingest -> metrics -> ranking, then writes aggregate.csv,
// sequence_scores.csv, td_matrix.csv (when >= 2 trackers), report.txt and
// plots/<tracker>/<sequence>.{success,precision,bars}.csv under out_dir.
// Identical inputs and config produce byte-identical files.
Report run_evaluate(const EvalConfig& config);

// Ground-truth-vs-ground-truth AOR table over two manifests covering the
// same sequences; writes annotation_comparison.csv and report.txt.
AnnotationComparison run_compare_annotations(const CompareConfig& config);

// Writes the three plot-data files for one (tracker, sequence) pair.
void run_plot_data(const EvalConfig& config, const std::string& tracker,
                   const std::string& sequence);

}  // namespace trackeval
