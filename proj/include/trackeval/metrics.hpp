#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "trackeval/ingest.hpp"

namespace trackeval {

// What to do when the prediction is Absent but the ground truth is not.
// Frames with Absent ground truth are always excluded.
enum class AbsentPolicy { Skip, CountAsZero };

// How mixed quad/rect annotation pairs are compared.
enum class ComparisonMode { QuadExact, RectEnvelope };

struct OverlapSeries {
  std::string sequence_name;
  std::string tracker_name;
  std::vector<double> values;  // per evaluated frame, in frame order, in [0,1]
  std::size_t skipped = 0;     // frames excluded because of Absent entries
};

struct SuccessCurve {
  std::vector<double> thresholds;     // strictly increasing, uniform on [0,1]
  std::vector<double> success_rates;  // non-increasing
  double auc = 0.0;                   // arithmetic mean of the sampled rates
};

struct PrecisionCurve {
  std::vector<double> thresholds;  // 0..50 px, step 1
  std::vector<double> precisions;  // non-decreasing
  double precision_at_20 = 0.0;
};

struct SequenceScore {
  std::string sequence_name;
  std::string tracker_name;
  double aor = 0.0;  // arithmetic mean of the overlap series
  std::size_t frame_count = 0;
};

struct AggregateScore {
  std::string tracker_name;
  double pooled_aor = 0.0;    // frame-weighted mean over all sequences
  double macro_aor = 0.0;     // unweighted mean of per-sequence AORs
  double aor_variance = 0.0;  // population variance of per-sequence AORs
  double auc_otb = 0.0;       // success AUC of the pooled series, 21 thresholds
};

// Overlap for one frame pair; zero-area shapes overlap nothing. QuadExact
// promotes boxes to quads when a quad is involved; RectEnvelope collapses
// quads to their axis-aligned envelope.
double annotation_iou(const FrameAnnotation& a, const FrameAnnotation& b,
                      ComparisonMode mode = ComparisonMode::QuadExact);

// Per-frame overlap ratios of an aligned pair, in frame order.
OverlapSeries overlap_series(const AlignedPair& pair, AbsentPolicy policy,
                             std::string tracker_name = "",
                             ComparisonMode mode = ComparisonMode::QuadExact);

SequenceScore aor(const OverlapSeries& series);

// Success plot at `num_thresholds` uniform samples of [0,1] inclusive.
// `strict` counts frames with overlap > t; the non-strict variant uses >= t.
SuccessCurve success_curve(const OverlapSeries& series,
                           std::size_t num_thresholds, bool strict = true);

// success AUC minus AOR: the discretization error of the sampled AUC.
double auc_aor_gap(const OverlapSeries& series, std::size_t num_thresholds,
                   bool strict = true);

// Center-error precision over frames where both sides are present.
// Quads contribute their axis-aligned envelope center.
PrecisionCurve precision_curve(const AlignedPair& pair);

// Values sorted descending; the mean is unchanged by sorting.
std::vector<double> sorted_overlap_bars(const OverlapSeries& series);

// Dataset-level roll-up for one tracker. `scores` and `series` are the
// per-sequence results, index-aligned.
AggregateScore aggregate(const std::vector<SequenceScore>& scores,
                         const std::vector<OverlapSeries>& series);

// Compensated mean; order-insensitive to ~1 ulp, which keeps the
// sorted/unsorted means of the same series bit-comparable.
double mean_of(const std::vector<double>& values);

}  // namespace trackeval
