#include "trackeval/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace trackeval {

namespace {

double kahan_sum(const std::vector<double>& values) {
  double sum = 0.0, comp = 0.0;
  for (double x : values) {
    const double y = x - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

double shape_area(const FrameAnnotation& f) {
  if (const auto* box = std::get_if<BoundingBox>(&f)) return box->area();
  return std::get<QuadAnnotation>(f).area();
}

BoundingBox envelope(const FrameAnnotation& f) {
  if (const auto* box = std::get_if<BoundingBox>(&f)) return *box;
  return quad_to_rect(std::get<QuadAnnotation>(f));
}

std::optional<Point> center_of(const FrameAnnotation& f) {
  if (is_absent(f)) return std::nullopt;
  return envelope(f).center();
}

}  // namespace

double mean_of(const std::vector<double>& values) {
  return kahan_sum(values) / static_cast<double>(values.size());
}

double annotation_iou(const FrameAnnotation& a, const FrameAnnotation& b,
                      ComparisonMode mode) {
  if (is_absent(a) || is_absent(b))
    throw EmptyInput("annotation_iou needs two present annotations");

  if (mode == ComparisonMode::RectEnvelope)
    return rect_iou(envelope(a), envelope(b));

  const auto* ra = std::get_if<BoundingBox>(&a);
  const auto* rb = std::get_if<BoundingBox>(&b);
  if (ra && rb) return rect_iou(*ra, *rb);

  // Mixed or quad/quad: promote boxes to quads. A zero-area side cannot
  // overlap anything, so the ratio is 0 without promotion.
  if (shape_area(a) == 0.0 || shape_area(b) == 0.0) return 0.0;
  const QuadAnnotation qa =
      ra ? QuadAnnotation::from_rect(*ra) : std::get<QuadAnnotation>(a);
  const QuadAnnotation qb =
      rb ? QuadAnnotation::from_rect(*rb) : std::get<QuadAnnotation>(b);
  return quad_iou(qa, qb);
}

OverlapSeries overlap_series(const AlignedPair& pair, AbsentPolicy policy,
                             std::string tracker_name, ComparisonMode mode) {
  OverlapSeries out;
  out.sequence_name = pair.sequence_name;
  out.tracker_name = std::move(tracker_name);
  for (const auto& [gt, pred] : pair.frames) {
    if (is_absent(gt)) {
      ++out.skipped;
      continue;
    }
    if (is_absent(pred)) {
      if (policy == AbsentPolicy::CountAsZero)
        out.values.push_back(0.0);
      else
        ++out.skipped;
      continue;
    }
    out.values.push_back(annotation_iou(gt, pred, mode));
  }
  if (out.values.empty())
    throw EmptySeries("no evaluable frames in sequence '" +
                      pair.sequence_name + "'");
  return out;
}

SequenceScore aor(const OverlapSeries& series) {
  if (series.values.empty())
    throw EmptySeries("empty overlap series for '" + series.sequence_name + "'");
  return {series.sequence_name, series.tracker_name, mean_of(series.values),
          series.values.size()};
}

SuccessCurve success_curve(const OverlapSeries& series,
                           std::size_t num_thresholds, bool strict) {
  if (num_thresholds < 2)
    throw ConfigError("success curve needs at least 2 thresholds");
  if (series.values.empty())
    throw EmptySeries("empty overlap series for '" + series.sequence_name + "'");

  std::vector<double> sorted = series.values;
  std::sort(sorted.begin(), sorted.end());
  const double count = static_cast<double>(sorted.size());

  SuccessCurve curve;
  curve.thresholds.reserve(num_thresholds);
  curve.success_rates.reserve(num_thresholds);
  for (std::size_t i = 0; i < num_thresholds; ++i) {
    const double t = static_cast<double>(i) /
                     static_cast<double>(num_thresholds - 1);
    const auto first_over =
        strict ? std::upper_bound(sorted.begin(), sorted.end(), t)
               : std::lower_bound(sorted.begin(), sorted.end(), t);
    curve.thresholds.push_back(t);
    curve.success_rates.push_back(
        static_cast<double>(sorted.end() - first_over) / count);
  }
  curve.auc = mean_of(curve.success_rates);
  return curve;
}

double auc_aor_gap(const OverlapSeries& series, std::size_t num_thresholds,
                   bool strict) {
  return success_curve(series, num_thresholds, strict).auc -
         aor(series).aor;
}

PrecisionCurve precision_curve(const AlignedPair& pair) {
  std::vector<double> errors;
  errors.reserve(pair.frames.size());
  for (const auto& [gt, pred] : pair.frames) {
    const auto cg = center_of(gt);
    const auto cp = center_of(pred);
    if (!cg || !cp) continue;
    errors.push_back(std::hypot(cg->x - cp->x, cg->y - cp->y));
  }
  if (errors.empty())
    throw EmptySeries("no frames with both annotations present in '" +
                      pair.sequence_name + "'");

  std::sort(errors.begin(), errors.end());
  const double count = static_cast<double>(errors.size());

  PrecisionCurve curve;
  for (int t = 0; t <= 50; ++t) {
    const auto within =
        std::upper_bound(errors.begin(), errors.end(), static_cast<double>(t));
    curve.thresholds.push_back(static_cast<double>(t));
    curve.precisions.push_back(
        static_cast<double>(within - errors.begin()) / count);
  }
  curve.precision_at_20 = curve.precisions[20];
  return curve;
}

std::vector<double> sorted_overlap_bars(const OverlapSeries& series) {
  if (series.values.empty())
    throw EmptySeries("empty overlap series for '" + series.sequence_name + "'");
  std::vector<double> bars = series.values;
  std::sort(bars.begin(), bars.end(), std::greater<double>());
  return bars;
}

AggregateScore aggregate(const std::vector<SequenceScore>& scores,
                         const std::vector<OverlapSeries>& series) {
  if (scores.empty() || series.empty())
    throw EmptyInput("aggregate needs at least one sequence");
  if (scores.size() != series.size())
    throw EmptyInput("aggregate: scores and series must pair up");

  AggregateScore agg;
  agg.tracker_name = scores.front().tracker_name;

  std::vector<double> pooled;
  for (const auto& s : series)
    pooled.insert(pooled.end(), s.values.begin(), s.values.end());
  agg.pooled_aor = mean_of(pooled);

  std::vector<double> aors;
  aors.reserve(scores.size());
  for (const auto& s : scores) aors.push_back(s.aor);
  agg.macro_aor = mean_of(aors);

  double var = 0.0;
  for (double a : aors) var += (a - agg.macro_aor) * (a - agg.macro_aor);
  agg.aor_variance = var / static_cast<double>(aors.size());

  OverlapSeries pooled_series;
  pooled_series.sequence_name = "<pooled>";
  pooled_series.tracker_name = agg.tracker_name;
  pooled_series.values = std::move(pooled);
  agg.auc_otb = success_curve(pooled_series, 21).auc;
  return agg;
}

}  // namespace trackeval
