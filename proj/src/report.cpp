#include "trackeval/report.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>

namespace trackeval {

namespace fs = std::filesystem;

namespace {

constexpr const char* kSchemaVersion = "1";

std::string fmt_full(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

const char* policy_name(AbsentPolicy p) {
  return p == AbsentPolicy::Skip ? "skip" : "count-as-zero";
}

const char* normalizer_name(TdNormalizer n) {
  return n == TdNormalizer::OrderedPairs ? "ordered-pairs" : "max-inversions";
}

const char* mode_name(ComparisonMode m) {
  return m == ComparisonMode::QuadExact ? "quad-exact" : "rect-envelope";
}

// The hash covers what determines the numbers, not where they land, so
// reruns into different directories stay byte-identical.
std::string eval_config_key(const EvalConfig& c) {
  return std::string("evaluate|manifest=") + c.manifest.string() +
         "|absent=" + policy_name(c.absent_policy) +
         "|thresholds=" + std::to_string(c.success_thresholds) +
         "|strict=" + (c.strict_success ? "1" : "0") +
         "|skip_first=" + (c.skip_first_frame ? "1" : "0") +
         "|normalizer=" + normalizer_name(c.normalizer) +
         "|top=" + std::to_string(c.top) +
         "|bottom=" + std::to_string(c.bottom);
}

std::string compare_config_key(const CompareConfig& c) {
  return std::string("compare|a=") + c.manifest_a.string() +
         "|b=" + c.manifest_b.string() + "|mode=" + mode_name(c.mode) +
         "|absent=" + policy_name(c.absent_policy);
}

void write_file(const fs::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write output file: " + path.string());
  out << content;
  if (!out) throw ConfigError("failed while writing: " + path.string());
}

std::string schema_line(const std::string& name, const std::string& hash) {
  return "# schema=trackeval." + name + "/" + kSchemaVersion +
         " config=" + hash + "\n";
}

Trajectory parse_ground_truth(const SequenceEntry& entry) {
  return entry.format == AnnotationFormat::Quad
             ? parse_quad_file(entry.gt_path, entry.name)
             : parse_rect_file(entry.gt_path, entry.name);
}

// One (tracker, sequence) evaluation: series, curves, bars, score.
struct PairResult {
  OverlapSeries series;
  SequenceScore score;
  PlotBundle plots;
  std::size_t evaluated_count = 0;  // frames with both sides present
  std::vector<std::string> warnings;
};

PairResult evaluate_pair(const EvalConfig& config, const DatasetManifest& manifest,
                         const TrackerEntry& tracker, const SequenceEntry& sequence) {
  const Trajectory gt = parse_ground_truth(sequence);
  // Tracker outputs may be boxes or quads; the quad parser accepts both.
  const Trajectory pred =
      parse_quad_file(manifest.result_path(tracker, sequence.name), sequence.name);

  AlignedPair pair = align(gt, pred);
  if (config.skip_first_frame) pair = drop_first_frame(pair);

  PairResult result;
  result.warnings = pair.warnings;
  result.evaluated_count = pair.evaluated_count;
  result.series = overlap_series(pair, config.absent_policy, tracker.name);
  result.score = aor(result.series);
  result.plots.tracker_name = tracker.name;
  result.plots.sequence_name = sequence.name;
  result.plots.success = success_curve(result.series, config.success_thresholds,
                                       config.strict_success);
  result.plots.precision = precision_curve(pair);
  result.plots.bars = sorted_overlap_bars(result.series);
  return result;
}

std::string render_csv_tables(const Report& report, std::string& aggregate_csv,
                              std::string& sequence_csv) {
  aggregate_csv = schema_line("aggregate", report.config_hash);
  aggregate_csv +=
      "tracker,pooled_aor,macro_aor,aor_variance,auc_otb,precision_at_20\n";
  for (const auto& t : report.trackers) {
    aggregate_csv += t.aggregate.tracker_name + ',' +
                     fmt3(t.aggregate.pooled_aor) + ',' +
                     fmt3(t.aggregate.macro_aor) + ',' +
                     fmt3(t.aggregate.aor_variance) + ',' +
                     fmt3(t.aggregate.auc_otb) + ',' +
                     fmt3(t.precision_at_20) + '\n';
  }

  sequence_csv = schema_line("sequence_scores", report.config_hash);
  sequence_csv += "tracker,rank,sequence,aor,frame_count,precision_at_20\n";
  for (const auto& row : report.sequence_rows) {
    sequence_csv += row.score.tracker_name + ',' + std::to_string(row.rank) +
                    ',' + row.score.sequence_name + ',' + fmt3(row.score.aor) +
                    ',' + std::to_string(row.score.frame_count) + ',' +
                    fmt3(row.precision_at_20) + '\n';
  }
  return aggregate_csv;
}

std::string render_td_csv(const Report& report) {
  const TdMatrix& td = *report.td;
  std::string out = schema_line("td_matrix", report.config_hash);
  out += "tracker";
  for (const auto& name : td.trackers) out += ',' + name;
  out += '\n';
  for (std::size_t i = 0; i < td.trackers.size(); ++i) {
    out += td.trackers[i];
    for (std::size_t j = 0; j < td.trackers.size(); ++j)
      out += ',' + fmt3(td.values[i][j]);
    out += '\n';
  }
  return out;
}

void render_rank_list(std::string& out, const RankList& list, std::size_t top,
                      std::size_t bottom) {
  const std::size_t n = list.size();
  const bool excerpt = (top > 0 || bottom > 0) && top + bottom < n;
  auto emit = [&](std::size_t i) {
    out += "      - rank: " + std::to_string(i + 1) + "\n";
    out += "        sequence: " + list.tasks[i] + "\n";
    out += "        aor: " + fmt_full(list.scores[i]) + "\n";
  };
  if (!excerpt) {
    for (std::size_t i = 0; i < n; ++i) emit(i);
    return;
  }
  for (std::size_t i = 0; i < top; ++i) emit(i);
  out += "      - omitted: " + std::to_string(n - top - bottom) + "\n";
  for (std::size_t i = n - bottom; i < n; ++i) emit(i);
}

std::string render_report_txt(const Report& report) {
  const EvalConfig& c = report.config;
  std::string out;
  out += "schema: trackeval.report/" + std::string(kSchemaVersion) + "\n";
  out += "config_hash: " + report.config_hash + "\n";
  out += "config:\n";
  out += "  command: evaluate\n";
  out += "  manifest: " + c.manifest.string() + "\n";
  out += "  absent_policy: " + std::string(policy_name(c.absent_policy)) + "\n";
  out += "  success_thresholds: " + std::to_string(c.success_thresholds) + "\n";
  out += std::string("  strict_success: ") +
         (c.strict_success ? "true" : "false") + "\n";
  out += std::string("  skip_first_frame: ") +
         (c.skip_first_frame ? "true" : "false") + "\n";
  out += "  normalizer: " + std::string(normalizer_name(c.normalizer)) + "\n";
  out += "  top: " + std::to_string(c.top) + "\n";
  out += "  bottom: " + std::to_string(c.bottom) + "\n";
  out += "dataset: " + report.dataset_name + "\n";
  out += "sequence_count: " +
         std::to_string(report.trackers.empty()
                            ? 0
                            : report.trackers.front().rank_list.size()) +
         "\n";
  out += "tracker_count: " + std::to_string(report.trackers.size()) + "\n";
  out += "trackers:\n";
  for (const auto& t : report.trackers) {
    out += "  - name: " + t.aggregate.tracker_name + "\n";
    out += "    pooled_aor: " + fmt_full(t.aggregate.pooled_aor) + "\n";
    out += "    macro_aor: " + fmt_full(t.aggregate.macro_aor) + "\n";
    out += "    aor_variance: " + fmt_full(t.aggregate.aor_variance) + "\n";
    out += "    auc_otb: " + fmt_full(t.aggregate.auc_otb) + "\n";
    out += "    precision_at_20: " + fmt_full(t.precision_at_20) + "\n";
    out += std::string("    rank_ties: ") +
           (t.rank_list.had_ties ? "true" : "false") + "\n";
    out += "    rank_list:\n";
    render_rank_list(out, t.rank_list, c.top, c.bottom);
  }
  if (report.td) {
    const TdMatrix& td = *report.td;
    out += "td_matrix:\n";
    out += "  normalizer: " + std::string(normalizer_name(c.normalizer)) + "\n";
    out += std::string("  rank_ties_present: ") +
           (td.any_ties ? "true" : "false") + "\n";
    out += "  trackers:";
    for (const auto& name : td.trackers) out += ' ' + name;
    out += '\n';
    out += "  rows:\n";
    for (std::size_t i = 0; i < td.trackers.size(); ++i) {
      out += "    - " + td.trackers[i] + ":";
      for (std::size_t j = 0; j < td.trackers.size(); ++j)
        out += ' ' + fmt_full(td.values[i][j]);
      out += '\n';
    }
  } else {
    out += "td_matrix: skipped (needs at least 2 trackers)\n";
  }
  out += "warnings:\n";
  if (report.warnings.empty()) out += "  none\n";
  for (const auto& w : report.warnings) out += "  - " + w + "\n";
  return out;
}

void write_plot_files(const fs::path& out_dir, const std::string& hash,
                      const PlotBundle& bundle) {
  const fs::path dir = out_dir / "plots" / bundle.tracker_name;
  const std::string stem = bundle.sequence_name;

  std::string success = schema_line("plot.success", hash);
  success += "threshold,success_rate\n";
  for (std::size_t i = 0; i < bundle.success.thresholds.size(); ++i)
    success += fmt_full(bundle.success.thresholds[i]) + ',' +
               fmt_full(bundle.success.success_rates[i]) + '\n';
  write_file(dir / (stem + ".success.csv"), success);

  std::string precision = schema_line("plot.precision", hash);
  precision += "threshold,precision\n";
  for (std::size_t i = 0; i < bundle.precision.thresholds.size(); ++i)
    precision += fmt_full(bundle.precision.thresholds[i]) + ',' +
                 fmt_full(bundle.precision.precisions[i]) + '\n';
  write_file(dir / (stem + ".precision.csv"), precision);

  std::string bars = schema_line("plot.bars", hash);
  bars += "rank,overlap\n";
  for (std::size_t i = 0; i < bundle.bars.size(); ++i)
    bars += std::to_string(i + 1) + ',' + fmt_full(bundle.bars[i]) + '\n';
  write_file(dir / (stem + ".bars.csv"), bars);
}

}  // namespace

Report run_evaluate(const EvalConfig& config) {
  DatasetManifest manifest = load_manifest(config.manifest);

  // Deterministic assembly order: tracker name, then sequence name.
  std::sort(manifest.sequences.begin(), manifest.sequences.end(),
            [](const auto& a, const auto& b) { return a.name < b.name; });
  std::sort(manifest.trackers.begin(), manifest.trackers.end(),
            [](const auto& a, const auto& b) { return a.name < b.name; });

  std::vector<std::string> sequence_names;
  for (const auto& s : manifest.sequences) sequence_names.push_back(s.name);

  Report report;
  report.config = config;
  report.config_hash = hex64(fnv1a(eval_config_key(config)));
  report.dataset_name = manifest.dataset_name;

  std::vector<RankList> rank_lists;
  for (const auto& tracker : manifest.trackers) {
    std::vector<SequenceScore> scores;
    std::vector<OverlapSeries> series;
    std::map<std::string, std::pair<double, std::size_t>> precision_by_sequence;
    double frames_within_20 = 0.0;
    std::size_t frames_evaluated = 0;

    for (const auto& sequence : manifest.sequences) {
      PairResult pair = evaluate_pair(config, manifest, tracker, sequence);
      for (auto& w : pair.warnings)
        report.warnings.push_back("tracker '" + tracker.name + "': " + w);
      precision_by_sequence[sequence.name] = {
          pair.plots.precision.precision_at_20, pair.evaluated_count};
      frames_within_20 +=
          pair.plots.precision.precision_at_20 *
          static_cast<double>(pair.evaluated_count);
      frames_evaluated += pair.evaluated_count;
      scores.push_back(pair.score);
      series.push_back(std::move(pair.series));
      report.plots.push_back(std::move(pair.plots));
    }

    TrackerReport tr;
    tr.aggregate = aggregate(scores, series);
    tr.precision_at_20 =
        frames_evaluated == 0
            ? 0.0
            : frames_within_20 / static_cast<double>(frames_evaluated);
    tr.rank_list = make_rank_list(scores, sequence_names);
    rank_lists.push_back(tr.rank_list);

    for (std::size_t rank = 0; rank < tr.rank_list.size(); ++rank) {
      SequenceRow row;
      row.rank = rank + 1;
      row.score.tracker_name = tracker.name;
      row.score.sequence_name = tr.rank_list.tasks[rank];
      row.score.aor = tr.rank_list.scores[rank];
      for (const auto& s : scores)
        if (s.sequence_name == row.score.sequence_name)
          row.score.frame_count = s.frame_count;
      row.precision_at_20 =
          precision_by_sequence.at(row.score.sequence_name).first;
      report.sequence_rows.push_back(std::move(row));
    }
    report.trackers.push_back(std::move(tr));
  }

  if (rank_lists.size() >= 2)
    report.td = td_matrix(rank_lists, config.normalizer);

  std::string aggregate_csv, sequence_csv;
  render_csv_tables(report, aggregate_csv, sequence_csv);
  write_file(config.out_dir / "aggregate.csv", aggregate_csv);
  write_file(config.out_dir / "sequence_scores.csv", sequence_csv);
  if (report.td) write_file(config.out_dir / "td_matrix.csv", render_td_csv(report));
  write_file(config.out_dir / "report.txt", render_report_txt(report));
  for (const auto& bundle : report.plots)
    write_plot_files(config.out_dir, report.config_hash, bundle);

  return report;
}

AnnotationComparison run_compare_annotations(const CompareConfig& config) {
  DatasetManifest a = load_manifest(config.manifest_a, false);
  DatasetManifest b = load_manifest(config.manifest_b, false);

  std::sort(a.sequences.begin(), a.sequences.end(),
            [](const auto& x, const auto& y) { return x.name < y.name; });
  std::sort(b.sequences.begin(), b.sequences.end(),
            [](const auto& x, const auto& y) { return x.name < y.name; });

  if (a.sequences.size() != b.sequences.size())
    throw ManifestError("annotation sets cover different sequence counts");
  for (std::size_t i = 0; i < a.sequences.size(); ++i)
    if (a.sequences[i].name != b.sequences[i].name)
      throw ManifestError("annotation sets cover different sequences: '" +
                          a.sequences[i].name + "' vs '" +
                          b.sequences[i].name + "'");

  AnnotationComparison cmp;
  cmp.config = config;
  cmp.config_hash = hex64(fnv1a(compare_config_key(config)));
  cmp.dataset_a = a.dataset_name;
  cmp.dataset_b = b.dataset_name;

  std::vector<OverlapSeries> all_series;
  for (std::size_t i = 0; i < a.sequences.size(); ++i) {
    const Trajectory gt_a = parse_ground_truth(a.sequences[i]);
    const Trajectory gt_b = parse_ground_truth(b.sequences[i]);
    AlignedPair pair = align(gt_a, gt_b);
    for (auto& w : pair.warnings) cmp.warnings.push_back(w);
    OverlapSeries series =
        overlap_series(pair, config.absent_policy, b.dataset_name, config.mode);
    cmp.per_sequence.push_back(aor(series));
    all_series.push_back(std::move(series));
  }

  std::vector<double> pooled;
  std::vector<double> aors;
  for (const auto& s : all_series)
    pooled.insert(pooled.end(), s.values.begin(), s.values.end());
  for (const auto& s : cmp.per_sequence) aors.push_back(s.aor);
  cmp.pooled_aor = mean_of(pooled);
  cmp.macro_aor = mean_of(aors);
  cmp.total_frames = pooled.size();

  std::string csv = schema_line("annotation_comparison", cmp.config_hash);
  csv += "sequence,aor,frame_count\n";
  for (const auto& s : cmp.per_sequence)
    csv += s.sequence_name + ',' + fmt3(s.aor) + ',' +
           std::to_string(s.frame_count) + '\n';
  write_file(config.out_dir / "annotation_comparison.csv", csv);

  std::string txt;
  txt += "schema: trackeval.compare/" + std::string(kSchemaVersion) + "\n";
  txt += "config_hash: " + cmp.config_hash + "\n";
  txt += "config:\n";
  txt += "  command: compare-annotations\n";
  txt += "  manifest_a: " + config.manifest_a.string() + "\n";
  txt += "  manifest_b: " + config.manifest_b.string() + "\n";
  txt += "  mode: " + std::string(mode_name(config.mode)) + "\n";
  txt += "  absent_policy: " + std::string(policy_name(config.absent_policy)) + "\n";
  txt += "dataset_a: " + cmp.dataset_a + "\n";
  txt += "dataset_b: " + cmp.dataset_b + "\n";
  txt += "sequence_count: " + std::to_string(cmp.per_sequence.size()) + "\n";
  txt += "total_frames: " + std::to_string(cmp.total_frames) + "\n";
  txt += "overall:\n";
  txt += "  pooled_aor: " + fmt_full(cmp.pooled_aor) + "\n";
  txt += "  macro_aor: " + fmt_full(cmp.macro_aor) + "\n";
  txt += "sequences:\n";
  for (const auto& s : cmp.per_sequence) {
    txt += "  - name: " + s.sequence_name + "\n";
    txt += "    aor: " + fmt_full(s.aor) + "\n";
    txt += "    frame_count: " + std::to_string(s.frame_count) + "\n";
  }
  txt += "warnings:\n";
  if (cmp.warnings.empty()) txt += "  none\n";
  for (const auto& w : cmp.warnings) txt += "  - " + w + "\n";
  write_file(config.out_dir / "report.txt", txt);

  return cmp;
}

void run_plot_data(const EvalConfig& config, const std::string& tracker,
                   const std::string& sequence) {
  const DatasetManifest manifest = load_manifest(config.manifest);

  const TrackerEntry* tracker_entry = nullptr;
  for (const auto& t : manifest.trackers)
    if (t.name == tracker) tracker_entry = &t;
  if (!tracker_entry) throw Error("unknown tracker: " + tracker);

  const SequenceEntry* sequence_entry = nullptr;
  for (const auto& s : manifest.sequences)
    if (s.name == sequence) sequence_entry = &s;
  if (!sequence_entry) throw Error("unknown sequence: " + sequence);

  const PairResult result =
      evaluate_pair(config, manifest, *tracker_entry, *sequence_entry);
  const std::string hash = hex64(fnv1a(eval_config_key(config)));
  write_plot_files(config.out_dir, hash, result.plots);
}

}  // namespace trackeval
