#include <cstdio>
#include <exception>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "trackeval/report.hpp"

namespace {

using trackeval::AbsentPolicy;
using trackeval::ComparisonMode;
using trackeval::TdNormalizer;

const std::map<std::string, AbsentPolicy> kPolicies{
    {"skip", AbsentPolicy::Skip}, {"count-as-zero", AbsentPolicy::CountAsZero}};
const std::map<std::string, TdNormalizer> kNormalizers{
    {"ordered-pairs", TdNormalizer::OrderedPairs},
    {"max-inversions", TdNormalizer::MaxInversions}};
const std::map<std::string, ComparisonMode> kModes{
    {"quad-exact", ComparisonMode::QuadExact},
    {"rect-envelope", ComparisonMode::RectEnvelope}};

void add_shared_options(CLI::App& cmd, trackeval::EvalConfig& config) {
  cmd.add_option("--manifest", config.manifest, "dataset manifest (JSON)")
      ->required();
  cmd.add_option("--out", config.out_dir, "output directory")->required();
  cmd.add_option("--absent-policy", config.absent_policy,
                 "handling of prediction-absent frames (default count-as-zero)")
      ->transform(CLI::CheckedTransformer(kPolicies, CLI::ignore_case));
  cmd.add_option("--thresholds", config.success_thresholds,
                 "success-curve threshold count (default 21)")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1000001}));
  cmd.add_option("--strict-success", config.strict_success,
                 "count frames with overlap > t (true) or >= t (false)");
  cmd.add_flag("--skip-first-frame", config.skip_first_frame,
               "exclude the initialization frame from averaging");
  cmd.add_option("--normalizer", config.normalizer,
                 "tracker-distance normalizer (default ordered-pairs)")
      ->transform(CLI::CheckedTransformer(kNormalizers, CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "trackeval: single-object tracker benchmark evaluation\n"
      "Per-frame overlap, success/precision curves with AUC, average overlap\n"
      "ratio (AOR) at sequence and dataset level, AOR rank lists, and the\n"
      "rank-inversion tracker-distance matrix."};
  app.require_subcommand(1);

  trackeval::EvalConfig eval_config;
  CLI::App* evaluate =
      app.add_subcommand("evaluate", "run the full benchmark evaluation");
  add_shared_options(*evaluate, eval_config);
  evaluate->add_option("--top", eval_config.top,
                       "rank-list entries to keep at the top in report.txt");
  evaluate->add_option("--bottom", eval_config.bottom,
                       "rank-list entries to keep at the bottom in report.txt");

  trackeval::CompareConfig compare_config;
  CLI::App* compare = app.add_subcommand(
      "compare-annotations", "AOR between two ground-truth annotation sets");
  compare->add_option("--manifest-a", compare_config.manifest_a,
                      "first annotation manifest")->required();
  compare->add_option("--manifest-b", compare_config.manifest_b,
                      "second annotation manifest")->required();
  compare->add_option("--out", compare_config.out_dir, "output directory")
      ->required();
  compare->add_option("--mode", compare_config.mode,
                      "quad handling (default quad-exact)")
      ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case));
  compare->add_option("--absent-policy", compare_config.absent_policy,
                      "handling of one-sided absent frames (default skip)")
      ->transform(CLI::CheckedTransformer(kPolicies, CLI::ignore_case));

  trackeval::EvalConfig plot_config;
  std::string plot_tracker, plot_sequence;
  CLI::App* plotdata = app.add_subcommand(
      "plot-data", "write plot-ready files for one tracker/sequence pair");
  add_shared_options(*plotdata, plot_config);
  plotdata->add_option("--tracker", plot_tracker, "tracker name")->required();
  plotdata->add_option("--sequence", plot_sequence, "sequence name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // 2: configuration error; 0: --help
  }

  try {
    if (evaluate->parsed()) {
      const trackeval::Report report = trackeval::run_evaluate(eval_config);
      std::printf("evaluated %zu tracker(s) on %zu sequence(s); report in %s\n",
                  report.trackers.size(),
                  report.trackers.empty() ? std::size_t{0}
                                          : report.trackers.front().rank_list.size(),
                  eval_config.out_dir.string().c_str());
      for (const auto& w : report.warnings)
        std::fprintf(stderr, "warning: %s\n", w.c_str());
    } else if (compare->parsed()) {
      const trackeval::AnnotationComparison cmp =
          trackeval::run_compare_annotations(compare_config);
      std::printf("compared %zu sequence(s): pooled_aor=%.3f macro_aor=%.3f\n",
                  cmp.per_sequence.size(), cmp.pooled_aor, cmp.macro_aor);
    } else if (plotdata->parsed()) {
      trackeval::run_plot_data(plot_config, plot_tracker, plot_sequence);
      std::printf("plot data for %s/%s written to %s\n", plot_tracker.c_str(),
                  plot_sequence.c_str(),
                  (plot_config.out_dir / "plots").string().c_str());
    }
  } catch (const trackeval::ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const trackeval::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
