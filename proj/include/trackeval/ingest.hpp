#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "trackeval/geometry.hpp"

namespace trackeval {

// Marker for frames with no valid annotation (occlusion / out of view).
struct Absent {};

// One frame of a trajectory file: a box, a four-corner polygon, or nothing.
using FrameAnnotation = std::variant<Absent, BoundingBox, QuadAnnotation>;

inline bool is_absent(const FrameAnnotation& f) {
  return std::holds_alternative<Absent>(f);
}

struct Trajectory {
  std::string sequence_name;
  std::vector<FrameAnnotation> frames;  // one per source line, in file order
  std::string source;                   // provenance, usually the file path
};

enum class AnnotationFormat { Rect, Quad };

struct SequenceEntry {
  std::string name;
  std::filesystem::path gt_path;
  AnnotationFormat format = AnnotationFormat::Rect;
};

struct TrackerEntry {
  std::string name;
  std::filesystem::path results_dir;
};

struct DatasetManifest {
  std::string dataset_name;
  std::vector<SequenceEntry> sequences;
  std::vector<TrackerEntry> trackers;

  // `<results_dir>/<sequence>.txt`
  std::filesystem::path result_path(const TrackerEntry& tracker,
                                    const std::string& sequence_name) const;
};

struct AlignedPair {
  std::string sequence_name;
  std::vector<std::pair<FrameAnnotation, FrameAnnotation>> frames;  // (gt, pred)
  std::size_t evaluated_count = 0;  // frames where both sides are non-Absent
  std::vector<std::string> warnings;
};

// Strict rectangle trajectory parser: every non-empty line must be a
// 4-tuple "x y w h" (comma / tab / space separated) or one of the absent
// encodings (all-NaN, all-zero, the token "absent").
Trajectory parse_rect_file(std::istream& in, std::string sequence_name,
                           std::string source = "");
Trajectory parse_rect_file(const std::filesystem::path& path,
                           std::string sequence_name);

// VOT-style parser: 8-tuples become quads, 4-tuples fall back to boxes,
// absent encodings become Absent. Degenerate non-absent 4-tuples are
// rejected here (in a quad file they indicate a truncated polygon row).
Trajectory parse_quad_file(std::istream& in, std::string sequence_name,
                           std::string source = "");
Trajectory parse_quad_file(const std::filesystem::path& path,
                           std::string sequence_name);

// Inverse of the parsers; absent frames serialize as "NaN,NaN,NaN,NaN".
// Numbers round-trip exactly.
void write_trajectory(std::ostream& out, const Trajectory& trajectory);
std::string to_text(const Trajectory& trajectory);

// Loads and fully resolves a manifest (JSON; schema in README). Relative
// paths are taken relative to the manifest's directory; every referenced
// file must exist. `require_trackers` lets annotation-comparison manifests
// omit the tracker list.
DatasetManifest load_manifest(const std::filesystem::path& path,
                              bool require_trackers = true);

// Pairs two trajectories frame by frame. Length mismatches up to
// `mismatch_tolerance` of the ground-truth length truncate to the shorter
// trajectory (with a recorded warning); larger mismatches are an error.
AlignedPair align(const Trajectory& gt, const Trajectory& pred,
                  double mismatch_tolerance = 0.05);

// Drops the initialization frame, for --skip-first-frame runs.
AlignedPair drop_first_frame(AlignedPair pair);

}  // namespace trackeval
