#include "trackeval/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace trackeval {

namespace fs = std::filesystem;

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

// Comma, tab, and runs of spaces all act as separators, mixed freely.
std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : line) {
    if (c == ',' || c == '\t' || c == ' ') {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

double parse_number(const std::string& token, std::size_t line_number) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw ParseError(line_number, "not a number: '" + token + "'");
  return value;
}

bool all_nan(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isnan(x); });
}

bool all_zero(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
}

BoundingBox make_box(const std::vector<double>& v, std::size_t line_number) {
  for (double x : v)
    if (!std::isfinite(x))
      throw ParseError(line_number, "non-finite value in box tuple");
  if (v[2] < 0.0 || v[3] < 0.0)
    throw ParseError(line_number, "negative box width or height");
  return {v[0], v[1], v[2], v[3]};
}

QuadAnnotation make_quad(const std::vector<double>& v, std::size_t line_number) {
  for (double x : v)
    if (!std::isfinite(x))
      throw ParseError(line_number, "non-finite value in quad tuple");
  try {
    return QuadAnnotation(
        {{{v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}, {v[6], v[7]}}});
  } catch (const GeometryError& e) {
    throw GeometryError("line " + std::to_string(line_number) + ": " + e.what());
  }
}

Trajectory parse_lines(std::istream& in, std::string sequence_name,
                       std::string source, bool quad_format) {
  Trajectory out;
  out.sequence_name = std::move(sequence_name);
  out.source = std::move(source);

  std::string raw;
  std::size_t line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    const std::string line = trim(raw);
    if (line.empty()) continue;

    if (line == "absent") {
      out.frames.emplace_back(Absent{});
      continue;
    }

    const auto tokens = tokenize(line);
    std::vector<double> values;
    values.reserve(tokens.size());
    for (const auto& t : tokens) values.push_back(parse_number(t, line_number));

    if (values.size() == 4) {
      if (all_nan(values) || all_zero(values)) {
        out.frames.emplace_back(Absent{});
      } else {
        BoundingBox box = make_box(values, line_number);
        if (quad_format && box.area() == 0.0)
          throw ParseError(line_number,
                           "degenerate 4-tuple in quad-format file");
        out.frames.emplace_back(box);
      }
    } else if (quad_format && values.size() == 8) {
      if (all_nan(values) || all_zero(values))
        out.frames.emplace_back(Absent{});
      else
        out.frames.emplace_back(make_quad(values, line_number));
    } else {
      throw ParseError(line_number, "expected " +
                                        std::string(quad_format ? "4 or 8" : "4") +
                                        " values, got " +
                                        std::to_string(values.size()));
    }
  }
  if (out.frames.empty()) throw ParseError(0, "file contains no frames");
  return out;
}

Trajectory parse_path(const fs::path& path, std::string sequence_name,
                      bool quad_format) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open file", path.string());
  try {
    return parse_lines(in, std::move(sequence_name), path.string(), quad_format);
  } catch (const ParseError& e) {
    throw ParseError(e.line, e.reason, path.string());
  } catch (const GeometryError& e) {
    throw GeometryError(path.string() + ": " + e.what());
  }
}

void append_number(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

}  // namespace

Trajectory parse_rect_file(std::istream& in, std::string sequence_name,
                           std::string source) {
  return parse_lines(in, std::move(sequence_name), std::move(source), false);
}

Trajectory parse_rect_file(const fs::path& path, std::string sequence_name) {
  return parse_path(path, std::move(sequence_name), false);
}

Trajectory parse_quad_file(std::istream& in, std::string sequence_name,
                           std::string source) {
  return parse_lines(in, std::move(sequence_name), std::move(source), true);
}

Trajectory parse_quad_file(const fs::path& path, std::string sequence_name) {
  return parse_path(path, std::move(sequence_name), true);
}

void write_trajectory(std::ostream& out, const Trajectory& trajectory) {
  for (const FrameAnnotation& frame : trajectory.frames) {
    std::string line;
    if (is_absent(frame)) {
      line = "NaN,NaN,NaN,NaN";
    } else if (const auto* box = std::get_if<BoundingBox>(&frame)) {
      append_number(line, box->x);
      line += ',';
      append_number(line, box->y);
      line += ',';
      append_number(line, box->w);
      line += ',';
      append_number(line, box->h);
    } else {
      const auto& corners = std::get<QuadAnnotation>(frame).corners();
      for (int i = 0; i < 4; ++i) {
        if (i > 0) line += ',';
        append_number(line, corners[i].x);
        line += ',';
        append_number(line, corners[i].y);
      }
    }
    out << line << '\n';
  }
}

std::string to_text(const Trajectory& trajectory) {
  std::ostringstream out;
  write_trajectory(out, trajectory);
  return out.str();
}

fs::path DatasetManifest::result_path(const TrackerEntry& tracker,
                                      const std::string& sequence_name) const {
  return tracker.results_dir / (sequence_name + ".txt");
}

DatasetManifest load_manifest(const fs::path& path, bool require_trackers) {
  std::ifstream in(path);
  if (!in) throw ManifestError("cannot open manifest: " + path.string());

  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ManifestError("malformed manifest " + path.string() + ": " + e.what());
  }

  const fs::path base = path.has_parent_path() ? path.parent_path() : ".";
  auto resolve = [&base](const std::string& p) {
    fs::path candidate(p);
    return candidate.is_absolute() ? candidate : base / candidate;
  };

  DatasetManifest manifest;
  try {
    manifest.dataset_name = doc.at("dataset_name").get<std::string>();
    for (const auto& s : doc.at("sequences")) {
      SequenceEntry entry;
      entry.name = s.at("name").get<std::string>();
      entry.gt_path = resolve(s.at("gt").get<std::string>());
      const std::string format = s.at("format").get<std::string>();
      if (format == "rect")
        entry.format = AnnotationFormat::Rect;
      else if (format == "quad")
        entry.format = AnnotationFormat::Quad;
      else
        throw ManifestError("sequence '" + entry.name +
                            "': unknown format '" + format + "'");
      manifest.sequences.push_back(std::move(entry));
    }
    if (doc.contains("trackers")) {
      for (const auto& t : doc.at("trackers")) {
        TrackerEntry entry;
        entry.name = t.at("name").get<std::string>();
        entry.results_dir = resolve(t.at("results_dir").get<std::string>());
        manifest.trackers.push_back(std::move(entry));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ManifestError("manifest " + path.string() +
                        ": missing or invalid key: " + e.what());
  }

  if (manifest.sequences.empty())
    throw ManifestError("manifest lists no sequences");
  if (require_trackers && manifest.trackers.empty())
    throw ManifestError("manifest lists no trackers");

  std::set<std::string> names;
  for (const auto& s : manifest.sequences)
    if (!names.insert(s.name).second)
      throw ManifestError("duplicate sequence name: " + s.name);
  std::set<std::string> tracker_names;
  for (const auto& t : manifest.trackers)
    if (!tracker_names.insert(t.name).second)
      throw ManifestError("duplicate tracker name: " + t.name);

  for (const auto& s : manifest.sequences)
    if (!fs::exists(s.gt_path))
      throw ManifestError("ground-truth file missing: " + s.gt_path.string());
  for (const auto& t : manifest.trackers)
    for (const auto& s : manifest.sequences) {
      const fs::path p = manifest.result_path(t, s.name);
      if (!fs::exists(p))
        throw ManifestError("result file missing for tracker '" + t.name +
                            "', sequence '" + s.name + "': " + p.string());
    }

  return manifest;
}

AlignedPair align(const Trajectory& gt, const Trajectory& pred,
                  double mismatch_tolerance) {
  if (gt.sequence_name != pred.sequence_name)
    throw AlignmentError("sequence name mismatch: '" + gt.sequence_name +
                         "' vs '" + pred.sequence_name + "'");

  const std::size_t gt_len = gt.frames.size();
  const std::size_t pred_len = pred.frames.size();
  const std::size_t diff = gt_len > pred_len ? gt_len - pred_len : pred_len - gt_len;

  AlignedPair out;
  out.sequence_name = gt.sequence_name;
  if (diff > 0) {
    if (static_cast<double>(diff) > mismatch_tolerance * static_cast<double>(gt_len))
      throw AlignmentError(
          "trajectory length mismatch for '" + gt.sequence_name + "': gt " +
          std::to_string(gt_len) + " vs pred " + std::to_string(pred_len) +
          " exceeds tolerance");
    out.warnings.push_back("sequence '" + gt.sequence_name +
                           "': length mismatch (gt " + std::to_string(gt_len) +
                           ", pred " + std::to_string(pred_len) +
                           "), truncated to shorter");
  }

  const std::size_t n = std::min(gt_len, pred_len);
  out.frames.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.frames.emplace_back(gt.frames[i], pred.frames[i]);
    if (!is_absent(gt.frames[i]) && !is_absent(pred.frames[i]))
      ++out.evaluated_count;
  }
  return out;
}

AlignedPair drop_first_frame(AlignedPair pair) {
  if (pair.frames.size() <= 1) return pair;
  if (!is_absent(pair.frames.front().first) &&
      !is_absent(pair.frames.front().second))
    --pair.evaluated_count;
  pair.frames.erase(pair.frames.begin());
  return pair;
}

}  // namespace trackeval
