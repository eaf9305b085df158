#pragma once

// Experiment orchestration: JSON run manifests, patch-wise extraction and
// classification, CSV/PGM/PPM reporting and run comparison.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hsi/classify.hpp"
#include "hsi/cube_io.hpp"
#include "hsi/error.hpp"
#include "hsi/features.hpp"
#include "hsi/metrics.hpp"
#include "hsi/mpri.hpp"
#include "hsi/parallel.hpp"
#include "hsi/rgbrecon.hpp"
#include "hsi/synth.hpp"
#include "hsi/tensorssa.hpp"

namespace hsi {

using Json = nlohmann::ordered_json;

enum class Representation { kHsi, kRgb };
enum class Extractor { kNone, kMpri, kTensorSsa };

inline std::string to_string(Representation r) { return r == Representation::kHsi ? "hsi" : "rgb"; }

inline std::string to_string(Extractor e) {
  switch (e) {
    case Extractor::kNone: return "none";
    case Extractor::kMpri: return "mpri";
    case Extractor::kTensorSsa: return "tensorssa";
  }
  return "?";
}

inline Representation parse_representation(const std::string& s) {
  if (s == "hsi") return Representation::kHsi;
  if (s == "rgb") return Representation::kRgb;
  fail(ErrorCode::kConfigInvalid, "representation must be 'hsi' or 'rgb', got '" + s + "'");
}

inline Extractor parse_extractor(const std::string& s) {
  if (s == "none") return Extractor::kNone;
  if (s == "mpri") return Extractor::kMpri;
  if (s == "tensorssa") return Extractor::kTensorSsa;
  fail(ErrorCode::kConfigInvalid, "extractor must be 'none', 'mpri' or 'tensorssa', got '" + s + "'");
}

/// 64-bit finalizer (splitmix64); a bijection, so distinct inputs stay distinct.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t patch_seed(std::uint64_t master, std::uint64_t patch_index) {
  return splitmix64(master ^ patch_index);
}

/// Either a cube + ground truth on disk or a phantom to synthesize.
struct ImageSource {
  std::string name;
  std::filesystem::path cube;
  std::filesystem::path gt;
  std::optional<PhantomSpec> phantom;
};

struct RunConfig {
  std::vector<ImageSource> images;
  Representation representation = Representation::kHsi;
  Extractor extractor = Extractor::kNone;
  ClassifyConfig classify;
  std::size_t patch_rows = 230;
  std::size_t patch_cols = 258;
  std::filesystem::path output;
  MpriConfig mpri;
  TssaConfig tensorssa;
};

// ---------------------------------------------------------------------------
// JSON <-> config

namespace config_io {

inline void check_keys(const Json& j, const std::set<std::string>& allowed, const std::string& section) {
  require(j.is_object(), ErrorCode::kConfigInvalid, "section '" + section + "' must be an object");
  for (const auto& [key, value] : j.items()) {
    require(allowed.count(key) > 0, ErrorCode::kConfigInvalid, "unknown key '" + key + "' in '" + section + "'");
  }
}

template <typename T>
T get(const Json& j, const std::string& key, T fallback, const std::string& section) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    fail(ErrorCode::kConfigInvalid, "key '" + key + "' in '" + section + "' has the wrong type");
  }
}

/// Runs a validate() call, re-labelling its failure as a configuration error.
template <typename Fn>
void validated(const std::string& section, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kConfigInvalid) throw;
    fail(ErrorCode::kConfigInvalid, section + ": " + e.what());
  }
}

inline PhantomSpec phantom_from_json(const Json& j) {
  check_keys(j,
             {"rows", "cols", "bands", "noise_sigma", "gain_jitter", "seed", "region_seed", "noise_seed", "first_nm",
              "last_nm", "class_spectra"},
             "phantom");
  const auto seed = get<std::uint64_t>(j, "seed", 1, "phantom");
  PhantomSpec spec = standard_phantom_spec(get<std::size_t>(j, "rows", 64, "phantom"),
                                           get<std::size_t>(j, "cols", 64, "phantom"),
                                           get<std::size_t>(j, "bands", 32, "phantom"),
                                           get<double>(j, "noise_sigma", 0.0, "phantom"),
                                           get<double>(j, "gain_jitter", 0.0, "phantom"), seed);
  spec.region_seed = get<std::uint64_t>(j, "region_seed", spec.region_seed, "phantom");
  spec.noise_seed = get<std::uint64_t>(j, "noise_seed", spec.noise_seed, "phantom");
  const double first = get<double>(j, "first_nm", spec.first_nm, "phantom");
  const double last = get<double>(j, "last_nm", spec.last_nm, "phantom");
  if (first != spec.first_nm || last != spec.last_nm) {
    spec.first_nm = first;
    spec.last_nm = last;
    spec.class_spectra = tissue_like_spectra(spec.wavelengths());
  }
  if (j.contains("class_spectra")) {
    spec.class_spectra = get<std::vector<std::vector<double>>>(j, "class_spectra", {}, "phantom");
    spec.class_count = spec.class_spectra.size();
  }
  validated("phantom", [&] { spec.validate(); });
  return spec;
}

inline Json phantom_to_json(const PhantomSpec& s) {
  return Json{{"rows", s.rows},
              {"cols", s.cols},
              {"bands", s.bands},
              {"noise_sigma", s.noise_sigma},
              {"gain_jitter", s.gain_jitter},
              {"region_seed", s.region_seed},
              {"noise_seed", s.noise_seed},
              {"first_nm", s.first_nm},
              {"last_nm", s.last_nm},
              {"class_spectra", s.class_spectra}};
}

inline MpriConfig mpri_from_json(const Json& j) {
  check_keys(j, {"scales", "layers", "betas", "sigma2", "max_iter", "tol", "rlda_gamma", "rlda_dims", "include_raw"},
             "mpri");
  MpriConfig c;
  c.scales = get(j, "scales", c.scales, "mpri");
  c.layers = get(j, "layers", c.layers, "mpri");
  c.betas = get(j, "betas", c.betas, "mpri");
  c.pri.sigma2 = get(j, "sigma2", c.pri.sigma2, "mpri");
  c.pri.max_iter = get(j, "max_iter", c.pri.max_iter, "mpri");
  c.pri.tol = get(j, "tol", c.pri.tol, "mpri");
  c.rlda_gamma = get(j, "rlda_gamma", c.rlda_gamma, "mpri");
  c.rlda_dims = get(j, "rlda_dims", c.rlda_dims, "mpri");
  c.include_raw = get(j, "include_raw", c.include_raw, "mpri");
  validated("mpri", [&] { c.validate(); });
  return c;
}

inline Json mpri_to_json(const MpriConfig& c) {
  return Json{{"scales", c.scales},         {"layers", c.layers},         {"betas", c.betas},
              {"sigma2", c.pri.sigma2},     {"max_iter", c.pri.max_iter}, {"tol", c.pri.tol},
              {"rlda_gamma", c.rlda_gamma}, {"rlda_dims", c.rlda_dims},   {"include_raw", c.include_raw}};
}

inline TssaConfig tensorssa_from_json(const Json& j) {
  check_keys(j, {"u", "l", "rtub", "norm"}, "tensorssa");
  TssaConfig c;
  c.u = get(j, "u", c.u, "tensorssa");
  c.l = get(j, "l", c.l, "tensorssa");
  c.rtub = get(j, "rtub", c.rtub, "tensorssa");
  const auto norm = get<std::string>(j, "norm", "unit", "tensorssa");
  require(norm == "unit" || norm == "zscore", ErrorCode::kConfigInvalid, "tensorssa norm must be 'unit' or 'zscore'");
  c.norm = norm == "unit" ? SpectrumNorm::kUnitL2 : SpectrumNorm::kZScore;
  validated("tensorssa", [&] { c.validate(); });
  return c;
}

inline Json tensorssa_to_json(const TssaConfig& c) {
  return Json{{"u", c.u}, {"l", c.l}, {"rtub", c.rtub}, {"norm", c.norm == SpectrumNorm::kUnitL2 ? "unit" : "zscore"}};
}

inline ClassifyConfig classify_from_json(const Json& j) {
  check_keys(j, {"method", "fraction", "seed", "k", "tau", "max_rounds", "batch_cap", "lambda", "epochs"}, "classify");
  ClassifyConfig c;
  try {
    c.method = parse_method(get<std::string>(j, "method", "ssl", "classify"));
  } catch (const Error& e) {
    fail(ErrorCode::kConfigInvalid, e.what());
  }
  c.fraction = get(j, "fraction", c.fraction, "classify");
  c.seed = get(j, "seed", c.seed, "classify");
  c.ssl.k = get(j, "k", c.ssl.k, "classify");
  c.ssl.tau = get(j, "tau", c.ssl.tau, "classify");
  c.ssl.max_rounds = get(j, "max_rounds", c.ssl.max_rounds, "classify");
  c.ssl.batch_cap = get(j, "batch_cap", c.ssl.batch_cap, "classify");
  c.svm.lambda = get(j, "lambda", c.svm.lambda, "classify");
  c.svm.epochs = get(j, "epochs", c.svm.epochs, "classify");
  require(c.fraction > 0.0 && c.fraction <= 1.0, ErrorCode::kConfigInvalid, "classify fraction must lie in (0, 1]");
  validated("classify", [&] {
    c.ssl.validate();
    c.svm.validate();
  });
  return c;
}

inline Json classify_to_json(const ClassifyConfig& c) {
  return Json{{"method", to_string(c.method)}, {"fraction", c.fraction},   {"seed", c.seed},
              {"k", c.ssl.k},                  {"tau", c.ssl.tau},         {"max_rounds", c.ssl.max_rounds},
              {"batch_cap", c.ssl.batch_cap},  {"lambda", c.svm.lambda},   {"epochs", c.svm.epochs}};
}

}  // namespace config_io

inline Json load_json(const std::filesystem::path& path) {
  std::error_code ec;
  require(std::filesystem::is_regular_file(path, ec), ErrorCode::kConfigNotFound, path.string());
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::kConfigNotFound, path.string());
  try {
    return Json::parse(in, nullptr, true, true);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::kConfigInvalid, path.string() + ": " + e.what());
  }
}

inline RunConfig run_config_from_json(const Json& j) {
  using namespace config_io;
  check_keys(j, {"images", "representation", "extractor", "classify", "patch", "output", "mpri", "tensorssa"}, "run");
  RunConfig c;
  require(j.contains("images") && j.at("images").is_array() && !j.at("images").empty(), ErrorCode::kConfigInvalid,
          "'images' must be a nonempty list");
  std::set<std::string> names;
  for (const auto& item : j.at("images")) {
    check_keys(item, {"name", "cube", "gt", "phantom"}, "images[]");
    ImageSource src;
    src.name = get<std::string>(item, "name", "image" + std::to_string(c.images.size()), "images[]");
    require(names.insert(src.name).second, ErrorCode::kConfigInvalid, "duplicate image name '" + src.name + "'");
    const bool has_paths = item.contains("cube") || item.contains("gt");
    require(has_paths != item.contains("phantom"), ErrorCode::kConfigInvalid,
            "image '" + src.name + "' needs exactly one of (cube + gt) or phantom");
    if (has_paths) {
      require(item.contains("cube") && item.contains("gt"), ErrorCode::kConfigInvalid,
              "image '" + src.name + "' needs both cube and gt");
      src.cube = get<std::string>(item, "cube", "", "images[]");
      src.gt = get<std::string>(item, "gt", "", "images[]");
    } else {
      src.phantom = phantom_from_json(item.at("phantom"));
    }
    c.images.push_back(std::move(src));
  }
  c.representation = parse_representation(get<std::string>(j, "representation", "hsi", "run"));
  c.extractor = parse_extractor(get<std::string>(j, "extractor", "none", "run"));
  c.classify = classify_from_json(j.value("classify", Json::object()));
  if (j.contains("patch")) {
    const Json& p = j.at("patch");
    check_keys(p, {"rows", "cols"}, "patch");
    c.patch_rows = get(p, "rows", c.patch_rows, "patch");
    c.patch_cols = get(p, "cols", c.patch_cols, "patch");
  }
  require(c.patch_rows > 0 && c.patch_cols > 0, ErrorCode::kConfigInvalid, "patch dimensions must be positive");
  c.output = get<std::string>(j, "output", "", "run");
  c.mpri = mpri_from_json(j.value("mpri", Json::object()));
  c.tensorssa = tensorssa_from_json(j.value("tensorssa", Json::object()));
  return c;
}

inline Json run_config_to_json(const RunConfig& c) {
  using namespace config_io;
  Json images = Json::array();
  for (const auto& src : c.images) {
    Json item{{"name", src.name}};
    if (src.phantom) {
      item["phantom"] = phantom_to_json(*src.phantom);
    } else {
      item["cube"] = src.cube.generic_string();
      item["gt"] = src.gt.generic_string();
    }
    images.push_back(std::move(item));
  }
  return Json{{"images", images},
              {"representation", to_string(c.representation)},
              {"extractor", to_string(c.extractor)},
              {"classify", classify_to_json(c.classify)},
              {"patch", {{"rows", c.patch_rows}, {"cols", c.patch_cols}}},
              {"output", c.output.generic_string()},
              {"mpri", mpri_to_json(c.mpri)},
              {"tensorssa", tensorssa_to_json(c.tensorssa)}};
}

inline RunConfig load_run_config(const std::filesystem::path& path) { return run_config_from_json(load_json(path)); }

// ---------------------------------------------------------------------------
// Experiment

struct PatchRecord {
  std::string image;
  std::size_t patch = 0;         // index within the image
  std::size_t global_index = 0;  // index across the whole run (seed source)
  PatchOrigin origin;
  std::uint64_t seed = 0;
  std::size_t training = 0;
  ConfusionCounts counts;
  LabelMap prediction;
};

struct ImageRecord {
  std::string name;
  ConfusionCounts counts;  // pooled over the image's patches
  MetricsReport report;
};

struct RunReport {
  std::vector<PatchRecord> patches;
  std::vector<ImageRecord> images;
  MetricsReport micro;
  MacroReport macro;
};

struct LoadedImage {
  HyperCube cube;
  LabelMap gt;
};

inline LoadedImage load_image(const ImageSource& src) {
  if (src.phantom) {
    Phantom ph = make_phantom(*src.phantom);
    return {std::move(ph.cube), std::move(ph.truth)};
  }
  LoadedImage img{load_cube(src.cube), load_label_map(src.gt)};
  require(img.gt.matches(img.cube), ErrorCode::kDimensionMismatch,
          "ground truth " + src.gt.string() + " does not match cube " + src.cube.string());
  return img;
}

/// Features of one patch. MPRI needs the training labels for its rLDA stages.
inline FeatureStack extract_features(const HyperCube& patch, const LabeledSet& training, Extractor extractor,
                                     const MpriConfig& mpri, const TssaConfig& tssa) {
  switch (extractor) {
    case Extractor::kNone: return to_features(patch);
    case Extractor::kMpri: return mpri_extract(patch, training, mpri);
    case Extractor::kTensorSsa: return tensorssa_extract(patch, tssa);
  }
  fail(ErrorCode::kInvalidArgument, "unknown extractor");
}

namespace detail {

inline std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

inline std::string metric_cells(const MetricsReport& r) {
  std::string out;
  for (const auto& v : metric_values(r)) out += "," + (v ? fixed6(*v) : std::string("NA"));
  return out;
}

inline std::string counts_cells(const ConfusionCounts& c) {
  return "," + std::to_string(c.tp) + "," + std::to_string(c.tn) + "," + std::to_string(c.fp) + "," +
         std::to_string(c.fn);
}

inline std::string metric_header() {
  std::string out;
  for (const char* name : kMetricNames) out += std::string(",") + name;
  return out;
}

}  // namespace detail

/// Rendered prediction map: cancer red, non-cancer green, untiled pixels black.
inline ColorImage render_prediction(const LabelMap& map) {
  ColorImage img(map.rows(), map.cols());
  for (std::size_t p = 0; p < map.pixels(); ++p) {
    if (map[p] == kCancer) img.at(0, p) = 1.0;
    if (map[p] == kNonCancer) img.at(1, p) = 1.0;
  }
  return img;
}

inline void write_reports(const RunConfig& config, const RunReport& report) {
  namespace fs = std::filesystem;
  const fs::path dir = config.output;
  fs::create_directories(dir / "predictions");
  const std::string method = to_string(config.classify.method);
  const std::string rep = to_string(config.representation);

  std::string patches = "image,patch,row,col,seed,training,tp,tn,fp,fn" + detail::metric_header() + "\n";
  for (const auto& p : report.patches) {
    patches += p.image + "," + std::to_string(p.patch) + "," + std::to_string(p.origin.row) + "," +
               std::to_string(p.origin.col) + "," + std::to_string(p.seed) + "," + std::to_string(p.training) +
               detail::counts_cells(p.counts) + detail::metric_cells(metrics(p.counts)) + "\n";
    save_label_map(p.prediction, dir / "predictions" / (p.image + "_patch" + std::to_string(p.patch) + ".pgm"));
  }
  detail::write_file(dir / "patches.csv", patches);

  std::string images = "image,method,representation,tp,tn,fp,fn" + detail::metric_header() + "\n";
  for (const auto& img : report.images) {
    images += img.name + "," + method + "," + rep + detail::counts_cells(img.counts) + detail::metric_cells(img.report) +
              "\n";
  }
  detail::write_file(dir / "images.csv", images);

  ConfusionCounts pooled;
  for (const auto& img : report.images) pooled += img.counts;
  detail::write_file(dir / "micro.csv", "method,representation,tp,tn,fp,fn" + detail::metric_header() + "\n" + method +
                                            "," + rep + detail::counts_cells(pooled) +
                                            detail::metric_cells(report.micro) + "\n");

  std::string macro = "metric,mean,std,count\n";
  for (std::size_t k = 0; k < kMetricNames.size(); ++k) {
    const MacroStat& s = report.macro.stats[k];
    macro += std::string(kMetricNames[k]) + "," + (s.count ? detail::fixed6(s.mean) : "NA") + "," +
             (s.count ? detail::fixed6(s.std) : "NA") + "," + std::to_string(s.count) + "\n";
  }
  detail::write_file(dir / "macro.csv", macro);
  detail::write_file(dir / "manifest.txt", run_config_to_json(config).dump(2) + "\n");
}

inline RunReport run_experiment(const RunConfig& config) {
  require(!config.images.empty(), ErrorCode::kConfigInvalid, "no images in run config");
  RunReport report;
  std::size_t global = 0;
  for (const auto& src : config.images) {
    LoadedImage img = load_image(src);
    if (config.representation == Representation::kRgb) img.cube = make_rgb_projection(img.cube);
    const PatchGrid grid = tile(img.cube.rows(), img.cube.cols(), config.patch_rows, config.patch_cols);
    std::vector<PatchRecord> records(grid.count());
    parallel_for(grid.count(), [&](std::size_t k) {
      PatchRecord& rec = records[k];
      rec.image = src.name;
      rec.patch = k;
      rec.global_index = global + k;
      rec.origin = grid.origins[k];
      rec.seed = patch_seed(config.classify.seed, rec.global_index);
      try {
        const HyperCube cube = crop(img.cube, rec.origin, grid.patch_rows, grid.patch_cols);
        const LabelMap gt = crop(img.gt, rec.origin, grid.patch_rows, grid.patch_cols);
        ClassifyConfig cc = config.classify;
        cc.seed = rec.seed;
        const LabeledSet training = sample_labels(gt, cc.fraction, cc.seed);
        const FeatureStack features =
            extract_features(cube, training, config.extractor, config.mpri, config.tensorssa);
        PatchResult result = classify_with_labels(features, gt, training, cc);
        rec.training = training.size();
        rec.counts = result.counts;
        rec.prediction = std::move(result.prediction);
      } catch (const Error& e) {
        fail(e.code(), "image '" + src.name + "' patch " + std::to_string(k) + ": " + e.what());
      }
    });
    global += grid.count();

    ImageRecord image{src.name, {}, {}};
    for (const auto& rec : records) image.counts += rec.counts;
    image.report = metrics(image.counts);
    report.images.push_back(image);

    if (!config.output.empty()) {
      LabelMap full(img.cube.rows(), img.cube.cols());
      for (const auto& rec : records) {
        for (std::size_t r = 0; r < grid.patch_rows; ++r) {
          for (std::size_t c = 0; c < grid.patch_cols; ++c) {
            full.set((rec.origin.row + r) * full.cols() + rec.origin.col + c, rec.prediction.at(r, c));
          }
        }
      }
      std::filesystem::create_directories(config.output);
      save_ppm(render_prediction(full), config.output / (src.name + "_prediction.ppm"));
    }
    for (auto& rec : records) report.patches.push_back(std::move(rec));
  }

  std::vector<ConfusionCounts> counts;
  std::vector<MetricsReport> per_image;
  for (const auto& p : report.patches) counts.push_back(p.counts);
  for (const auto& img : report.images) per_image.push_back(img.report);
  report.micro = micro_aggregate(counts);
  report.macro = macro_aggregate(per_image);
  if (!config.output.empty()) write_reports(config, report);
  return report;
}

// ---------------------------------------------------------------------------
// Comparison

/// Per-image metric values keyed by image name; empty optionals are "NA".
using ImageMetrics = std::map<std::string, std::array<std::optional<double>, 6>>;

inline ImageMetrics image_metrics(const RunReport& report) {
  ImageMetrics out;
  for (const auto& img : report.images) out[img.name] = metric_values(img.report);
  return out;
}

/// Reads an images.csv written by run_experiment (or a run directory holding one).
inline ImageMetrics load_image_metrics(std::filesystem::path path) {
  if (std::filesystem::is_directory(path)) path /= "images.csv";
  std::istringstream in(detail::read_file(path));
  std::string line;
  require(static_cast<bool>(std::getline(in, line)), ErrorCode::kMalformedHeader, "empty report " + path.string());
  std::vector<std::string> header;
  {
    std::stringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) header.push_back(cell);
  }
  std::array<std::size_t, 6> column{};
  for (std::size_t k = 0; k < 6; ++k) {
    const auto it = std::find(header.begin(), header.end(), kMetricNames[k]);
    require(it != header.end(), ErrorCode::kMalformedHeader, path.string() + " lacks column " + kMetricNames[k]);
    column[k] = static_cast<std::size_t>(it - header.begin());
  }
  require(!header.empty() && header.front() == "image", ErrorCode::kMalformedHeader,
          path.string() + " must start with an image column");
  ImageMetrics out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    require(cells.size() == header.size(), ErrorCode::kMalformedHeader, "ragged row in " + path.string());
    auto& values = out[cells.front()];
    for (std::size_t k = 0; k < 6; ++k) {
      const std::string& v = cells[column[k]];
      if (v == "NA") continue;
      double x = 0.0;
      require(detail::parse_double(v, x), ErrorCode::kMalformedHeader, "bad number '" + v + "' in " + path.string());
      values[k] = x;
    }
  }
  return out;
}

struct SignificanceRow {
  std::string metric;
  RankSumResult test;
  bool reject = false;  // p < 0.05
};

inline std::vector<SignificanceRow> compare_runs(const ImageMetrics& a, const ImageMetrics& b) {
  require(!a.empty(), ErrorCode::kEmptyInput, "reports hold no images");
  std::set<std::string> names_a, names_b;
  for (const auto& [name, v] : a) names_a.insert(name);
  for (const auto& [name, v] : b) names_b.insert(name);
  require(names_a == names_b, ErrorCode::kInvalidArgument, "reports cover different image sets");
  std::vector<SignificanceRow> out;
  for (std::size_t k = 0; k < 6; ++k) {
    std::vector<double> va, vb;
    for (const auto& [name, v] : a) {
      if (v[k]) va.push_back(*v[k]);
    }
    for (const auto& [name, v] : b) {
      if (v[k]) vb.push_back(*v[k]);
    }
    if (va.empty() || vb.empty()) continue;
    SignificanceRow row{kMetricNames[k], wilcoxon_ranksum(va, vb), false};
    row.reject = row.test.p_value < 0.05;
    out.push_back(row);
  }
  return out;
}

inline std::string significance_csv(const std::vector<SignificanceRow>& rows) {
  std::string out = "metric,statistic,p_value,reject_at_0.05\n";
  for (const auto& r : rows) {
    out += r.metric + "," + detail::fixed6(r.test.statistic) + "," + detail::fixed6(r.test.p_value) + "," +
           (r.reject ? "true" : "false") + "\n";
  }
  return out;
}

}  // namespace hsi
