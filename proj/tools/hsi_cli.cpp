// hsi_cli: command-line front end for the hsi library.
//
//   hsi_cli synth    --config phantom.json   [--seed N] [--output DIR]
//   hsi_cli rgb      --config rgb.json       [--cube F] [--output F.ppm]
//   hsi_cli extract  --config extract.json   [--seed N] [--extractor E] [--output F]
//   hsi_cli classify --config classify.json  [--seed N] [--method M] [--output DIR]
//   hsi_cli evaluate --config evaluate.json  [--prediction F] [--gt F] [--output F.csv]
//   hsi_cli run      --config run.json       [--seed N] [--output DIR] [--representation R]
//                                            [--extractor E] [--classifier M]
//   hsi_cli compare  --config compare.json   [--a RUN] [--b RUN] [--output F.csv]
//
// Configs are JSON; flags override the matching config entries.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "hsi/hsi.hpp"

namespace {

namespace fs = std::filesystem;
using hsi::ErrorCode;
using hsi::Json;

struct Options {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> output, cube, gt, prediction, extractor, method, representation, a, b;
};

Json read_config(const Options& o, bool required) {
  if (o.config.empty()) {
    hsi::require(!required, ErrorCode::kConfigNotFound, "no --config given");
    return Json::object();
  }
  Json j = hsi::load_json(o.config);
  hsi::require(j.is_object(), ErrorCode::kConfigInvalid, o.config + ": top level must be an object");
  return j;
}

std::string need_string(const Json& j, const std::string& key) {
  hsi::require(j.contains(key) && j.at(key).is_string(), ErrorCode::kConfigInvalid,
               "missing string entry '" + key + "'");
  return j.at(key).get<std::string>();
}

void set_if(Json& j, const std::string& key, const std::optional<std::string>& v) {
  if (v) j[key] = *v;
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  hsi::detail::write_file(path, text);
}

int cmd_synth(const Options& o) {
  Json j = read_config(o, true);
  Json phantom = j.value("phantom", Json::object());
  if (o.seed) phantom["seed"] = *o.seed;
  set_if(j, "output", o.output);
  const hsi::PhantomSpec spec = hsi::config_io::phantom_from_json(phantom);
  const fs::path out = need_string(j, "output");
  const hsi::Phantom ph = hsi::make_phantom(spec);
  fs::create_directories(out);
  hsi::save_cube(ph.cube, out / "cube.hscube");
  hsi::save_label_map(ph.truth, out / "gt.pgm");
  hsi::save_ppm(hsi::hsi_to_rgb(ph.cube), out / "rgb.ppm");
  std::cout << "wrote " << (out / "cube.hscube").string() << " (" << ph.cube.rows() << "x" << ph.cube.cols() << "x"
            << ph.cube.bands() << ") and " << (out / "gt.pgm").string() << "\n";
  return 0;
}

int cmd_rgb(const Options& o) {
  Json j = read_config(o, false);
  set_if(j, "cube", o.cube);
  set_if(j, "output", o.output);
  const hsi::HyperCube cube = hsi::load_cube(need_string(j, "cube"));
  const fs::path out = need_string(j, "output");
  if (out.has_parent_path()) fs::create_directories(out.parent_path());
  hsi::save_ppm(hsi::hsi_to_rgb(cube), out);
  std::cout << "wrote " << out.string() << "\n";
  return 0;
}

int cmd_extract(const Options& o) {
  Json j = read_config(o, true);
  Json classify = j.value("classify", Json::object());
  if (o.seed) classify["seed"] = *o.seed;
  set_if(j, "extractor", o.extractor);
  set_if(j, "output", o.output);
  const auto cc = hsi::config_io::classify_from_json(classify);
  const auto extractor = hsi::parse_extractor(j.value("extractor", std::string("mpri")));
  const auto mpri = hsi::config_io::mpri_from_json(j.value("mpri", Json::object()));
  const auto tssa = hsi::config_io::tensorssa_from_json(j.value("tensorssa", Json::object()));
  const hsi::HyperCube cube = hsi::load_cube(need_string(j, "cube"));
  const hsi::LabelMap gt = hsi::load_label_map(need_string(j, "gt"));
  hsi::require(gt.matches(cube), ErrorCode::kDimensionMismatch, "ground truth does not match cube");
  const auto training = hsi::sample_labels(gt, cc.fraction, cc.seed);
  const auto features = hsi::extract_features(cube, training, extractor, mpri, tssa);
  const fs::path out = need_string(j, "output");
  if (out.has_parent_path()) fs::create_directories(out.parent_path());
  hsi::save_cube(hsi::to_cube(features), out);
  std::cout << "wrote " << out.string() << " (" << features.dim() << " features per pixel)\n";
  return 0;
}

int cmd_classify(const Options& o) {
  Json j = read_config(o, true);
  Json classify = j.value("classify", Json::object());
  if (o.seed) classify["seed"] = *o.seed;
  if (o.method) classify["method"] = *o.method;
  set_if(j, "output", o.output);
  const auto cc = hsi::config_io::classify_from_json(classify);
  const hsi::FeatureStack features = hsi::to_features(hsi::load_cube(need_string(j, "features")));
  const hsi::LabelMap gt = hsi::load_label_map(need_string(j, "gt"));
  const auto result = hsi::classify_patch(features, gt, cc);
  const fs::path out = need_string(j, "output");
  fs::create_directories(out);
  hsi::save_label_map(result.prediction, out / "prediction.pgm");
  hsi::save_ppm(hsi::render_prediction(result.prediction), out / "prediction.ppm");
  const auto& c = result.counts;
  write_text(out / "counts.csv", "tp,tn,fp,fn,training\n" + std::to_string(c.tp) + "," + std::to_string(c.tn) + "," +
                                     std::to_string(c.fp) + "," + std::to_string(c.fn) + "," +
                                     std::to_string(result.training.size()) + "\n");
  std::cout << "wrote " << (out / "prediction.pgm").string() << "\n";
  return 0;
}

int cmd_evaluate(const Options& o) {
  Json j = read_config(o, false);
  set_if(j, "prediction", o.prediction);
  set_if(j, "gt", o.gt);
  set_if(j, "output", o.output);
  const hsi::LabelMap pred = hsi::load_label_map(need_string(j, "prediction"));
  const hsi::LabelMap gt = hsi::load_label_map(need_string(j, "gt"));
  const auto counts = hsi::confusion(pred, gt);
  const auto report = hsi::metrics(counts);
  const std::string csv = "tp,tn,fp,fn" + hsi::detail::metric_header() + "\n" +
                          hsi::detail::counts_cells(counts).substr(1) + hsi::detail::metric_cells(report) + "\n";
  if (j.contains("output")) {
    write_text(need_string(j, "output"), csv);
  }
  std::cout << csv;
  return 0;
}

int cmd_run(const Options& o) {
  Json j = read_config(o, true);
  if (o.seed) j["classify"]["seed"] = *o.seed;
  if (o.method) j["classify"]["method"] = *o.method;
  set_if(j, "output", o.output);
  set_if(j, "representation", o.representation);
  set_if(j, "extractor", o.extractor);
  const hsi::RunConfig config = hsi::run_config_from_json(j);
  const hsi::RunReport report = hsi::run_experiment(config);
  std::cout << "patches: " << report.patches.size() << "\n";
  for (std::size_t k = 0; k < hsi::kMetricNames.size(); ++k) {
    const auto v = hsi::metric_values(report.micro)[k];
    std::cout << "micro " << hsi::kMetricNames[k] << ": " << (v ? hsi::detail::fixed6(*v) : "NA") << "\n";
  }
  if (!config.output.empty()) std::cout << "reports in " << config.output.string() << "\n";
  return 0;
}

int cmd_compare(const Options& o) {
  Json j = read_config(o, false);
  set_if(j, "a", o.a);
  set_if(j, "b", o.b);
  set_if(j, "output", o.output);
  const auto rows =
      hsi::compare_runs(hsi::load_image_metrics(need_string(j, "a")), hsi::load_image_metrics(need_string(j, "b")));
  const std::string csv = hsi::significance_csv(rows);
  if (j.contains("output")) write_text(need_string(j, "output"), csv);
  std::cout << csv;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperspectral spectral-spatial classification toolkit"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool config_required) {
    auto* opt = sub->add_option("-c,--config", o.config, "JSON configuration file");
    if (config_required) opt->required();
    sub->add_option("-o,--output", o.output, "output path (overrides config)");
  };
  auto* synth = app.add_subcommand("synth", "generate a phantom cube and ground truth");
  add_common(synth, true);
  synth->add_option("--seed", o.seed, "phantom seed");

  auto* rgb = app.add_subcommand("rgb", "render a cube to sRGB (PPM)");
  add_common(rgb, false);
  rgb->add_option("--cube", o.cube, "input cube");

  auto* extract = app.add_subcommand("extract", "compute a feature stack");
  add_common(extract, true);
  extract->add_option("--seed", o.seed, "label sampling seed");
  extract->add_option("--extractor", o.extractor, "none | mpri | tensorssa");

  auto* classify = app.add_subcommand("classify", "classify one feature stack");
  add_common(classify, true);
  classify->add_option("--seed", o.seed, "label sampling seed");
  classify->add_option("--method", o.method, "ssl | knn | svm");

  auto* evaluate = app.add_subcommand("evaluate", "score a prediction against ground truth");
  add_common(evaluate, false);
  evaluate->add_option("--prediction", o.prediction, "predicted label map (PGM)");
  evaluate->add_option("--gt", o.gt, "ground-truth label map (PGM)");

  auto* run = app.add_subcommand("run", "run a full patch-wise experiment");
  add_common(run, true);
  run->add_option("--seed", o.seed, "master seed");
  run->add_option("--representation", o.representation, "hsi | rgb");
  run->add_option("--extractor", o.extractor, "none | mpri | tensorssa");
  run->add_option("--classifier", o.method, "ssl | knn | svm");

  auto* compare = app.add_subcommand("compare", "Wilcoxon rank-sum comparison of two runs");
  add_common(compare, false);
  compare->add_option("--a", o.a, "first run directory or images.csv");
  compare->add_option("--b", o.b, "second run directory or images.csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (synth->parsed()) return cmd_synth(o);
    if (rgb->parsed()) return cmd_rgb(o);
    if (extract->parsed()) return cmd_extract(o);
    if (classify->parsed()) return cmd_classify(o);
    if (evaluate->parsed()) return cmd_evaluate(o);
    if (run->parsed()) return cmd_run(o);
    if (compare->parsed()) return cmd_compare(o);
  } catch (const hsi::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    const bool config = e.code() == ErrorCode::kConfigNotFound || e.code() == ErrorCode::kConfigInvalid;
    return config ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
