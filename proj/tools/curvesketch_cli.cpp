// Command-line front end: dataset generation, landmark configs,
// vectorization, distances, field rasters, feature-size estimation, scale
// selection, classification, and bound-verification suites.
//
// Exit codes: 0 success, 1 validation/input error, 2 verification FAIL.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <curvesketch/curvesketch.hpp>

namespace cs = curvesketch;
using cs::io::json;

namespace {

std::string manifest_path_for(const std::string& out) {
  if (out.size() > 4 && out.substr(out.size() - 4) == ".csv")
    return out.substr(0, out.size() - 4) + ".manifest.json";
  return out + ".manifest.json";
}

std::vector<cs::LabeledCurve> load_curves(const std::string& curves_path,
                                          const std::string& manifest_path) {
  json manifest = json::object();
  if (!manifest_path.empty()) manifest = cs::io::read_json_file(manifest_path);
  auto in = cs::io::open_in(curves_path);
  return cs::io::read_trajectory_csv(in, manifest);
}

const cs::LabeledCurve& pick_curve(const std::vector<cs::LabeledCurve>& curves,
                                   const std::string& id) {
  if (id.empty()) return curves.front();
  for (const auto& lc : curves)
    if (lc.id == id) return lc;
  throw std::runtime_error("no curve with id '" + id + "'");
}

double parse_p(const std::string& s) {
  if (s == "inf") return std::numeric_limits<double>::infinity();
  return cs::io::parse_double(s, "--p");
}

json suite_report_json(const cs::SuiteReport& rep) {
  json j;
  j["suite"] = rep.suite;
  j["trials"] = rep.trials;
  j["checked"] = rep.checked;
  j["skipped"] = rep.skipped;
  j["violations"] = rep.violations;
  j["max_ratio"] = rep.max_ratio;
  j["result"] = rep.pass() ? "PASS" : "FAIL";
  if (!rep.notes.empty()) j["notes"] = rep.notes;
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"Oriented-curve landmark sketches: vectorization, distances, "
               "and verification"};
  app.require_subcommand(1);
  unsigned threads = 1;
  app.add_option("--threads", threads, "Worker thread bound")
      ->capture_default_str();

  // --- gen-synthetic ---------------------------------------------------
  auto* gen = app.add_subcommand(
      "gen-synthetic", "Generate the two-class directional trajectory set");
  int n_per_class = 100;
  std::uint64_t seed = 0;
  std::string out_path;
  gen->add_option("--n-per-class", n_per_class, "Curves per class")
      ->capture_default_str();
  gen->add_option("--seed", seed, "PRNG seed")->capture_default_str();
  gen->add_option("--out", out_path, "Output trajectory CSV path")->required();
  gen->callback([&] {
    if (n_per_class < 1) throw CLI::ValidationError("--n-per-class must be >= 1");
    cs::DirectionalSpec spec;
    spec.n_per_class = n_per_class;
    spec.seed = seed;
    auto curves = cs::gen_directional(spec);
    auto out = cs::io::open_out(out_path);
    cs::io::write_trajectory_csv(out, curves);
    auto mf = cs::io::open_out(manifest_path_for(out_path));
    mf << cs::io::manifest_json(curves).dump(2) << '\n';
  });

  // --- landmarks --------------------------------------------------------
  auto* lm = app.add_subcommand(
      "landmarks", "Write a sketch config JSON with a landmark grid");
  std::vector<int> grid{20, 20};
  std::vector<double> domain{0.0, 0.0, 1.0, 1.0};
  double sigma = 0.3;
  std::string variant = "signed";
  lm->add_option("--grid", grid, "Grid size: NX NY")->expected(2);
  lm->add_option("--domain", domain, "Domain: XMIN YMIN XMAX YMAX")->expected(4);
  lm->add_option("--sigma", sigma, "Kernel scale (signed variant)")
      ->capture_default_str();
  lm->add_option("--variant", variant, "signed | minDist")
      ->check(CLI::IsMember({"signed", "minDist"}))
      ->capture_default_str();
  lm->add_option("--out", out_path, "Output config JSON path")->required();
  lm->callback([&] {
    cs::SketchConfig cfg;
    cfg.sigma = sigma;
    cfg.variant = variant == "signed" ? cs::Variant::Signed
                                      : cs::Variant::MinDist;
    cfg.landmarks = cs::grid_landmarks(
        cs::Rect{domain[0], domain[1], domain[2], domain[3]}, grid[0], grid[1]);
    auto out = cs::io::open_out(out_path);
    out << cs::io::sketch_config_json(cfg).dump(2) << '\n';
  });

  // --- vectorize ----------------------------------------------------------
  auto* vec = app.add_subcommand("vectorize",
                                 "Sketch curves against a landmark config");
  std::string curves_path, manifest_path, config_path;
  vec->add_option("--curves", curves_path, "Trajectory CSV")->required();
  vec->add_option("--manifest", manifest_path, "Curve manifest JSON");
  vec->add_option("--config", config_path, "Sketch config JSON")->required();
  vec->add_option("--out", out_path, "Output feature CSV path")->required();
  vec->callback([&] {
    auto cfg = cs::io::parse_sketch_config(cs::io::read_json_file(config_path));
    auto labeled = load_curves(curves_path, manifest_path);
    std::vector<cs::Polyline> curves;
    std::vector<std::string> ids;
    for (const auto& lc : labeled) {
      curves.push_back(lc.curve);
      ids.push_back(lc.id);
    }
    auto fvs = cs::sketch_all(curves, cfg, ids, threads);
    auto out = cs::io::open_out(out_path);
    cs::io::write_features_csv(out, fvs);
  });

  // --- dist ----------------------------------------------------------------
  auto* dist = app.add_subcommand("dist", "Pairwise distance matrix");
  std::string metric = "dq", features_path, p_str = "2";
  double step = 0.01;
  dist->add_option("--metric", metric, "dq | hausdorff | frechet | dtw")
      ->check(CLI::IsMember({"dq", "hausdorff", "frechet", "dtw"}))
      ->capture_default_str();
  dist->add_option("--features", features_path, "Feature CSV (metric dq)");
  dist->add_option("--p", p_str, "l^p exponent for dq, or 'inf'")
      ->capture_default_str();
  dist->add_option("--curves", curves_path, "Trajectory CSV (curve metrics)");
  dist->add_option("--manifest", manifest_path, "Curve manifest JSON");
  dist->add_option("--step", step, "Sampling step for hausdorff")
      ->capture_default_str();
  dist->add_option("--out", out_path, "Output matrix CSV path")->required();
  dist->callback([&] {
    std::vector<std::string> ids;
    std::vector<std::vector<double>> m;
    if (metric == "dq") {
      if (features_path.empty())
        throw CLI::ValidationError("dist: metric dq needs --features");
      auto in = cs::io::open_in(features_path);
      auto fvs = cs::io::read_features_csv(in);
      cs::DistanceSpec spec(parse_p(p_str));
      std::size_t n = fvs.size();
      m.assign(n, std::vector<double>(n, 0.0));
      for (std::size_t i = 0; i < n; ++i) {
        ids.push_back(fvs[i].curve_id);
        for (std::size_t j = i + 1; j < n; ++j)
          m[i][j] = m[j][i] = cs::d_Q(fvs[i], fvs[j], spec);
      }
    } else {
      if (curves_path.empty())
        throw CLI::ValidationError("dist: metric " + metric + " needs --curves");
      auto labeled = load_curves(curves_path, manifest_path);
      std::size_t n = labeled.size();
      m.assign(n, std::vector<double>(n, 0.0));
      for (std::size_t i = 0; i < n; ++i) {
        ids.push_back(labeled[i].id);
        for (std::size_t j = i + 1; j < n; ++j) {
          double d = 0.0;
          if (metric == "hausdorff")
            d = cs::hausdorff(labeled[i].curve, labeled[j].curve, step)
                    .symmetric;
          else if (metric == "frechet")
            d = cs::discrete_frechet(labeled[i].curve, labeled[j].curve);
          else
            d = cs::dtw(labeled[i].curve, labeled[j].curve);
          m[i][j] = m[j][i] = d;
        }
      }
    }
    auto out = cs::io::open_out(out_path);
    cs::io::write_matrix_csv(out, ids, m);
  });

  // --- field ----------------------------------------------------------------
  auto* field = app.add_subcommand("field",
                                   "Rasterize the signed field of one curve");
  std::string curve_id, pgm_path;
  field->add_option("--curves", curves_path, "Trajectory CSV")->required();
  field->add_option("--manifest", manifest_path, "Curve manifest JSON");
  field->add_option("--curve-id", curve_id, "Curve to rasterize (default: first)");
  field->add_option("--grid", grid, "Grid size: NX NY")->expected(2);
  field->add_option("--domain", domain, "Domain: XMIN YMIN XMAX YMAX")
      ->expected(4);
  field->add_option("--sigma", sigma, "Kernel scale")->capture_default_str();
  field->add_option("--out", out_path, "Output raster CSV path")->required();
  field->add_option("--pgm", pgm_path, "Optional normalized PGM path");
  field->callback([&] {
    auto labeled = load_curves(curves_path, manifest_path);
    const auto& lc = pick_curve(labeled, curve_id);
    auto raster = cs::field_raster(
        lc.curve, cs::Rect{domain[0], domain[1], domain[2], domain[3]},
        grid[0], grid[1], sigma);
    auto out = cs::io::open_out(out_path);
    cs::io::write_raster_csv(out, raster, grid[0], grid[1]);
    if (!pgm_path.empty()) {
      auto pgm = cs::io::open_out(pgm_path);
      cs::io::write_raster_pgm(pgm, raster, grid[0], grid[1]);
    }
  });

  // --- slfs -------------------------------------------------------------
  auto* slfs = app.add_subcommand(
      "slfs", "Estimate the signed local feature size of one curve");
  double slfs_step = 0.05;
  slfs->add_option("--curves", curves_path, "Trajectory CSV")->required();
  slfs->add_option("--manifest", manifest_path, "Curve manifest JSON");
  slfs->add_option("--curve-id", curve_id, "Curve to analyze (default: first)");
  slfs->add_option("--step", slfs_step, "Sampling step")->capture_default_str();
  slfs->callback([&] {
    auto labeled = load_curves(curves_path, manifest_path);
    const auto& lc = pick_curve(labeled, curve_id);
    auto est = cs::slfs_estimate(lc.curve, slfs_step);
    std::cout << cs::io::slfs_json(est).dump(2) << '\n';
  });

  // --- sigma-select -------------------------------------------------------
  auto* sel = app.add_subcommand(
      "sigma-select", "Kernel scale from feature size and tolerance");
  double delta = 0.0, epsilon = 0.0;
  sel->add_option("--delta", delta, "Signed local feature size")->required();
  sel->add_option("--epsilon", epsilon, "Stability tolerance")->required();
  sel->callback([&] {
    std::cout << cs::io::format_double(cs::sigma_select(delta, epsilon))
              << '\n';
  });

  // --- classify ------------------------------------------------------------
  auto* cls = app.add_subcommand(
      "classify", "Directional experiment: repeated-split test error");
  int repeats = 100, knn_k = 5, iters = 500;
  double lr = 1.0;
  std::string classifier = "logreg";
  cls->add_option("--variant", variant, "signed | minDist")
      ->check(CLI::IsMember({"signed", "minDist"}))
      ->capture_default_str();
  cls->add_option("--classifier", classifier, "logreg | knn")
      ->check(CLI::IsMember({"logreg", "knn"}))
      ->capture_default_str();
  cls->add_option("--n-per-class", n_per_class, "Curves per class")
      ->capture_default_str();
  cls->add_option("--repeats", repeats, "Train/test splits")
      ->capture_default_str();
  cls->add_option("--seed", seed, "PRNG seed")->capture_default_str();
  cls->add_option("--k", knn_k, "kNN neighbor count")->capture_default_str();
  cls->add_option("--lr", lr, "Logistic regression step size")
      ->capture_default_str();
  cls->add_option("--iters", iters, "Logistic regression iterations")
      ->capture_default_str();
  cls->callback([&] {
    cs::ExperimentConfig cfg;
    cfg.repeats = repeats;
    cfg.seed = seed;
    cfg.data.n_per_class = n_per_class;
    cfg.knn_k = knn_k;
    cfg.logreg_lr = lr;
    cfg.logreg_iters = iters;
    cfg.classifier = classifier == "knn" ? cs::ClassifierKind::KNN
                                         : cs::ClassifierKind::LogisticRegression;
    auto variant_kind = variant == "signed" ? cs::Variant::Signed
                                            : cs::Variant::MinDist;
    auto report = cs::run_directional_experiment(cfg, variant_kind);
    json j;
    j["config"] = {{"variant", variant},
                   {"classifier", classifier},
                   {"n_per_class", n_per_class},
                   {"repeats", repeats},
                   {"seed", seed},
                   {"train_fraction", cfg.train_fraction}};
    j["mean_error"] = report.mean;
    j["median_error"] = report.median;
    j["variance"] = report.variance;
    j["per_repeat"] = report.per_repeat;
    std::cout << j.dump(2) << '\n';
  });

  // --- verify -------------------------------------------------------------
  auto* ver = app.add_subcommand("verify", "Run bound-verification suites");
  std::string suite = "all";
  int trials = 1000;
  bool any_fail = false;
  ver->add_option("--suite", suite, "Suite id or 'all'")
      ->capture_default_str();
  ver->add_option("--trials", trials, "Trials per suite")
      ->capture_default_str();
  ver->add_option("--seed", seed, "PRNG seed")->capture_default_str();
  ver->callback([&] {
    std::vector<std::string> ids;
    if (suite == "all")
      ids = cs::all_suites();
    else
      ids.push_back(suite);
    json reports = json::array();
    for (const auto& id : ids) {
      auto rep = cs::verify_theorem_suite(id, trials, seed);
      if (!rep.pass()) any_fail = true;
      reports.push_back(suite_report_json(rep));
    }
    json j;
    j["config"] = {{"suite", suite}, {"trials", trials}, {"seed", seed}};
    j["suites"] = reports;
    j["result"] = any_fail ? "FAIL" : "PASS";
    std::cout << j.dump(2) << '\n';
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return any_fail ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
