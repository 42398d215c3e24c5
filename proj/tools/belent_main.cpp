/*
 * Copyright (c) 2026, the belent authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// belent: belief-function entropy toolkit CLI.
//
// Subcommands compute entropy measures for a BPA file, reproduce the
// reference tables, and emit plot-ready CSV datasets (surfaces, the
// two-element trajectory, split-tree leaves, iterative information volume).
// Exit codes: 0 success, 2 usage or validation error, 3 resource guard.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "belief/belief.hpp"

namespace {

void write_output(const std::optional<std::string>& path, const std::string& content) {
  if (!path) {
    std::cout << content;
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) {
    throw belief::Error(belief::Errc::malformed_document,
                        "cannot write '" + *path + "'");
  }
  out << content;
}

belief::Frame two_element_frame() {
  return belief::make_frame({"A", "B"});
}

belief::MassFunction reference_bpa_2d() {
  // m(A) = m(B) = 0.2, m(AB) = 0.6; the fixed input of the table-2 dataset.
  return belief::make_bpa(two_element_frame(), {{"A", 0.2}, {"B", 0.2}, {"A,B", 0.6}});
}

int run_entropy(const std::string& bpa_path, const std::string& measures_arg,
                std::optional<int> k, int precision,
                const std::optional<std::string>& out) {
  const belief::MassFunction m = belief::load_bpa_file(bpa_path);

  std::set<belief::Measure> requested;
  std::stringstream names(measures_arg);
  std::string name;
  while (std::getline(names, name, ',')) {
    const auto measure = belief::measure_from_name(name);
    if (!measure) {
      throw belief::Error(belief::Errc::malformed_document,
                          "unknown measure '" + name + "'");
    }
    requested.insert(*measure);
  }
  if (requested.empty()) {
    throw belief::Error(belief::Errc::malformed_document, "no measures requested");
  }
  if (requested.count(belief::Measure::tfb) && !k) {
    throw belief::Error(belief::Errc::invalid_order,
                        "--k is required when the tfb measure is requested");
  }

  std::string json = "[\n";
  bool first = true;
  for (const belief::Measure measure :
       {belief::Measure::shannon, belief::Measure::deng, belief::Measure::fb,
        belief::Measure::tfb}) {
    if (!requested.count(measure)) continue;
    const belief::EntropyReport report = belief::make_entropy_report(m, measure, k);
    if (!first) json += ",\n";
    first = false;
    json += std::string("  {\"measure\":\"") + belief::measure_name(measure) +
            "\",\"k\":" + (report.k ? std::to_string(*report.k) : "null") +
            ",\"value\":" + belief::format_fixed(report.value, precision) +
            ",\"bpa_digest\":\"" + report.bpa_digest + "\"}";
  }
  json += "\n]\n";
  write_output(out, json);
  return 0;
}

int run_table(int which, int precision, const std::optional<std::string>& out) {
  std::string csv;
  if (which == 1) {
    csv = "k,n,dimension,value\n";
    for (int k = 1; k <= 4; ++k) {
      for (int n = 2; n <= 5; ++n) {
        csv += std::to_string(k) + ',' + std::to_string(n) + ',' +
               std::to_string(belief::hoivmf_dimension(n, k)) + ',' +
               belief::format_fixed(belief::hoivmf_value(n, k), precision) + '\n';
      }
    }
  } else {
    const belief::MassFunction m = reference_bpa_2d();
    const belief::DengVolumeResult volume = belief::deng_volume(m, 1e-12, 14);
    csv = "k,deng_method,hoivmf\n";
    for (const belief::DengVolumeStep& step : volume.sequence) {
      csv += std::to_string(step.iteration) + ',' +
             belief::format_fixed(step.value, precision) + ',' +
             belief::format_fixed(belief::hoivmf_value(2, step.iteration), precision) +
             '\n';
    }
  }
  write_output(out, csv);
  return 0;
}

int run_surface(int k_min, int k_max, double step, const std::string& out_dir,
                int precision) {
  if (k_min < 1 || k_max < k_min) {
    throw belief::Error(belief::Errc::invalid_order,
                        "order range needs 1 <= k-min <= k-max");
  }
  std::filesystem::create_directories(out_dir);

  std::string summary = "k,argmax_mA,argmax_mB,argmax_mAB,max_value\n";
  const belief::Frame frame = two_element_frame();
  const belief::FocalElement a(0b01), b(0b10), ab(0b11);
  for (int k = k_min; k <= k_max; ++k) {
    const belief::GridResult result =
        belief::grid_search_max({frame, step, belief::Measure::tfb, k});
    const std::string path = out_dir + "/surface_k" + std::to_string(k) + ".csv";
    write_output(path, belief::surface_csv(result, precision));
    summary += std::to_string(k) + ',' +
               belief::format_fixed(result.argmax.mass_of(a), precision) + ',' +
               belief::format_fixed(result.argmax.mass_of(b), precision) + ',' +
               belief::format_fixed(result.argmax.mass_of(ab), precision) + ',' +
               belief::format_fixed(result.max_value, precision) + '\n';
  }
  std::cout << summary;
  return 0;
}

int run_trajectory(double ratio, int steps, int precision,
                   const std::optional<std::string>& out) {
  if (steps < 2) {
    throw belief::Error(belief::Errc::malformed_document, "--steps must be >= 2");
  }
  if (ratio < 0.0 || ratio > 1.0) {
    throw belief::Error(belief::Errc::malformed_document,
                        "--ratio must lie in [0, 1]");
  }
  const belief::Frame frame = two_element_frame();
  const belief::FocalElement a(0b01), b(0b10), ab(0b11);

  std::string csv = "t,shannon,fb,deng,tfb_k1,tfb_k2,tfb_k3\n";
  for (int i = 0; i < steps; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(steps - 1);
    belief::MassFunction m(frame);
    m.set(a, ratio * t);
    m.set(b, (1.0 - ratio) * t);
    m.set(ab, 1.0 - t);
    csv += belief::format_fixed(t, precision) + ',' +
           belief::format_fixed(belief::shannon_of_focal_masses(m), precision) + ',' +
           belief::format_fixed(belief::fb_entropy(m), precision) + ',' +
           belief::format_fixed(belief::deng_entropy(m), precision) + ',' +
           belief::format_fixed(belief::tfb_entropy(m, 1), precision) + ',' +
           belief::format_fixed(belief::tfb_entropy(m, 2), precision) + ',' +
           belief::format_fixed(belief::tfb_entropy(m, 3), precision) + '\n';
  }
  write_output(out, csv);
  return 0;
}

int run_split(const std::string& bpa_path, int k, const std::string& emit,
              int precision, const std::optional<std::string>& out) {
  const belief::MassFunction m = belief::load_bpa_file(bpa_path);
  const belief::SplitTree tree = belief::build_split_tree(m, k);

  std::string csv;
  if (emit == "counts") {
    csv = "origin,count\n";
    std::map<belief::FocalElement, long long> counts;
    for (const belief::LeafTerm& t : tree.rounds.back().terms) ++counts[t.origin];
    for (const auto& [origin, count] : counts) {
      csv += '"' + m.frame().subset_name(origin) + "\"," + std::to_string(count) + '\n';
    }
  } else if (emit == "leaves") {
    csv = belief::leaves_csv(m.frame(), tree, precision);
  } else {
    throw belief::Error(belief::Errc::malformed_document,
                        "--emit must be 'leaves' or 'counts'");
  }
  write_output(out, csv);
  return 0;
}

int run_deng_volume(const std::string& bpa_path, double epsilon, int max_iter,
                    int precision, const std::optional<std::string>& out) {
  const belief::MassFunction m = belief::load_bpa_file(bpa_path);
  const belief::DengVolumeResult result = belief::deng_volume(m, epsilon, max_iter);

  std::string csv = "iteration,value,is_final\n";
  for (std::size_t i = 0; i < result.sequence.size(); ++i) {
    const bool final_row = i + 1 == result.sequence.size();
    csv += std::to_string(result.sequence[i].iteration) + ',' +
           belief::format_fixed(result.sequence[i].value, precision) + ',' +
           (final_row ? "1" : "0") + '\n';
  }
  if (!result.converged) {
    csv += "# warning: increase still >= epsilon after " +
           std::to_string(max_iter) + " iterations\n";
  }
  write_output(out, csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"belief-function entropy toolkit"};
  app.require_subcommand(1);

  std::string bpa_path;
  std::string measures = "shannon,deng,fb";
  std::optional<int> k_opt;
  int precision = belief::kDefaultPrecision;
  std::optional<std::string> out_path;

  auto* entropy = app.add_subcommand("entropy", "entropy measures for a BPA file");
  entropy->add_option("--bpa", bpa_path, "BPA JSON file")->required();
  entropy->add_option("--measures", measures,
                      "comma-separated subset of shannon,deng,fb,tfb");
  int entropy_k = 0;
  auto* entropy_k_opt = entropy->add_option("--k", entropy_k, "TFB order");

  int which = 1;
  auto* table = app.add_subcommand("table", "reference table datasets");
  table->add_option("--which", which, "1 or 2")->required()->check(CLI::Range(1, 2));

  int k_min = 1, k_max = 9;
  double step = 0.01;
  std::string out_dir = ".";
  auto* surface = app.add_subcommand(
      "surface", "TFB entropy over the 2-element simplex, one CSV per order");
  surface->add_option("--k-min", k_min, "lowest order");
  surface->add_option("--k-max", k_max, "highest order");
  surface->add_option("--step", step, "grid step (must divide 1)");
  surface->add_option("--out-dir", out_dir, "directory for surface_k<k>.csv files");

  double ratio = 0.5;
  int steps = 0;
  auto* trajectory = app.add_subcommand(
      "trajectory", "measures along m(AB) = 1-t, m(A) = r*t, m(B) = (1-r)*t");
  trajectory->add_option("--ratio", ratio, "recovery ratio r in [0, 1]");
  trajectory->add_option("--steps", steps, "number of samples of t in [0, 1]")
      ->required();

  int split_k = 1;
  std::string emit = "leaves";
  auto* split = app.add_subcommand("split", "split-tree leaves or leaf counts");
  split->add_option("--bpa", bpa_path, "BPA JSON file")->required();
  split->add_option("--k", split_k, "split order")->required();
  split->add_option("--emit", emit, "'leaves' or 'counts'");

  double epsilon = 1e-6;
  int max_iter = 100;
  auto* volume = app.add_subcommand(
      "deng-volume", "iterative information volume until increase < epsilon");
  volume->add_option("--bpa", bpa_path, "BPA JSON file")->required();
  volume->add_option("--epsilon", epsilon, "stopping threshold (> 0)");
  volume->add_option("--max-iter", max_iter, "iteration cap");

  std::string out_str;
  std::vector<CLI::Option*> out_options;
  for (CLI::App* sub : {entropy, table, surface, trajectory, split, volume}) {
    sub->add_option("--precision", precision, "printed decimal places")
        ->check(CLI::Range(0, 17));
  }
  for (CLI::App* sub : {entropy, table, trajectory, split, volume}) {
    out_options.push_back(sub->add_option("--out", out_str, "output file (default: stdout)"));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  for (const CLI::Option* option : out_options) {
    if (option->count() > 0) out_path = out_str;
  }

  try {
    if (entropy->parsed()) {
      if (*entropy_k_opt) k_opt = entropy_k;
      return run_entropy(bpa_path, measures, k_opt, precision, out_path);
    }
    if (table->parsed()) return run_table(which, precision, out_path);
    if (surface->parsed()) return run_surface(k_min, k_max, step, out_dir, precision);
    if (trajectory->parsed()) return run_trajectory(ratio, steps, precision, out_path);
    if (split->parsed()) return run_split(bpa_path, split_k, emit, precision, out_path);
    if (volume->parsed())
      return run_deng_volume(bpa_path, epsilon, max_iter, precision, out_path);
  } catch (const belief::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == belief::Errc::tree_too_large ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
