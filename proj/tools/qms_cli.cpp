// SPDX-License-Identifier: Apache-2.0
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qms/analysis.hpp"
#include "qms/harness/bench.hpp"
#include "qms/harness/input.hpp"
#include "qms/sorter.hpp"

namespace {

using namespace qms::harness;

qms::Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  qms::Rational r;
  if (slash == std::string::npos) {
    r.num = std::stoull(text);
    r.den = 1;
  } else {
    r.num = std::stoull(text.substr(0, slash));
    r.den = std::stoull(text.substr(slash + 1));
  }
  if (r.den == 0) throw CLI::ValidationError("rational", "zero denominator in '" + text + "'");
  return r;
}

std::vector<qms::Algorithm> parse_algorithms(const std::vector<std::string>& names,
                                             bool worst_case_only) {
  std::vector<qms::Algorithm> all = {qms::Algorithm::Bmqms, qms::Algorithm::Mqms,
                                     qms::Algorithm::Umqms};
  if (!worst_case_only) {
    all.push_back(qms::Algorithm::Hqms);
    all.push_back(qms::Algorithm::Introsort);
  }
  if (names.empty() || (names.size() == 1 && names[0] == "all")) return all;
  std::vector<qms::Algorithm> out;
  for (const auto& name : names) {
    auto algo = algorithm_from_string(name);
    if (!algo) throw CLI::ValidationError("--algo", "unknown algorithm '" + name + "'");
    if (worst_case_only && (*algo == qms::Algorithm::Hqms || *algo == qms::Algorithm::Introsort))
      throw CLI::ValidationError("--algo", "'" + name + "' has no adversarial simulation");
    out.push_back(*algo);
  }
  return out;
}

std::vector<Distribution> parse_distributions(const std::vector<std::string>& names) {
  if (names.empty()) return {Distribution::RandomPerm};
  std::vector<Distribution> out;
  for (const auto& name : names) {
    auto dist = distribution_from_string(name);
    if (!dist) throw CLI::ValidationError("--dist", "unknown distribution '" + name + "'");
    out.push_back(*dist);
  }
  return out;
}

void emit_rows(const std::vector<BenchRow>& rows, const std::string& csv_path) {
  if (csv_path.empty() || csv_path == "-") {
    write_csv(std::cout, rows);
    return;
  }
  std::ofstream os(csv_path);
  if (!os) throw CLI::RuntimeError(1);
  write_csv(os, rows);
  std::cerr << "wrote " << rows.size() << " rows to " << csv_path << "\n";
}

int run_analyze(const qms::Rational& theta) {
  namespace an = qms::analysis;
  const double th = theta.value();
  const auto mom = an::linear_coefficient(7.0 / 9.0, 1.0 / 9.0, 20.0 / 9.0);
  const double alpha_lo = 1.0 / (5.0 * th);
  std::printf("selection worst-case coefficient      %.6f\n", mom.coefficient);
  std::printf("selection recursion exponent zeta     %.6f\n", mom.zeta);
  std::printf("selection average coefficient         %.6f\n", an::mom_average_coefficient());
  std::printf("bmqms worst-case coefficient          %.6f\n",
              an::q_coefficient(0.5, -an::kKappa / 2 + 20.0 / 3.0 + 5.0 / 3.0));
  std::printf("mqms worst-case coefficient           %.6f\n",
              an::q_coefficient(0.5, -an::kKappa / 2 + 20.0 / 15.0 + 36.0 / 15.0));
  std::printf("umqms(%zu/%zu) worst-case, even split     %.6f\n", theta.num, theta.den,
              an::g(0.5, th));
  std::printf("umqms(%zu/%zu) worst-case, edge split     %.6f\n", theta.num, theta.den,
              an::g(alpha_lo, th));
  std::printf("umqms(%zu/%zu) average coefficient       %.6f\n", theta.num, theta.den,
              an::umqms_average_coefficient(th));
  const double theta_opt = an::find_theta_opt();
  std::printf("theta with equalized worst case       %.6f\n", theta_opt);
  std::printf("worst-case coefficient at that theta  %.6f\n", an::g(0.5, theta_opt));
  std::printf("mergesort linear constant kappa       %.6f\n", an::kKappa);
  std::printf("imbalance penalty eps, grid max       %.6f\n", an::eps_grid_max(100000));
  return 0;
}

int run_gen(Distribution dist, std::size_t n, std::uint64_t seed, std::size_t few,
            const std::string& out_path) {
  auto keys = gen_input(dist, n, seed, few);
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out_path.empty() && out_path != "-") {
    file.open(out_path);
    if (!file) throw CLI::RuntimeError(1);
    os = &file;
  }
  for (auto k : keys) *os << k << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"QuickMergesort benchmark and analysis driver"};
  app.require_subcommand(1);

  std::vector<std::string> algo_names;
  std::vector<std::string> dist_names;
  std::vector<std::size_t> sizes{1u << 16};
  std::size_t seeds = 1;
  std::string mode_name = "comparisons";
  std::string csv_path = "-";
  std::size_t min_bytes = 0;
  bool serial = false;
  std::size_t few = 2;
  std::string theta_text = "11/5";
  std::string delta_text = "1/16";
  std::size_t cutoff = 0;  // 0 = auto: 1 when counting, 42 when timing

  auto add_common = [&](CLI::App* cmd, bool with_dist) {
    cmd->add_option("--algo", algo_names, "algorithms, or 'all'");
    if (with_dist) cmd->add_option("--dist", dist_names, "input distributions");
    cmd->add_option("--n", sizes, "input sizes");
    cmd->add_option("--seeds", seeds, "number of seeds (1..S)");
    cmd->add_option("--mode", mode_name, "'comparisons' or 'time'")
        ->check(CLI::IsMember({"comparisons", "time"}));
    cmd->add_option("--csv", csv_path, "output path, '-' for stdout");
    cmd->add_option("--theta", theta_text, "undersampling factor p/q");
    cmd->add_option("--cutoff", cutoff, "insertion sort cutoff (default 1 counting, 42 timing)");
  };

  auto* bench = app.add_subcommand("bench", "measure sorters on generated inputs");
  add_common(bench, true);
  bench->add_option("--min-bytes", min_bytes, "timing mode: repeat small inputs");
  bench->add_flag("--serial", serial, "disable the comparison-cell worker pool");
  bench->add_option("--few", few, "distinct keys for 'fewdistinct'");
  bench->add_option("--delta", delta_text, "hybrid pivot-quality window p/q");

  auto* worst = app.add_subcommand("worstcase", "run the adversarial simulations");
  add_common(worst, false);

  auto* analyze = app.add_subcommand("analyze", "print the comparison-bound constants");
  analyze->add_option("--theta", theta_text, "undersampling factor p/q");

  std::string gen_dist = "random";
  std::size_t gen_n = 1000;
  std::uint64_t gen_seed = 1;
  std::string gen_out = "-";
  auto* gen = app.add_subcommand("gen", "write one generated input, one key per line");
  gen->add_option("--dist", gen_dist, "input distribution");
  gen->add_option("--n", gen_n, "input size");
  gen->add_option("--seed", gen_seed, "seed");
  gen->add_option("--few", few, "distinct keys for 'fewdistinct'");
  gen->add_option("--out", gen_out, "output path, '-' for stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return run_analyze(parse_rational(theta_text));
    if (gen->parsed()) {
      auto dist = distribution_from_string(gen_dist);
      if (!dist) throw CLI::ValidationError("--dist", "unknown distribution '" + gen_dist + "'");
      return run_gen(*dist, gen_n, gen_seed, few, gen_out);
    }

    BenchRequest req;
    req.algorithms = parse_algorithms(algo_names, worst->parsed());
    req.distributions = parse_distributions(worst->parsed() ? std::vector<std::string>{}
                                                            : dist_names);
    req.sizes = sizes;
    req.seeds = seeds;
    req.mode = mode_name == "time" ? Mode::Time : Mode::Comparisons;
    req.worst_case = worst->parsed();
    req.serial = serial;
    req.min_bytes = min_bytes;
    req.few_distinct = few;
    req.config.theta = parse_rational(theta_text);
    req.config.delta = parse_rational(delta_text);
    req.config.base_case_cutoff =
        cutoff != 0 ? cutoff : (req.mode == Mode::Time ? 42 : 1);
    if (req.config.theta.num < req.config.theta.den)
      throw CLI::ValidationError("--theta", "must be at least 1");
    emit_rows(run_benchmark(req), csv_path);
    return 0;
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
