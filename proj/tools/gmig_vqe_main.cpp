// Command-line driver: bond-length scans, summary tables and curve files
// for the H2 eigensolver workbench.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "gmig/report.hpp"

namespace {

gmig::ScanConfig load_config(const std::string& config_path) {
  if (config_path.empty()) return {};
  std::ifstream in(config_path);
  if (!in) throw std::runtime_error("cannot open config " + config_path);
  nlohmann::json j;
  in >> j;
  return gmig::ScanConfig::from_json(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GA-then-LS VQE workbench for the H2/STO-3G system"};
  app.require_subcommand(1);

  // scan
  auto* scan = app.add_subcommand("scan", "run a bond-length scan");
  std::string config_path, mode, ls, states_csv, out_path;
  double r_min = -1, r_max = -1, r_step = -1;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::size_t jobs = 0;
  scan->add_option("--config", config_path, "JSON config file");
  scan->add_option("--mode", mode, "ordinary|gmig");
  scan->add_option("--ls", ls, "powell|bfgs|nelder-mead|newton");
  scan->add_option("--r-min", r_min, "grid start (Angstrom)");
  scan->add_option("--r-max", r_max, "grid end (Angstrom)");
  scan->add_option("--r-step", r_step, "grid pitch (Angstrom)");
  scan->add_option("--states", states_csv,
                   "comma list of ground,triplet,singlet,doubly");
  scan->add_option("--seed", seed, "master seed")
      ->each([&](const std::string&) { seed_set = true; });
  scan->add_option("--out", out_path, "JSON-lines output file");
  scan->add_option("--jobs", jobs, "parallel bond-length cells");

  // summarize
  auto* summ = app.add_subcommand("summarize", "mean log-error tables");
  std::string records_path, csv_out;
  summ->add_option("records", records_path, "JSON-lines records file")
      ->required();
  summ->add_option("--csv", csv_out, "also write a CSV table here");

  // curves
  auto* curves = app.add_subcommand("curves", "energy/log-error curve CSVs");
  std::string curves_records, curves_dir = ".";
  curves->add_option("records", curves_records, "JSON-lines records file")
      ->required();
  curves->add_option("--out-dir", curves_dir, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (scan->parsed()) {
      gmig::ScanConfig cfg = load_config(config_path);
      if (!mode.empty()) cfg.mode = mode;
      if (!ls.empty()) cfg.ls_method = gmig::ls_method_from_string(ls);
      if (r_min >= 0) cfg.r_min = r_min;
      if (r_max >= 0) cfg.r_max = r_max;
      if (r_step > 0) cfg.r_step = r_step;
      if (seed_set) cfg.master_seed = seed;
      if (!out_path.empty()) cfg.out_path = out_path;
      if (jobs > 0) cfg.jobs = jobs;
      if (!states_csv.empty()) {
        cfg.states.clear();
        std::stringstream ss(states_csv);
        std::string item;
        while (std::getline(ss, item, ',')) {
          if (item == "ground") cfg.states.push_back(gmig::TargetState::Ground);
          else if (item == "triplet") cfg.states.push_back(gmig::TargetState::Triplet);
          else if (item == "singlet") cfg.states.push_back(gmig::TargetState::Singlet);
          else if (item == "doubly") cfg.states.push_back(gmig::TargetState::Doubly);
          else throw std::runtime_error("unknown state: " + item);
        }
      }
      if (cfg.mode != "ordinary" && cfg.mode != "gmig")
        throw std::runtime_error("mode must be ordinary or gmig");

      bool any_failed = false;
      auto records = gmig::run_scan(cfg, [&](const gmig::RunRecord& rec) {
        if (!rec.error.empty()) {
          any_failed = true;
          std::fprintf(stderr, "FAILED r=%.3f %s: %s\n", rec.r,
                       rec.state.c_str(), rec.error.c_str());
        } else {
          std::printf("r=%.3f %-8s E=%.10f  E_ref=%.10f  log_err=%.4f\n",
                      rec.r, rec.state.c_str(), rec.e_calc, rec.e_ref,
                      rec.log_err);
          std::fflush(stdout);
        }
      });
      std::printf("%zu records", records.size());
      if (!cfg.out_path.empty()) std::printf(" -> %s", cfg.out_path.c_str());
      std::printf("\n");
      return any_failed ? 1 : 0;
    }
    if (summ->parsed()) {
      const auto records = gmig::read_records_jsonl(records_path);
      const auto summary = gmig::summarize(records);
      std::cout << gmig::summary_text(summary);
      if (!csv_out.empty()) {
        std::ofstream out(csv_out);
        out << gmig::summary_csv(summary);
      }
      return 0;
    }
    if (curves->parsed()) {
      const auto records = gmig::read_records_jsonl(curves_records);
      gmig::emit_curves(records, curves_dir);
      std::printf("wrote energies.csv, log_errors.csv, candidates.csv to %s\n",
                  curves_dir.c_str());
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
