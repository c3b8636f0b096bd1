#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gmig/gmig.hpp"

namespace gmig {

inline constexpr int kRecordSchemaVersion = 1;
inline constexpr double kLogErrorFloor = -16.0;

/// log10 |e_calc - e_ref|, floored so exactly-converged cells stay finite.
double log_error(double e_calc, double e_ref);

struct CandidateEntry {
  double f_ga = 0.0;
  double f_ls = 0.0;
  bool discarded = false;
};

/// One (bond length, state) result cell. Self-describing: the embedded
/// config echo plus seed reproduce e_calc exactly.
struct RunRecord {
  int schema_version = kRecordSchemaVersion;
  double r = 0.0;  // Angstrom
  std::string state;
  std::string mode;       // "ordinary" or "gmig"
  std::string ls_method;
  double e_calc = 0.0;
  double e_ref = 0.0;
  double log_err = 0.0;
  std::vector<CandidateEntry> candidates;
  std::uint64_t eval_count = 0;
  double wall_seconds = 0.0;
  std::uint64_t seed = 0;
  std::string error;  // nonempty when the cell failed
  nlohmann::json config_echo;
};

void to_json(nlohmann::json& j, const RunRecord& r);
void from_json(const nlohmann::json& j, RunRecord& r);

struct ScanConfig {
  double r_min = 0.1;
  double r_max = 2.5;
  double r_step = 0.1;
  std::vector<TargetState> states = {TargetState::Ground, TargetState::Triplet,
                                     TargetState::Singlet,
                                     TargetState::Doubly};
  std::string mode = "gmig";  // or "ordinary"
  LsMethod ls_method = LsMethod::Newton;
  std::uint64_t master_seed = 1;
  std::size_t max_generations = 300;
  std::size_t ls_candidates = 10;
  double deflation_beta = 5.0;
  bool benchmark_selector = true;
  int ls_max_iterations = 0;  // 0 = built-in default for the mode/method
  std::size_t jobs = 1;
  std::string out_path;  // JSON-lines records file ("" = don't persist)

  std::vector<double> grid() const;
  nlohmann::json to_json() const;
  static ScanConfig from_json(const nlohmann::json& j);
};

/// Deterministic per-cell seed derived from the master seed.
std::uint64_t cell_seed(std::uint64_t master, std::size_t r_index,
                        std::size_t state_index);

/// Runs the scan: per bond length builds the Hamiltonian and FCI reference,
/// then solves the requested states in VQD order. `on_record`, when set, is
/// called once per finished cell (serialized), in scan order.
std::vector<RunRecord> run_scan(
    const ScanConfig& config,
    const std::function<void(const RunRecord&)>& on_record = nullptr);

void write_records_jsonl(const std::vector<RunRecord>& records,
                         const std::string& path);
std::vector<RunRecord> read_records_jsonl(const std::string& path);

struct SummaryCell {
  double mean_log_error = 0.0;
  std::size_t count = 0;
  double total_wall_seconds = 0.0;
};

struct Summary {
  // methods x states mean log error.
  std::vector<std::string> methods;
  std::vector<std::string> states;
  std::vector<std::vector<SummaryCell>> cells;  // [method][state]
  std::vector<double> total_wall_seconds;       // per method
  std::size_t missing_cells = 0;
};

Summary summarize(const std::vector<RunRecord>& records);
std::string summary_text(const Summary& s);
std::string summary_csv(const Summary& s);

/// Writes energies.csv, log_errors.csv and candidates.csv under out_dir.
void emit_curves(const std::vector<RunRecord>& records,
                 const std::string& out_dir);

}  // namespace gmig
