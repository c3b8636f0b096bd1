#include "gmig/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <sstream>
#include <stdexcept>

namespace gmig {

double log_error(double e_calc, double e_ref) {
  const double diff = std::abs(e_calc - e_ref);
  if (diff == 0.0) return kLogErrorFloor;
  return std::max(std::log10(diff), kLogErrorFloor);
}

void to_json(nlohmann::json& j, const RunRecord& r) {
  nlohmann::json cands = nlohmann::json::array();
  for (const auto& c : r.candidates)
    cands.push_back({{"f_ga", c.f_ga},
                     {"f_ls", c.f_ls},
                     {"discarded", c.discarded}});
  j = nlohmann::json{{"schema_version", r.schema_version},
                     {"r", r.r},
                     {"state", r.state},
                     {"mode", r.mode},
                     {"ls_method", r.ls_method},
                     {"e_calc", r.e_calc},
                     {"e_ref", r.e_ref},
                     {"log_error", r.log_err},
                     {"candidates", cands},
                     {"eval_count", r.eval_count},
                     {"wall_seconds", r.wall_seconds},
                     {"seed", r.seed},
                     {"error", r.error},
                     {"config", r.config_echo}};
}

void from_json(const nlohmann::json& j, RunRecord& r) {
  j.at("schema_version").get_to(r.schema_version);
  j.at("r").get_to(r.r);
  j.at("state").get_to(r.state);
  j.at("mode").get_to(r.mode);
  j.at("ls_method").get_to(r.ls_method);
  j.at("e_calc").get_to(r.e_calc);
  j.at("e_ref").get_to(r.e_ref);
  j.at("log_error").get_to(r.log_err);
  r.candidates.clear();
  for (const auto& c : j.at("candidates"))
    r.candidates.push_back({c.at("f_ga").get<double>(),
                            c.at("f_ls").get<double>(),
                            c.at("discarded").get<bool>()});
  j.at("eval_count").get_to(r.eval_count);
  j.at("wall_seconds").get_to(r.wall_seconds);
  j.at("seed").get_to(r.seed);
  j.at("error").get_to(r.error);
  r.config_echo = j.value("config", nlohmann::json());
}

std::vector<double> ScanConfig::grid() const {
  if (r_step <= 0.0 || r_max < r_min)
    throw std::invalid_argument("invalid bond-length grid");
  std::vector<double> rs;
  for (int i = 0;; ++i) {
    const double r = r_min + i * r_step;
    if (r > r_max + 1e-9) break;
    rs.push_back(r);
  }
  return rs;
}

nlohmann::json ScanConfig::to_json() const {
  std::vector<std::string> state_names;
  for (auto s : states) state_names.emplace_back(target_state_name(s));
  return nlohmann::json{{"r_min", r_min},
                        {"r_max", r_max},
                        {"r_step", r_step},
                        {"states", state_names},
                        {"mode", mode},
                        {"ls", ls_method_name(ls_method)},
                        {"seed", master_seed},
                        {"max_generations", max_generations},
                        {"ls_candidates", ls_candidates},
                        {"deflation_beta", deflation_beta},
                        {"benchmark_selector", benchmark_selector},
                        {"ls_max_iterations", ls_max_iterations},
                        {"jobs", jobs},
                        {"out", out_path}};
}

ScanConfig ScanConfig::from_json(const nlohmann::json& j) {
  ScanConfig c;
  c.r_min = j.value("r_min", c.r_min);
  c.r_max = j.value("r_max", c.r_max);
  c.r_step = j.value("r_step", c.r_step);
  if (j.contains("states")) {
    c.states.clear();
    for (const auto& name : j.at("states")) {
      const std::string n = name.get<std::string>();
      if (n == "ground") c.states.push_back(TargetState::Ground);
      else if (n == "triplet") c.states.push_back(TargetState::Triplet);
      else if (n == "singlet") c.states.push_back(TargetState::Singlet);
      else if (n == "doubly") c.states.push_back(TargetState::Doubly);
      else throw std::invalid_argument("unknown state: " + n);
    }
  }
  c.mode = j.value("mode", c.mode);
  if (j.contains("ls")) c.ls_method = ls_method_from_string(j.at("ls"));
  c.master_seed = j.value("seed", c.master_seed);
  c.max_generations = j.value("max_generations", c.max_generations);
  c.ls_candidates = j.value("ls_candidates", c.ls_candidates);
  c.deflation_beta = j.value("deflation_beta", c.deflation_beta);
  c.benchmark_selector = j.value("benchmark_selector", c.benchmark_selector);
  c.ls_max_iterations = j.value("ls_max_iterations", c.ls_max_iterations);
  c.jobs = j.value("jobs", c.jobs);
  c.out_path = j.value("out", c.out_path);
  return c;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t cell_seed(std::uint64_t master, std::size_t r_index,
                        std::size_t state_index) {
  return splitmix64(splitmix64(master) ^
                    splitmix64((r_index << 8) + state_index + 1));
}

namespace {

std::vector<RunRecord> run_cell_chain(const ScanConfig& config, double r,
                                      std::size_t r_index) {
  std::vector<RunRecord> records;
  const nlohmann::json echo = config.to_json();
  try {
    const Geometry geom = Geometry::h2(r);
    const MolecularIntegrals ints = sto3g_integrals(geom);
    const RhfResult hf = rhf(ints);
    QubitHamiltonian h = qubit_hamiltonian(ints, hf.mo_coefficients);
    h.bond_length_angstrom = r;
    const FciSpectrum fci = fci_spectrum(h);
    const AnsatzSpec spec = build_h2_ansatz(h);

    GmigConfig gc;
    gc.ga.max_generations = config.max_generations;
    gc.ls.method = config.ls_method;
    gc.ls.max_iterations =
        config.ls_max_iterations > 0
            ? config.ls_max_iterations
            : LsConfig::default_iterations(config.ls_method,
                                           config.mode == "gmig");
    gc.ls_candidates = config.ls_candidates;
    gc.benchmark_selector = config.benchmark_selector;

    VqdContext ctx = VqdContext::with_default_constraints(2);
    std::optional<Eigen::VectorXd> ground_ham_params;

    // VQD order: the chain always starts at the ground state; requested
    // states are emitted, intermediate ones are still solved.
    const auto want = config.states;
    const std::size_t deepest = static_cast<std::size_t>(
        *std::max_element(want.begin(), want.end(),
                          [](TargetState a, TargetState b) {
                            return static_cast<int>(a) < static_cast<int>(b);
                          }));
    for (std::size_t si = 0; si <= deepest; ++si) {
      const TargetState state = static_cast<TargetState>(si);
      const double e_ref = fci.levels[fci.targets[si]].energy;
      RunRecord rec;
      rec.r = r;
      rec.state = target_state_name(state);
      rec.mode = config.mode;
      rec.ls_method = ls_method_name(config.ls_method);
      rec.e_ref = e_ref;
      rec.seed = cell_seed(config.master_seed, r_index, si);
      rec.config_echo = echo;
      try {
        GmigResult result = [&] {
          if (config.mode == "ordinary") return ordinary_vqe(h, spec, ctx, gc.ls);
          return gmig_vqe(si, h, spec, ctx, gc, rec.seed, e_ref,
                          ground_ham_params);
        }();
        if (si == 0)
          ground_ham_params = result.best_theta.head(
              static_cast<Eigen::Index>(spec.hamiltonian_param_count()));
        // Excited runs with a deflated context pay the penalty at the
        // minimum; the reported energy is the raw expectation.
        rec.e_calc = result.energy;
        rec.log_err = log_error(rec.e_calc, e_ref);
        for (const auto& c : result.candidates)
          rec.candidates.push_back({c.f_ga, c.f_ls, c.discarded});
        rec.eval_count = result.eval_count;
        rec.wall_seconds = result.wall_seconds;
      } catch (const std::exception& e) {
        rec.error = e.what();
      }
      if (std::find(want.begin(), want.end(), state) != want.end())
        records.push_back(std::move(rec));
    }
  } catch (const std::exception& e) {
    // Hamiltonian/FCI construction failed; mark every requested state.
    for (auto state : config.states) {
      RunRecord rec;
      rec.r = r;
      rec.state = target_state_name(state);
      rec.mode = config.mode;
      rec.ls_method = ls_method_name(config.ls_method);
      rec.error = e.what();
      rec.config_echo = echo;
      records.push_back(std::move(rec));
    }
  }
  return records;
}

}  // namespace

std::vector<RunRecord> run_scan(
    const ScanConfig& config,
    const std::function<void(const RunRecord&)>& on_record) {
  const std::vector<double> rs = config.grid();
  std::vector<std::vector<RunRecord>> per_r(rs.size());

  if (config.jobs <= 1) {
    for (std::size_t i = 0; i < rs.size(); ++i) {
      per_r[i] = run_cell_chain(config, rs[i], i);
      if (on_record)
        for (const auto& rec : per_r[i]) on_record(rec);
    }
  } else {
    std::vector<std::future<std::vector<RunRecord>>> futures;
    for (std::size_t i = 0; i < rs.size(); ++i)
      futures.push_back(std::async(std::launch::async, run_cell_chain,
                                   std::cref(config), rs[i], i));
    for (std::size_t i = 0; i < rs.size(); ++i) {
      per_r[i] = futures[i].get();
      if (on_record)
        for (const auto& rec : per_r[i]) on_record(rec);
    }
  }

  std::vector<RunRecord> all;
  for (auto& group : per_r)
    for (auto& rec : group) all.push_back(std::move(rec));
  if (!config.out_path.empty()) write_records_jsonl(all, config.out_path);
  return all;
}

void write_records_jsonl(const std::vector<RunRecord>& records,
                         const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  for (const auto& rec : records) {
    nlohmann::json j = rec;
    out << j.dump() << '\n';
  }
}

std::vector<RunRecord> read_records_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<RunRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    records.push_back(nlohmann::json::parse(line).get<RunRecord>());
  }
  return records;
}

namespace {

const std::vector<std::string> kStateOrder = {"ground", "triplet", "singlet",
                                              "doubly"};

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Summary summarize(const std::vector<RunRecord>& records) {
  Summary s;
  s.states = kStateOrder;
  for (const auto& rec : records)
    if (std::find(s.methods.begin(), s.methods.end(), rec.ls_method) ==
        s.methods.end())
      s.methods.push_back(rec.ls_method);
  std::sort(s.methods.begin(), s.methods.end());
  s.cells.assign(s.methods.size(),
                 std::vector<SummaryCell>(s.states.size()));
  s.total_wall_seconds.assign(s.methods.size(), 0.0);

  for (const auto& rec : records) {
    const auto mi = static_cast<std::size_t>(
        std::find(s.methods.begin(), s.methods.end(), rec.ls_method) -
        s.methods.begin());
    s.total_wall_seconds[mi] += rec.wall_seconds;
    if (!rec.error.empty()) continue;
    const auto it = std::find(s.states.begin(), s.states.end(), rec.state);
    if (it == s.states.end()) continue;
    auto& cell = s.cells[mi][static_cast<std::size_t>(it - s.states.begin())];
    cell.mean_log_error =
        (cell.mean_log_error * cell.count + rec.log_err) / (cell.count + 1);
    ++cell.count;
    cell.total_wall_seconds += rec.wall_seconds;
  }
  for (const auto& row : s.cells)
    for (const auto& cell : row)
      if (cell.count == 0) ++s.missing_cells;
  return s;
}

std::string summary_text(const Summary& s) {
  std::ostringstream out;
  out << "Mean log error by method and state\n";
  out << "method        ";
  for (const auto& st : s.states) out << '\t' << st;
  out << "\n";
  for (std::size_t m = 0; m < s.methods.size(); ++m) {
    out << s.methods[m];
    for (std::size_t st = 0; st < s.states.size(); ++st) {
      const auto& cell = s.cells[m][st];
      out << '\t';
      if (cell.count == 0) out << "missing";
      else {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4f", cell.mean_log_error);
        out << buf;
      }
    }
    out << "\n";
  }
  out << "\nTotal wall seconds per method\n";
  for (std::size_t m = 0; m < s.methods.size(); ++m) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", s.total_wall_seconds[m]);
    out << s.methods[m] << '\t' << buf << "\n";
  }
  return out.str();
}

std::string summary_csv(const Summary& s) {
  std::ostringstream out;
  out << "method";
  for (const auto& st : s.states) out << ',' << st;
  out << ",total_wall_seconds\n";
  for (std::size_t m = 0; m < s.methods.size(); ++m) {
    out << s.methods[m];
    for (std::size_t st = 0; st < s.states.size(); ++st) {
      const auto& cell = s.cells[m][st];
      out << ',';
      if (cell.count > 0) out << fmt_double(cell.mean_log_error);
    }
    out << ',' << fmt_double(s.total_wall_seconds[m]) << "\n";
  }
  return out.str();
}

void emit_curves(const std::vector<RunRecord>& records,
                 const std::string& out_dir) {
  // Group by r, keep one record per (r, state): the last one wins.
  std::vector<double> rs;
  for (const auto& rec : records)
    if (std::find_if(rs.begin(), rs.end(), [&](double r) {
          return std::abs(r - rec.r) < 1e-12;
        }) == rs.end())
      rs.push_back(rec.r);
  std::sort(rs.begin(), rs.end());

  auto find_rec = [&](double r, const std::string& state) -> const RunRecord* {
    const RunRecord* found = nullptr;
    for (const auto& rec : records)
      if (std::abs(rec.r - r) < 1e-12 && rec.state == state &&
          rec.error.empty())
        found = &rec;
    return found;
  };

  std::ofstream energies(out_dir + "/energies.csv");
  std::ofstream logerrs(out_dir + "/log_errors.csv");
  std::ofstream cands(out_dir + "/candidates.csv");
  if (!energies || !logerrs || !cands)
    throw std::runtime_error("cannot write curve files under " + out_dir);

  energies << "r";
  logerrs << "r";
  for (const auto& st : kStateOrder)
    energies << ',' << st << ',' << st << "(e)";
  for (const auto& st : kStateOrder) logerrs << ',' << st;
  energies << "\n";
  logerrs << "\n";
  cands << "r,state,candidate,log_error_ga_end,log_error_ls_end\n";

  for (double r : rs) {
    energies << fmt_double(r);
    logerrs << fmt_double(r);
    for (const auto& st : kStateOrder) {
      const RunRecord* rec = find_rec(r, st);
      if (rec) {
        energies << ',' << fmt_double(rec->e_calc) << ','
                 << fmt_double(rec->e_ref);
        logerrs << ',' << fmt_double(rec->log_err);
      } else {
        energies << ",,";
        logerrs << ',';
      }
    }
    energies << "\n";
    logerrs << "\n";
    for (const auto& st : kStateOrder) {
      const RunRecord* rec = find_rec(r, st);
      if (!rec) continue;
      for (std::size_t c = 0; c < rec->candidates.size(); ++c) {
        const auto& cand = rec->candidates[c];
        cands << fmt_double(r) << ',' << st << ',' << c << ','
              << fmt_double(log_error(cand.f_ga, rec->e_ref)) << ','
              << fmt_double(log_error(cand.f_ls, rec->e_ref)) << "\n";
      }
    }
  }
}

}  // namespace gmig
