#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gmig/report.hpp"

using namespace gmig;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("gmig_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("log_error floor") {
  CHECK(log_error(-1.0, -1.0) == kLogErrorFloor);
  CHECK(log_error(-1.0, -1.0 + 1e-20) == kLogErrorFloor);
  CHECK(log_error(-1.0, -1.01) == doctest::Approx(-2.0));
}

TEST_CASE("grid construction") {
  ScanConfig cfg;
  CHECK(cfg.grid().size() == 25);  // 0.1 .. 2.5 in 0.1 pitch
  cfg.r_min = 0.5;
  cfg.r_max = 0.5;
  CHECK(cfg.grid().size() == 1);
  cfg.r_step = -1;
  CHECK_THROWS_AS(cfg.grid(), std::invalid_argument);
}

TEST_CASE("cell seeds differ across cells but not across calls") {
  CHECK(cell_seed(1, 0, 0) == cell_seed(1, 0, 0));
  CHECK(cell_seed(1, 0, 0) != cell_seed(1, 0, 1));
  CHECK(cell_seed(1, 1, 0) != cell_seed(1, 0, 0));
  CHECK(cell_seed(2, 0, 0) != cell_seed(1, 0, 0));
}

TEST_CASE("ScanConfig JSON round trip") {
  ScanConfig cfg;
  cfg.r_min = 0.4;
  cfg.mode = "ordinary";
  cfg.ls_method = LsMethod::Powell;
  cfg.master_seed = 99;
  cfg.states = {TargetState::Ground, TargetState::Triplet};
  const ScanConfig back = ScanConfig::from_json(cfg.to_json());
  CHECK(back.r_min == cfg.r_min);
  CHECK(back.mode == cfg.mode);
  CHECK(back.ls_method == cfg.ls_method);
  CHECK(back.master_seed == cfg.master_seed);
  CHECK(back.states == cfg.states);
}

TEST_CASE("ordinary-mode mini scan") {
  ScanConfig cfg;
  cfg.mode = "ordinary";
  cfg.r_min = 0.7;
  cfg.r_max = 0.8;
  cfg.r_step = 0.1;
  cfg.ls_method = LsMethod::Newton;

  std::vector<std::string> seen;
  const auto records = run_scan(cfg, [&](const RunRecord& r) {
    seen.push_back(r.state);
  });
  CHECK(records.size() == 8);  // 2 bond lengths x 4 states
  CHECK(seen.size() == 8);
  // VQD order within each r: a triplet record never precedes its ground.
  CHECK(seen[0] == "ground");
  CHECK(seen[1] == "triplet");
  CHECK(seen[4] == "ground");
  for (const auto& rec : records) {
    CHECK(rec.error.empty());
    CHECK(rec.log_err == log_error(rec.e_calc, rec.e_ref));
    CHECK(rec.mode == "ordinary");
  }
  // Ordinary ground-state Newton from theta=0 should be accurate.
  CHECK(records[0].log_err < -6);
}

TEST_CASE("records JSONL round trip preserves all numeric fields") {
  RunRecord rec;
  rec.r = 0.7414;
  rec.state = "ground";
  rec.mode = "gmig";
  rec.ls_method = "newton";
  rec.e_calc = -1.1372838344885023;
  rec.e_ref = -1.1372838344885025;
  rec.log_err = log_error(rec.e_calc, rec.e_ref);
  rec.candidates = {{-1.1, -1.13, false}, {-1.0, -1.12, true}};
  rec.eval_count = 12345;
  rec.wall_seconds = 1.25;
  rec.seed = 777;
  rec.config_echo = {{"mode", "gmig"}};

  TempDir tmp;
  const std::string path = (tmp.path / "records.jsonl").string();
  write_records_jsonl({rec}, path);
  const auto back = read_records_jsonl(path);
  REQUIRE(back.size() == 1);
  CHECK(back[0].e_calc == rec.e_calc);  // bit-exact
  CHECK(back[0].e_ref == rec.e_ref);
  CHECK(back[0].log_err == rec.log_err);
  CHECK(back[0].candidates.size() == 2);
  CHECK(back[0].candidates[0].f_ls == rec.candidates[0].f_ls);
  CHECK(back[0].candidates[1].discarded);
  CHECK(back[0].seed == rec.seed);
}

TEST_CASE("summarize") {
  auto mk = [](const char* state, const char* method, double log_err) {
    RunRecord r;
    r.state = state;
    r.ls_method = method;
    r.log_err = log_err;
    r.wall_seconds = 1.0;
    return r;
  };
  SUBCASE("single record mean is the record") {
    const Summary s = summarize({mk("ground", "newton", -6.0)});
    REQUIRE(s.methods.size() == 1);
    CHECK(s.cells[0][0].mean_log_error == doctest::Approx(-6.0));
    CHECK(s.cells[0][0].count == 1);
    CHECK(s.missing_cells == 3);
  }
  SUBCASE("means are arithmetic means of stored log errors") {
    const Summary s = summarize({mk("doubly", "newton", -2.0),
                                 mk("doubly", "newton", -4.0),
                                 mk("doubly", "powell", -1.0)});
    const auto ni = s.methods[0] == "newton" ? 0 : 1;
    CHECK(s.cells[ni][3].mean_log_error == doctest::Approx(-3.0));
    CHECK(s.total_wall_seconds[ni] == doctest::Approx(2.0));
  }
  SUBCASE("text and CSV render") {
    const Summary s = summarize({mk("ground", "newton", -6.0)});
    CHECK(summary_text(s).find("newton") != std::string::npos);
    const std::string csv = summary_csv(s);
    CHECK(csv.find("method,ground,triplet,singlet,doubly") == 0);
    CHECK(csv.find("-6") != std::string::npos);
  }
}

TEST_CASE("emit_curves writes the three CSVs") {
  auto mk = [](double r, const char* state) {
    RunRecord rec;
    rec.r = r;
    rec.state = state;
    rec.ls_method = "newton";
    rec.mode = "gmig";
    rec.e_calc = -1.0;
    rec.e_ref = -1.01;
    rec.log_err = log_error(-1.0, -1.01);
    for (int i = 0; i < 10; ++i) rec.candidates.push_back({-0.9, -1.0, false});
    return rec;
  };
  std::vector<RunRecord> records;
  for (double r : {0.5, 0.6})
    for (const char* st : {"ground", "triplet", "singlet", "doubly"})
      records.push_back(mk(r, st));

  TempDir tmp;
  emit_curves(records, tmp.path.string());
  auto lines = [&](const char* name) {
    std::ifstream in(tmp.path / name);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) ++n;
    return n;
  };
  CHECK(lines("energies.csv") == 3);    // header + 2 bond lengths
  CHECK(lines("log_errors.csv") == 3);
  CHECK(lines("candidates.csv") == 1 + 2 * 4 * 10);
}
