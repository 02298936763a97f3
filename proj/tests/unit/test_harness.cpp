#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lowreg/error.hpp"
#include "lowreg/harness/config.hpp"
#include "lowreg/harness/oracle_check.hpp"
#include "lowreg/harness/outputs.hpp"
#include "lowreg/harness/presets.hpp"
#include "lowreg/harness/study.hpp"

using namespace lowreg;
using namespace lowreg::harness;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("lowreg_nls_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

StudyConfig small_config() {
  StudyConfig c;
  c.name = "small";
  c.K = 16;
  c.initial.kind = InitialKind::Rough;
  c.initial.theta = 2.0;
  c.initial.seed = 5;
  c.schemes = {SchemeKind::LowRegExp, SchemeKind::StrangSplit};
  c.T = 0.25;
  c.ladder.kind = LadderKind::Dyadic;
  c.ladder.min_exp = 3;
  c.ladder.max_exp = 7;
  c.tau_ref = std::ldexp(1.0, -12);
  c.window = {1, 1};
  return c;
}

}  // namespace

TEST_CASE("config parsing") {
  const std::string text = R"(name = demo
; comment
[equation]
type = quad_u2
mu = 0.5
quad_zero_mode_fix = false

[grid]
K = 64

[initial]
type = sin_cos

[schemes]
list = QuadU2, LieQuad, StrangQuad

[time]
T = 2
ladder = explicit
values = 0.1, 0.5, 0.25

[error]
norm_r = 0
drop_large = 1
drop_small = 0

[reference]
policy = strang

[output]
dir = out/demo
formats = csv

[run]
workers = 3
)";
  const auto c = parse_config(text);
  CHECK(c.name == "demo");
  CHECK(c.equation == Equation::QuadU2);
  CHECK(c.mu == 0.5);
  CHECK_FALSE(c.quad_zero_mode_fix);
  CHECK(c.K == 64);
  CHECK(c.initial.kind == InitialKind::SinCos);
  CHECK(c.schemes == std::vector<SchemeKind>{SchemeKind::QuadU2, SchemeKind::LieQuad, SchemeKind::StrangQuad});
  CHECK(c.T == 2.0);
  CHECK(c.ladder.taus() == std::vector<double>{0.5, 0.25, 0.1});
  CHECK(c.error_norm_r == 0.0);
  CHECK(c.window.drop_large == 1);
  CHECK(c.window.drop_small == 0);
  CHECK(c.reference == ReferenceKind::StrangRefined);
  CHECK(c.output_dir == "out/demo");
  CHECK(c.write_csv);
  CHECK_FALSE(c.write_json);
  CHECK(c.workers == 3);
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(parse_config("[grid]\nK = 64\nfoo = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[nonsense]\na = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[grid]\nK = sixty\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[schemes]\nlist = LowRegExp, Euler\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[equation]\ntype = kdv\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[time]\nladder = geometric\n"), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/config.ini"), ConfigError);

  auto c = small_config();
  CHECK_NOTHROW(c.validate());
  SUBCASE("K must be a power of two") {
    c.K = 24;
    CHECK_THROWS_AS(c.validate(), ConfigError);
  }
  SUBCASE("reference step must divide comparison times") {
    c.tau_ref = 0.3;
    CHECK_THROWS_AS(c.validate(), ConfigError);
  }
  SUBCASE("scheme must fit the equation") {
    c.schemes = {SchemeKind::QuadU2};
    CHECK_THROWS_AS(c.validate(), ConfigError);
  }
  SUBCASE("exact reference needs plane-wave data") {
    c.reference = ReferenceKind::Exact;
    CHECK_THROWS_AS(c.validate(), ConfigError);
  }
  SUBCASE("no schemes") {
    c.schemes.clear();
    CHECK_THROWS_AS(c.validate(), ConfigError);
  }
  SUBCASE("study rejects before any compute") {
    c.T = -1.0;
    CHECK_THROWS_AS(run_convergence_study(c), ConfigError);
  }
}

TEST_CASE("config text round trip") {
  for (const auto& name : list_presets()) {
    for (auto scale : {PresetScale::Desk, PresetScale::Paper}) {
      const auto c = preset(name, scale);
      const auto back = parse_config(to_config_text(c));
      CHECK(to_config_text(back) == to_config_text(c));
      CHECK(back.p == c.p);
      CHECK(back.mu == c.mu);
      CHECK(back.initial.theta == c.initial.theta);
      CHECK(back.schemes == c.schemes);
    }
  }
  auto c = small_config();
  c.ladder.kind = LadderKind::Explicit;
  c.ladder.values = {0.1, 1.0 / 3.0};
  CHECK(parse_config(to_config_text(c)).ladder.values == c.ladder.values);
}

TEST_CASE("presets") {
  CHECK(list_presets().size() >= 15);
  for (const auto& name : list_presets()) {
    CAPTURE(name);
    CHECK_NOTHROW(preset(name, PresetScale::Paper).validate());
    CHECK_NOTHROW(preset(name, PresetScale::Desk).validate());
  }
  CHECK_THROWS_AS(preset("cubic-rough-4"), ConfigError);

  const auto cubic = preset("cubic-rough-2");
  CHECK(cubic.equation == Equation::PowerNls);
  CHECK(cubic.p == 1.0);
  CHECK(cubic.mu == 1.0);
  CHECK(cubic.initial.kind == InitialKind::Rough);
  CHECK(cubic.initial.theta == 2.0);
  CHECK(cubic.K == 1024);
  CHECK(cubic.T == 1.0);
  CHECK(cubic.error_norm_r == 1.0);
  CHECK(cubic.ladder.kind == LadderKind::Paper);
  CHECK(cubic.ladder.taus().size() == 512);
  CHECK(cubic.reference == ReferenceKind::SelfRefined);
  CHECK(preset("quintic-rough-5").reference == ReferenceKind::StrangRefined);
  CHECK(preset("quintic-rough-5").p == 2.0);

  const auto smooth = preset("quad-smooth");
  CHECK(smooth.equation == Equation::QuadU2);
  CHECK(smooth.initial.kind == InitialKind::SinCos);
  CHECK(smooth.mu == 1.0);
  CHECK(smooth.T == 1.0);
  CHECK(smooth.error_norm_r == 0.0);

  const auto small_mu = preset("quad-small-mu");
  CHECK(small_mu.mu == 0.01);
  CHECK(small_mu.T == 10.0);

  const auto quarter = preset("noninteger-p-0.25");
  CHECK(quarter.p == 0.25);
  CHECK(quarter.initial.kind == InitialKind::Sin);
  CHECK(quarter.mu == 1.0);

  const auto desk = preset("cubic-rough-2", PresetScale::Desk);
  CHECK(desk.K == 256);
  CHECK(desk.ladder.taus() == std::vector<double>{0.0625, 0.03125, 0.015625, 0.0078125, 0.00390625,
                                                   0.001953125, 0.0009765625});
}

TEST_CASE("paper ladder steps") {
  TauLadder ladder;
  ladder.kind = LadderKind::Paper;
  const auto taus = ladder.taus();
  REQUIRE(taus.size() == 512);
  CHECK(taus.front() == 1.0);
  CHECK(taus.back() == 1.0 / 512);
  // round(1 / (3/512)) = 171 steps, compared at t = 171 * 3 / 512.
  CHECK(std::lround(1.0 / taus[509]) == 171);
}

TEST_CASE("mu = 0 study reports free-flow agreement") {
  auto c = small_config();
  c.mu = 0.0;
  c.schemes = {SchemeKind::LowRegExp, SchemeKind::ClassicalExp, SchemeKind::LieSplit, SchemeKind::StrangSplit};
  const auto table = run_convergence_study(c);
  CHECK(table.rows.size() == 20);
  for (const auto& r : table.rows) {
    CHECK_FALSE(r.failed);
    CHECK(r.error <= 1e-10);
  }
}

TEST_CASE("study rows, ordering and determinism") {
  auto c = small_config();
  const auto a = run_convergence_study(c);
  c.workers = 3;
  const auto b = run_convergence_study(c);
  CHECK(format_csv(a) == format_csv(b));
  REQUIRE(a.rows.size() == 10);
  CHECK(a.rows[0].scheme == SchemeKind::LowRegExp);
  CHECK(a.rows[0].tau == 0.125);
  CHECK(a.rows[0].n_steps == 2);
  CHECK(a.rows[9].scheme == SchemeKind::StrangSplit);
  CHECK(a.rows[9].tau == 1.0 / 128);
  for (const auto& r : a.rows) CHECK(r.t == r.n_steps * r.tau);
  CHECK(a.fitted_slopes.size() == 2);
}

TEST_CASE("failed rows do not abort the study") {
  auto c = small_config();
  c.mu = 1e4;  // large steps blow up, small ones survive
  c.schemes = {SchemeKind::ClassicalExp, SchemeKind::StrangSplit};
  const auto table = run_convergence_study(c);
  CHECK(table.rows.size() == 10);
  bool any_failed = false;
  for (const auto& r : table.rows) {
    if (r.failed) {
      any_failed = true;
      CHECK_FALSE(r.failure.empty());
      CHECK(std::isnan(r.error));
    }
  }
  CHECK(any_failed);
  for (const auto* r : table.rows_for(SchemeKind::StrangSplit)) CHECK_FALSE(r->failed);
}

TEST_CASE("exact plane-wave reference") {
  StudyConfig c;
  c.K = 32;
  c.initial.kind = InitialKind::PlaneWave;
  c.initial.wave_number = 1;
  c.schemes = {SchemeKind::LowRegExp};
  c.reference = ReferenceKind::Exact;
  c.ladder = {LadderKind::Dyadic, 512, 5, 10, {}};
  c.window = {0, 0};
  const auto table = run_convergence_study(c);
  REQUIRE(table.fitted_slopes.at(SchemeKind::LowRegExp).has_value());
  CHECK(*table.fitted_slopes.at(SchemeKind::LowRegExp) == doctest::Approx(1.0).epsilon(0.1));
}

TEST_CASE("outputs") {
  analysis::ErrorTable empty;
  CHECK(format_csv(empty) == "scheme,tau,n_steps,error,norm_r,failed\n");
  const auto manifest = nlohmann::json::parse(format_manifest(empty, small_config()));
  CHECK(manifest["row_count"] == 0);
  CHECK(manifest["rows"].empty());

  analysis::ErrorTable one;
  analysis::ErrorRow r;
  r.scheme = SchemeKind::LowRegExp;
  r.tau = 0.5;
  r.n_steps = 2;
  r.t = 1.0;
  r.error = 0.01;
  r.norm_r = 1.0;
  one.rows.push_back(r);
  CHECK(format_csv(one) == "scheme,tau,n_steps,error,norm_r,failed\nLowRegExp,0.5,2,0.01,1,0\n");

  auto c = small_config();
  c.output_dir = scratch_dir("outputs") / "nested";
  const auto table = run_convergence_study(c);
  const auto written = emit_outputs(table, c);
  CHECK(written.size() == 4);
  const auto csv = read_file(c.output_dir / "results.csv");
  CHECK(csv == format_csv(table));
  CHECK(csv.find('\r') == std::string::npos);
  const auto m = nlohmann::json::parse(read_file(c.output_dir / "manifest.json"));
  CHECK(m["seed"] == 5);
  CHECK(m["version"] == software_version());
  CHECK(m["rows"].size() == 10);
  CHECK(m["rows"][0].contains("t"));
  CHECK(m["rows"][0].contains("wall_seconds"));
  CHECK(m["fitted_slopes"].contains("LowRegExp"));
  CHECK(m["rounding_convention"] == kRoundingConvention);
  CHECK(parse_config(m["config"].get<std::string>()).K == 16);
  CHECK(std::filesystem::exists(c.output_dir / "plot_StrangSplit.dat"));
  for (const auto& entry : std::filesystem::directory_iterator(c.output_dir)) {
    CHECK(entry.path().extension() != ".tmp");
  }

  SUBCASE("unwritable directory") {
    auto bad = c;
    bad.output_dir = c.output_dir / "results.csv" / "sub";
    CHECK_THROWS_AS(emit_outputs(table, bad), Error);
  }
}

TEST_CASE("oracle check") {
  for (const auto& d : run_oracle_check(8)) {
    CAPTURE(d.name);
    CHECK(d.passed());
  }
  CHECK_THROWS_AS(run_oracle_check(64), ConfigError);
}
