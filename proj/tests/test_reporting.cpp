#include <doctest.h>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "eprsim/angle.hpp"
#include "eprsim/errors.hpp"
#include "eprsim/report_io.hpp"
#include "eprsim/runs.hpp"

using namespace eprsim;

namespace {

double row_value(const Document& doc, std::size_t row, const std::string& column) {
  for (std::size_t c = 0; c < doc.columns.size(); ++c)
    if (doc.columns[c] == column) return std::get<double>(doc.rows[row][c]);
  FAIL("no such column: ", column);
  return 0.0;
}

const Document::Cell& summary_cell(const Document& doc, const std::string& key) {
  for (const auto& [k, v] : doc.summary)
    if (k == key) return v;
  REQUIRE(false);
  static Document::Cell dummy{0.0};
  return dummy;
}

RunConfig sweep_config(const std::string& model, const std::string& quantity,
                       double step_deg) {
  RunConfig cfg;
  cfg.command = Command::sweep;
  cfg.model = model;
  cfg.quantity = quantity;
  cfg.phi_step_deg = step_deg;
  return cfg;
}

}  // namespace

TEST_CASE("sweep: singlet coincidence curve") {
  const Document doc = run_sweep(sweep_config("qm", "coincidence", 15.0));
  REQUIRE(doc.rows.size() == 13);
  double prev = -1.0;
  for (std::size_t i = 0; i < doc.rows.size(); ++i) {
    const double deg = row_value(doc, i, "phi_deg");
    CHECK(deg > prev);  // ascending grid
    prev = deg;
    const double expected = 0.5 * std::pow(std::sin(deg2rad(deg)), 2);
    CHECK(std::abs(row_value(doc, i, "value") - expected) < 1e-12);
    CHECK(std::get<std::string>(doc.rows[i][3]) == "closed_form");
    CHECK(std::get<std::string>(doc.rows[i][4]) == "qm");
  }
}

TEST_CASE("sweep: Malus-model curve has the nonzero minimum 1/4 at 90 degrees") {
  const Document doc = run_sweep(sweep_config("naive", "coincidence", 5.0));
  double min_value = 1e300, min_deg = -1.0;
  for (std::size_t i = 0; i < doc.rows.size(); ++i) {
    const double deg = row_value(doc, i, "phi_deg");
    const double v = row_value(doc, i, "value");
    CHECK(std::abs(v - (0.5 + 0.25 * std::cos(2.0 * deg2rad(deg)))) < 1e-9);
    if (v < min_value) {
      min_value = v;
      min_deg = deg;
    }
  }
  CHECK(min_deg == 90.0);
  CHECK(std::abs(min_value - 0.25) < 1e-12);
}

TEST_CASE("sweep: correlation quantity routes through the channel reduction") {
  const Document doc = run_sweep(sweep_config("qm", "correlation", 30.0));
  for (std::size_t i = 0; i < doc.rows.size(); ++i) {
    const double deg = row_value(doc, i, "phi_deg");
    CHECK(std::abs(row_value(doc, i, "value") + std::cos(2.0 * deg2rad(deg))) < 1e-9);
  }
}

TEST_CASE("sweep: validation errors") {
  CHECK_THROWS_AS(run_sweep(sweep_config("nope", "coincidence", 5.0)), ConfigError);
  CHECK_THROWS_AS(run_sweep(sweep_config("qm", "wavelength", 5.0)), ConfigError);
  RunConfig bad = sweep_config("qm", "coincidence", -1.0);
  CHECK_THROWS_AS(run_sweep(bad), ConfigError);
  bad = sweep_config("qm", "coincidence", 5.0);
  bad.phi_end_deg = -10.0;
  CHECK_THROWS_AS(run_sweep(bad), ConfigError);
}

TEST_CASE("rendering: deterministic, round-trip precise, replayable") {
  RunConfig cfg = sweep_config("unpolarized", "coincidence", 30.0);
  cfg.method = Method::monte_carlo;
  cfg.seed = 77;
  cfg.samples = 20000;
  const Document doc = run_sweep(cfg);

  SUBCASE("identical runs render byte-identically (both formats)") {
    const Document again = run_sweep(cfg);
    CHECK(render_csv(doc) == render_csv(again));
    CHECK(render_json(doc) == render_json(again));
  }

  SUBCASE("CSV numbers round-trip exactly") {
    const std::string csv = render_csv(doc);
    // grab the first data line and re-parse its value column
    const std::string header = "phi_deg,value,error_estimate,method,model_id\n";
    const std::size_t at = csv.find(header);
    REQUIRE(at != std::string::npos);
    std::size_t pos = at + header.size();
    const std::size_t comma = csv.find(',', pos);
    const std::size_t comma2 = csv.find(',', comma + 1);
    const std::string value_text = csv.substr(comma + 1, comma2 - comma - 1);
    double parsed = 0.0;
    std::from_chars(value_text.data(), value_text.data() + value_text.size(), parsed);
    CHECK(parsed == row_value(doc, 0, "value"));
  }

  SUBCASE("JSON carries meta.config and rows") {
    const auto j = nlohmann::json::parse(render_json(doc));
    CHECK(j.at("meta").at("tool") == "eprsim");
    CHECK(j.at("meta").at("command") == "sweep");
    CHECK(j.at("meta").at("config").at("model") == "unpolarized");
    CHECK(j.at("meta").at("config").at("seed") == "77");
    CHECK(j.at("rows").size() == doc.rows.size());
    CHECK(j.at("rows")[0].contains("phi_deg"));
    CHECK(j.at("rows")[0].contains("error_estimate"));
  }

  SUBCASE("embedded config replays to the same bytes") {
    for (const OutputFormat fmt : {OutputFormat::csv, OutputFormat::json}) {
      const std::string rendered = render(doc, fmt);
      const auto kv = parse_embedded_config(rendered, fmt);
      RunConfig replay = RunConfig::from_key_values(Command::sweep, kv);
      CHECK(render(run_sweep(replay), fmt) == rendered);
    }
  }

  SUBCASE("write_document rejects unwritable paths") {
    CHECK_THROWS_AS(write_document(doc, "/nonexistent-dir/out.csv", OutputFormat::csv),
                    ConfigError);
  }
}

TEST_CASE("precession run") {
  RunConfig cfg;
  cfg.command = Command::precession;
  cfg.omega = 1.0;
  cfg.t_start = 0.0;
  cfg.t_end = 2.0 * kPi;
  cfg.t_step = kPi / 12.0;
  const Document doc = run_precession(cfg);

  SUBCASE("columns trace (cos, sin)/2 on the circle") {
    for (std::size_t i = 0; i < doc.rows.size(); ++i) {
      const double t = row_value(doc, i, "t");
      const double sx = row_value(doc, i, "sx");
      const double sy = row_value(doc, i, "sy");
      CHECK(std::abs(sx - 0.5 * std::cos(t)) < 1e-12);
      CHECK(std::abs(sy - 0.5 * std::sin(t)) < 1e-12);
      CHECK(std::abs(sx * sx + sy * sy - 0.25) < 1e-12);
    }
  }

  SUBCASE("first row is (0.5, 0.0)") {
    CHECK(std::abs(row_value(doc, 0, "sx") - 0.5) < 1e-12);
    CHECK(std::abs(row_value(doc, 0, "sy")) < 1e-12);
  }

  SUBCASE("omega = 0 is a degenerate configuration") {
    RunConfig bad = cfg;
    bad.omega = 0.0;
    CHECK_THROWS_AS(run_precession(bad), ConfigError);
  }

  SUBCASE("defaults cover two periods") {
    RunConfig defaults;
    defaults.command = Command::precession;
    defaults.omega = 2.0;
    const Document d = run_precession(defaults);
    const double period = kPi;  // 2 pi / omega
    CHECK(row_value(d, d.rows.size() - 1, "t") ==
          doctest::Approx(2.0 * period).epsilon(1e-12));
  }
}

TEST_CASE("eq20 adjudication run") {
  RunConfig cfg;
  cfg.command = Command::adjudicate_eq20;

  SUBCASE("quadrature: cos^2 convention declared, matching the singlet shape") {
    const Document doc = run_adjudicate_eq20(cfg);
    REQUIRE(doc.rows.size() == 37);
    CHECK(std::get<std::string>(summary_cell(doc, "declared_convention")) ==
          "half_cos_squared");
    CHECK(std::get<double>(summary_cell(doc, "rms_half_cos_squared")) < 1e-6);
    CHECK(std::get<double>(summary_cell(doc, "rms_half_sin_squared")) > 0.1);
    CHECK(std::get<double>(summary_cell(doc, "rms_vs_qm_under_convention")) < 1e-6);
  }

  SUBCASE("Monte Carlo reaches the same verdict") {
    RunConfig mc_cfg = cfg;
    mc_cfg.method = Method::monte_carlo;
    mc_cfg.seed = 4;
    mc_cfg.samples = 250000;
    const Document doc = run_adjudicate_eq20(mc_cfg);
    CHECK(std::get<std::string>(summary_cell(doc, "declared_convention")) ==
          "half_cos_squared");
    const double rms_cos = std::get<double>(summary_cell(doc, "rms_half_cos_squared"));
    const double rms_sin = std::get<double>(summary_cell(doc, "rms_half_sin_squared"));
    CHECK(rms_cos < 0.01);  // statistical floor, far below the misfit
    CHECK(rms_sin > 0.1);
  }
}

TEST_CASE("operator-square demo run") {
  RunConfig cfg;
  cfg.command = Command::ks_demo;
  const Document doc = run_ks_demo(cfg);

  CHECK(std::get<std::int64_t>(summary_cell(doc, "row_total")) == 1);
  CHECK(std::get<std::int64_t>(summary_cell(doc, "column_total")) == -1);
  CHECK(std::get<std::int64_t>(summary_cell(doc, "factor_consistent_count")) == 0);
  CHECK(std::get<std::int64_t>(summary_cell(doc, "entry_consistent_count")) == 0);
  CHECK(std::get<std::int64_t>(summary_cell(doc, "mutation_consistent_count")) > 0);
  CHECK(std::get<bool>(summary_cell(doc, "parity_contradiction")));
  REQUIRE(doc.rows.size() == 6);  // three rows, three columns

  SUBCASE("JSON certificate exposes the documented keys") {
    const auto j = nlohmann::json::parse(render_json(doc));
    for (const char* key :
         {"row_total", "column_total", "context_scalar_product",
          "factor_assignments_enumerated", "factor_consistent_count",
          "entry_assignments_enumerated", "entry_consistent_count",
          "parity_contradiction", "mutation_flipped_context",
          "mutation_consistent_count"})
      CHECK(j.at("summary").contains(key));
    CHECK(j.at("rows")[0].contains("context"));
    CHECK(j.at("rows")[0].contains("operators"));
    CHECK(j.at("rows")[0].contains("scalar"));
  }
}

TEST_CASE("inequality runs produce one-row documents") {
  RunConfig cfg;
  cfg.command = Command::bell_check;
  cfg.model = "qm";
  const Document bell = run_bell_check(cfg);
  REQUIRE(bell.rows.size() == 1);
  CHECK(std::get<std::string>(bell.rows[0][0]) == "bell_original");
  CHECK_FALSE(std::get<bool>(bell.rows[0][9]));  // satisfied column: violated

  cfg.command = Command::chsh;
  const Document chsh_doc = run_chsh(cfg);
  REQUIRE(chsh_doc.rows.size() == 1);
  CHECK(std::get<double>(chsh_doc.rows[0][6]) ==
        doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-9));

  SUBCASE("angle count is validated") {
    RunConfig bad = cfg;
    bad.command = Command::bell_check;
    bad.angles_deg = {0.0, 10.0};
    CHECK_THROWS_AS(run_bell_check(bad), ConfigError);
    bad.command = Command::chsh;
    bad.angles_deg = {0.0, 10.0, 20.0};
    CHECK_THROWS_AS(run_chsh(bad), ConfigError);
  }

  SUBCASE("scan summary records the density") {
    RunConfig scan_cfg = cfg;
    scan_cfg.scan = 8;
    const Document d = run_chsh(scan_cfg);
    CHECK(std::get<std::int64_t>(summary_cell(d, "scan_density")) == 8);
  }
}
