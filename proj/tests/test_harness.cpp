#include <doctest.h>

#include "ddgeo/harness.hpp"

using namespace ddgeo;

TEST_CASE("angle parsing") {
  CHECK(parse_angle("pi/8") == doctest::Approx(M_PI / 8).epsilon(1e-15));
  CHECK(parse_angle("2pi/3") == doctest::Approx(2 * M_PI / 3).epsilon(1e-15));
  CHECK(parse_angle("-pi/4") == doctest::Approx(-M_PI / 4).epsilon(1e-15));
  CHECK(parse_angle("pi") == doctest::Approx(M_PI).epsilon(1e-15));
  CHECK(parse_angle("0.75") == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(parse_angle(" 1.5 ") == doctest::Approx(1.5).epsilon(1e-15));
  CHECK_THROWS_AS(parse_angle("pie"), std::invalid_argument);
  CHECK_THROWS_AS(parse_angle(""), std::invalid_argument);
}

TEST_CASE("initial state parsing") {
  CHECK((parse_initial_state("0", 2) - Vec::Unit(2, 0)).norm() < 1e-14);
  const Vec px = parse_initial_state("plus-x", 2);
  CHECK(std::abs(px(0) - 1 / std::sqrt(2.0)) < 1e-14);
  const Vec py = parse_initial_state("plus-y", 2);
  CHECK(std::abs(py(1) - cplx(0, 1 / std::sqrt(2.0))) < 1e-14);
  CHECK((parse_initial_state("10", 4) - Vec::Unit(4, 2)).norm() < 1e-14);
  const Vec pl = parse_initial_state("plus", 4);
  CHECK(std::abs(pl(2) - cplx(0, 1 / std::sqrt(2.0))) < 1e-14);
  CHECK_THROWS_AS(parse_initial_state("up", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_initial_state("2", 4), std::invalid_argument);
}

TEST_CASE("experiment config round trip") {
  ExperimentConfig cfg;
  cfg.kind = ExperimentKind::TwoQubit;
  cfg.gamma = M_PI / 4;
  cfg.coupling = 2.0;
  cfg.sequence.interval_tau = M_PI / 8;
  cfg.sequence.pulse_mode = PulseMode::Square;
  cfg.sequence.pulse_strength = 40;
  cfg.noise.env_init = EnvInit::Plus;
  cfg.sweep = {0.0, 0.1, 5};
  cfg.sim.steps_per_interval = 321;
  cfg.sim.integrator = Integrator::Magnus4;
  cfg.initial = "plus";
  cfg.csv_path = "out.csv";

  const auto back = parse_experiment(serialize_experiment(cfg));
  CHECK(back.kind == cfg.kind);
  CHECK(back.gamma == doctest::Approx(cfg.gamma).epsilon(1e-12));
  CHECK(back.coupling == cfg.coupling);
  CHECK(back.sequence.pulse_mode == PulseMode::Square);
  CHECK(back.sequence.pulse_strength == 40);
  CHECK(back.noise.env_init == EnvInit::Plus);
  CHECK(back.sweep.points == 5);
  CHECK(back.sim.steps_per_interval == 321);
  CHECK(back.sim.integrator == Integrator::Magnus4);
  CHECK(back.initial == "plus");
  CHECK(back.csv_path == "out.csv");
  // canonical serialization is a fixed point
  CHECK(serialize_experiment(back) == serialize_experiment(cfg));
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(parse_experiment("{\"kind\":\"three-qubit\"}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      parse_experiment(
          "{\"kind\":\"one-qubit\",\"sweep\":{\"epsilon_min\":0.2,"
          "\"epsilon_max\":0.1,\"points\":5}}"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      parse_experiment(
          "{\"kind\":\"one-qubit\",\"sim\":{\"steps_per_interval\":4}}"),
      std::invalid_argument);
  // angles accepted as strings
  const auto cfg = parse_experiment(
      "{\"kind\":\"one-qubit\",\"gate\":{\"gamma\":\"pi/3\"}}");
  CHECK(cfg.gamma == doctest::Approx(M_PI / 3).epsilon(1e-12));
}

TEST_CASE("csv format and round trip") {
  std::vector<SweepRow> table{{0.0, 1.0, 1.0, true},
                              {0.1, 0.99212345678901, 0.87, true}};
  const std::string csv = format_csv(table);
  CHECK(csv.substr(0, csv.find('\n')) ==
        "epsilon,fidelity_protected,fidelity_unprotected");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);

  const auto back = parse_csv(csv);
  REQUIRE(back.size() == 2);
  for (size_t i = 0; i < 2; ++i) {
    CHECK(std::abs(back[i].epsilon - table[i].epsilon) < 1e-12);
    CHECK(std::abs(back[i].fidelity_protected - table[i].fidelity_protected) <
          1e-12);
    CHECK(std::abs(back[i].fidelity_unprotected - table[i].fidelity_unprotected) <
          1e-12);
  }
  CHECK_THROWS_AS(parse_csv("eps,fp,fu\n"), std::invalid_argument);
  CHECK_THROWS_AS(format_csv({}), std::invalid_argument);
}

TEST_CASE("svg structure") {
  std::vector<SweepRow> table{{0.0, 1.0, 1.0, true}, {0.2, 0.97, 0.6, true}};
  const std::string svg = format_svg(table);
  CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"") !=
        std::string::npos);
  size_t polylines = 0, pos = 0;
  while ((pos = svg.find("<polyline", pos)) != std::string::npos) {
    ++polylines;
    ++pos;
  }
  CHECK(polylines == 2);
  CHECK(svg.find("&#949;") != std::string::npos);  // epsilon axis label
  CHECK(svg.find(">F<") != std::string::npos);
}

TEST_CASE("schedule exports") {
  const auto s = synthesize(orange_slice(M_PI / 8, 1.0),
                            DecouplingFrame1Q::validated(1, 3, 1.0));
  const std::string j1 = schedule1q_to_json(s, 16);
  CHECK(j1.find("\"tau\"") != std::string::npos);
  CHECK(j1.find("\"samples\"") != std::string::npos);

  DecouplingSequence2Q seq;
  seq.interval_tau = M_PI / 4;
  const std::string j2 = schedule2q_to_json(make_schedule(M_PI / 4, 1.0, seq));
  CHECK(j2.find("\"intervals\"") != std::string::npos);
  CHECK(j2.find("\"pulses\"") != std::string::npos);
}

TEST_CASE("small 1q sweep: endpoints, dominance, determinism") {
  ExperimentConfig cfg;
  cfg.kind = ExperimentKind::OneQubit;
  cfg.gamma = M_PI / 8;
  cfg.noise.env_init = EnvInit::Plus;
  cfg.sweep = {0.0, 0.2, 2};
  cfg.sim.steps_per_interval = 1200;
  cfg.sim.richardson_check = false;

  const auto table = sweep(cfg);
  REQUIRE(table.size() == 2);
  CHECK(table[0].fidelity_protected == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(table[0].fidelity_unprotected == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(table[1].fidelity_protected == doctest::Approx(0.967).epsilon(2e-3));
  CHECK(table[1].fidelity_unprotected < 0.60);
  for (const auto& r : table)
    CHECK(r.fidelity_protected >= r.fidelity_unprotected - 1e-9);

  const auto again = sweep(cfg);
  CHECK(format_csv(table) == format_csv(again));  // byte-identical
}

TEST_CASE("small 2q sweep is near unity at eps = 0") {
  ExperimentConfig cfg;
  cfg.kind = ExperimentKind::TwoQubit;
  cfg.gamma = M_PI / 4;
  cfg.coupling = 1.0;
  cfg.sequence.interval_tau = M_PI / 4;
  cfg.sweep = {0.0, 0.05, 2};
  cfg.sim.steps_per_interval = 200;
  cfg.sim.richardson_check = false;
  cfg.initial = "10";

  const auto table = sweep(cfg);
  REQUIRE(table.size() == 2);
  CHECK(table[0].fidelity_protected == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(table[0].fidelity_unprotected == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(table[1].fidelity_protected >= table[1].fidelity_unprotected - 1e-9);
}
