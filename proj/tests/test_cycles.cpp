#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "oracles.hpp"
#include "sqheat/errors.hpp"
#include "sqheat/cycles.hpp"
#include "sqheat/report_json.hpp"

using namespace sqheat;
using doctest::Approx;

namespace {

EngineConfig otto(double tc, double th, double r) {
  return {Temperature(tc), Temperature(th), r, CycleKind::Otto};
}

EngineConfig generalized(double tc, double th, double r) {
  return {Temperature(tc), Temperature(th), r, CycleKind::Generalized};
}

}  // namespace

TEST_CASE("EngineConfig validation") {
  CHECK_THROWS_AS(otto(2.0, 1.0, 0.5), DomainError);
  CHECK_THROWS_AS(otto(1.0, 2.0, -0.5), DomainError);
  CHECK_NOTHROW(otto(1.0, 1.0, 0.5));
  CHECK_THROWS_AS((void)run_otto(generalized(1.0, 2.0, 0.5)), DomainError);
  CHECK_THROWS_AS((void)run_generalized(otto(1.0, 2.0, 0.5)), DomainError);
}

TEST_CASE("Otto cycle at (1, 2, 0.5)") {
  const CycleReport rep = run_otto(otto(1.0, 2.0, 0.5));
  CHECK(rep.kind == CycleKind::Otto);
  CHECK(rep.w_net_extracted == Approx(0.52109530549374736).epsilon(1e-13));
  CHECK(rep.q_hot_in == Approx(1.4806126811612192).epsilon(1e-13));
  CHECK(rep.efficiency == Approx(0.3519457263361146).epsilon(1e-13));
  CHECK(rep.q_cold_out == Approx(rep.q_hot_in - rep.w_net_extracted).epsilon(1e-13));
  CHECK(rep.region == Region::II);

  CHECK(rep.strokes[0].label == StrokeKind::Squeeze);
  CHECK(rep.strokes[0].heat_in == 0.0);
  CHECK(rep.strokes[1].work_on == 0.0);
  CHECK(rep.strokes[2].heat_in == 0.0);
  CHECK(rep.strokes[3].work_on == 0.0);
  CHECK(rep.strokes[3].state_out == rep.strokes[0].state_in);

  SUBCASE("trace: four strokes, minimum classicality at the end of the squeeze") {
    REQUIRE(rep.classicality_trace.size() == 4 * kTraceSamplesPerStroke);
    const auto it = std::min_element(
        rep.classicality_trace.begin(), rep.classicality_trace.end(),
        [](const TracePoint& a, const TracePoint& b) { return a.classicality < b.classicality; });
    const auto index = static_cast<std::size_t>(it - rep.classicality_trace.begin());
    CHECK((index == kTraceSamplesPerStroke - 1 || index == kTraceSamplesPerStroke));
    CHECK(it->r == 0.5);
    for (const TracePoint& p : rep.classicality_trace) {
      CHECK(p.classicality == Approx(classicality(p.n_th, p.r)).epsilon(1e-14));
    }
  }
}

TEST_CASE("Otto ledger efficiency equals 1 - 1/cosh 2r") {
  const double pairs[][2] = {{1.0, 2.0}, {0.5, 3.0}, {2.0, 5.0}};
  for (const auto& p : pairs) {
    for (int i = 1; i <= 50; ++i) {
      const double r = 3.0 * i / 50.0;
      const CycleReport rep = run_otto(otto(p[0], p[1], r));
      CHECK(std::abs(rep.efficiency - otto_efficiency(r)) < 1e-12);
    }
  }
  CHECK(run_otto(otto(1.0, 2.0, 0.0)).efficiency == 0.0);
}

TEST_CASE("degenerate engines do nothing") {
  for (CycleKind kind : {CycleKind::Otto, CycleKind::Generalized}) {
    const CycleReport rep = run_cycle({Temperature(1.5), Temperature(1.5), 0.4, kind});
    CHECK(std::abs(rep.w_net_extracted) < 1e-14);
    CHECK(std::abs(rep.q_hot_in) < 1e-14);
  }
}

TEST_CASE("generalized_r_hot") {
  CHECK(generalized_r_hot(generalized(1.0, 2.0, 0.5)) ==
        Approx(0.81744614042099526).epsilon(1e-14));
  CHECK(generalized_r_hot(generalized(1.0, 2.0, 0.0)) ==
        Approx(0.31744614042099526).epsilon(1e-14));
  CHECK(generalized_r_hot(generalized(1.3, 1.3, 0.2)) == 0.2);
}

TEST_CASE("generalized cycle values") {
  SUBCASE("r_t = 0.5") {
    const CycleReport rep = run_generalized(generalized(1.0, 2.0, 0.5));
    CHECK(rep.q_hot_in == Approx(2.008733449599168).epsilon(1e-11));
    CHECK(rep.w_net_extracted == Approx(1.0492160739316961).epsilon(1e-11));
    CHECK(rep.efficiency == Approx(0.52232717792450838).epsilon(1e-11));
    CHECK(rep.strokes[1].work_on == Approx(1.7560228395180977).epsilon(1e-11));
    CHECK(rep.region == Region::II);
  }
  SUBCASE("r_t = 0") {
    const CycleReport rep = run_generalized(generalized(1.0, 2.0, 0.0));
    CHECK(rep.q_hot_in == Approx(1.0359575495146525).epsilon(1e-11));
    CHECK(rep.w_net_extracted == Approx(0.076440173847180683).epsilon(1e-10));
    CHECK(rep.efficiency == Approx(0.073786975038690537).epsilon(1e-10));
    CHECK(rep.strokes[1].work_on == Approx(0.34901889027248009).epsilon(1e-11));
  }
}

TEST_CASE("iso-classicality stroke holds C fixed") {
  for (double r_t : {0.0, 0.3, 0.5, 1.2}) {
    const CycleReport rep = run_generalized(generalized(1.0, 2.0, r_t));
    const double c0 = classicality(rep.strokes[1].state_in);
    CHECK(std::abs(classicality(rep.strokes[1].state_out) - c0) < 1e-10);
    const double r_hot = rep.strokes[1].state_out.r();
    const double n1 = rep.strokes[1].state_in.n_th();
    for (int i = 0; i < 1000; ++i) {
      const double r = r_t + (r_hot - r_t) * i / 999.0;
      CHECK(std::abs(classicality(iso_classicality_occupancy(n1, r_t, r), r) - c0) < 1e-10);
    }
    for (const TracePoint& p : rep.classicality_trace) {
      if (p.stroke == StrokeKind::HotContact) CHECK(std::abs(p.classicality - c0) < 1e-10);
    }
  }
}

TEST_CASE("hot-stroke quadrature agrees with the antiderivative") {
  const double a1 = oracle::occupancy(1.0) + 0.5;
  for (int i = 0; i <= 40; ++i) {
    const double r_t = 2.0 * i / 40.0;
    const EngineConfig cfg = generalized(1.0, 2.0, r_t);
    const CycleReport rep = run_generalized(cfg);
    const double span = generalized_r_hot(cfg) - r_t;
    const double q = oracle::iso_heat(a1, r_t, span);
    const double w = oracle::iso_work(a1, r_t, span);
    CHECK(std::abs(rep.strokes[1].heat_in - q) <= 1e-10 * std::abs(q));
    CHECK(std::abs(rep.strokes[1].work_on - w) <= 1e-10 * std::abs(w));
    CHECK(rep.efficiency == Approx(oracle::generalized_efficiency(1.0, 2.0, r_t)).epsilon(1e-9));
  }
}

TEST_CASE("first law closes for both cycles on random squeezings") {
  std::mt19937_64 rng(2718);
  std::uniform_real_distribution<double> rd(0.0, 3.0);
  for (int i = 0; i < 50; ++i) {
    const double r = rd(rng);
    for (CycleKind kind : {CycleKind::Otto, CycleKind::Generalized}) {
      const CycleReport rep = run_cycle({Temperature(1.0), Temperature(2.0), r, kind});
      double total = 0.0;
      for (const StrokeRecord& s : rep.strokes) total += s.work_on + s.heat_in;
      CHECK(std::abs(total) < 1e-9);
      CHECK(std::abs(rep.w_net_extracted - (rep.q_hot_in - rep.q_cold_out)) < 1e-9);
      CHECK(rep.efficiency >= 0.0);
      CHECK(rep.efficiency < 1.0);
    }
  }
}

TEST_CASE("generalized cycle dominates Otto and crosses Carnot") {
  double prev_gap = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= 100; ++i) {
    const double r = 2.0 * i / 100.0;
    const double eg = run_generalized(generalized(1.0, 2.0, r)).efficiency;
    const double eo = run_otto(otto(1.0, 2.0, r)).efficiency;
    CHECK(eg > eo);
    if (r >= 1.5) {
      CHECK(eg - eo < prev_gap);
      prev_gap = eg - eo;
    }
  }
  const EngineConfig cfg = generalized(1.0, 2.0, 0.5);
  CHECK(carnot_efficiency(cfg) == 0.5);
  CHECK(run_generalized(cfg).efficiency > carnot_efficiency(cfg));
  // Both efficiencies approach 1 for strong squeezing.
  CHECK(run_generalized(generalized(1.0, 2.0, 6.0)).efficiency > 1.0 - 1e-5);
}

TEST_CASE("printed closed form is reproduced as printed") {
  const PrintedEfficiency p = generalized_efficiency_closed_form(generalized(1.0, 2.0, 0.5));
  CHECK(p.f == Approx(20.8659091709408).epsilon(1e-13));
  CHECK(p.g == Approx(335.09310962639466).epsilon(1e-13));
  CHECK(p.efficiency == Approx(0.93773101095929777).epsilon(1e-13));
  CHECK(std::abs(p.efficiency - run_generalized(generalized(1.0, 2.0, 0.5)).efficiency) > 0.1);

  const PrintedEfficiency z = generalized_efficiency_closed_form(generalized(1.0, 2.0, 0.0));
  CHECK(z.f == Approx(7.6761390053397749).epsilon(1e-13));
  CHECK(z.g == Approx(-1.4945810470024486).epsilon(1e-13));
  CHECK(z.g < 0.0);
  CHECK(z.efficiency > 1.0);
}

TEST_CASE("regions") {
  CHECK(classify_region(otto(1.0, 2.0, 0.2)) == Region::I);
  CHECK(classify_region(otto(1.0, 2.0, 0.5)) == Region::II);
  CHECK(classify_region(otto(1.0, 2.0, 0.9)) == Region::III);
  const double rc = critical_squeezing(Temperature(1.0));
  CHECK(classify_region(otto(1.0, 2.0, rc)) == Region::Boundary);
  CHECK(classify_region(otto(1.0, 2.0, critical_squeezing(Temperature(2.0)))) ==
        Region::Boundary);
  CHECK(to_string(Region::II) == "ii");
  CHECK(to_string(StrokeKind::HotContact) == "hot-contact");
  CHECK(to_string(CycleKind::Generalized) == "generalized");
}

TEST_CASE("report JSON") {
  const CycleReport rep = run_otto(otto(1.0, 2.0, 0.5));
  const nlohmann::json j = to_json(rep);
  for (const char* key : {"kind", "config", "strokes", "w_net_extracted", "q_hot_in",
                          "q_cold_out", "efficiency", "classicality_trace", "region"}) {
    CAPTURE(key);
    CHECK(j.contains(key));
  }
  CHECK(j["kind"] == "otto");
  CHECK(j["region"] == "ii");
  CHECK(j["config"]["tau_hot"] == 2.0);
  REQUIRE(j["strokes"].size() == 4);
  CHECK(j["strokes"][1]["label"] == "hot-contact");
  CHECK(j["strokes"][0]["state_out"]["r"] == 0.5);
  CHECK(j["strokes"][0]["state_out"]["theta"] == 0.0);
  CHECK(j["classicality_trace"]["r"].size() == 4 * kTraceSamplesPerStroke);
  CHECK(j["efficiency"].get<double>() == rep.efficiency);
}
