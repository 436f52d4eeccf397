#include <cmath>

#include "doctest.h"
#include "qlbn/errors.hpp"
#include "qlbn/heuristic.hpp"
#include "qlbn/network_io.hpp"
#include "qlbn/scenarios.hpp"

using namespace qlbn;

namespace {

AmplitudeNetwork prisoners() {
  return amplitudes_from_network(load_network(QLBN_DATA_DIR "/networks/prisoners_dilemma_average.json"));
}

AmplitudeNetwork two_node(double prior_t, double q_given_t, double q_given_f) {
  return amplitudes_from_network(NetworkBuilder()
                                     .add_variable("A", {"t", "f"})
                                     .add_variable("Q", {"t", "f"})
                                     .add_edge("A", "Q")
                                     .set_prior("A", {{"t", prior_t}, {"f", 1.0 - prior_t}})
                                     .set_cpt_row("Q", {{"A", "t"}}, {{"t", q_given_t}, {"f", 1.0 - q_given_t}})
                                     .set_cpt_row("Q", {{"A", "f"}}, {{"t", q_given_f}, {"f", 1.0 - q_given_f}})
                                     .build());
}

const OutcomeVectorPair& pair_for(const std::vector<OutcomeVectorPair>& pairs, const std::string& outcome) {
  for (const auto& p : pairs) {
    if (p.outcome == outcome) return p;
  }
  throw std::runtime_error("missing outcome");
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected qlbn::Error");
  return ErrorKind::InvalidArgument;
}

double bd(double a, double b) { return belief_distance(a, b).value; }

}  // namespace

TEST_CASE("outcome vectors of the averaged network") {
  const auto pairs = extract_outcome_vectors(prisoners(), "P2", {});
  REQUIRE(pairs.size() == 2);
  CHECK(std::abs(pair_for(pairs, "Cooperate").alpha - 0.3606) < 1e-4);
  CHECK(std::abs(pair_for(pairs, "Cooperate").beta - 0.2550) < 1e-4);
  CHECK(std::abs(pair_for(pairs, "Defect").alpha - 0.6083) < 1e-4);
  CHECK(std::abs(pair_for(pairs, "Defect").beta - 0.6595) < 1e-4);
}

TEST_CASE("outcome vectors of degenerate networks") {
  const auto certain = extract_outcome_vectors(two_node(0.5, 1.0, 1.0), "Q", {});
  CHECK(pair_for(certain, "t").alpha == doctest::Approx(std::sqrt(0.5)));
  CHECK(pair_for(certain, "t").beta == doctest::Approx(std::sqrt(0.5)));
  CHECK(pair_for(certain, "f").alpha == 0.0);
  CHECK(pair_for(certain, "f").beta == 0.0);

  for (const auto& p : extract_outcome_vectors(two_node(0.5, 0.5, 0.5), "Q", {})) {
    CHECK(p.alpha == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(p.beta == doctest::Approx(0.5).epsilon(1e-15));
  }
}

TEST_CASE("outcome vectors need exactly one unobserved variable") {
  const auto anet = prisoners();
  CHECK(kind_of([&] { extract_outcome_vectors(anet, "P2", {{"P1", "Defect"}}); }) ==
        ErrorKind::UnsupportedStructure);

  NetworkBuilder b;
  b.add_variable("A", {"t", "f"}).add_variable("B", {"t", "f"}).add_variable("Q", {"t", "f"});
  b.set_prior("A", {{"t", 0.5}, {"f", 0.5}}).set_prior("B", {{"t", 0.5}, {"f", 0.5}});
  b.set_prior("Q", {{"t", 0.5}, {"f", 0.5}});
  const auto three = amplitudes_from_network(b.build());
  CHECK(kind_of([&] { extract_outcome_vectors(three, "Q", {}); }) == ErrorKind::UnsupportedStructure);
  CHECK_NOTHROW(extract_outcome_vectors(three, "Q", {{"A", "t"}}));
  CHECK(kind_of([&] { degree_for_query(three, "Q", {}); }) == ErrorKind::UnsupportedStructure);
}

TEST_CASE("belief_distance examples") {
  CHECK(std::abs(bd(0.6083, 0.6595) - 0.41711) < 5e-5);
  CHECK(std::abs(bd(0.3606, 0.2550) - 0.63531) < 5e-5);
  CHECK(bd(0.3, 0.3) == 0.3);
  CHECK(std::abs(bd(0.68191, 0.69642) - 0.64355) < 5e-5);
  CHECK(bd(0.5, 0.5) == 0.5);
  // Distances above one are possible.
  CHECK(bd(0.55, 0.05) == doctest::Approx(1.8).epsilon(1e-12));
}

TEST_CASE("belief_distance error paths") {
  CHECK(kind_of([] { belief_distance(0.3, 0.7); }) == ErrorKind::SingularDenominator);
  CHECK(kind_of([] { belief_distance(0.0, 1.0); }) == ErrorKind::SingularDenominator);
  CHECK(kind_of([] { belief_distance(-0.1, 0.5); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { belief_distance(0.5, 1.2); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("belief_distance is symmetric on a 0.05 grid") {
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j <= 20; ++j) {
      const double a = i * 0.05;
      const double b = j * 0.05;
      if (i != j && i + j == 20) continue;  // a + b = 1: singular
      const double ab = bd(a, b);
      CHECK(ab == bd(b, a));
      CHECK(ab >= 0.0);
    }
  }
}

TEST_CASE("equal arguments return themselves") {
  for (int i = 0; i <= 20; ++i) {
    const double a = i * 0.05;
    CHECK(bd(a, a) == a);
  }
}

TEST_CASE("belief_degree examples") {
  const std::vector<BeliefDistance> average = {{0.41711}, {0.63531}};
  CHECK(std::abs(belief_degree(average, 1).value - (-0.9420)) < 5e-4);
  CHECK(belief_degree(std::vector<BeliefDistance>{{1.0}}, 1).value == 0.0);
  const std::vector<BeliefDistance> hristova = {{0.64355}, {0.28066}};
  CHECK(belief_degree(hristova, 1).value == doctest::Approx(-0.92375).epsilon(1e-4));
  // Zero distances contribute nothing.
  CHECK(belief_degree(std::vector<BeliefDistance>{{0.0}, {1.0}}, 1).value == 0.0);
  // With |A| = 2 the denominator is 3.
  CHECK(belief_degree(std::vector<BeliefDistance>{{0.5}}, 2).raw == doctest::Approx(0.5 * std::log2(0.5 / 3.0)));

  CHECK_THROWS_AS(belief_degree(std::vector<BeliefDistance>{}, 1), Error);
  CHECK_THROWS_AS(belief_degree(std::vector<BeliefDistance>{{0.5}}, 0), Error);
}

TEST_CASE("belief_degree clamps out-of-range raw values") {
  const auto high = belief_degree(std::vector<BeliefDistance>{{1.8}}, 1);
  CHECK(high.raw == doctest::Approx(1.8 * std::log2(1.8)));
  CHECK(high.value == 1.0);
  CHECK(high.clamped());

  const double e_inv = 1.0 / std::exp(1.0);
  const auto low = belief_degree(std::vector<BeliefDistance>{{e_inv}, {e_inv}}, 1);
  CHECK(low.raw == doctest::Approx(-1.0614).epsilon(1e-4));
  CHECK(low.value == -1.0);

  for (int i = 0; i <= 40; ++i) {
    for (int j = 0; j <= 40; ++j) {
      const auto d = belief_degree(std::vector<BeliefDistance>{{i * 0.05}, {j * 0.05}}, 1);
      CHECK(d.value >= -1.0);
      CHECK(d.value <= 1.0);
    }
  }
}

TEST_CASE("degree_for_query") {
  CHECK(std::abs(degree_for_query(prisoners(), "P2", {}).value - (-0.9420)) < 5e-4);

  const Scenario hristova{"Hristova", 0.97, 0.93, 0.88};
  const auto h = amplitudes_from_network(scenario_to_network(hristova));
  CHECK(degree_for_query(h, kSecondPlayer, {}).value == doctest::Approx(-0.92375).epsilon(1e-4));

  // Total ignorance: both distances are 0.5 and the degree is -1.
  const auto trace = trace_degree(two_node(0.5, 0.5, 0.5), "Q", {});
  CHECK(trace.distances[0].value == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(trace.distances[1].value == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(trace.degree.value == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK_FALSE(trace.degree.clamped());
}
