#include <doctest.h>

#include "bcn/error.hpp"
#include "bcn/observability.hpp"
#include "bcn/observer.hpp"
#include "support.hpp"

using namespace bcn;
using bcn::test::Rng;

namespace {

std::vector<OutputVector> outputs_from(std::initializer_list<const char*> rows) {
  std::vector<OutputVector> out;
  for (const char* r : rows) out.push_back(OutputVector::from_string(r));
  return out;
}

/// The unique initial state consistent with `outputs` for the given inputs,
/// found by enumeration.
StateVector brute_initial(const Model& m, std::span<const OutputVector> outputs, std::span<const InputVector> inputs) {
  const auto all = test::consistent_initial_states(m, outputs, inputs);
  REQUIRE(all.size() == 1);
  return all.front();
}

}  // namespace

TEST_CASE("ex1 observer structure") {
  const DisjointPathObserver obs = build_observer(test::ex1());
  REQUIRE(obs.decoders().size() == 2);
  const PathDecoder& first = obs.decoders()[0];
  CHECK(std::vector<std::size_t>(first.nodes().begin(), first.nodes().end()) == std::vector<std::size_t>{3, 2, 0});
  CHECK(std::vector<Polarity>(first.polarities().begin(), first.polarities().end()) ==
        std::vector<Polarity>{Polarity::Negation, Polarity::Identity});
  const PathDecoder& second = obs.decoders()[1];
  CHECK(std::vector<std::size_t>(second.nodes().begin(), second.nodes().end()) == std::vector<std::size_t>{4, 1});
  CHECK(std::vector<Polarity>(second.polarities().begin(), second.polarities().end()) ==
        std::vector<Polarity>{Polarity::Negation});
  CHECK(obs.horizon() == 3);
  CHECK(required_horizon(obs) == 3);
}

TEST_CASE("identity observer") {
  const Model id = test::identity_model(4);
  const DisjointPathObserver obs = build_observer(id);
  CHECK(obs.decoders().size() == 4);
  CHECK(obs.horizon() == 1);
  const auto y = outputs_from({"1011"});
  CHECK(obs.reconstruct_initial(y) == StateVector::from_string("1011"));
  const auto y3 = outputs_from({"1011", "1011", "1011", "1011"});
  CHECK(reconstruct_state(obs, id, y3, std::vector<InputVector>(3), 3) == StateVector::from_string("1011"));
}

TEST_CASE("cc9 with eight outputs") {
  const Model m = test::cc9().with_outputs({0, 1, 2, 3, 4, 5, 6, 7});
  const DisjointPathObserver obs = build_observer(m);
  CHECK(obs.decoders().size() == 8);
  CHECK(obs.horizon() == 2);
  const PathDecoder& d = obs.decoders()[5];
  CHECK(std::vector<std::size_t>(d.nodes().begin(), d.nodes().end()) == std::vector<std::size_t>{8, 5});
  CHECK(d.polarities()[0] == Polarity::Identity);
}

TEST_CASE("ex1 reconstruction") {
  const Model m = test::ex1();
  const DisjointPathObserver obs = build_observer(m);
  const std::vector<InputVector> zeros(2, InputVector::from_string("0"));

  SUBCASE("trace from 10110") {
    // Y1 = (1,1,0), Y2 = (0,1,1)
    const auto y = outputs_from({"10", "11", "01"});
    CHECK(obs.reconstruct_initial(y) == StateVector::from_string("10110"));
    CHECK(obs.reconstruct_initial(y) == brute_initial(m, y, zeros));
  }
  SUBCASE("all-zero outputs") {
    const auto y = outputs_from({"00", "00", "00"});
    const StateVector x0 = obs.reconstruct_initial(y);
    CHECK(x0 == brute_initial(m, y, zeros));
    CHECK(x0 == StateVector::from_string("00011"));
    CHECK(simulate(m, x0, zeros).outputs == y);
  }
  SUBCASE("roll forward two steps") {
    const StateVector x0 = StateVector::from_string("10110");
    const Trajectory t = simulate(m, x0, zeros);
    const StateVector x2 = reconstruct_state(obs, m, t.outputs, zeros, 2);
    CHECK(x2 == t.states[2]);
    CHECK(x2 == StateVector::from_string("01100"));
    CHECK(reconstruct_state(obs, m, t.outputs, zeros, 0) == obs.reconstruct_initial(t.outputs));
  }
  SUBCASE("short traces") {
    const auto y = outputs_from({"10", "11"});
    try {
      (void)obs.reconstruct_initial(y);
      FAIL("expected a horizon error");
    } catch (const HorizonError& e) {
      CHECK(e.required() == 3);
      CHECK(e.provided() == 2);
    }
    CHECK_THROWS_AS(obs.reconstruct_initial({}), HorizonError);
    CHECK_THROWS_AS(obs.reconstruct_initial(outputs_from({"1", "1", "1"})), ModelError);
  }
}

TEST_CASE("refuses unknown verdicts") {
  try {
    (void)build_observer(test::gap2());
    FAIL("expected an observer error");
  } catch (const ObserverError& e) {
    CHECK(e.verdict().status == Verdict::Unknown);
    CHECK(e.verdict().p1.violators == std::vector<std::size_t>{1});
  }
  CHECK_THROWS_AS(build_observer(test::cc9()), ObserverError);
}

TEST_CASE("trace validation") {
  const Model m = test::ex1();
  const DisjointPathObserver obs = build_observer(m);
  Rng rng(51);
  for (int trial = 0; trial < 50; ++trial) {
    const StateVector x0 = test::random_state(rng, 5);
    const auto inputs = test::random_inputs(rng, 6, 1);
    const Trajectory t = simulate(m, x0, inputs);
    const TraceCheck ok = validate_trace(obs, m, t.outputs, inputs);
    CHECK(ok.consistent);
    CHECK_FALSE(ok.first_mismatch.has_value());

    auto bad = t.outputs;
    bad[2].flip(1);
    const TraceCheck flipped = validate_trace(obs, m, bad, inputs);
    CHECK_FALSE(flipped.consistent);
    CHECK(flipped.first_mismatch == std::optional<std::size_t>(2));
  }

  SUBCASE("consistency agrees with the existence of a producing initial state") {
    for (int trial = 0; trial < 300; ++trial) {
      const auto inputs = test::random_inputs(rng, 4, 1);
      std::vector<OutputVector> y;
      for (int k = 0; k < 5; ++k) y.push_back(OutputVector::from_index(rng(), 2));
      const bool producible = !test::consistent_initial_states(m, y, inputs).empty();
      CHECK(validate_trace(obs, m, y, inputs).consistent == producible);
    }
  }
}

TEST_CASE("round trip on random observable models") {
  Rng rng(61);
  int tested = 0;
  for (int trial = 0; trial < 3000 && tested < 300; ++trial) {
    test::RandomModelOptions o;
    o.max_states = 8;
    o.literal_probability = 0.7;
    o.output_probability = 0.4;
    const Model m = test::random_model(rng, o);
    if (!sufficiency_verdict(m).observable()) continue;
    ++tested;
    const DisjointPathObserver obs = build_observer(m);
    for (const PathDecoder& d : obs.decoders())
      for (std::size_t q = 0; q + 1 < d.length(); ++q) {
        const Expr& f = m.update(d.nodes()[q + 1]);
        StateVector x(m.state_count());
        const bool at0 = f.evaluate(x, InputVector(m.input_count()));
        x.set(d.nodes()[q], true);
        const bool at1 = f.evaluate(x, InputVector(m.input_count()));
        CHECK(at0 != at1);
        CHECK((d.polarities()[q] == Polarity::Negation) == at0);
      }
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << m.state_count()); ++code) {
      const StateVector x0 = StateVector::from_index(code, m.state_count());
      const auto inputs = test::random_inputs(rng, obs.horizon() + 2, m.input_count());
      const Trajectory t = simulate(m, x0, inputs);
      CHECK(obs.reconstruct_initial(t.outputs) == x0);
      const std::size_t k = rng() % (inputs.size() + 1);
      CHECK(reconstruct_state(obs, m, t.outputs, inputs, k) == t.states[k]);
    }
  }
  CHECK(tested >= 100);
}
