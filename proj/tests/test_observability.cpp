#include <doctest.h>

#include <set>

#include "bcn/observability.hpp"
#include "bcn/oracle.hpp"
#include "support.hpp"

using namespace bcn;
using bcn::test::Rng;

namespace {

std::vector<std::vector<std::size_t>> path_nodes(const Decomposition& d) {
  std::vector<std::vector<std::size_t>> out;
  for (const ObservedPath& p : d.paths) out.push_back(p.nodes);
  return out;
}

}  // namespace

TEST_CASE("ex1") {
  const DepGraph g = build_dependency_graph(test::ex1());
  const P1Result p1 = check_p1(g);
  CHECK(p1.holds);
  CHECK(p1.violators.empty());
  CHECK(check_p2_cycles(g).holds);

  const Decomposition d = decompose(g);
  CHECK(path_nodes(d) == std::vector<std::vector<std::size_t>>{{3, 2, 0}, {4, 1}});
  CHECK(d.uncovered.empty());
  for (const ObservedPath& p : d.paths) CHECK(is_observed_path(g, p));

  const SufficiencyVerdict v = sufficiency_verdict(test::ex1());
  CHECK(v.status == Verdict::Observable);
  CHECK(v.decomposition.paths == d.paths);
}

TEST_CASE("cc9 without outputs") {
  const Model m = test::cc9();
  const DepGraph g = build_dependency_graph(m);
  const P1Result p1 = check_p1(g);
  CHECK_FALSE(p1.holds);
  CHECK(p1.violators == std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6, 7});
  const Decomposition d = decompose(g);
  CHECK(d.paths.empty());
  CHECK(d.uncovered.size() == 9);
  CHECK(sufficiency_verdict(m).status == Verdict::Unknown);

  const Model augmented = m.with_outputs({0, 1, 2, 3, 4, 5, 6, 7});
  const SufficiencyVerdict v = sufficiency_verdict(augmented);
  CHECK(v.observable());
  CHECK(path_nodes(v.decomposition) ==
        std::vector<std::vector<std::size_t>>{{0}, {1}, {2}, {3}, {4}, {8, 5}, {6}, {7}});
}

TEST_CASE("identity model") {
  const DepGraph g = build_dependency_graph(test::identity_model(5));
  CHECK(check_p1(g).holds);
  CHECK(check_p2_cycles(g).holds);
  const Decomposition d = decompose(g);
  CHECK(d.paths.size() == 5);
  for (const ObservedPath& p : d.paths) CHECK(p.length() == 1);
}

TEST_CASE("cyc2") {
  const DepGraph g = build_dependency_graph(test::cyc2());
  const P2Result p2 = check_p2_cycles(g);
  CHECK_FALSE(p2.holds);
  CHECK(p2.bad_cycles == std::vector<std::vector<std::size_t>>{{0, 1}});
  CHECK(check_p1(g).holds);

  const DepGraph g1 = build_dependency_graph(test::cyc2().with_outputs({0}));
  CHECK(check_p2_cycles(g1).holds);
  CHECK(sufficiency_verdict(test::cyc2().with_outputs({0})).observable());
}

TEST_CASE("a cycle member feeding outward satisfies P2") {
  // a -> b -> a with b also solely feeding c
  const Model m = parse_model("states: a b c\noutputs: c\na <= b\nb <= !a\nc <= b");
  const DepGraph g = build_dependency_graph(m);
  CHECK(check_p2_cycles(g).holds);
}

TEST_CASE("gap2 is unknown") {
  const SufficiencyVerdict v = sufficiency_verdict(test::gap2());
  CHECK(v.status == Verdict::Unknown);
  CHECK(v.p1.violators == std::vector<std::size_t>{1});
  CHECK(v.decomposition.uncovered == std::vector<std::size_t>{1});
}

TEST_CASE("decompose terminates on back-edges into the current path") {
  // a <- b <- a, a observed; without a visited mark the walk would loop
  const Model m = parse_model("states: a b\noutputs: a\na <= b\nb <= a");
  const Decomposition d = decompose(build_dependency_graph(m));
  CHECK(path_nodes(d) == std::vector<std::vector<std::size_t>>{{1, 0}});
}

TEST_CASE("observed path validation") {
  const DepGraph g = build_dependency_graph(test::ex1());
  CHECK(is_observed_path(g, {{3, 2, 0}}));
  CHECK(is_observed_path(g, {{0}}));
  CHECK_FALSE(is_observed_path(g, {{2}}));
  CHECK_FALSE(is_observed_path(g, {{3, 0}}));
  CHECK_FALSE(is_observed_path(g, {{}}));
  CHECK_FALSE(is_observed_path(g, {{1, 0}}));
}

TEST_CASE("random properties") {
  Rng rng(31);
  for (int trial = 0; trial < 1500; ++trial) {
    const Model m = test::random_model(rng);
    const DepGraph g = build_dependency_graph(m);
    const SufficiencyVerdict v = sufficiency_verdict(g);

    std::set<std::size_t> covered;
    for (const ObservedPath& p : v.decomposition.paths) {
      CHECK(is_observed_path(g, p));
      for (std::size_t node : p.nodes) CHECK(covered.insert(node).second);
    }
    for (std::size_t node : v.decomposition.uncovered) CHECK(covered.insert(node).second);
    CHECK(covered.size() == m.state_count());
    CHECK(v.decomposition.paths.size() == m.output_count());

    if (v.p1.holds && v.p2.holds) CHECK(v.decomposition.uncovered.empty());
    CHECK(v.observable() == v.decomposition.uncovered.empty());
    if (v.observable()) CHECK(test::brute_observable(m));
  }
}
