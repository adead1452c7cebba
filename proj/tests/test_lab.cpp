#include "gmet/lab.hpp"

#include "gmet/metric.hpp"
#include "gmet/splits.hpp"
#include "oracles.hpp"

#include "doctest.h"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <set>

using namespace gmet;

TEST_SUITE_BEGIN("conjecture_lab");

TEST_CASE("multipartite generator shapes") {
  WeightedGraph k23 = generate_family({Family::Multipartite, 0, {2, 3}, 0.0, 0});
  CHECK(k23.n == 5);
  CHECK(k23.edges.size() == 6);
  WeightedGraph k233 = generate_family({Family::Multipartite, 0, {2, 3, 3}, 0.0, 0});
  CHECK(k233.n == 8);
  CHECK(k233.edges.size() == 21);
}

TEST_CASE("basic family shapes") {
  WeightedGraph p3 = generate_family({Family::Path, 3, {}, 0.0, 0});
  CHECK(p3 == testutil::path_graph(3));
  CHECK(generate_family({Family::Cycle, 5, {}, 0.0, 0}).edges.size() == 5);
  CHECK(generate_family({Family::Star, 6, {}, 0.0, 0}).edges.size() == 5);
  CHECK(generate_family({Family::K4, 0, {}, 0.0, 0}).edges.size() == 6);
  CHECK_THROWS_AS(generate_family({Family::Cycle, 2, {}, 0.0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(generate_family({Family::Multipartite, 0, {2}, 0.0, 0}), std::invalid_argument);
}

TEST_CASE("random families are seeded-deterministic") {
  for (Family f : {Family::RandomTree, Family::RandomConnected}) {
    WeightedGraph a = generate_family({f, 8, {}, 0.0, 99});
    WeightedGraph b = generate_family({f, 8, {}, 0.0, 99});
    CHECK(a == b);
    WeightedGraph c = generate_family({f, 8, {}, 0.0, 100});
    // different seeds give different graphs almost surely
    CHECK(a.n == c.n);
  }
  WeightedGraph tree = generate_family({Family::RandomTree, 9, {}, 0.0, 7});
  CHECK(tree.edges.size() == 8);
}

TEST_CASE("random weightings are pure functions of (g, seed, law)") {
  WeightedGraph g = generate_family({Family::Cycle, 6, {}, 0.0, 0});
  for (WeightLaw law : {WeightLaw::UniformUnit, WeightLaw::Tenths, WeightLaw::Exponential}) {
    auto a = random_weighting(g, 42, law);
    auto b = random_weighting(g, 42, law);
    CHECK(a == b);
    auto c = random_weighting(g, 43, law);
    CHECK(a != c);
  }
}

TEST_CASE("weight law supports") {
  WeightedGraph g = generate_family({Family::Cycle, 8, {}, 0.0, 0});
  for (int seed = 0; seed < 20; ++seed) {
    for (const Rat& w : random_weighting(g, seed, WeightLaw::UniformUnit)) {
      CHECK(w > 0);
      CHECK(w <= 1);
      Rat scaled = w * (1 << 20);
      CHECK(scaled.get_den() == 1);
    }
    for (const Rat& w : random_weighting(g, seed, WeightLaw::Tenths)) {
      Rat scaled = w * 10;
      CHECK(scaled.get_den() == 1);
      CHECK(w >= 0);
      CHECK(w <= 1);
    }
    for (const Rat& w : random_weighting(g, seed, WeightLaw::Exponential)) {
      CHECK(w >= 0);
      Rat scaled = w * (1 << 20);
      CHECK(scaled.get_den() == 1);
    }
  }
}

TEST_CASE("weak scan is reproducible and respects the bound at n=5") {
  ExperimentReport a = weak_conjecture_scan(5, 60, 123);
  ExperimentReport b = weak_conjecture_scan(5, 60, 123);
  CHECK(a.samples == 60);
  CHECK(a.bound == 2);
  CHECK(a.max_iplus == b.max_iplus);
  REQUIRE(a.records.size() == b.records.size());
  for (size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].seed == b.records[i].seed);
    CHECK(a.records[i].inertia == b.records[i].inertia);
  }
  CHECK(a.violation_samples.empty());
}

TEST_CASE("K23 attains the weak bound at n=5") {
  Inertia in = inertia_of(distance_matrix(generate_family({Family::Multipartite, 0, {2, 3}, 0.0, 0})));
  CHECK(in.plus == 2);
  CHECK(in.plus == (5 + 1) / 3);
}

TEST_CASE("strong scan on K233 with two threes") {
  WeightedGraph g = generate_family({Family::Multipartite, 0, {2, 3, 3}, 0.0, 0});
  ExperimentReport rep = strong_conjecture_scan(g, 10, 7, 2);
  CHECK(rep.minor_present);
  CHECK(rep.max_iplus >= 3);  // the unit weighting already exceeds the bound
  CHECK_FALSE(rep.search_gap);
  CHECK(rep.violation_samples.empty());
  REQUIRE(!rep.records.empty());
  CHECK(rep.records.front().graph_id == "unit");
  CHECK(rep.records.front().inertia == Inertia{3, 0, 5});
}

TEST_CASE("strong scan on a tree with one three") {
  WeightedGraph tree = generate_family({Family::RandomTree, 7, {}, 0.0, 5});
  ExperimentReport rep = strong_conjecture_scan(tree, 40, 11, 1);
  CHECK_FALSE(rep.minor_present);
  CHECK(rep.max_iplus <= 1);
  CHECK(rep.violation_samples.empty());
}

TEST_CASE("strong scan on K4 with one three") {
  ExperimentReport rep = strong_conjecture_scan(generate_family({Family::K4, 0, {}, 0.0, 0}), 40,
                                                13, 1);
  CHECK_FALSE(rep.minor_present);
  CHECK(rep.max_iplus <= 1);
  CHECK(rep.violation_samples.empty());
}

TEST_CASE("strong scan on K23 includes the adversarial sample") {
  WeightedGraph k23 = generate_family({Family::Multipartite, 0, {2, 3}, 0.0, 0});
  ExperimentReport rep = strong_conjecture_scan(k23, 5, 3, 1);
  CHECK(rep.minor_present);
  bool has_adv = false;
  for (const auto& r : rep.records) {
    if (r.graph_id == "adversarial") has_adv = true;
  }
  CHECK(has_adv);
  CHECK(rep.max_iplus >= 2);
  CHECK_FALSE(rep.search_gap);
}

TEST_CASE("lp scan finds nothing above one positive eigenvalue for p <= 2") {
  for (double p : {1.0, 2.0}) {
    ExperimentReport rep = lp_embeddable_scan(6, 4, p, 80, 17);
    CHECK(rep.count_exceeding == 0);
    CHECK(rep.fraction_exceeding == 0.0);
    CHECK(rep.max_iplus <= 1);
  }
}

TEST_CASE("lp scan completes for p = 10 and is reproducible") {
  ExperimentReport a = lp_embeddable_scan(8, 4, 10.0, 60, 19);
  ExperimentReport b = lp_embeddable_scan(8, 4, 10.0, 60, 19);
  CHECK(a.count_exceeding == b.count_exceeding);
  CHECK(a.samples == 60);
  CHECK(a.fraction_exceeding == doctest::Approx(b.fraction_exceeding));
}

TEST_CASE("trees with positive weights have inertia (1,0,n-1)") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    WeightedGraph tree = generate_family({Family::RandomTree, 6, {}, 0.0, seed});
    WeightedGraph wt = with_weights(tree, random_weighting(tree, seed, WeightLaw::UniformUnit));
    CHECK(inertia_of(distance_matrix(wt)) == Inertia{1, 0, 5});
  }
}

TEST_CASE("the all-zero weighting has inertia (0,n,0)") {
  WeightedGraph g = generate_family({Family::Cycle, 6, {}, 0.0, 0});
  WeightedGraph zero = with_weights(g, std::vector<Rat>(g.edges.size(), Rat(0)));
  CHECK(inertia_of(distance_matrix(zero)) == Inertia{0, 6, 0});
}

TEST_CASE("reports serialize with stable fields") {
  ExperimentReport rep = weak_conjecture_scan(4, 5, 1);
  auto j = nlohmann::ordered_json::parse(rep.to_json_string());
  CHECK(j["kind"] == "weak");
  CHECK(j["n"] == 4);
  CHECK(j["samples"] == 5);
  CHECK(j["bound"] == 1);
  CHECK(j["records"].size() == 5);
  auto it = j.begin();
  CHECK(it.key() == "kind");
}

TEST_CASE("persistence appends NDJSON lines") {
  std::string path = "test_persist_tmp.ndjson";
  std::remove(path.c_str());
  WeightedGraph g = testutil::path_graph(3);
  persist_record(path, violation_json("weak", g, 9, 0, Inertia{1, 0, 2}, 2));
  persist_record(path, violation_json("weak", g, 10, 1, Inertia{1, 0, 2}, 2));
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    auto j = nlohmann::json::parse(line);
    CHECK(j["kind"] == "weak");
    CHECK(j["n"] == 3);
    ++lines;
  }
  CHECK(lines == 2);
  std::remove(path.c_str());
}

TEST_CASE("counter rng has no short cycles and distinct streams") {
  CounterRng a(1, 0), b(1, 1);
  std::set<uint64_t> seen;
  for (int i = 0; i < 1000; ++i) seen.insert(a.next());
  CHECK(seen.size() == 1000);
  CounterRng a2(1, 0);
  CHECK(a2.next() != b.next());
}

TEST_SUITE_END();
