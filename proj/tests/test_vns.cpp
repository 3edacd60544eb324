#include <doctest.h>

#include <algorithm>
#include <random>

#include "crossdock/exact.hpp"
#include "crossdock/fixtures.hpp"
#include "crossdock/io.hpp"
#include "crossdock/subproblem.hpp"
#include "crossdock/vns.hpp"
#include "oracle.hpp"

using namespace crossdock;

namespace {

constexpr auto kCD = Formulation::kCrossDock;
constexpr auto kRCD = Formulation::kRCrossDock;

Instance RunInstance(std::uint64_t seed) {
  GeneratorParams p;
  p.seed = 500 + seed;
  p.n = 7;
  p.m = 3;
  if (seed % 2) p.capacity_ratio = 0.5;
  return generate(p);
}

std::optional<double> SweepRatio(std::uint64_t seed) {
  return seed % 2 ? std::optional<double>{0.5} : std::nullopt;
}

}  // namespace

TEST_CASE("same seed, same run") {
  const auto inst = fixtures::miao_example();
  VnsConfig cfg;
  cfg.rng_seed = 42;
  cfg.iter_max = 60;
  for (auto form : {kCD, kRCD}) {
    const auto a = vns_solve(inst, form, cfg);
    const auto b = vns_solve(inst, form, cfg);
    CHECK(a.incumbent_trace == b.incumbent_trace);
    CHECK(a.best == b.best);
    CHECK(a.rng_algorithm == kVnsRngAlgorithm);
    CHECK_FALSE(a.proven_optimal);
  }
}

TEST_CASE("no iterations returns the greedy start") {
  VnsConfig cfg;
  cfg.iter_max = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = RunInstance(seed);
    for (auto form : {kCD, kRCD}) {
      const auto greedy = greedy_assignment(inst, form);
      const auto r = vns_solve(inst, form, cfg);
      CHECK(r.best.dock == greedy);
      CHECK(r.incumbent_trace.size() == 1);
      CHECK(r.objective.total == evaluate_assignment(inst, form, greedy).objective.total);
    }
  }
}

TEST_CASE("greedy and repaired assignments are feasible") {
  std::mt19937_64 rng(31);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto inst = RunInstance(seed);
    std::uniform_int_distribution<int> dock(-1, inst.m - 1);
    for (auto form : {kCD, kRCD}) {
      CHECK(evaluate_assignment(inst, form, greedy_assignment(inst, form)).feasible);
      std::vector<int> random(inst.n);
      for (auto& d : random) d = dock(rng);
      const auto repaired = repair_assignment(inst, form, random);
      CHECK(evaluate_assignment(inst, form, repaired).feasible);
      for (int i = 0; i < inst.n; ++i)
        CHECK((repaired[i] == random[i] || repaired[i] == kUnassigned));
    }
  }
}

TEST_CASE("incumbents only improve and are always feasible") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = RunInstance(seed);
    VnsConfig cfg;
    cfg.rng_seed = seed;
    cfg.iter_max = 80;
    cfg.local_search = seed % 2 ? LocalSearch::kFirstImprovement : LocalSearch::kBestImprovement;
    for (auto form : {kCD, kRCD}) {
      const auto r = vns_solve(inst, form, cfg);
      REQUIRE(r.incumbent_trace.size() == r.incumbent_history.size());
      CHECK(r.incumbent_trace.size() == cfg.iter_max + 1);
      for (std::size_t p = 1; p < r.incumbent_trace.size(); ++p)
        CHECK(r.incumbent_trace[p] <= r.incumbent_trace[p - 1]);
      for (std::size_t p = 0; p < r.incumbent_history.size(); ++p) {
        const auto& sol = r.incumbent_history[p];
        CHECK(check_solution(inst, sol, form).feasible());
        CHECK(objective_value(inst, sol, form).total == r.incumbent_trace[p]);
      }
      CHECK(r.incumbent_trace.back() == r.objective.total);
    }
  }
}

TEST_CASE("restarting from the result never worsens it") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = RunInstance(seed);
    VnsConfig cfg;
    cfg.rng_seed = seed;
    cfg.iter_max = 40;
    for (auto form : {kCD, kRCD}) {
      const auto first = vns_solve(inst, form, cfg);
      cfg.rng_seed = seed + 100;
      const auto second = vns_solve(inst, form, cfg, first.best.dock);
      CHECK(second.objective.total <= first.objective.total);
      CHECK(second.incumbent_trace.front() == first.objective.total);
    }
  }
}

TEST_CASE("heuristic finds the enumerated optimum on most small instances") {
  for (auto form : {kCD, kRCD}) {
    int matched = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto inst = oracle::sweep_instance(seed, SweepRatio(seed));
      VnsConfig cfg;
      cfg.rng_seed = seed;
      cfg.iter_max = 300;
      cfg.time_budget = Seconds(10.0);
      const auto r = vns_solve(inst, form, cfg);
      if (r.objective.total == brute_force(inst, form).objective.total) ++matched;
    }
    CAPTURE(to_string(form));
    CHECK(matched >= 40);
  }
}
