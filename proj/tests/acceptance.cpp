// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "astck/emailgame.hpp"
#include "astck/epistemic.hpp"
#include "astck/hypernat.hpp"
#include "astck/properties.hpp"
#include "astck/random_model.hpp"
#include "astck/sorites.hpp"
#include "email_oracle.hpp"

namespace {

using astck::BigInt;
using astck::ChainDistance;
using astck::ChainRelation;
using astck::finite;
using astck::huge;
using astck::HyperNat;
using astck::Rational;
using astck::StateId;
using astck::random_connected_model;
using astck::random_model;
namespace emailgame = astck::emailgame;
namespace properties = astck::properties;
namespace testing = astck::testing;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome classical_impossibility() {
  const auto start = Clock::now();
  const auto report = emailgame::check_classical_impossibility(50);
  const double elapsed = seconds_since(start);
  std::size_t failures = 0;
  for (const auto& c : report.cases) failures += !c.pass;
  return {report.pass() && report.cases.size() == 101 && elapsed < 1.0,
          "T=50, " + std::to_string(report.cases.size()) + " states, " +
              std::to_string(failures) + " failures, " + std::to_string(elapsed) + " s"};
}

std::vector<HyperNat> huge_taus() { return {huge(1, -10), huge(1), huge(1, 10), huge(2)}; }

Outcome ast_possibility() {
  std::size_t wrong = 0;
  for (const auto& tau : huge_taus()) wrong += !emailgame::check_ast_possibility(emailgame::State::b(tau));
  for (int t = 1; t <= 100; ++t) {
    wrong += emailgame::check_ast_possibility(emailgame::State::b(finite(t)));
  }
  return {wrong == 0, std::to_string(wrong) + " wrong verdicts over 4 huge and 100 finite t"};
}

Outcome monotone() {
  std::vector<HyperNat> samples = huge_taus();
  for (int t = 1; t <= 100; ++t) samples.push_back(finite(t));
  const auto report = emailgame::check_monotone_ck(samples);
  std::size_t failures = 0, skipped = 0;
  for (const auto& c : report.cases) {
    failures += !c.pass;
    skipped += c.note.has_value();
  }
  return {report.pass() && skipped == 0,
          std::to_string(report.cases.size()) + " samples, " + std::to_string(failures) +
              " failures, " + std::to_string(skipped) + " skipped"};
}

Outcome metric_oracle() {
  const auto start = Clock::now();
  std::size_t pairs = 0, mismatches = 0;
  for (std::size_t bound : {5u, 20u, 50u}) {
    const auto listed = testing::listed_email_model(bound);
    std::vector<emailgame::State> states{emailgame::State::a()};
    for (std::size_t t = 1; t <= bound; ++t) {
      states.push_back(emailgame::State::b(finite(t), true));
      states.push_back(emailgame::State::b(finite(t), false));
    }
    for (StateId x = 0; x < states.size(); ++x) {
      if (states[x].to_string() != listed.state_name(x)) ++mismatches;
      const auto dist = testing::bfs_oracle(listed, x);
      for (StateId y = 0; y < states.size(); ++y) {
        ++pairs;
        if (dist[y] < 0 || emailgame::email_metric(states[x], states[y]) != finite(dist[y])) {
          ++mismatches;
        }
      }
    }
  }
  const auto listed = testing::listed_email_model(20);
  const auto from_a = testing::bfs_oracle(listed, 0);
  for (std::size_t t = 1; t <= 20; ++t) {
    const auto id = *listed.find_state(testing::email_name(t, t));
    mismatches += emailgame::email_metric(emailgame::State::a(), emailgame::State::b(finite(t))) !=
                  finite(from_a[id]);
  }
  const double elapsed = seconds_since(start);
  return {mismatches == 0 && elapsed < 1.0,
          std::to_string(pairs) + " pairs, " + std::to_string(mismatches) + " mismatches, " +
              std::to_string(elapsed) + " s"};
}

Outcome metric_axioms(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> states(1, 8), agents(2, 3);
  properties::Tally tally;
  constexpr int kModels = 1000;
  for (int k = 0; k < kModels; ++k) {
    tally += properties::check_metric_axioms(random_connected_model(rng, states(rng), agents(rng)));
  }
  return {tally.ok(), std::to_string(kModels) + " connected models, " +
                          std::to_string(tally.checked) + " instances, " +
                          std::to_string(tally.violations.size()) + " violations"};
}

Outcome lemma_suite(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> states(1, 6), agents(2, 3);
  properties::Tally tally;
  constexpr int kModels = 300;
  for (int k = 0; k < kModels; ++k) {
    tally += properties::check_link_lemmas(random_model(rng, states(rng), agents(rng)));
  }
  return {tally.ok(), std::to_string(kModels) + " models, " + std::to_string(tally.checked) +
                          " instances, " + std::to_string(tally.violations.size()) + " violations"};
}

Outcome knowledge_duality(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> states(1, 6), agents(2, 3);
  properties::Tally tally;
  constexpr int kModels = 300;
  for (int k = 0; k < kModels; ++k) {
    const auto model = random_model(rng, states(rng), agents(rng));
    tally += properties::check_knowledge_duality(model);
    tally += properties::check_common_knowledge(model);
  }
  return {tally.ok(), std::to_string(kModels) + " models, " + std::to_string(tally.checked) +
                          " instances, " + std::to_string(tally.violations.size()) + " violations"};
}

Outcome meet_is_galaxies(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> states(1, 8), agents(2, 3);
  std::size_t mismatches = 0;
  constexpr int kModels = 500;
  for (int k = 0; k < kModels; ++k) {
    mismatches += !astck::meet_equals_galaxies(random_model(rng, states(rng), agents(rng))).equal();
  }
  return {mismatches == 0, std::to_string(kModels) + " models, " + std::to_string(mismatches) +
                               " mismatches"};
}

Outcome sorites_theorem() {
  const ChainRelation rel{ChainDistance{}};
  std::vector<HyperNat> chain;
  for (int i = 0; i < 100; ++i) chain.push_back(finite(i));
  const auto axioms = rel.verify_generating_axioms(chain, 6);

  const HyperNat origin;
  std::size_t wrong = 0;
  std::vector<HyperNat> finite_probes;
  for (int i = 0; i <= 1000; ++i) finite_probes.push_back(finite(i));
  finite_probes.push_back(finite(1'000'000));
  finite_probes.push_back(finite(BigInt("1000000000000000000000000000000")));
  for (const auto& p : finite_probes) wrong += !rel.related(origin, p);

  std::vector<HyperNat> huge_probes;
  for (int k = -100; k <= 100; ++k) huge_probes.push_back(huge(1, k));
  for (int c = 2; c <= 5; ++c) huge_probes.push_back(huge(c, -c));
  for (const auto& p : huge_probes) wrong += rel.related(origin, p);

  std::size_t crossings = 0, candidates = 0;
  for (int i = 0; i < 100; ++i) {
    const HyperNat beta = finite(i);
    ++candidates;
    crossings += rel.related(origin, beta) && !rel.related(origin, beta.successor());
  }
  for (int k = -50; k < 50; ++k) {
    const HyperNat beta = huge(1, k);
    ++candidates;
    crossings += rel.related(origin, beta) && !rel.related(origin, beta.successor());
  }

  return {axioms.ok() && wrong == 0 && crossings == 0 && candidates == 200,
          std::to_string(axioms.violations.size()) + " axiom violations, " + std::to_string(wrong) +
              " wrong probe verdicts, " + std::to_string(crossings) + " crossings in " +
              std::to_string(candidates) + " candidates"};
}

Outcome nash_equilibrium() {
  std::vector<HyperNat> finite_cells;
  for (int t = 0; t <= 10; ++t) finite_cells.push_back(finite(t));
  const std::vector<HyperNat> huge_cells{huge(1, -2), huge(1), huge(1, 5)};
  const auto profile = std::make_pair(emailgame::CutoffStrategy::finite_plays_a(),
                                      emailgame::CutoffStrategy::finite_plays_a());
  const emailgame::PayoffParams main_params{2, 3, Rational(1, 2), Rational(1, 10)};
  const emailgame::PayoffParams unit_params{1, 1, Rational(1, 2), Rational(1, 10)};
  const auto first = emailgame::best_response_check(profile, main_params, finite_cells, huge_cells);
  const auto second = emailgame::best_response_check(profile, unit_params, finite_cells, huge_cells);
  const std::size_t expected_cases = 2 * (finite_cells.size() + huge_cells.size());
  return {first.pass() && second.pass() && first.cases.size() == expected_cases &&
              second.cases.size() == expected_cases,
          "M=2,L=3: " + std::string(first.pass() ? "pass" : "FAIL") +
              "; M=1,L=1: " + (second.pass() ? "pass" : "FAIL") + "; " +
              std::to_string(expected_cases) + " cells each"};
}

}  // namespace

int main() {
  const std::uint64_t seed = astck::seed_from_env();
  std::mt19937_64 rng(seed);
  std::printf("acceptance suite (seed %llu)\n", static_cast<unsigned long long>(seed));

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 classical impossibility", classical_impossibility},
      {"AC2 AST possibility", ast_possibility},
      {"AC3 monotone propositions", monotone},
      {"AC4 metric oracle equivalence", metric_oracle},
      {"AC5 metric axioms", [&] { return metric_axioms(rng); }},
      {"AC6 link lemma suite", [&] { return lemma_suite(rng); }},
      {"AC7 knowledge duality and C_G", [&] { return knowledge_duality(rng); }},
      {"AC8 meet equals galaxies", [&] { return meet_is_galaxies(rng); }},
      {"AC9 sorites theorem", sorites_theorem},
      {"AC10 Nash equilibrium", nash_equilibrium},
  };

  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome outcome{false, ""};
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    failed += !outcome.pass;
    std::printf("[%s] %-32s %s\n", outcome.pass ? "PASS" : "FAIL", name.c_str(),
                outcome.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
