#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "astck/epistemic.hpp"

namespace astck {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'a57c'0de5ULL;

/// SORITES_SEED if set and numeric, otherwise `fallback`.
inline std::uint64_t seed_from_env(std::uint64_t fallback = kDefaultSeed) {
  if (const char* raw = std::getenv("SORITES_SEED")) {
    char* end = nullptr;
    const auto value = std::strtoull(raw, &end, 10);
    if (end != raw && *end == '\0') return value;
  }
  return fallback;
}

/// Each agent gets a uniformly chosen number of blocks and every state a
/// uniformly chosen block; empty blocks are dropped.
inline AumannModel random_model(std::mt19937_64& rng, std::size_t state_count,
                                std::size_t agent_count) {
  std::vector<std::string> names;
  for (std::size_t s = 0; s < state_count; ++s) names.push_back("s" + std::to_string(s));

  std::vector<AumannModel::Agent> agents;
  for (std::size_t i = 0; i < agent_count; ++i) {
    std::uniform_int_distribution<std::size_t> blocks_dist(1, state_count == 0 ? 1 : state_count);
    const std::size_t blocks = blocks_dist(rng);
    std::uniform_int_distribution<std::size_t> pick(0, blocks - 1);
    Partition cells(blocks);
    for (StateId s = 0; s < state_count; ++s) cells[pick(rng)].push_back(s);
    std::erase_if(cells, [](const auto& c) { return c.empty(); });
    agents.push_back({"agent" + std::to_string(i), std::move(cells)});
  }
  return AumannModel(std::move(names), std::move(agents));
}

inline bool is_connected(const AumannModel& model) {
  return model.state_count() == 0 || reachable_closure(model, 0).all();
}

/// Rejection-samples random_model until the result is connected.
inline AumannModel random_connected_model(std::mt19937_64& rng, std::size_t state_count,
                                          std::size_t agent_count) {
  for (;;) {
    AumannModel model = random_model(rng, state_count, agent_count);
    if (is_connected(model)) return model;
  }
}

}  // namespace astck
