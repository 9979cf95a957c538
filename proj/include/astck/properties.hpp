#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "astck/epistemic.hpp"

// Exhaustive property checks over one finite model. Each returns a tally of
// how many instances were checked and a description of every violation.

namespace astck::properties {

struct Tally {
  std::size_t checked = 0;
  std::vector<std::string> violations;

  void expect(bool holds, const std::string& what) {
    ++checked;
    if (!holds) violations.push_back(what);
  }

  Tally& operator+=(const Tally& other) {
    checked += other.checked;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    return *this;
  }

  bool ok() const noexcept { return violations.empty(); }
};

inline constexpr std::size_t kMaxExhaustiveStates = 16;

/// Every event of the model, as bit masks turned into sets.
inline std::vector<StateSet> all_events(const AumannModel& model) {
  const std::size_t n = model.state_count();
  if (n > kMaxExhaustiveStates) {
    throw std::invalid_argument("too many states for exhaustive event enumeration");
  }
  std::vector<StateSet> out;
  out.reserve(std::size_t{1} << n);
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) out.emplace_back(n, mask);
  return out;
}

inline std::string set_string(const StateSet& s) {
  std::string out;
  boost::to_string(s, out);
  return out;
}

/// Identity of indiscernibles, symmetry and the triangle inequality for
/// ||.,.||. Unreachable pairs count as infinitely far.
inline Tally check_metric_axioms(const AumannModel& model) {
  Tally tally;
  const std::size_t n = model.state_count();
  std::vector<std::vector<std::optional<std::size_t>>> d;
  for (StateId x = 0; x < n; ++x) d.push_back(distances_from(model, x));

  for (StateId x = 0; x < n; ++x) {
    for (StateId y = 0; y < n; ++y) {
      const auto pair = "(" + std::to_string(x) + "," + std::to_string(y) + ")";
      tally.expect((d[x][y] == std::optional<std::size_t>(0)) == (x == y), "identity " + pair);
      tally.expect(d[x][y] == d[y][x], "symmetry " + pair);
      for (StateId z = 0; z < n; ++z) {
        if (!d[x][y] || !d[y][z]) continue;
        tally.expect(d[x][z] && *d[x][z] <= *d[x][y] + *d[y][z],
                     "triangle (" + std::to_string(x) + "," + std::to_string(y) + "," +
                         std::to_string(z) + ")");
      }
    }
  }
  return tally;
}

/// Expansivity, layer monotonicity, isotonicity and exchange, over all
/// events and all iteration depths up to the number of states.
inline Tally check_link_lemmas(const AumannModel& model) {
  Tally tally;
  const std::size_t n = model.state_count();
  const auto events = all_events(model);
  std::vector<StateSet> linked;
  for (const auto& a : events) linked.push_back(link_group(model, a));

  for (std::size_t ai = 0; ai < events.size(); ++ai) {
    const auto& a = events[ai];
    tally.expect(a.is_subset_of(linked[ai]), "expansive " + set_string(a));

    StateSet layer = a;
    for (std::size_t k = 0; k <= n; ++k) {
      StateSet next = link_group(model, layer);
      tally.expect(layer.is_subset_of(next), "monotone " + set_string(a) + " n=" + std::to_string(k));
      layer = std::move(next);
    }

    for (std::size_t bi = 0; bi < events.size(); ++bi) {
      if (!a.is_subset_of(events[bi])) continue;
      tally.expect(linked[ai].is_subset_of(linked[bi]),
                   "isotone " + set_string(a) + " <= " + set_string(events[bi]));
    }
  }

  for (StateId x = 0; x < n; ++x) {
    for (StateId y = 0; y < n; ++y) {
      for (std::size_t k = 0; k <= n; ++k) {
        const bool forward = link_iter(model, model.singleton(x), k).test(y);
        const bool backward = link_iter(model, model.singleton(y), k).test(x);
        tally.expect(!forward || backward, "exchange x=" + std::to_string(x) +
                                               " y=" + std::to_string(y) + " n=" + std::to_string(k));
      }
    }
  }
  return tally;
}

/// K_i(A) = complement of L_i(complement of A), and the same for K_G.
inline Tally check_knowledge_duality(const AumannModel& model) {
  Tally tally;
  for (const auto& a : all_events(model)) {
    StateSet group_dual = model.full_set();
    for (AgentId i = 0; i < model.agent_count(); ++i) {
      const StateSet dual = ~link(model, i, ~a);
      tally.expect(knows(model, i, a) == dual,
                   "K_" + std::to_string(i) + " duality " + set_string(a));
      group_dual &= dual;
    }
    tally.expect(knows_group(model, a) == group_dual, "K_G duality " + set_string(a));
  }
  return tally;
}

/// gal(w) within A iff w in C_G(A); and classical CK at w iff the meet cell
/// of w lies within A.
inline Tally check_common_knowledge(const AumannModel& model) {
  Tally tally;
  const auto rel = galaxy_relation(model);
  std::vector<StateSet> gal;
  for (StateId w = 0; w < model.state_count(); ++w) gal.push_back(galaxy(model, w, rel));

  const Partition meet_cells = meet(model);
  std::vector<StateSet> meet_cell_of(model.state_count());
  for (const auto& cell : meet_cells) {
    const StateSet as_set = model.make_set(cell);
    for (StateId s : cell) meet_cell_of[s] = as_set;
  }

  for (const auto& a : all_events(model)) {
    const StateSet region = ck_region(model, a, rel);
    for (StateId w = 0; w < model.state_count(); ++w) {
      tally.expect(gal[w].is_subset_of(a) == region.test(w),
                   "C_G " + set_string(a) + " at " + std::to_string(w));
      tally.expect(ck_classical(model, a, w) == meet_cell_of[w].is_subset_of(a),
                   "classical CK " + set_string(a) + " at " + std::to_string(w));
    }
  }
  return tally;
}

inline Tally check_meet_galaxies(const AumannModel& model) {
  Tally tally;
  const auto report = meet_equals_galaxies(model);
  tally.expect(report.equal(), "meet differs from galaxies");
  return tally;
}

}  // namespace astck::properties
