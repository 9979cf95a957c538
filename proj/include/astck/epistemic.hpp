#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <boost/pending/disjoint_sets.hpp>

#include "astck/hypernat.hpp"
#include "astck/sorites.hpp"

namespace astck {

using StateId = std::size_t;
using AgentId = std::size_t;

/// An event on an explicit carrier: bit s is set iff state s is in the event.
using StateSet = boost::dynamic_bitset<>;

/// A partition as a list of cells, each cell sorted, cells sorted by first
/// element. Two partitions are equal iff their canonical forms compare equal.
using Partition = std::vector<std::vector<StateId>>;

/// Validation failure while building a model. field() names the offending
/// location, e.g. "agents[1].partition[0]".
class ModelError : public std::invalid_argument {
 public:
  ModelError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/**
 * An Aumann partition model over an explicit finite carrier.
 *
 * Each agent's cells must partition the carrier exactly: every state in
 * exactly one cell, no empty cells. Construction validates this and throws
 * ModelError otherwise. Immutable afterwards.
 */
class AumannModel {
 public:
  struct Agent {
    std::string name;
    Partition cells;
  };

  AumannModel(std::vector<std::string> states, std::vector<Agent> agents)
      : states_(std::move(states)), agents_(std::move(agents)) {
    if (agents_.empty()) throw ModelError("agents", "a model needs at least one agent");
    {
      std::map<std::string, StateId> seen;
      for (StateId s = 0; s < states_.size(); ++s) {
        if (!seen.emplace(states_[s], s).second) {
          throw ModelError("states[" + std::to_string(s) + "]",
                           "duplicate state '" + states_[s] + "'");
        }
      }
    }

    cell_of_.assign(agents_.size(), std::vector<std::size_t>(states_.size(), kNoCell));
    for (AgentId i = 0; i < agents_.size(); ++i) {
      auto& cells = agents_[i].cells;
      const std::string where = "agents[" + std::to_string(i) + "].partition";
      for (std::size_t c = 0; c < cells.size(); ++c) {
        const std::string cell_field = where + "[" + std::to_string(c) + "]";
        if (cells[c].empty()) throw ModelError(cell_field, "empty cell");
        for (StateId s : cells[c]) {
          if (s >= states_.size()) {
            throw ModelError(cell_field, "state index " + std::to_string(s) + " out of range");
          }
          auto& slot = cell_of_[i][s];
          if (slot != kNoCell) {
            throw ModelError(cell_field, "state '" + states_[s] + "' also appears in cell " +
                                             std::to_string(slot));
          }
          slot = c;
        }
      }
      for (StateId s = 0; s < states_.size(); ++s) {
        if (cell_of_[i][s] == kNoCell) {
          throw ModelError(where, "state '" + states_[s] + "' is not covered by agent '" +
                                      agents_[i].name + "'");
        }
      }
      for (auto& cell : cells) std::sort(cell.begin(), cell.end());
    }
  }

  std::size_t state_count() const noexcept { return states_.size(); }
  std::size_t agent_count() const noexcept { return agents_.size(); }

  const std::string& state_name(StateId s) const { return states_.at(s); }
  const std::vector<std::string>& state_names() const noexcept { return states_; }
  const Agent& agent(AgentId i) const { return agents_.at(i); }

  std::optional<StateId> find_state(const std::string& name) const {
    const auto it = std::find(states_.begin(), states_.end(), name);
    if (it == states_.end()) return std::nullopt;
    return static_cast<StateId>(it - states_.begin());
  }

  /// The cell of agent i containing s, sorted.
  const std::vector<StateId>& cell(AgentId i, StateId s) const {
    return agents_.at(i).cells.at(cell_of_.at(i).at(s));
  }

  StateSet empty_set() const { return StateSet(state_count()); }
  StateSet full_set() const { return ~empty_set(); }

  StateSet make_set(const std::vector<StateId>& members) const {
    StateSet out = empty_set();
    for (StateId s : members) out.set(s);
    return out;
  }

  StateSet singleton(StateId s) const {
    StateSet out = empty_set();
    out.set(s);
    return out;
  }

 private:
  static constexpr std::size_t kNoCell = static_cast<std::size_t>(-1);

  std::vector<std::string> states_;
  std::vector<Agent> agents_;
  std::vector<std::vector<std::size_t>> cell_of_;
};

inline std::vector<StateId> members(const StateSet& set) {
  std::vector<StateId> out;
  for (auto s = set.find_first(); s != StateSet::npos; s = set.find_next(s)) out.push_back(s);
  return out;
}

// --- link operators --------------------------------------------------------

/// L_i(A): union of agent i's cells that meet A.
inline StateSet link(const AumannModel& model, AgentId i, const StateSet& a) {
  StateSet out = model.empty_set();
  for (const auto& cell : model.agent(i).cells) {
    const bool meets = std::any_of(cell.begin(), cell.end(), [&](StateId s) { return a.test(s); });
    if (meets) {
      for (StateId s : cell) out.set(s);
    }
  }
  return out;
}

/// L_G(A): union of L_i(A) over all agents.
inline StateSet link_group(const AumannModel& model, const StateSet& a) {
  StateSet out = model.empty_set();
  for (AgentId i = 0; i < model.agent_count(); ++i) out |= link(model, i, a);
  return out;
}

/// L_G^n(A), with L_G^0(A) = A.
inline StateSet link_iter(const AumannModel& model, StateSet a, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    StateSet next = link_group(model, a);
    if (next == a) break;  // fixed point
    a = std::move(next);
  }
  return a;
}

/// Huge iteration counts have no meaning on an explicit carrier.
inline StateSet link_iter(const AumannModel& model, StateSet a, const HyperNat& n) {
  if (!n.is_finite()) {
    throw std::domain_error("link_iter: huge iteration count " + n.to_string() +
                            " on an explicit carrier");
  }
  return link_iter(model, std::move(a), n.offset().convert_to<std::size_t>());
}

// --- reachability metric ---------------------------------------------------

/// BFS layer of every state from x under L_G; nullopt when unreachable.
/// Each state is assigned exactly once, at its first layer.
inline std::vector<std::optional<std::size_t>> distances_from(const AumannModel& model,
                                                              StateId x) {
  std::vector<std::optional<std::size_t>> dist(model.state_count());
  std::deque<StateId> frontier{x};
  dist.at(x) = 0;
  while (!frontier.empty()) {
    const StateId s = frontier.front();
    frontier.pop_front();
    for (AgentId i = 0; i < model.agent_count(); ++i) {
      for (StateId y : model.cell(i, s)) {
        if (!dist[y]) {
          dist[y] = *dist[s] + 1;
          frontier.push_back(y);
        }
      }
    }
  }
  return dist;
}

/// ||x, y||: least n with y in L_G^n({x}), or nullopt if there is none.
inline std::optional<HyperNat> metric(const AumannModel& model, StateId x, StateId y) {
  const auto d = distances_from(model, x).at(y);
  if (!d) return std::nullopt;
  return HyperNat::finite(*d);
}

inline bool is_reachable(const AumannModel& model, StateId x, StateId y) {
  return distances_from(model, x).at(y).has_value();
}

inline StateSet reachable_closure(const AumannModel& model, StateId x) {
  StateSet out = model.empty_set();
  const auto dist = distances_from(model, x);
  for (StateId s = 0; s < dist.size(); ++s) {
    if (dist[s]) out.set(s);
  }
  return out;
}

/// Metric of a finite model, usable as the distance of a SoritesRelation.
class ModelMetric {
 public:
  explicit ModelMetric(const AumannModel& model) : model_(&model) {}

  std::optional<HyperNat> operator()(StateId x, StateId y) const {
    return metric(*model_, x, y);
  }

 private:
  const AumannModel* model_;
};

using ModelRelation = SoritesRelation<StateId, ModelMetric>;

/// The relation must not outlive the model.
inline ModelRelation galaxy_relation(const AumannModel& model, GeneratingSequence gen = {}) {
  return ModelRelation(ModelMetric(model), std::move(gen));
}

/// gal(w) materialized; possible only because the carrier is finite.
template <typename Relation>
StateSet galaxy(const AumannModel& model, StateId w, const Relation& rel) {
  StateSet out = model.empty_set();
  for (StateId x = 0; x < model.state_count(); ++x) {
    if (rel.related(w, x)) out.set(x);
  }
  return out;
}

// --- knowledge -------------------------------------------------------------

/// K_i(A): states whose agent-i cell lies inside A.
inline StateSet knows(const AumannModel& model, AgentId i, const StateSet& a) {
  StateSet out = model.empty_set();
  for (const auto& cell : model.agent(i).cells) {
    const bool inside = std::all_of(cell.begin(), cell.end(), [&](StateId s) { return a.test(s); });
    if (inside) {
      for (StateId s : cell) out.set(s);
    }
  }
  return out;
}

/// K_G(A): intersection of K_i(A) over all agents.
inline StateSet knows_group(const AumannModel& model, const StateSet& a) {
  StateSet out = model.full_set();
  for (AgentId i = 0; i < model.agent_count(); ++i) out &= knows(model, i, a);
  return out;
}

/// Classical common knowledge: every state reachable from w lies in E.
inline bool ck_classical(const AumannModel& model, const StateSet& event, StateId w) {
  return reachable_closure(model, w).is_subset_of(event);
}

/// Subjective common knowledge: gal(w) within E, checked through the
/// complement: no state outside E is related to w.
template <typename Relation>
bool ck_subjective(const AumannModel& model, const StateSet& event, StateId w,
                   const Relation& rel) {
  for (StateId x = 0; x < model.state_count(); ++x) {
    if (!event.test(x) && rel.related(x, w)) return false;
  }
  return true;
}

/// C_G(E): the states at which E is subjective common knowledge.
template <typename Relation>
StateSet ck_region(const AumannModel& model, const StateSet& event, const Relation& rel) {
  StateSet out = model.empty_set();
  for (StateId w = 0; w < model.state_count(); ++w) {
    if (ck_subjective(model, event, w, rel)) out.set(w);
  }
  return out;
}

// --- meet and galaxies -----------------------------------------------------

inline Partition canonical(Partition p) {
  for (auto& cell : p) std::sort(cell.begin(), cell.end());
  std::sort(p.begin(), p.end());
  return p;
}

/// The finest common coarsening of all agents' partitions, by union-find
/// over the states of each cell.
inline Partition meet(const AumannModel& model) {
  const std::size_t n = model.state_count();
  std::vector<std::size_t> rank(n, 0);
  std::vector<std::size_t> parent(n);
  boost::disjoint_sets<std::size_t*, std::size_t*> sets(rank.data(), parent.data());
  for (StateId s = 0; s < n; ++s) sets.make_set(s);
  for (AgentId i = 0; i < model.agent_count(); ++i) {
    for (const auto& cell : model.agent(i).cells) {
      for (std::size_t k = 1; k < cell.size(); ++k) sets.union_set(cell[0], cell[k]);
    }
  }
  std::map<std::size_t, std::vector<StateId>> groups;
  for (StateId s = 0; s < n; ++s) groups[sets.find_set(s)].push_back(s);
  Partition out;
  for (auto& [root, cell] : groups) out.push_back(std::move(cell));
  return canonical(std::move(out));
}

/// The classes of a relation on the carrier, grouped by representative.
template <typename Relation>
Partition galaxies(const AumannModel& model, const Relation& rel) {
  Partition out;
  std::vector<bool> placed(model.state_count(), false);
  for (StateId s = 0; s < model.state_count(); ++s) {
    if (placed[s]) continue;
    std::vector<StateId> cell;
    for (StateId x = s; x < model.state_count(); ++x) {
      if (!placed[x] && rel.related(s, x)) {
        placed[x] = true;
        cell.push_back(x);
      }
    }
    out.push_back(std::move(cell));
  }
  return canonical(std::move(out));
}

struct MeetReport {
  Partition meet;
  Partition galaxies;
  /// Cells present in exactly one of the two partitions.
  std::vector<std::vector<StateId>> only_in_meet;
  std::vector<std::vector<StateId>> only_in_galaxies;

  bool equal() const noexcept { return only_in_meet.empty() && only_in_galaxies.empty(); }
};

inline MeetReport meet_equals_galaxies(const AumannModel& model) {
  MeetReport report;
  report.meet = meet(model);
  report.galaxies = galaxies(model, galaxy_relation(model));
  std::set_difference(report.meet.begin(), report.meet.end(), report.galaxies.begin(),
                      report.galaxies.end(), std::back_inserter(report.only_in_meet));
  std::set_difference(report.galaxies.begin(), report.galaxies.end(), report.meet.begin(),
                      report.meet.end(), std::back_inserter(report.only_in_galaxies));
  return report;
}

}  // namespace astck
