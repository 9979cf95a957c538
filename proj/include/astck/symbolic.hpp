#pragma once

#include <concepts>
#include <cstddef>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "astck/epistemic.hpp"
#include "astck/hypernat.hpp"
#include "astck/sorites.hpp"

namespace astck {

/**
 * A carrier that cannot be listed, described instead by oracles:
 * the cell of a state for each agent (always finite), and a closed-form
 * link distance. States must be totally ordered so finite sets of them can
 * be held in std::set.
 */
template <typename M>
concept SymbolicCarrier = std::totally_ordered<typename M::State> &&
    requires(const M& m, const typename M::State& s, AgentId i) {
      { m.agent_count() } -> std::convertible_to<std::size_t>;
      { m.cell(i, s) } -> std::same_as<std::vector<typename M::State>>;
      { m.metric(s, s) } -> std::same_as<HyperNat>;
    };

/// An event on a symbolic carrier. `complement`, when set, lists every state
/// outside the event; it is what makes subjective common knowledge decidable.
template <typename State>
struct SymbolicEvent {
  std::string name;
  std::function<bool(const State&)> contains;
  std::function<std::vector<State>()> complement;
};

/// The reachability closure exceeded the enumeration budget.
class ClosureNotEnumerable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <SymbolicCarrier M>
std::set<typename M::State> link(const M& model, AgentId i,
                                 const std::set<typename M::State>& a) {
  std::set<typename M::State> out;
  for (const auto& x : a) {
    for (auto& y : model.cell(i, x)) out.insert(std::move(y));
  }
  return out;
}

template <SymbolicCarrier M>
std::set<typename M::State> link_group(const M& model, const std::set<typename M::State>& a) {
  std::set<typename M::State> out;
  for (AgentId i = 0; i < model.agent_count(); ++i) out.merge(link(model, i, a));
  return out;
}

template <SymbolicCarrier M>
std::set<typename M::State> link_iter(const M& model, std::set<typename M::State> a,
                                      std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) a = link_group(model, a);
  return a;
}

template <SymbolicCarrier M>
std::set<typename M::State> link_iter(const M& model, std::set<typename M::State> a,
                                      const HyperNat& n) {
  if (!n.is_finite()) {
    throw std::domain_error("link_iter: huge iteration count " + n.to_string() +
                            "; use the model's closed-form metric");
  }
  return link_iter(model, std::move(a), n.offset().convert_to<std::size_t>());
}

template <SymbolicCarrier M>
class SymbolicMetric {
 public:
  explicit SymbolicMetric(const M& model) : model_(&model) {}

  HyperNat operator()(const typename M::State& x, const typename M::State& y) const {
    return model_->metric(x, y);
  }

 private:
  const M* model_;
};

template <SymbolicCarrier M>
using SymbolicRelation = SoritesRelation<typename M::State, SymbolicMetric<M>>;

template <SymbolicCarrier M>
SymbolicRelation<M> galaxy_relation(const M& model, GeneratingSequence gen = {}) {
  return SymbolicRelation<M>(SymbolicMetric<M>(model), std::move(gen));
}

/// Classical common knowledge by explicit closure enumeration. Throws
/// ClosureNotEnumerable once more than `budget` states have been reached.
template <SymbolicCarrier M>
bool ck_classical(const M& model, const SymbolicEvent<typename M::State>& event,
                  const typename M::State& w, std::size_t budget = 100000) {
  std::set<typename M::State> seen{w};
  std::deque<typename M::State> frontier{w};
  while (!frontier.empty()) {
    const auto s = frontier.front();
    frontier.pop_front();
    if (!event.contains(s)) return false;
    for (AgentId i = 0; i < model.agent_count(); ++i) {
      for (auto& y : model.cell(i, s)) {
        if (seen.insert(y).second) {
          if (seen.size() > budget) {
            throw ClosureNotEnumerable("reachability closure exceeds " + std::to_string(budget) +
                                       " states");
          }
          frontier.push_back(std::move(y));
        }
      }
    }
  }
  return true;
}

/// gal(w) within E, decided through E's complement oracle.
template <SymbolicCarrier M, typename Relation>
bool ck_subjective(const M&, const SymbolicEvent<typename M::State>& event,
                   const typename M::State& w, const Relation& rel) {
  if (!event.complement) {
    throw std::logic_error("event '" + event.name +
                           "' has no complement oracle on an infinite carrier");
  }
  for (const auto& x : event.complement()) {
    if (rel.related(x, w)) return false;
  }
  return true;
}

}  // namespace astck
