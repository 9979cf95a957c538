#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "astck/epistemic.hpp"
#include "astck/hypernat.hpp"
#include "astck/rational.hpp"
#include "astck/report.hpp"
#include "astck/sorites.hpp"
#include "astck/symbolic.hpp"

namespace astck::emailgame {

enum class GameTag { a, b };

inline constexpr AgentId kAgent1 = 0;  // knows the game, sends odd messages
inline constexpr AgentId kAgent2 = 1;

/**
 * A state (tag, t, t') of the electronic-mail game: agent 1 sent t messages,
 * agent 2 sent t' = t - delta, delta in {0, 1}. The only a-state is (a,0,0);
 * b-states have t >= 1. t may be huge.
 *
 * States are ordered by their position t + t' on the chain
 * (a,0,0) - (b,1,0) - (b,1,1) - (b,2,1) - (b,2,2) - ...
 */
class State {
 public:
  static State a() { return State(GameTag::a, HyperNat(), false); }

  static State b(HyperNat t, bool lost_reply = false) {
    if (t == HyperNat()) {
      throw std::invalid_argument("b-state needs t >= 1");
    }
    return State(GameTag::b, std::move(t), lost_reply);
  }

  /// (b, t, t'), with t' in {t, t-1}.
  static State b(const HyperNat& t, const HyperNat& t_prime) {
    if (t_prime == t) return b(t, false);
    if (t != HyperNat() && t_prime == t.predecessor()) return b(t, true);
    throw std::invalid_argument("invalid e-mail state (b," + t.to_string() + "," +
                                t_prime.to_string() + ")");
  }

  GameTag tag() const noexcept { return tag_; }
  const HyperNat& t() const noexcept { return t_; }
  HyperNat t_prime() const { return delta_ ? t_.predecessor() : t_; }
  bool delta() const noexcept { return delta_; }

  HyperNat position() const { return t_ + t_prime(); }

  std::string to_string() const {
    return std::string("(") + (tag_ == GameTag::a ? "a" : "b") + "," + t_.to_string() + "," +
           t_prime().to_string() + ")";
  }

  friend bool operator==(const State&, const State&) = default;
  friend std::strong_ordering operator<=>(const State& x, const State& y) {
    return x.position() <=> y.position();
  }

 private:
  State(GameTag tag, HyperNat t, bool delta) : tag_(tag), t_(std::move(t)), delta_(delta) {}

  GameTag tag_;
  HyperNat t_;
  bool delta_;
};

/// The infinite e-mail game carrier with closed-form cells and metric.
class Model {
 public:
  using State = emailgame::State;

  std::size_t agent_count() const noexcept { return 2; }

  /// Agent 1 pairs (b,t,t-1) with (b,t,t) and sees (a,0,0) alone.
  /// Agent 2 pairs (a,0,0) with (b,1,0), and (b,t,t) with (b,t+1,t).
  std::vector<State> cell(AgentId i, const State& s) const {
    if (i == kAgent1) {
      if (s.tag() == GameTag::a) return {s};
      return {State::b(s.t(), true), State::b(s.t(), false)};
    }
    if (i != kAgent2) throw std::out_of_range("e-mail game has agents 0 and 1");
    const HyperNat tp = s.t_prime();
    if (tp == HyperNat()) return {State::a(), State::b(HyperNat::finite(1), true)};
    return {State::b(tp, false), State::b(tp.successor(), true)};
  }

  /// Each link step moves one place along the chain, so the distance is
  /// the gap in position; ||(a,0,0),(b,t,t)|| = 2t.
  HyperNat metric(const State& x, const State& y) const {
    return abs_diff(x.position(), y.position());
  }
};

static_assert(SymbolicCarrier<Model>);

/// B: the states whose game is b. Its complement is exactly {(a,0,0)}.
inline SymbolicEvent<State> event_b() {
  return {"B", [](const State& s) { return s.tag() == GameTag::b; },
          [] { return std::vector<State>{State::a()}; }};
}

inline HyperNat email_metric(const State& x, const State& y) { return Model{}.metric(x, y); }

/// The carrier {(a,0,0)} + {(b,t,t') : t <= T} as an explicit model.
/// Agent 2's cell {(b,T,T),(b,T+1,T)} is clipped to {(b,T,T)}.
/// State ids equal chain positions.
struct Truncation {
  std::size_t bound;
  std::vector<State> states;
  AumannModel model;
  StateSet b_event;

  std::optional<StateId> id_of(const State& s) const {
    const HyperNat pos = s.position();
    if (!pos.is_finite() || pos.offset() >= states.size()) return std::nullopt;
    return pos.offset().convert_to<StateId>();
  }
};

inline Truncation truncate(std::size_t bound) {
  if (bound < 1) throw std::invalid_argument("truncation bound must be at least 1");
  std::vector<State> states{State::a()};
  for (std::size_t t = 1; t <= bound; ++t) {
    states.push_back(State::b(HyperNat::finite(t), true));
    states.push_back(State::b(HyperNat::finite(t), false));
  }
  std::vector<std::string> names;
  for (const auto& s : states) names.push_back(s.to_string());

  const Model full;
  const auto position_of = [](const State& s) {
    return s.position().offset().convert_to<StateId>();
  };
  std::vector<AumannModel::Agent> agents{{"1", {}}, {"2", {}}};
  for (AgentId i = 0; i < 2; ++i) {
    std::vector<bool> covered(states.size(), false);
    for (StateId s = 0; s < states.size(); ++s) {
      if (covered[s]) continue;
      std::vector<StateId> cell;
      for (const auto& member : full.cell(i, states[s])) {
        const StateId id = position_of(member);
        if (id < states.size()) {
          cell.push_back(id);
          covered[id] = true;
        }
      }
      agents[i].cells.push_back(std::move(cell));
    }
  }

  AumannModel model(std::move(names), std::move(agents));
  StateSet b_event = model.full_set();
  b_event.reset(0);
  return Truncation{bound, std::move(states), std::move(model), std::move(b_event)};
}

/// On the truncation, B is classical common knowledge nowhere and every
/// state reaches the whole clipped carrier.
inline CheckReport check_classical_impossibility(std::size_t bound) {
  const Truncation trunc = truncate(bound);
  CheckReport report;
  report.check = "impossibility";
  report.params["T"] = bound;
  for (StateId w = 0; w < trunc.states.size(); ++w) {
    const bool ck = ck_classical(trunc.model, trunc.b_event, w);
    const bool covers = reachable_closure(trunc.model, w).all();
    CheckCase c;
    c.input = {{"state", trunc.states[w].to_string()}};
    c.expected = {{"ck_B", false}, {"closure_is_carrier", true}};
    c.actual = {{"ck_B", ck}, {"closure_is_carrier", covers}};
    c.pass = !ck && covers;
    report.cases.push_back(std::move(c));
  }
  report.details = {{"states", trunc.states.size()}};
  return report;
}

/// Subjective common knowledge of B at w.
inline bool check_ast_possibility(const State& w) {
  const Model model;
  return ck_subjective(model, event_b(), w, galaxy_relation(model));
}

/// For each sample t: if B is CK at (b,t,t) it stays CK at (b,t-1,t-1);
/// if not, it stays non-CK at (b,t+1,t+1).
inline CheckReport check_monotone_ck(const std::vector<HyperNat>& samples) {
  CheckReport report;
  report.check = "monotone";
  report.params["samples"] = Json::array();
  for (const auto& t : samples) report.params["samples"].push_back(t.to_string());

  for (const auto& t : samples) {
    CheckCase c;
    c.input = {{"t", t.to_string()}};
    if (t == HyperNat()) {
      c.expected = nullptr;
      c.actual = nullptr;
      c.pass = true;
      c.note = "skipped: (b,0,0) is not a state";
      report.cases.push_back(std::move(c));
      continue;
    }
    const bool ck = check_ast_possibility(State::b(t));
    const HyperNat neighbor = ck ? t.predecessor() : t.successor();
    c.input["ck"] = ck;
    c.input["neighbor"] = neighbor.to_string();
    if (neighbor == HyperNat()) {
      c.expected = nullptr;
      c.actual = nullptr;
      c.pass = true;
      c.note = "skipped: (b,0,0) is not a state";
      report.cases.push_back(std::move(c));
      continue;
    }
    const bool neighbor_ck = check_ast_possibility(State::b(neighbor));
    c.expected = {{"ck", ck}};
    c.actual = {{"ck", neighbor_ck}};
    c.pass = neighbor_ck == ck;
    report.cases.push_back(std::move(c));
  }
  return report;
}

// --- payoffs and equilibrium -----------------------------------------------

enum class Action { A, B };

inline const char* to_string(Action a) { return a == Action::A ? "A" : "B"; }
inline Action other(Action a) { return a == Action::A ? Action::B : Action::A; }

/// Payoff M for coordinating on the right action, penalty L for playing B
/// alone; p is the prior of game b, eps the per-message loss probability.
struct PayoffParams {
  Rational M;
  Rational L;
  Rational p;
  Rational eps;

  void validate_probabilities() const {
    if (!(p > 0 && p < 1)) throw std::invalid_argument("p must lie in (0, 1)");
    if (!(eps > 0 && eps < 1)) throw std::invalid_argument("eps must lie in (0, 1)");
  }

  void validate() const {
    if (!(M > 0)) throw std::invalid_argument("M must be positive");
    if (!(L > 0)) throw std::invalid_argument("L must be positive");
    validate_probabilities();
  }

  Json to_json() const {
    return {{"M", astck::to_string(M)},
            {"L", astck::to_string(L)},
            {"p", astck::to_string(p)},
            {"eps", astck::to_string(eps)}};
  }
};

/// Payoff to `agent` when agent 1 plays `row` and agent 2 plays `col`.
///
///   G_a    A       B          G_b    A       B
///   A    M, M    0, -L        A    0, 0    0, -L
///   B   -L, 0    0, 0         B   -L, 0    M, M
inline Rational payoff(GameTag game, Action row, Action col, AgentId agent,
                       const PayoffParams& params) {
  if (row == col) {
    const Action good = game == GameTag::a ? Action::A : Action::B;
    return row == good ? params.M : Rational(0);
  }
  // Miscoordination: whoever played B loses L.
  const Action mine = agent == kAgent1 ? row : col;
  return mine == Action::B ? Rational(-params.L) : Rational(0);
}

/**
 * Probability that the protocol ends in exactly s: game a with 1 - p;
 * otherwise the first t + t' - 1 messages got through and the last was lost,
 * p (1-eps)^(t+t'-1) eps. Only finite states carry a probability.
 */
inline Rational state_probability(const State& s, const PayoffParams& params) {
  if (!s.t().is_finite()) {
    throw std::domain_error("no probability is assigned to the huge state " + s.to_string());
  }
  if (s.tag() == GameTag::a) return 1 - params.p;
  const auto delivered = (s.position().offset() - 1).convert_to<unsigned>();
  return params.p * power(Rational(1 - params.eps), delivered) * params.eps;
}

/// Maps an agent's own message count to an action.
struct CutoffStrategy {
  std::function<Action(const HyperNat&)> rule;

  /// A while the count is finite, B once it is huge.
  static CutoffStrategy finite_plays_a() {
    return {[](const HyperNat& t) { return t.is_finite() ? Action::A : Action::B; }};
  }

  Action operator()(const HyperNat& count) const { return rule(count); }
};

/// The information cell of `agent` when it has sent `own_count` messages.
inline std::vector<State> own_count_cell(AgentId agent, const HyperNat& own_count) {
  const Model model;
  if (own_count == HyperNat()) {
    return model.cell(agent, State::a());
  }
  return model.cell(agent, State::b(own_count, false));
}

/**
 * Checks each sampled information cell for a profitable deviation from the
 * strategy pair. Finite cells compare conditional expected payoffs under
 * state_probability. Huge cells compare state by state: the prescribed
 * action must do at least as well in every state of the cell; if it does
 * better in some and worse in others the case fails as
 * "insufficient-information".
 */
inline CheckReport best_response_check(const std::pair<CutoffStrategy, CutoffStrategy>& profile,
                                       const PayoffParams& params,
                                       const std::vector<HyperNat>& finite_samples,
                                       const std::vector<HyperNat>& huge_samples) {
  params.validate_probabilities();
  CheckReport report;
  report.check = "equilibrium";
  report.params = params.to_json();
  report.params["finite"] = Json::array();
  report.params["huge"] = Json::array();
  for (const auto& t : finite_samples) report.params["finite"].push_back(t.to_string());
  for (const auto& t : huge_samples) report.params["huge"].push_back(t.to_string());

  const auto strategy = [&](AgentId i) -> const CutoffStrategy& {
    return i == kAgent1 ? profile.first : profile.second;
  };

  // Payoff of `mine` at state s, against the opponent's prescribed action.
  const auto payoff_at = [&](AgentId agent, Action mine, const State& s) {
    const AgentId opponent = agent == kAgent1 ? kAgent2 : kAgent1;
    const HyperNat& opp_count = opponent == kAgent1 ? s.t() : s.t_prime();
    const Action theirs = strategy(opponent)(opp_count);
    return agent == kAgent1 ? payoff(s.tag(), mine, theirs, agent, params)
                            : payoff(s.tag(), theirs, mine, agent, params);
  };

  const auto cell_json = [](const std::vector<State>& cell) {
    Json out = Json::array();
    for (const auto& s : cell) out.push_back(s.to_string());
    return out;
  };

  for (AgentId agent : {kAgent1, kAgent2}) {
    for (const auto& t : finite_samples) {
      if (!t.is_finite()) throw std::invalid_argument("finite sample " + t.to_string() + " is huge");
      const auto cell = own_count_cell(agent, t);
      const Action prescribed = strategy(agent)(t);
      Rational mass = 0, ev_prescribed = 0, ev_deviation = 0;
      for (const auto& s : cell) {
        const Rational pr = state_probability(s, params);
        mass += pr;
        ev_prescribed += pr * payoff_at(agent, prescribed, s);
        ev_deviation += pr * payoff_at(agent, other(prescribed), s);
      }
      ev_prescribed /= mass;
      ev_deviation /= mass;

      CheckCase c;
      c.input = {{"agent", agent + 1}, {"own_count", t.to_string()}, {"cell", cell_json(cell)}};
      c.expected = {{"action", to_string(prescribed)}};
      c.actual = {{"payoff", astck::to_string(ev_prescribed)},
                  {"deviation", to_string(other(prescribed))},
                  {"deviation_payoff", astck::to_string(ev_deviation)}};
      c.pass = ev_deviation <= ev_prescribed;
      report.cases.push_back(std::move(c));
    }

    for (const auto& t : huge_samples) {
      if (t.is_finite()) throw std::invalid_argument("huge sample " + t.to_string() + " is finite");
      const auto cell = own_count_cell(agent, t);
      const Action prescribed = strategy(agent)(t);
      bool some_better = false, some_worse = false;
      Json pointwise = Json::array();
      for (const auto& s : cell) {
        const Rational keep = payoff_at(agent, prescribed, s);
        const Rational dev = payoff_at(agent, other(prescribed), s);
        some_better |= keep > dev;
        some_worse |= keep < dev;
        pointwise.push_back({{"state", s.to_string()},
                             {"payoff", astck::to_string(keep)},
                             {"deviation_payoff", astck::to_string(dev)}});
      }

      CheckCase c;
      c.input = {{"agent", agent + 1}, {"own_count", t.to_string()}, {"cell", cell_json(cell)}};
      c.expected = {{"action", to_string(prescribed)}};
      c.actual = {{"deviation", to_string(other(prescribed))}, {"pointwise", pointwise}};
      c.pass = !some_worse;
      if (some_worse && some_better) c.note = "insufficient-information";
      report.cases.push_back(std::move(c));
    }
  }
  return report;
}

}  // namespace astck::emailgame
