#pragma once

#include <cstddef>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "astck/emailgame.hpp"
#include "astck/epistemic.hpp"
#include "astck/hypernat.hpp"
#include "astck/model_json.hpp"
#include "astck/properties.hpp"
#include "astck/random_model.hpp"
#include "astck/rational.hpp"
#include "astck/report.hpp"
#include "astck/sorites.hpp"

namespace astck::cli {

// Exit codes.
inline constexpr int kPass = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsageError = 2;

enum class Format { json, text };

namespace detail {

inline int emit(const CheckReport& report, Format format, std::ostream& out) {
  if (format == Format::json) {
    out << report.to_json().dump(2) << "\n";
  } else {
    out << report.to_text();
  }
  return report.pass() ? kPass : kCheckFailed;
}

inline std::vector<HyperNat> parse_hypernats(const std::vector<std::string>& items) {
  std::vector<HyperNat> out;
  for (const auto& s : items) out.push_back(HyperNat::parse(s));
  return out;
}

inline Json names_of(const AumannModel& model, const Partition& partition) {
  Json out = Json::array();
  for (const auto& cell : partition) {
    Json names = Json::array();
    for (StateId s : cell) names.push_back(model.state_name(s));
    out.push_back(std::move(names));
  }
  return out;
}

inline CheckReport model_check(const std::string& path, const std::string& event_name,
                               const std::string& state_name, const std::string& mode) {
  const LoadedModel loaded = load_model_file(path);
  const auto& model = loaded.model;
  const auto event = loaded.events.find(event_name);
  if (event == loaded.events.end()) {
    throw ModelError("events." + event_name, "no such event");
  }
  const auto state = model.find_state(state_name);
  if (!state) throw ModelError("states", "no such state '" + state_name + "'");

  const auto rel = galaxy_relation(model);
  const bool ck = mode == "classical" ? ck_classical(model, event->second, *state)
                                      : ck_subjective(model, event->second, *state, rel);

  CheckReport report;
  report.check = "model-check";
  report.params = {{"path", path}, {"event", event_name}, {"state", state_name}, {"mode", mode}};
  CheckCase c;
  c.input = {{"event", event_name}, {"state", state_name}};
  c.expected = {{"common_knowledge", true}};
  c.actual = {{"common_knowledge", ck}};
  c.pass = ck;
  report.cases.push_back(std::move(c));

  const auto decomposition = meet_equals_galaxies(model);
  StateSet outside = (mode == "classical" ? reachable_closure(model, *state)
                                          : galaxy(model, *state, rel)) - event->second;
  Json missing = Json::array();
  for (StateId s : members(outside)) missing.push_back(model.state_name(s));
  report.details = {{"meet", names_of(model, decomposition.meet)},
                    {"galaxies", names_of(model, decomposition.galaxies)},
                    {"meet_equals_galaxies", decomposition.equal()},
                    {"reachable_outside_event", missing}};
  return report;
}

inline CheckReport model_properties(std::size_t count, std::size_t max_states,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> states_dist(1, max_states);
  std::uniform_int_distribution<std::size_t> agents_dist(2, 3);

  properties::Tally metric, lemmas, duality, ck, meet_tally;
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n = states_dist(rng);
    const std::size_t agents = agents_dist(rng);
    metric += properties::check_metric_axioms(random_connected_model(rng, n, agents));
    const AumannModel model = random_model(rng, n, agents);
    lemmas += properties::check_link_lemmas(model);
    duality += properties::check_knowledge_duality(model);
    ck += properties::check_common_knowledge(model);
    meet_tally += properties::check_meet_galaxies(model);
  }

  CheckReport report;
  report.check = "model-properties";
  report.params = {{"count", count}, {"max_states", max_states}, {"seed", seed}};
  const auto add = [&](const char* name, const properties::Tally& t) {
    CheckCase c;
    c.input = {{"property", name}, {"instances", t.checked}};
    c.expected = {{"violations", 0}};
    c.actual = {{"violations", t.violations.size()}};
    c.pass = t.ok();
    if (!t.ok()) c.note = t.violations.front();
    report.cases.push_back(std::move(c));
  };
  add("metric-axioms", metric);
  add("link-lemmas", lemmas);
  add("knowledge-duality", duality);
  add("common-knowledge", ck);
  add("meet-equals-galaxies", meet_tally);
  return report;
}

inline CheckReport ast_ck(const HyperNat& t, bool lost_reply) {
  const auto w = emailgame::State::b(t, lost_reply);
  const bool ck = emailgame::check_ast_possibility(w);
  CheckReport report;
  report.check = "ast-ck";
  report.params = {{"t", t.to_string()}, {"delta", lost_reply ? 1 : 0}};
  CheckCase c;
  c.input = {{"state", w.to_string()}};
  c.expected = {{"ck_B", true}};
  c.actual = {{"ck_B", ck}};
  c.pass = ck;
  report.cases.push_back(std::move(c));
  report.details = {
      {"distance_from_a", emailgame::email_metric(emailgame::State::a(), w).to_string()},
      {"message", std::string("B is ") + (ck ? "" : "not ") + "CK at " + w.to_string()}};
  return report;
}

inline CheckReport sorites_demo(const HyperNat& alpha, const std::vector<HyperNat>& probes) {
  const ChainRelation rel{ChainDistance{}};
  const HyperNat origin;

  CheckReport report;
  report.check = "sorites-demo";
  report.params["alpha"] = alpha.to_string();
  report.params["probes"] = Json::array();
  for (const auto& p : probes) report.params["probes"].push_back(p.to_string());

  const auto verdict = [](bool related) { return related ? "related" : "unrelated"; };

  // The chain a_0 .. a_alpha is a sorites chain iff its endpoints are unrelated.
  {
    CheckCase c;
    c.input = {{"endpoint", alpha.to_string()}};
    c.expected = {{"verdict", "unrelated"}};
    c.actual = {{"verdict", verdict(rel.related(origin, alpha))}};
    c.pass = !rel.related(origin, alpha);
    if (!c.pass) c.note = "alpha is finite, so a_0 .. a_alpha is not a sorites chain";
    report.cases.push_back(std::move(c));
  }
  for (const auto& p : probes) {
    CheckCase c;
    const bool related = rel.related(origin, p);
    c.input = {{"probe", p.to_string()}, {"in_chain", p <= alpha}};
    c.expected = {{"verdict", verdict(p.is_finite())}};
    c.actual = {{"verdict", verdict(related)}};
    c.pass = related == p.is_finite();
    report.cases.push_back(std::move(c));
  }
  return report;
}

inline void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
}

}  // namespace detail

/// Runs the CLI on argv-style arguments (args[0] is the program name) and
/// returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Common knowledge with huge natural numbers", "astck"};
  app.require_subcommand(1);

  std::string format = "json";
  int code = kPass;
  const auto fmt = [&] { return format == "json" ? Format::json : Format::text; };

  // model
  auto* model = app.add_subcommand("model", "Check finite Aumann models");
  model->require_subcommand(1);

  auto* check = model->add_subcommand("check", "Decide common knowledge of an event in a JSON model");
  std::string path, event, state, mode = "classical";
  check->add_option("path", path, "Model file")->required();
  check->add_option("--event", event, "Event name")->required();
  check->add_option("--state", state, "True state")->required();
  check->add_option("--mode", mode, "Reachability semantics")
      ->check(CLI::IsMember({"classical", "subjective"}))
      ->capture_default_str();
  detail::add_format(check, format);
  check->callback([&] { code = detail::emit(detail::model_check(path, event, state, mode), fmt(), out); });

  auto* props = model->add_subcommand(
      "properties", "Sample random models and check the link, metric and knowledge laws "
                    "(seed from SORITES_SEED)");
  std::size_t count = 200, max_states = 6;
  props->add_option("--count", count, "Number of random models")->capture_default_str();
  props->add_option("--max-states", max_states, "Largest model size")
      ->check(CLI::Range(1, 12))
      ->capture_default_str();
  detail::add_format(props, format);
  props->callback([&] {
    code = detail::emit(detail::model_properties(count, max_states, seed_from_env()), fmt(), out);
  });

  // emailgame
  auto* email = app.add_subcommand("emailgame", "Electronic-mail game checks");
  email->require_subcommand(1);

  auto* impossibility = email->add_subcommand("impossibility", "B is never classical CK");
  std::size_t bound = 50;
  impossibility->add_option("--T", bound, "Truncation bound")
      ->check(CLI::Range(std::size_t{1}, std::size_t{100000}))
      ->capture_default_str();
  detail::add_format(impossibility, format);
  impossibility->callback(
      [&] { code = detail::emit(emailgame::check_classical_impossibility(bound), fmt(), out); });

  auto* astck = email->add_subcommand("ast-ck", "Is B subjective CK at (b,t,t)?");
  std::string t_text;
  int delta = 0;
  astck->add_option("--t", t_text, "Messages sent by agent 1, e.g. 5, w+0, 2*w-3")->required();
  astck->add_option("--delta", delta, "1 if agent 2's last reply is missing")
      ->check(CLI::Range(0, 1))
      ->capture_default_str();
  detail::add_format(astck, format);
  astck->callback([&] {
    code = detail::emit(detail::ast_ck(HyperNat::parse(t_text), delta == 1), fmt(), out);
  });

  auto* monotone = email->add_subcommand("monotone", "CK persists down, non-CK persists up");
  std::vector<std::string> samples{"1", "2", "5", "w-10", "w+0", "w+10", "2*w+0"};
  monotone->add_option("--samples", samples, "Message counts")->delimiter(',')->capture_default_str();
  detail::add_format(monotone, format);
  monotone->callback([&] {
    code = detail::emit(emailgame::check_monotone_ck(detail::parse_hypernats(samples)), fmt(), out);
  });

  auto* equilibrium = email->add_subcommand("equilibrium", "Best-response check of the cutoff strategy");
  std::string m_text = "2", l_text = "3", p_text = "1/2", eps_text = "1/10";
  std::vector<std::string> finite_samples{"0", "1", "2", "3", "4", "5", "6", "7", "8", "9", "10"};
  std::vector<std::string> huge_samples{"w-2", "w+0", "w+5"};
  equilibrium->add_option("--M", m_text, "Coordination payoff")->capture_default_str();
  equilibrium->add_option("--L", l_text, "Miscoordination penalty")->capture_default_str();
  equilibrium->add_option("--p", p_text, "Probability of game b")->capture_default_str();
  equilibrium->add_option("--eps", eps_text, "Message loss probability")->capture_default_str();
  equilibrium->add_option("--finite", finite_samples, "Finite own counts")->delimiter(',');
  equilibrium->add_option("--huge", huge_samples, "Huge own counts")->delimiter(',');
  detail::add_format(equilibrium, format);
  equilibrium->callback([&] {
    const emailgame::PayoffParams params{parse_rational(m_text), parse_rational(l_text),
                                         parse_rational(p_text), parse_rational(eps_text)};
    params.validate();
    code = detail::emit(
        emailgame::best_response_check({emailgame::CutoffStrategy::finite_plays_a(),
                                        emailgame::CutoffStrategy::finite_plays_a()},
                                       params, detail::parse_hypernats(finite_samples),
                                       detail::parse_hypernats(huge_samples)),
        fmt(), out);
  });

  // sorites
  auto* sorites = app.add_subcommand("sorites", "Sorites chains");
  sorites->require_subcommand(1);
  auto* demo = sorites->add_subcommand("demo", "Walk a chain a_0 .. a_alpha");
  std::string alpha_text = "w+0";
  std::vector<std::string> probes{"0", "10", "1000000", "w+0", "w-5"};
  demo->add_option("--alpha", alpha_text, "Chain length")->capture_default_str();
  demo->add_option("--probes", probes, "Indices to compare with a_0")->delimiter(',')->capture_default_str();
  detail::add_format(demo, format);
  demo->callback([&] {
    code = detail::emit(
        detail::sorites_demo(HyperNat::parse(alpha_text), detail::parse_hypernats(probes)), fmt(),
        out);
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  } catch (const ModelError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const nlohmann::json::parse_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return code;
}

}  // namespace astck::cli
