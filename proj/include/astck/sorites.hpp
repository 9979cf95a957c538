#pragma once

#include <concepts>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "astck/hypernat.hpp"

namespace astck {

/// Strictly increasing finite thresholds t(n) with 2*t(n) <= t(n+1).
/// R_n relates x and y iff dist(x, y) < t(n).
class GeneratingSequence {
 public:
  using Threshold = std::function<HyperNat(std::size_t)>;

  /// t(n) = 2^n.
  GeneratingSequence()
      : threshold_([](std::size_t n) { return HyperNat::finite(BigInt(1) << n); }) {}

  /// Custom sequences are accepted as given; call first_violation() to
  /// validate them.
  explicit GeneratingSequence(Threshold threshold) : threshold_(std::move(threshold)) {}

  HyperNat operator()(std::size_t n) const { return threshold_(n); }

  struct Issue {
    std::size_t n;
    std::string what;
  };

  /// Checks t(0) = 1, finiteness, strict growth and the doubling condition
  /// for n <= n_max. Returns the first failure.
  std::optional<Issue> first_violation(std::size_t n_max) const {
    HyperNat prev = (*this)(0);
    if (prev != HyperNat::finite(1)) {
      return Issue{0, "t(0) = " + prev.to_string() + ", R_0 is not the identity"};
    }
    for (std::size_t n = 0; n < n_max; ++n) {
      HyperNat next = (*this)(n + 1);
      if (!next.is_finite()) {
        return Issue{n + 1, "t(" + std::to_string(n + 1) + ") is huge"};
      }
      if (!(prev < next)) {
        return Issue{n, "t is not strictly increasing at " + std::to_string(n)};
      }
      if (BigInt(2) * prev > next) {
        return Issue{n, "2*t(" + std::to_string(n) + ") = " + (BigInt(2) * prev).to_string() +
                            " exceeds t(" + std::to_string(n + 1) + ") = " + next.to_string()};
      }
      prev = std::move(next);
    }
    return std::nullopt;
  }

 private:
  Threshold threshold_;
};

struct AxiomViolation {
  enum class Kind { kReflexivity, kZeroNotIdentity, kSymmetry, kComposition };
  Kind kind;
  std::size_t n;
  // Indices into the verified sample; unused slots repeat the last index.
  std::size_t x, y, z;
};

inline const char* to_string(AxiomViolation::Kind kind) {
  switch (kind) {
    case AxiomViolation::Kind::kReflexivity: return "reflexivity";
    case AxiomViolation::Kind::kZeroNotIdentity: return "R0-identity";
    case AxiomViolation::Kind::kSymmetry: return "symmetry";
    case AxiomViolation::Kind::kComposition: return "composition";
  }
  return "unknown";
}

struct GeneratingAxiomsReport {
  std::size_t sample_size = 0;
  std::size_t n_max = 0;
  std::vector<AxiomViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

namespace detail {

inline std::optional<HyperNat> as_distance(HyperNat d) { return d; }
inline std::optional<HyperNat> as_distance(std::optional<HyperNat> d) { return d; }

}  // namespace detail

/// A distance is either a HyperNat or optional<HyperNat>, where nullopt means
/// "no finite chain of any length", which lies outside every R_n.
template <typename F, typename Element>
concept DistanceFunction = std::invocable<const F&, const Element&, const Element&> &&
    requires(const F& f, const Element& e) {
      { detail::as_distance(f(e, e)) } -> std::same_as<std::optional<HyperNat>>;
    };

/**
 * The sigma-equivalence generated by R_n = {(x, y) : dist(x, y) < t(n)}.
 *
 * Two elements are related iff some finite n has them in R_n. Because t(n) is
 * finite for finite n and unbounded over FN, that is the same as the distance
 * being finite; related() decides it that way.
 *
 * Galaxies are never materialized. in_galaxy() is the membership predicate.
 */
template <typename Element, DistanceFunction<Element> Distance>
class SoritesRelation {
 public:
  explicit SoritesRelation(Distance dist, GeneratingSequence gen = {})
      : dist_(std::move(dist)), gen_(std::move(gen)) {}

  std::optional<HyperNat> distance(const Element& x, const Element& y) const {
    return detail::as_distance(dist_(x, y));
  }

  const GeneratingSequence& generating_sequence() const noexcept { return gen_; }

  bool in_R(std::size_t n, const Element& x, const Element& y) const {
    const auto d = distance(x, y);
    return d && *d < gen_(n);
  }

  bool related(const Element& x, const Element& y) const {
    const auto d = distance(x, y);
    return d && d->is_finite();
  }

  bool in_galaxy(const Element& center, const Element& x) const { return related(center, x); }

  /// Exhaustively checks reflexivity, symmetry, R_0 = identity and
  /// R_n o R_n within R_{n+1} over all triples of `sample`, for n <= n_max.
  GeneratingAxiomsReport verify_generating_axioms(std::span<const Element> sample,
                                                  std::size_t n_max) const {
    GeneratingAxiomsReport report{sample.size(), n_max, {}};
    const std::size_t s = sample.size();
    if (s == 0) return report;

    std::vector<std::optional<HyperNat>> dist(s * s);
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) dist[i * s + j] = distance(sample[i], sample[j]);
    }

    // rel[n][i*s+j] == in_R(n, sample[i], sample[j])
    std::vector<std::vector<char>> rel(n_max + 2, std::vector<char>(s * s, 0));
    for (std::size_t n = 0; n <= n_max + 1; ++n) {
      const HyperNat bound = gen_(n);
      for (std::size_t k = 0; k < s * s; ++k) rel[n][k] = dist[k] && *dist[k] < bound;
    }

    using Kind = AxiomViolation::Kind;
    for (std::size_t n = 0; n <= n_max; ++n) {
      const auto& r = rel[n];
      const auto& next = rel[n + 1];
      for (std::size_t x = 0; x < s; ++x) {
        if (!r[x * s + x]) report.violations.push_back({Kind::kReflexivity, n, x, x, x});
        for (std::size_t y = 0; y < s; ++y) {
          if (r[x * s + y] != r[y * s + x]) {
            report.violations.push_back({Kind::kSymmetry, n, x, y, y});
          }
          if constexpr (std::equality_comparable<Element>) {
            if (n == 0 && r[x * s + y] && !(sample[x] == sample[y])) {
              report.violations.push_back({Kind::kZeroNotIdentity, 0, x, y, y});
            }
          }
          if (!r[x * s + y]) continue;
          for (std::size_t z = 0; z < s; ++z) {
            if (r[y * s + z] && !next[x * s + z]) {
              report.violations.push_back({Kind::kComposition, n, x, y, z});
            }
          }
        }
      }
    }
    return report;
  }

 private:
  Distance dist_;
  GeneratingSequence gen_;
};

template <typename Element, typename Distance>
SoritesRelation<Element, Distance> make_sorites_relation(Distance dist,
                                                         GeneratingSequence gen = {}) {
  return SoritesRelation<Element, Distance>(std::move(dist), std::move(gen));
}

/// Index distance |i - j| on a unit-step chain a_0, a_1, ...
struct ChainDistance {
  HyperNat operator()(const HyperNat& i, const HyperNat& j) const { return abs_diff(i, j); }
};

using ChainRelation = SoritesRelation<HyperNat, ChainDistance>;

}  // namespace astck
