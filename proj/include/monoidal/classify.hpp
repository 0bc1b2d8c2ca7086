#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monoidal/chains.hpp"

namespace monoidal {

/// Membership of v in the localization S_Q. Q is a chain-prime or the
/// maximal ideal. The witness monomial s lies outside Q with v * s in S.
Verdict localized_member(const CycleDynamics& dyn, const Ideal& Q, const ExponentVector& v,
                         const Limits& limits = {});

struct ValuationCheck {
  Verdict verdict;
  std::size_t window = 0;
  std::size_t search_degree = 0;
  std::size_t differences = 0;  // quotients b / a examined
  std::size_t comparable = 0;
  std::size_t incomparable = 0;
  std::size_t undecided = 0;
  std::size_t beyond_degree = 0;  // comparable only through an s of degree > search_degree
  std::optional<std::pair<ExponentVector, ExponentVector>> counterexample;
};

/// Comparability of every monomial pair with exponents in [-B, B] inside S_Q.
ValuationCheck valuation_check_at(const CycleDynamics& dyn, const Ideal& Q, std::size_t window,
                                  std::size_t search_degree, const Limits& limits = {});

struct NoetherianProbe {
  Verdict verdict;
  std::size_t generator_count = 0;
  std::vector<std::size_t> generator_indices;  // parameters of the candidate stage
  std::vector<ExponentVector> generators;
  std::size_t stage = 0;
  bool bound_holds = true;  // generator_count <= d - 1
};

/// Looks for a set of stage-N parameters generating m_S, checked against the
/// parameters of every stage in the following `limits.periods` periods.
NoetherianProbe noetherian_probe(const CycleDynamics& dyn, std::size_t stage, const Limits& limits = {});

/// Whether ord_n(w) >= 0 for all large n.
Verdict boundary_ord_check(const CycleDynamics& dyn, const ExponentVector& w, const Limits& limits = {});

struct ClassifyOptions {
  Limits limits;
  std::size_t window = 4;
  std::size_t search_degree = 8;
  std::size_t box = 4;              // sampled pairs: all of [0, box]^d
  std::size_t random_pairs = 100;
  std::size_t random_max = 8;
  std::uint64_t seed = 1;
  std::size_t threads = 0;          // 0: hardware concurrency
  std::optional<std::size_t> noetherian_stage;
};

struct ChainVerdicts {
  std::string label;
  std::vector<std::size_t> positions;
  Verdict maximal;
  ValuationCheck valuation;
};

enum class GcdPath { Theorem, Counterexample, None };
std::string_view to_string(GcdPath p);

struct SampledPair {
  ExponentVector a;
  ExponentVector b;
  TraceStatus status = TraceStatus::Unknown;
};

struct ClassificationReport {
  std::string program;
  std::size_t mi_class = 0;
  std::size_t dimension = 0;
  ChainCount chains;
  std::vector<ChainVerdicts> chain_verdicts;
  Verdict sbid;
  Verdict gcd;
  GcdPath gcd_path = GcdPath::None;
  std::optional<GcdTrace> counterexample;
  std::size_t sampled_pairs = 0;
  std::size_t sampled_stabilized = 0;
  std::size_t sampled_diverging = 0;
  std::size_t sampled_unknown = 0;
  bool cross_validated = true;
  NoetherianProbe noetherian;
  ClassifyOptions options;
};

/// Sampled pairs in the deterministic battery order: the box, ordered by the
/// size of b - a, then the seeded random pairs.
std::vector<std::pair<ExponentVector, ExponentVector>> sample_pairs(std::size_t d, const ClassifyOptions& o);

ClassificationReport gcd_classify(const CycleDynamics& dyn, const ClassifyOptions& options = {});

/// Runs f(i) for i in [0, n) on up to `threads` workers.
void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& f);

}  // namespace monoidal
