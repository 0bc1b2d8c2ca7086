#include "monoidal/classify.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <mutex>
#include <thread>

namespace monoidal {

void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& f) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

namespace {

// Parameters of the first boundary stage that lie in Q. Membership of a
// parameter in a chain-prime depends only on its cycle position.
std::optional<Mask> localization_mask(const CycleDynamics& dyn, const ChainPrime& Q, const Limits& limits) {
  const Frame f = expand(dyn.program(), dyn.prefix_length()).frame;
  Mask m(dyn.dimension());
  for (std::size_t j = 0; j < dyn.dimension(); ++j) {
    Verdict v = chainprime_member(dyn, Q, f.column(j), limits);
    if (v.is_unknown()) return std::nullopt;
    m[j] = v.is_yes();
  }
  return m;
}

struct LocalizedResult {
  Verdict verdict;
  Integer degree = 0;  // stage degree of the unit s
};

LocalizedResult localized(const CycleDynamics& dyn, const Ideal& Q, const std::optional<Mask>& mask,
                          const ExponentVector& v, const Limits& limits) {
  if (Q.kind == Ideal::Kind::Maximal) return {member_S(dyn, v, limits)};
  if (Q.kind != Ideal::Kind::Chain) throw InputError("localization needs a chain-prime or the maximal ideal");
  if (!mask) return {Verdict::unknown(limits.cutoff, "parameter membership in Q undecided")};
  // v lies in S_Q exactly when, at some boundary stage, its coordinates on
  // the parameters inside Q are nonnegative; the other parameters are units.
  Verdict r = eventually_nonnegative(dyn, v.entries(), limits, &*mask);
  if (!r.is_yes()) return {r};
  const Frame f = expand(dyn.program(), r.witness->stage).frame;
  IntVec s(dyn.dimension());
  Integer degree = 0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (!(*mask)[j] && sgn(r.witness->coords[j]) < 0) {
      s[j] = -r.witness->coords[j];
      degree += s[j];
    }
  }
  r.witness->monomial = f.apply(s);
  r.witness->detail = "unit outside Q of stage degree " + degree.get_str();
  return {r, degree};
}

void for_each_in_box(std::size_t d, long lo, long hi, const std::function<void(const ExponentVector&)>& f) {
  ExponentVector v(d);
  for (std::size_t i = 0; i < d; ++i) v[i] = lo;
  while (true) {
    f(v);
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (v[i] < hi) {
        v[i] += 1;
        break;
      }
      v[i] = lo;
      if (i == 0) return;
    }
  }
}

}  // namespace

Verdict localized_member(const CycleDynamics& dyn, const Ideal& Q, const ExponentVector& v, const Limits& limits) {
  std::optional<Mask> mask;
  if (Q.kind == Ideal::Kind::Chain) mask = localization_mask(dyn, Q.chain, limits);
  return localized(dyn, Q, mask, v, limits).verdict;
}

ValuationCheck valuation_check_at(const CycleDynamics& dyn, const Ideal& Q, std::size_t window,
                                  std::size_t search_degree, const Limits& limits) {
  const std::size_t d = dyn.dimension();
  std::optional<Mask> mask;
  if (Q.kind == Ideal::Kind::Chain) mask = localization_mask(dyn, Q.chain, limits);

  ValuationCheck out;
  out.window = window;
  out.search_degree = search_degree;
  const long B = static_cast<long>(window);
  std::vector<ExponentVector> diffs;
  for_each_in_box(d, -2 * B, 2 * B, [&](const ExponentVector& v) { diffs.push_back(v); });
  out.differences = diffs.size();

  enum class Outcome { Comparable, BeyondDegree, Incomparable, Undecided };
  std::vector<Outcome> outcome(diffs.size());
  std::vector<std::optional<Verdict>> evidence(diffs.size());
  parallel_for(diffs.size(), 0, [&](std::size_t i) {
    LocalizedResult fwd = localized(dyn, Q, mask, diffs[i], limits);
    LocalizedResult bwd = fwd.verdict.is_yes() ? LocalizedResult{} : localized(dyn, Q, mask, -diffs[i], limits);
    const LocalizedResult* yes = fwd.verdict.is_yes() ? &fwd : bwd.verdict.is_yes() ? &bwd : nullptr;
    if (yes) {
      outcome[i] = yes->degree > static_cast<unsigned long>(search_degree) ? Outcome::BeyondDegree : Outcome::Comparable;
    } else if (fwd.verdict.is_no() && bwd.verdict.is_no()) {
      outcome[i] = Outcome::Incomparable;
      evidence[i] = fwd.verdict;
    } else {
      outcome[i] = Outcome::Undecided;
    }
  });

  std::optional<std::size_t> first_bad;
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    switch (outcome[i]) {
      case Outcome::BeyondDegree: ++out.beyond_degree; [[fallthrough]];
      case Outcome::Comparable: ++out.comparable; break;
      case Outcome::Incomparable:
        ++out.incomparable;
        if (!first_bad) first_bad = i;
        break;
      case Outcome::Undecided: ++out.undecided; break;
    }
  }
  if (first_bad) {
    const ExponentVector& v = diffs[*first_bad];
    ExponentVector a(d), b(d);
    for (std::size_t i = 0; i < d; ++i) {
      Integer shifted = Integer(-B) - v[i];
      a[i] = shifted > -B ? shifted : Integer(-B);
      b[i] = a[i] + v[i];
    }
    out.counterexample = std::make_pair(a, b);
    Certificate c = *evidence[*first_bad]->certificate;
    c.detail = "neither " + a.to_string() + " nor " + b.to_string() + " divides the other in the localization; " + c.detail;
    out.verdict = Verdict::no(std::move(c));
  } else if (out.undecided > 0) {
    out.verdict = Verdict::unknown(limits.cutoff, std::to_string(out.undecided) + " quotients undecided");
  } else {
    out.verdict = Verdict::yes({0, {}, std::nullopt,
                                "all " + std::to_string(out.differences) + " quotients comparable within window " +
                                    std::to_string(window)});
  }
  return out;
}

NoetherianProbe noetherian_probe(const CycleDynamics& dyn, std::size_t stage, const Limits& limits) {
  const TransformProgram& p = dyn.program();
  const std::size_t d = dyn.dimension();
  const std::size_t last = p.boundary_at_or_after(stage + 1) + std::max<std::size_t>(limits.periods, 1) * dyn.period();
  const auto frames = expand_frames(p, last);
  std::vector<ExponentVector> later;
  for (std::size_t n = stage + 1; n <= last; ++n) {
    for (const auto& col : frames[n].columns()) {
      if (std::find(later.begin(), later.end(), col) == later.end()) later.push_back(col);
    }
  }

  NoetherianProbe out;
  out.stage = stage;
  bool all_fail = true;
  for (std::size_t t = 1; t <= d; ++t) {
    std::vector<bool> pick(d, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(t), true);
    do {
      std::vector<std::size_t> idx;
      for (std::size_t j = 0; j < d; ++j) {
        if (pick[j]) idx.push_back(j);
      }
      bool generates = true, escaped = false;
      for (const auto& w : later) {
        bool in = false, out_certified = true;
        for (std::size_t j : idx) {
          Verdict v = divides_S(dyn, frames[stage].column(j), w, limits);
          if (v.is_yes()) {
            in = true;
            break;
          }
          if (!v.is_no()) out_certified = false;
        }
        if (!in) {
          generates = false;
          if (out_certified) escaped = true;
          break;
        }
      }
      if (generates) {
        out.generator_count = t;
        out.generator_indices = idx;
        for (std::size_t j : idx) out.generators.push_back(frames[stage].column(j));
        out.bound_holds = t + 1 <= d;
        out.verdict = Verdict::yes({stage, {}, std::nullopt,
                                    std::to_string(t) + " parameters of stage " + std::to_string(stage) +
                                        " generate every parameter through stage " + std::to_string(last)});
        return out;
      }
      all_fail = all_fail && escaped;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  if (all_fail) {
    Certificate c;
    c.kind = CertificateKind::Derived;
    c.stage = stage;
    c.detail = "every set of stage " + std::to_string(stage) + " parameters misses a later parameter";
    out.verdict = Verdict::no(std::move(c));
  } else {
    out.verdict = Verdict::unknown(limits.cutoff);
  }
  return out;
}

Verdict boundary_ord_check(const CycleDynamics& dyn, const ExponentVector& w, const Limits& limits) {
  if (w.size() != dyn.dimension()) throw InputError("monomial has wrong length");
  const TransformProgram& p = dyn.program();
  const std::size_t b = dyn.prefix_length();
  const std::size_t P = dyn.period();
  if (!dyn.unipotent()) return Verdict::unknown(limits.cutoff, "cycle map is not unipotent");

  const auto terms = dyn.binomial_terms(dyn.advance(w.entries(), 0, b));
  // ord at stage b + q + kP is a polynomial in k for each cycle position q.
  Integer K = 0;
  std::optional<std::size_t> bad;
  std::size_t bad_degree = 0;
  for (std::size_t q = 0; q < P; ++q) {
    BinomialPoly poly;
    for (const auto& t : terms) {
      Integer s = 0;
      for (const auto& x : dyn.advance(t, b, b + q)) s += x;
      poly.coeffs.push_back(s);
    }
    if (poly.settle_bound() > K) K = poly.settle_bound();
    if (!bad && poly.eventual_sign() < 0) {
      bad = q;
      bad_degree = static_cast<std::size_t>(poly.degree());
    }
  }
  if (!K.fits_ulong_p() || K.get_ui() > (std::size_t{1} << 24)) return Verdict::unknown(limits.cutoff, "settling bound too large");
  const std::size_t settle = b + K.get_ui() * P;
  if (bad) {
    Certificate c;
    c.kind = bad_degree <= 1 ? CertificateKind::AffineDrift : CertificateKind::PolynomialGrowth;
    c.stage = settle + *bad;
    c.cycle_position = *bad;
    c.period = P;
    c.state = dyn.advance(w.entries(), 0, c.stage);
    c.increment = subtract(dyn.advance(c.state, c.stage, c.stage + P), c.state);
    c.degree = bad_degree;
    c.detail = "ord decreases without bound at cycle position " + std::to_string(*bad);
    return Verdict::no(std::move(c));
  }
  // Past `settle` every position has ord >= 0; find where that run starts.
  IntVec c = w.entries();
  std::size_t first = 0;
  for (std::size_t n = 0; n < settle; ++n) {
    Integer s = 0;
    for (const auto& x : c) s += x;
    if (sgn(s) < 0) first = n + 1;
    advance_coords(c, p.step(n));
  }
  return Verdict::yes({first, dyn.advance(w.entries(), 0, first), w, "ord_n >= 0 for every n >= " + std::to_string(first)});
}

std::string_view to_string(GcdPath p) {
  switch (p) {
    case GcdPath::Theorem: return "theorem";
    case GcdPath::Counterexample: return "counterexample";
    case GcdPath::None: return "none";
  }
  return "none";
}

std::vector<std::pair<ExponentVector, ExponentVector>> sample_pairs(std::size_t d, const ClassifyOptions& o) {
  const long box = static_cast<long>(o.box);
  std::vector<ExponentVector> diffs;
  for_each_in_box(d, -box, box, [&](const ExponentVector& v) { diffs.push_back(v); });
  auto weight = [](const ExponentVector& v) {
    Integer s = 0;
    for (const auto& x : v.entries()) s += abs(x);
    return s;
  };
  std::stable_sort(diffs.begin(), diffs.end(),
                   [&](const ExponentVector& a, const ExponentVector& b) { return weight(a) < weight(b); });
  // Gcd behaviour only depends on b - a, so one pair per difference covers the box.
  std::vector<std::pair<ExponentVector, ExponentVector>> out;
  for (const auto& v : diffs) {
    ExponentVector a(d);
    for (std::size_t i = 0; i < d; ++i) a[i] = sgn(v[i]) < 0 ? Integer(-v[i]) : Integer(0);
    out.emplace_back(a, a + v);
  }
  std::mt19937_64 rng(o.seed);
  for (std::size_t k = 0; k < o.random_pairs; ++k) {
    ExponentVector a(d), b(d);
    for (std::size_t i = 0; i < d; ++i) a[i] = static_cast<unsigned long>(rng() % (o.random_max + 1));
    for (std::size_t i = 0; i < d; ++i) b[i] = static_cast<unsigned long>(rng() % (o.random_max + 1));
    out.emplace_back(a, b);
  }
  return out;
}

ClassificationReport gcd_classify(const CycleDynamics& dyn, const ClassifyOptions& options) {
  ClassificationReport r;
  r.options = options;
  r.program = dyn.program().name;
  r.dimension = dyn.dimension();
  r.mi_class = classify_M_i(dyn.program());
  r.chains = finitely_many_chains(dyn, options.limits.periods);
  for (const auto& c : r.chains.report.chains) {
    ChainVerdicts cv;
    cv.label = c.label;
    cv.positions = c.positions;
    cv.maximal = chainprime_maximal(dyn, c, options.limits);
    cv.valuation = valuation_check_at(dyn, Ideal::of_chain(c), options.window, options.search_degree, options.limits);
    r.chain_verdicts.push_back(std::move(cv));
  }
  r.sbid = sbid_check(dyn, options.limits);

  const auto pairs = sample_pairs(dyn.dimension(), options);
  std::vector<TraceStatus> status(pairs.size());
  parallel_for(pairs.size(), options.threads, [&](std::size_t i) {
    status[i] = gcd_trace(dyn, pairs[i].first, pairs[i].second, options.limits).status;
  });
  r.sampled_pairs = pairs.size();
  std::optional<std::size_t> diverging;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    switch (status[i]) {
      case TraceStatus::Stabilized: ++r.sampled_stabilized; break;
      case TraceStatus::Diverges:
        ++r.sampled_diverging;
        if (!diverging) diverging = i;
        break;
      case TraceStatus::Unknown: ++r.sampled_unknown; break;
    }
  }

  bool theorem = r.chains.verdict.is_yes() && !r.chain_verdicts.empty() &&
                 std::all_of(r.chain_verdicts.begin(), r.chain_verdicts.end(),
                             [](const ChainVerdicts& c) { return c.valuation.verdict.is_yes(); });
  if (diverging) {
    const auto& [a, b] = pairs[*diverging];
    r.counterexample = gcd_trace(dyn, a, b, options.limits);
    Certificate c = *r.counterexample->certificate;
    c.detail = "gcd of " + a.to_string() + " and " + b.to_string() +
               " diverges, so their principal ideals meet in a non-finitely generated ideal";
    r.gcd = Verdict::no(std::move(c));
    r.gcd_path = GcdPath::Counterexample;
  } else if (theorem) {
    r.gcd = Verdict::yes({0, {}, std::nullopt,
                          std::to_string(r.chains.count) + " chain-primes, each localization a valuation domain "
                          "within window " + std::to_string(options.window)});
    r.gcd_path = GcdPath::Theorem;
  } else {
    r.gcd = Verdict::unknown(options.limits.cutoff);
  }
  r.cross_validated = !r.gcd.is_yes() || r.sampled_stabilized == r.sampled_pairs;
  r.noetherian = noetherian_probe(dyn, options.noetherian_stage.value_or(dyn.prefix_length()), options.limits);
  return r;
}

}  // namespace monoidal
