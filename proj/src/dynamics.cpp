#include "monoidal/dynamics.hpp"

#include <map>
#include <set>
#include <tuple>
#include <utility>

namespace monoidal {

namespace {

IntVec unit_vector(std::size_t d, std::size_t i) {
  IntVec v(d);
  v[i] = 1;
  return v;
}

bool masked_nonnegative(const IntVec& c, const Mask* mask) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (mask && !(*mask)[i]) continue;
    if (sgn(c[i]) < 0) return false;
  }
  return true;
}

Integer settle_bound(const std::vector<IntVec>& terms, std::size_t i) {
  return coordinate_poly(terms, i).settle_bound();
}

CertificateKind kind_for_terms(std::size_t nterms) {
  if (nterms <= 1) return CertificateKind::Recurrence;
  if (nterms == 2) return CertificateKind::AffineDrift;
  return CertificateKind::PolynomialGrowth;
}

// First stage in (from, to] reached from state c at stage `from` where every
// coordinate is nonnegative; `to` is known to qualify.
std::pair<std::size_t, IntVec> first_nonnegative_stage(const TransformProgram& p, IntVec c,
                                                       std::size_t from, std::size_t to) {
  for (std::size_t n = from; n < to; ++n) {
    advance_coords(c, p.step(n));
    if (all_nonnegative(c)) return {n + 1, c};
  }
  return {to, c};
}

}  // namespace

long BinomialPoly::degree() const {
  for (std::size_t j = coeffs.size(); j-- > 0;) {
    if (coeffs[j] != 0) return static_cast<long>(j);
  }
  return -1;
}

int BinomialPoly::eventual_sign() const {
  long deg = degree();
  return deg < 0 ? 0 : sgn(coeffs[static_cast<std::size_t>(deg)]);
}

// C(k, D) / C(k, j) >= (k - D + 1) / D for j < D, so the leading term
// dominates once (k - D + 1) / D exceeds sum_{j<D} |a_j| / |a_D|.
Integer BinomialPoly::settle_bound() const {
  long deg = degree();
  if (deg <= 0) return 0;
  const std::size_t D = static_cast<std::size_t>(deg);
  Integer lower = 0;
  for (std::size_t j = 0; j < D; ++j) lower += abs(coeffs[j]);
  Integer lead = abs(coeffs[D]);
  Integer q = (lower + lead - 1) / lead;
  return Integer(static_cast<unsigned long>(D)) * (q + 1) + 1;
}

Integer BinomialPoly::operator()(const Integer& k) const {
  Integer out = 0, binom;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    mpz_bin_ui(binom.get_mpz_t(), k.get_mpz_t(), j);
    out += binom * coeffs[j];
  }
  return out;
}

BinomialPoly coordinate_poly(const std::vector<IntVec>& terms, std::size_t i) {
  BinomialPoly p;
  for (const auto& t : terms) p.coeffs.push_back(t[i]);
  return p;
}

CycleDynamics::CycleDynamics(TransformProgram program) : program_(std::move(program)) {
  require_valid(program_);
  const std::size_t d = dimension();
  // N^d = 0 iff every vector dies within d applications of N.
  unipotent_ = true;
  for (std::size_t i = 0; i < d && unipotent_; ++i) {
    IntVec v = unit_vector(d, i);
    for (std::size_t r = 0; r < d; ++r) v = subtract(period_map(v), v);
    unipotent_ = all_zero(v);
  }
}

IntVec CycleDynamics::advance(IntVec c, std::size_t from, std::size_t to) const {
  if (c.size() != dimension()) throw InputError("coordinate length does not match program dimension");
  for (std::size_t n = from; n < to; ++n) advance_coords(c, program_.step(n));
  return c;
}

IntVec CycleDynamics::period_map(IntVec c) const {
  for (const auto& s : program_.cycle) advance_coords(c, s);
  return c;
}

std::vector<IntVec> CycleDynamics::binomial_terms(const IntVec& c) const {
  if (!unipotent_) throw InputError("binomial expansion needs a unipotent cycle map");
  std::vector<IntVec> terms{c};
  while (!all_zero(terms.back())) {
    if (terms.size() > dimension() + 1) throw InputError("cycle map is not unipotent");
    terms.push_back(subtract(period_map(terms.back()), terms.back()));
  }
  terms.pop_back();
  if (terms.empty()) terms.push_back(c);
  return terms;
}

IntVec CycleDynamics::evaluate(const std::vector<IntVec>& terms, const Integer& k) {
  IntVec out(terms.front().size());
  Integer binom;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    if (sgn(k) < 0) throw InputError("negative period count");
    mpz_bin_ui(binom.get_mpz_t(), k.get_mpz_t(), j);
    if (binom == 0) break;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += binom * terms[j][i];
  }
  return out;
}

long CycleDynamics::degree(const std::vector<IntVec>& terms, std::size_t i) {
  for (std::size_t j = terms.size(); j-- > 0;) {
    if (terms[j][i] != 0) return static_cast<long>(j);
  }
  return -1;
}

Verdict eventually_nonnegative(const CycleDynamics& dyn, const IntVec& c0, const Limits& limits,
                               const Mask* mask) {
  const std::size_t d = dyn.dimension();
  if (c0.size() != d) throw InputError("coordinate length does not match program dimension");
  if (mask && mask->size() != d) throw InputError("mask length does not match program dimension");
  const TransformProgram& p = dyn.program();
  const std::size_t b = dyn.prefix_length();
  const std::size_t P = dyn.period();

  IntVec c = c0;
  for (std::size_t n = 0; n < b; ++n) {
    if (!mask && all_nonnegative(c)) return Verdict::yes({n, c, std::nullopt, "prefix stage"});
    advance_coords(c, p.step(n));
  }

  if (dyn.unipotent()) {
    const auto terms = dyn.binomial_terms(c);
    Integer K = 0;
    std::optional<std::size_t> bad;
    for (std::size_t i = 0; i < d; ++i) {
      if (mask && !(*mask)[i]) continue;
      long deg = CycleDynamics::degree(terms, i);
      if (deg < 0) continue;
      Integer bound = settle_bound(terms, i);
      if (bound > K) K = bound;
      if (!bad && sgn(terms[static_cast<std::size_t>(deg)][i]) < 0) bad = i;
    }
    if (!K.fits_ulong_p() || K.get_ui() > (std::size_t{1} << 40) / P) {
      return Verdict::unknown(limits.cutoff, "settling bound too large");
    }
    const std::size_t k_settle = K.get_ui();
    if (bad) {
      Certificate cert;
      cert.kind = kind_for_terms(terms.size());
      cert.stage = b + k_settle * P;
      cert.cycle_position = 0;
      cert.period = P;
      cert.state = CycleDynamics::evaluate(terms, K);
      cert.increment = subtract(dyn.period_map(cert.state), cert.state);
      cert.coordinate = *bad;
      cert.degree = static_cast<std::size_t>(CycleDynamics::degree(terms, *bad));
      cert.detail = "leading binomial coefficient of coordinate " + std::to_string(*bad + 1) + " is negative";
      return Verdict::no(std::move(cert));
    }
    std::size_t k = k_settle;
    while (k > 0 && masked_nonnegative(CycleDynamics::evaluate(terms, Integer(static_cast<unsigned long>(k - 1))), mask)) --k;
    IntVec at_k = CycleDynamics::evaluate(terms, Integer(static_cast<unsigned long>(k)));
    if (mask || k == 0) return Verdict::yes({b + k * P, std::move(at_k), std::nullopt, "closed form"});
    IntVec before = CycleDynamics::evaluate(terms, Integer(static_cast<unsigned long>(k - 1)));
    auto [stage, state] = first_nonnegative_stage(p, std::move(before), b + (k - 1) * P, b + k * P);
    return Verdict::yes({stage, std::move(state), std::nullopt, "closed form"});
  }

  // General cycle map: iterate boundaries, looking for recurrences or an
  // invariant drift that keeps a negative coordinate negative.
  std::set<IntVec> seen;
  IntVec prev;
  for (std::size_t k = 0; b + k * P <= std::max(limits.cutoff, b); ++k) {
    const std::size_t stage = b + k * P;
    if (masked_nonnegative(c, mask)) {
      if (mask || k == 0) return Verdict::yes({stage, c, std::nullopt, "iteration"});
      auto [first, state] = first_nonnegative_stage(p, prev, stage - P, stage);
      return Verdict::yes({first, std::move(state), std::nullopt, "iteration"});
    }
    if (!seen.insert(c).second) {
      Certificate cert{CertificateKind::Recurrence, stage, 0, P, c, IntVec(d), std::nullopt, 0,
                       "boundary state recurs"};
      return Verdict::no(std::move(cert));
    }
    IntVec next = dyn.period_map(c);
    IntVec delta = subtract(next, c);
    if (dyn.period_map(delta) == delta) {
      for (std::size_t i = 0; i < d; ++i) {
        if (mask && !(*mask)[i]) continue;
        if (sgn(c[i]) < 0 && sgn(delta[i]) <= 0) {
          Certificate cert{all_zero(delta) ? CertificateKind::Recurrence : CertificateKind::AffineDrift,
                           stage, 0, P, c, delta, i, all_zero(delta) ? 0u : 1u,
                           "per-period increment is fixed by the cycle map"};
          return Verdict::no(std::move(cert));
        }
      }
    }
    prev = std::move(c);
    c = std::move(next);
  }
  return Verdict::unknown(limits.cutoff);
}

Support support_of(const IntVec& c) {
  if (c.size() > 64) throw InputError("support tracking supports dimension <= 64");
  Support s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) > 0) s |= Support{1} << i;
  }
  return s;
}

Support locus_mask(const TransformStep& step) {
  Support m = 0;
  for (std::size_t j : step.locus) m |= Support{1} << j;
  return m;
}

Support advance_support(Support s, const TransformStep& step) {
  Support others = locus_mask(step) & ~(Support{1} << step.divisor);
  if (s & others) s |= Support{1} << step.divisor;
  return s;
}

namespace {

// Stages inside the prefix never recur; afterwards the key is the cycle position.
std::size_t state_key(const TransformProgram& p, std::size_t n) {
  return n < p.prefix_length() ? n : p.prefix_length() + p.position(n);
}

}  // namespace

SupportHit support_search(const CycleDynamics& dyn, Support s, std::size_t start,
                          const std::function<bool(std::size_t, Support)>& hits) {
  const TransformProgram& p = dyn.program();
  std::map<std::pair<std::size_t, Support>, std::size_t> seen;
  for (std::size_t n = start;; ++n) {
    if (hits(n, s)) return {true, n, 0, s, 0};
    auto [it, fresh] = seen.emplace(std::make_pair(state_key(p, n), s), n);
    if (!fresh && n >= p.prefix_length()) return {false, n, it->second, s, 0};
    s = advance_support(s, p.step(n));
  }
}

SupportHit support_pair_search(const CycleDynamics& dyn, Support a, Support b, std::size_t start) {
  const TransformProgram& p = dyn.program();
  std::map<std::tuple<std::size_t, Support, Support>, std::size_t> first;
  for (std::size_t n = start;; ++n) {
    if (a & b) return {true, n, 0, a, b};
    auto key = std::make_tuple(state_key(p, n), a, b);
    auto [it, fresh] = first.emplace(key, n);
    if (!fresh && n >= p.prefix_length()) return {false, n, it->second, a, b};
    a = advance_support(a, p.step(n));
    b = advance_support(b, p.step(n));
  }
}

}  // namespace monoidal
