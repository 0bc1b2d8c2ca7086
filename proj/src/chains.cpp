#include "monoidal/chains.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace monoidal {

bool ChainPrime::is_chain_stage(std::size_t n) const {
  if (n < prefix) return false;
  return std::find(positions.begin(), positions.end(), (n - prefix) % period) != positions.end();
}

std::size_t ChainPrime::next_chain_stage(std::size_t n) const {
  if (positions.empty()) throw InputError("the zero ideal has no chain stages");
  std::size_t m = std::max(n, prefix);
  while (!is_chain_stage(m)) ++m;
  return m;
}

bool ideal_contained(const Frame& frame, const std::vector<ExponentVector>& smaller,
                     const std::vector<ExponentVector>& larger) {
  for (const auto& g : smaller) {
    bool found = false;
    for (const auto& h : larger) {
      if (in_cone(frame, g - h)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

namespace {

std::vector<ExponentVector> locus_generators(const Frame& f, const TransformStep& st) {
  std::vector<ExponentVector> out;
  for (std::size_t j : st.locus) out.push_back(f.column(j));
  return out;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

}  // namespace

ChainReport detect_chains(const CycleDynamics& dyn, std::size_t periods) {
  if (periods == 0) throw InputError("periods must be positive");
  const TransformProgram& p = dyn.program();
  const std::size_t b = dyn.prefix_length();
  const std::size_t P = dyn.period();
  const auto frames = expand_frames(p, b + P * (periods + 1));
  auto stage = [&](std::size_t q, std::size_t k) { return b + q + k * P; };
  auto locus = [&](std::size_t n) { return locus_generators(frames[n], p.step(n)); };
  auto contained = [&](std::size_t n, std::size_t m) { return ideal_contained(frames[m], locus(n), locus(m)); };

  ChainReport rep;
  rep.periods = periods;
  rep.ascending.assign(P, true);
  for (std::size_t q = 0; q < P; ++q) {
    for (std::size_t k = 0; k < periods && rep.ascending[q]; ++k) {
      rep.ascending[q] = contained(stage(q, k), stage(q, k + 1));
    }
  }

  // Positions whose loci interleave into one ascending family share a chain.
  std::vector<std::size_t> parent(P);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t q = 0; q < P; ++q) {
    for (std::size_t r = q + 1; r < P; ++r) {
      if (!rep.ascending[q] || !rep.ascending[r]) continue;
      std::vector<std::size_t> merged;
      for (std::size_t k = 0; k <= periods; ++k) {
        merged.push_back(stage(q, k));
        merged.push_back(stage(r, k));
      }
      std::sort(merged.begin(), merged.end());
      bool ok = true;
      for (std::size_t i = 0; i + 1 < merged.size() && ok; ++i) ok = contained(merged[i], merged[i + 1]);
      if (ok) parent[find_root(parent, r)] = find_root(parent, q);
    }
  }

  rep.chain_of_position.assign(P, ChainReport::npos);
  for (std::size_t q = 0; q < P; ++q) {
    if (!rep.ascending[q]) continue;
    std::size_t root = find_root(parent, q);
    if (rep.chain_of_position[root] == ChainReport::npos) {
      ChainPrime c;
      c.label = "Q" + std::to_string(rep.chains.size() + 1);
      c.prefix = b;
      c.period = P;
      rep.chain_of_position[root] = rep.chains.size();
      rep.chains.push_back(std::move(c));
    }
    rep.chain_of_position[q] = rep.chain_of_position[root];
    rep.chains[rep.chain_of_position[q]].positions.push_back(q);
  }
  for (auto& c : rep.chains) {
    for (std::size_t k = 0; k <= periods; ++k) {
      for (std::size_t q : c.positions) c.stages.push_back(stage(q, k));
    }
    std::sort(c.stages.begin(), c.stages.end());
    for (std::size_t n : c.stages) {
      c.divisor_monomials.push_back(frames[n].column(p.step(n).divisor));
      c.loci.push_back(locus(n));
    }
  }

  // A position outside every chain is absorbed when its loci lie in some chain-prime.
  for (std::size_t q = 0; q < P; ++q) {
    if (rep.chain_of_position[q] != ChainReport::npos) continue;
    for (std::size_t ci = 0; ci < rep.chains.size(); ++ci) {
      bool inside = true;
      for (std::size_t k = 0; k < periods && inside; ++k) {
        for (const auto& g : locus(stage(q, k))) {
          if (!chainprime_member(dyn, rep.chains[ci], g).is_yes()) {
            inside = false;
            break;
          }
        }
      }
      if (inside) {
        rep.chain_of_position[q] = ci;
        break;
      }
    }
    if (rep.chain_of_position[q] == ChainReport::npos) rep.unabsorbed.push_back(q);
  }
  return rep;
}

Ideal Ideal::zero() {
  Ideal I;
  I.kind = Kind::Zero;
  I.label = "0";
  return I;
}

Ideal Ideal::principal(ExponentVector t) {
  Ideal I;
  I.kind = Kind::Principal;
  I.label = t.to_string() + "S";
  I.generator = std::move(t);
  return I;
}

Ideal Ideal::power_intersection(ExponentVector t) {
  Ideal I;
  I.kind = Kind::PowerIntersection;
  I.label = "cap " + t.to_string() + "^n S";
  I.generator = std::move(t);
  return I;
}

Ideal Ideal::of_chain(ChainPrime q) {
  Ideal I;
  I.kind = q.positions.empty() ? Kind::Zero : Kind::Chain;
  I.label = q.label;
  I.chain = std::move(q);
  return I;
}

Ideal Ideal::maximal() {
  Ideal I;
  I.kind = Kind::Maximal;
  I.label = "m_S";
  return I;
}

std::string describe(const Ideal& I) {
  switch (I.kind) {
    case Ideal::Kind::Zero: return "zero ideal";
    case Ideal::Kind::Principal: return "principal ideal " + I.label;
    case Ideal::Kind::PowerIntersection: return "power intersection " + I.label;
    case Ideal::Kind::Chain: return "chain-prime " + I.label;
    case Ideal::Kind::Maximal: return "maximal ideal";
  }
  return I.label;
}

namespace {

Verdict derived_no(std::string detail) {
  Certificate c;
  c.kind = CertificateKind::Derived;
  c.detail = std::move(detail);
  return Verdict::no(std::move(c));
}

Verdict power_intersection_member(const CycleDynamics& dyn, const ExponentVector& t,
                                  const ExponentVector& w, const Limits& limits) {
  if (t.is_zero()) throw InputError("power intersection of a unit");
  Verdict st = member_S(dyn, t, limits);
  if (st.is_no()) throw InputError("power intersection generator is not in S");
  if (st.is_unknown()) return Verdict::unknown(limits.cutoff, "generator membership undecided");
  Verdict sw = member_S(dyn, w, limits);
  if (!sw.is_yes()) return sw;
  if (!dyn.unipotent()) return Verdict::unknown(limits.cutoff, "cycle map is not unipotent");

  const TransformProgram& p = dyn.program();
  const std::size_t B =
      p.boundary_at_or_after(std::max({sw.witness->stage, st.witness->stage, dyn.prefix_length()}));
  const auto W = dyn.binomial_terms(dyn.advance(w.entries(), 0, B));
  const auto T = dyn.binomial_terms(dyn.advance(t.entries(), 0, B));
  // At boundary B + kP both coordinate vectors are nonnegative polynomials in
  // k; w / t^n stays in S for every n exactly when w grows strictly faster
  // than t in every coordinate where t is nonzero.
  bool dominates = true;
  for (std::size_t i = 0; i < dyn.dimension(); ++i) {
    long dt = CycleDynamics::degree(T, i);
    if (dt >= 0 && CycleDynamics::degree(W, i) <= dt) dominates = false;
  }
  if (dominates) {
    return Verdict::yes({B, W.front(), w, "w / t^n lies in S for every n"});
  }
  for (unsigned long n = 1; n <= (1ul << 30); n *= 2) {
    Verdict v = member_S(dyn, w - Integer(n) * t, limits);
    if (v.is_unknown()) return v;
    if (v.is_no()) {
      Certificate c = *v.certificate;
      c.detail = "w / t^" + std::to_string(n) + " is not in S: " + c.detail;
      return Verdict::no(std::move(c));
    }
  }
  return Verdict::unknown(limits.cutoff, "no failing power found");
}

}  // namespace

Verdict chainprime_member(const CycleDynamics& dyn, const ChainPrime& Q, const ExponentVector& w,
                          const Limits& limits) {
  if (Q.positions.empty()) return derived_no("the zero ideal contains no monomial");
  Verdict s = member_S(dyn, w, limits);
  if (!s.is_yes()) return s;
  const TransformProgram& p = dyn.program();
  const std::size_t start = std::max(s.witness->stage, Q.prefix);
  IntVec c = dyn.advance(w.entries(), 0, start);
  // Past the membership stage the coordinates are nonnegative, so their
  // support evolves exactly; w enters Q once it lies in a chain locus.
  SupportHit hit = support_search(dyn, support_of(c), start, [&](std::size_t n, Support sup) {
    return Q.is_chain_stage(n) && (sup & locus_mask(p.step(n))) != 0;
  });
  if (hit.reached) {
    const std::size_t n = hit.stage;
    Frame next = expand(p, n + 1).frame;
    ExponentVector xn = expand(p, n).frame.column(p.step(n).divisor);
    return Verdict::yes({n + 1, coords(next, w - xn).entries, xn,
                         "divisible by the divisor of chain stage " + std::to_string(n)});
  }
  Certificate cert;
  cert.kind = CertificateKind::SupportCycle;
  cert.stage = hit.first_seen;
  cert.cycle_position = p.position(hit.first_seen);
  cert.period = hit.stage - hit.first_seen;
  cert.state = c;
  cert.detail = "support never meets a chain locus; support state recurs at stage " + std::to_string(hit.stage);
  return Verdict::no(std::move(cert));
}

Verdict ideal_member(const CycleDynamics& dyn, const Ideal& I, const ExponentVector& w,
                     const Limits& limits) {
  switch (I.kind) {
    case Ideal::Kind::Zero: return derived_no("the zero ideal contains no monomial");
    case Ideal::Kind::Principal: return divides_S(dyn, I.generator, w, limits);
    case Ideal::Kind::PowerIntersection: return power_intersection_member(dyn, I.generator, w, limits);
    case Ideal::Kind::Chain: return chainprime_member(dyn, I.chain, w, limits);
    case Ideal::Kind::Maximal: {
      if (w.is_zero()) return derived_no("units lie outside the maximal ideal");
      return member_S(dyn, w, limits);
    }
  }
  return Verdict::unknown(limits.cutoff);
}

Verdict chainprime_maximal(const CycleDynamics& dyn, const ChainPrime& Q, const Limits& limits) {
  if (Q.positions.empty()) return derived_no("the zero ideal is not maximal");
  const TransformProgram& p = dyn.program();
  std::optional<Verdict> escape;
  bool undecided = false;
  // Parameter membership in Q depends only on the cycle position, so one
  // chain stage per position settles every period.
  for (std::size_t q : Q.positions) {
    const std::size_t n = Q.prefix + q;
    const Frame f = expand(p, n).frame;
    bool all_in = true;
    for (std::size_t j = 0; j < dyn.dimension(); ++j) {
      Verdict v = chainprime_member(dyn, Q, f.column(j), limits);
      if (v.is_yes()) continue;
      all_in = false;
      if (v.is_no()) {
        if (!escape) {
          Certificate c = *v.certificate;
          c.coordinate = j;
          c.detail = "parameter " + std::to_string(j + 1) + " of chain stage " + std::to_string(n) +
                     " lies outside " + Q.label + " in every period";
          escape = Verdict::no(std::move(c));
        }
        break;
      }
      undecided = true;
    }
    if (all_in) {
      return Verdict::yes({n, {}, std::nullopt,
                           "every parameter of chain stage " + std::to_string(n) + " lies in " + Q.label +
                               "; the pattern repeats every period"});
    }
  }
  if (escape && !undecided) return *escape;
  return Verdict::unknown(limits.cutoff);
}

ChainCount finitely_many_chains(const CycleDynamics& dyn, std::size_t periods) {
  ChainCount out;
  out.report = detect_chains(dyn, periods);
  out.count = out.report.chains.size();
  if (out.report.unabsorbed.empty() && out.count > 0) {
    out.verdict = Verdict::yes({dyn.prefix_length(), {}, std::nullopt,
                                std::to_string(out.count) + " chain-primes absorb every locus past the prefix"});
  } else {
    out.verdict = Verdict::unknown(0, std::to_string(out.report.unabsorbed.size()) + " cycle positions unabsorbed");
  }
  return out;
}

namespace {

Verdict contains(const CycleDynamics& dyn, const Ideal& small, const Ideal& large, const Limits& limits) {
  switch (small.kind) {
    case Ideal::Kind::Zero: return Verdict::yes({0, {}, std::nullopt, "zero ideal"});
    case Ideal::Kind::Principal: return ideal_member(dyn, large, small.generator, limits);
    case Ideal::Kind::PowerIntersection: {
      Verdict v = ideal_member(dyn, large, small.generator, limits);
      if (v.is_no()) return Verdict::unknown(limits.cutoff, "generator outside the larger ideal");
      return v;
    }
    case Ideal::Kind::Chain: {
      if (large.kind == Ideal::Kind::Maximal) return Verdict::yes({0, {}, std::nullopt, "proper ideal"});
      for (const auto& x : small.chain.divisor_monomials) {
        Verdict v = ideal_member(dyn, large, x, limits);
        if (!v.is_yes()) return v;
      }
      return Verdict::yes({small.chain.stages.back(), {}, std::nullopt, "recorded chain divisors lie in the larger ideal"});
    }
    case Ideal::Kind::Maximal: {
      if (large.kind == Ideal::Kind::Maximal) return Verdict::yes({0, {}, std::nullopt, "equal ideals"});
      if (large.kind == Ideal::Kind::Chain) return chainprime_maximal(dyn, large.chain, limits);
      return Verdict::unknown(limits.cutoff, "maximal ideal against a non-chain ideal");
    }
  }
  return Verdict::unknown(limits.cutoff);
}

}  // namespace

PrimeChainCheck verify_prime_chain(const CycleDynamics& dyn, const std::vector<ChainLink>& links,
                                   const Limits& limits) {
  if (links.empty()) throw InputError("prime chain must have at least one ideal");
  for (const auto& l : links) {
    if (l.witness.size() != dyn.dimension()) throw InputError("witness has wrong length");
  }
  PrimeChainCheck out;
  for (std::size_t i = 0; i < links.size(); ++i) {
    const Ideal& I = links[i].ideal;
    const ExponentVector& w = links[i].witness;
    Verdict in = ideal_member(dyn, I, w, limits);
    out.steps.push_back(w.to_string() + " in " + describe(I) + ": " + std::string(to_string(in.status)));
    if (!in.is_yes()) {
      out.verdict = in.is_no() ? derived_no("witness " + w.to_string() + " is not in " + describe(I)) : in;
      return out;
    }
    if (i == 0) continue;
    const Ideal& prev = links[i - 1].ideal;
    Verdict sub = contains(dyn, prev, I, limits);
    out.steps.push_back(describe(prev) + " inside " + describe(I) + ": " + std::string(to_string(sub.status)));
    if (!sub.is_yes()) {
      out.verdict = sub.is_no() ? derived_no(describe(prev) + " is not inside " + describe(I)) : sub;
      return out;
    }
    Verdict outside = ideal_member(dyn, prev, w, limits);
    out.steps.push_back(w.to_string() + " outside " + describe(prev) + ": " +
                        std::string(to_string(outside.is_no() ? Status::Yes : outside.is_yes() ? Status::No : Status::Unknown)));
    if (!outside.is_no()) {
      out.verdict = outside.is_yes() ? derived_no("containment is not strict at link " + std::to_string(i + 1))
                                     : Verdict::unknown(limits.cutoff, "strictness undecided");
      return out;
    }
  }
  for (const auto& l : links) {
    if (l.ideal.kind != Ideal::Kind::Zero) ++out.height_bound;
  }
  out.verdict = Verdict::yes({0, {}, std::nullopt,
                              "strict chain of " + std::to_string(out.height_bound) + " nonzero primes"});
  return out;
}

QuadraticCheck quadratic_test(const CycleDynamics& dyn, const Ideal& Q, const Limits& limits) {
  const TransformProgram& p = dyn.program();
  const std::size_t b = dyn.prefix_length();
  const std::size_t P = dyn.period();
  const std::size_t K = std::max<std::size_t>(limits.periods, 1);
  const auto frames = expand_frames(p, b + P * K);
  QuadraticCheck out;
  out.position_inside.assign(P, Status::Unknown);
  for (std::size_t q = 0; q < P; ++q) {
    std::size_t inside = 0, outside = 0;
    for (std::size_t k = 0; k < K; ++k) {
      const std::size_t n = b + q + k * P;
      bool all_in = true, some_out = false;
      for (const auto& g : locus_generators(frames[n], p.step(n))) {
        Verdict v = ideal_member(dyn, Q, g, limits);
        if (!v.is_yes()) all_in = false;
        if (v.is_no()) some_out = true;
      }
      if (all_in) ++inside;
      if (some_out) ++outside;
    }
    if (inside == K) out.position_inside[q] = Status::Yes;
    else if (outside == K) out.position_inside[q] = Status::No;
  }
  for (std::size_t q = 0; q < P; ++q) {
    if (out.position_inside[q] == Status::Yes) {
      Certificate c;
      c.kind = CertificateKind::Derived;
      c.cycle_position = q;
      c.period = P;
      c.stage = b + q;
      c.detail = "loci at cycle position " + std::to_string(q) + " lie in " + describe(Q) + " in all " +
                 std::to_string(K) + " checked periods";
      out.verdict = Verdict::no(std::move(c));
      return out;
    }
  }
  bool all_out = std::all_of(out.position_inside.begin(), out.position_inside.end(),
                             [](Status s) { return s == Status::No; });
  out.verdict = all_out ? Verdict::yes({b, {}, std::nullopt, "no cycle position has its loci in " + describe(Q)})
                        : Verdict::unknown(limits.cutoff, "locus membership undecided");
  return out;
}

Verdict sbid_check(const CycleDynamics& dyn, const Limits& limits) {
  ChainReport rep = detect_chains(dyn, limits.periods);
  bool all_no = rep.unabsorbed.empty();
  for (const auto& c : rep.chains) {
    Verdict v = chainprime_maximal(dyn, c, limits);
    if (v.is_yes()) {
      v.witness->detail = c.label + " is maximal: " + v.witness->detail;
      return v;
    }
    all_no = all_no && v.is_no();
  }
  if (all_no) return derived_no("every chain-prime is certified nonmaximal and the chains absorb all loci");
  return Verdict::unknown(limits.cutoff);
}

}  // namespace monoidal
