#include "monoidal/battery.hpp"

#include <chrono>

#include "monoidal/fixtures.hpp"

namespace monoidal {

namespace {

std::int8_t encode(Status s) { return s == Status::Yes ? 1 : s == Status::No ? 0 : -1; }
Status decode(std::int8_t x) { return x == 1 ? Status::Yes : x == 0 ? Status::No : Status::Unknown; }

}  // namespace

std::vector<ExponentVector> box_vectors(std::size_t d, long lo, long hi) {
  std::vector<ExponentVector> out;
  ExponentVector v(d);
  for (std::size_t i = 0; i < d; ++i) v[i] = lo;
  while (true) {
    out.push_back(v);
    std::size_t i = d;
    while (true) {
      if (i == 0) return out;
      --i;
      if (v[i] < hi) {
        v[i] += 1;
        break;
      }
      v[i] = lo;
    }
  }
}

MembershipTable::MembershipTable(const CycleDynamics& dyn, long lo, long hi, const Limits& limits)
    : dyn_(dyn), limits_(limits), lo_(lo), hi_(hi) {
  auto all = box_vectors(dyn.dimension(), lo, hi);
  table_.resize(all.size());
  parallel_for(all.size(), 0, [&](std::size_t i) { table_[i] = encode(member_S(dyn_, all[i], limits_).status); });
}

Status MembershipTable::status(const ExponentVector& w) const {
  std::size_t idx = 0;
  const std::size_t width = static_cast<std::size_t>(hi_ - lo_ + 1);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < lo_ || w[i] > hi_) return member_S(dyn_, w, limits_).status;
    idx = idx * width + static_cast<std::size_t>(w[i].get_si() - lo_);
  }
  return decode(table_[idx]);
}

Status MembershipTable::status_in_box(const std::vector<long>& w) const {
  std::size_t idx = 0;
  const std::size_t width = static_cast<std::size_t>(hi_ - lo_ + 1);
  for (long e : w) idx = idx * width + static_cast<std::size_t>(e - lo_);
  return decode(table_[idx]);
}

namespace {

std::vector<long> to_longs(const ExponentVector& v) {
  std::vector<long> out;
  for (const auto& e : v.entries()) out.push_back(e.get_si());
  return out;
}

}  // namespace

OracleTally intersection_box_oracle(const CycleDynamics& dyn, const std::vector<ExponentVector>& monomials,
                                    long w_box, const Limits& limits) {
  long span = w_box;
  for (const auto& m : monomials)
    for (const auto& e : m.entries()) span = std::max(span, w_box + std::abs(e.get_si()));
  MembershipTable table(dyn, -span, span, limits);
  const auto ws = box_vectors(dyn.dimension(), -w_box, w_box);
  const std::size_t d = dyn.dimension();
  std::vector<std::vector<long>> wl;
  for (const auto& w : ws) wl.push_back(to_longs(w));

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < monomials.size(); ++i)
    for (std::size_t j = i + 1; j < monomials.size(); ++j) pairs.emplace_back(i, j);

  std::vector<OracleTally> per(pairs.size());
  parallel_for(pairs.size(), 0, [&](std::size_t k) {
    const auto& a = monomials[pairs[k].first];
    const auto& b = monomials[pairs[k].second];
    OracleTally& t = per[k];
    Intersection in = intersect_principal(dyn, {a, b}, limits);
    if (in.kind == Intersection::Kind::NotFinitelyGenerated) ++t.not_finitely_generated;
    if (in.kind == Intersection::Kind::Unknown) ++t.unknown;
    if (in.kind != Intersection::Kind::Principal) return;
    ++t.principal;
    const ExponentVector& g = *in.generator;
    bool small = true;
    for (const auto& e : g.entries()) small = small && std::abs(e.get_si()) <= span - w_box;
    if (!small) {
      // The generator leaves the table; fall back to exact lookups.
      for (const auto& w : ws) {
        Status by_g = table.divides(g, w), by_a = table.divides(a, w), by_b = table.divides(b, w);
        if (by_g == Status::Unknown || by_a == Status::Unknown || by_b == Status::Unknown) {
          ++t.undecided;
          continue;
        }
        ++t.checked;
        if ((by_g == Status::Yes) != (by_a == Status::Yes && by_b == Status::Yes)) ++t.mismatches;
      }
      return;
    }
    const std::vector<long> gl = to_longs(g), al = to_longs(a), bl = to_longs(b);
    std::vector<long> dg(d), da(d), db(d);
    for (const auto& w : wl) {
      for (std::size_t i = 0; i < d; ++i) {
        dg[i] = w[i] - gl[i];
        da[i] = w[i] - al[i];
        db[i] = w[i] - bl[i];
      }
      Status by_g = table.status_in_box(dg), by_a = table.status_in_box(da), by_b = table.status_in_box(db);
      if (by_g == Status::Unknown || by_a == Status::Unknown || by_b == Status::Unknown) {
        ++t.undecided;
        continue;
      }
      ++t.checked;
      if ((by_g == Status::Yes) != (by_a == Status::Yes && by_b == Status::Yes)) ++t.mismatches;
    }
  });
  OracleTally total;
  total.pairs = pairs.size();
  for (const auto& t : per) {
    total.principal += t.principal;
    total.not_finitely_generated += t.not_finitely_generated;
    total.unknown += t.unknown;
    total.checked += t.checked;
    total.mismatches += t.mismatches;
    total.undecided += t.undecided;
  }
  return total;
}

HullTally hull_identity(const CycleDynamics& dyn, long box, const Limits& limits) {
  ChainReport chains = detect_chains(dyn, limits.periods);
  std::vector<Ideal> ideals;
  for (const auto& c : chains.chains) ideals.push_back(Ideal::of_chain(c));
  const auto ws = box_vectors(dyn.dimension(), -box, box);
  std::vector<std::int8_t> outcome(ws.size());  // 0 agree, 1 mismatch, 2 unknown
  parallel_for(ws.size(), 0, [&](std::size_t i) {
    const auto& w = ws[i];
    Verdict m = member_S(dyn, w, limits);
    bool rhs = in_inverted_hull(dyn.program(), w);
    bool unknown = m.is_unknown();
    for (const auto& I : ideals) {
      if (!rhs) break;
      Verdict v = localized_member(dyn, I, w, limits);
      if (v.is_unknown()) unknown = true;
      rhs = rhs && v.is_yes();
    }
    outcome[i] = unknown ? 2 : (m.is_yes() != rhs ? 1 : 0);
  });
  HullTally t;
  for (auto o : outcome) {
    ++t.checked;
    if (o == 1) ++t.mismatches;
    if (o == 2) ++t.unknown;
  }
  return t;
}

bool FixtureRun::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return !checks.empty();
}

namespace {

const ExponentVector X{1, 0, 0}, Y{0, 1, 0}, Z{0, 0, 1};

class Battery {
 public:
  explicit Battery(FixtureRun& run) : run_(run) {}
  void check(std::string name, bool ok, std::string detail = {}) {
    run_.checks.push_back({std::move(name), ok, std::move(detail)});
  }

 private:
  FixtureRun& run_;
};

std::string status_text(const Verdict& v) { return std::string(to_string(v.status)); }

std::string count_text(std::size_t n, const char* what) { return std::to_string(n) + " " + what; }

void construction_battery(const CycleDynamics& dyn, const ClassifyOptions& o, Battery& b) {
  const Limits& L = o.limits;
  bool ok = true;
  std::string bad;
  for (long i = 0; i <= 10; ++i) {
    for (long j = 0; j <= 10; ++j) {
      Verdict v = member_S(dyn, {-i, 1, -j}, L);
      if (!v.is_yes() || v.witness->stage > static_cast<std::size_t>(2 * std::max(i, j))) {
        ok = false;
        bad = "i=" + std::to_string(i) + " j=" + std::to_string(j);
      }
    }
  }
  b.check("y/(x^i z^j) in S by stage 2max(i,j), 0 <= i,j <= 10", ok, bad);

  Verdict xz = member_S(dyn, {1, 0, -1}, L);
  b.check("x/z not in S, with certificate", xz.is_no() && xz.certificate.has_value(), status_text(xz));
  b.check("boundary order of x/z nonnegative", boundary_ord_check(dyn, {1, 0, -1}, L).is_yes());

  Intersection in = intersect_principal(dyn, {X, Z}, L);
  b.check("xS meet zS = xzS",
          in.kind == Intersection::Kind::Principal && in.generator && *in.generator == ExponentVector{1, 0, 1},
          std::string(to_string(in.kind)));
  GcdTrace t = gcd_trace(dyn, X, Z, L);
  b.check("gcd trace of (x, z) stabilizes at stage 0", t.status == TraceStatus::Stabilized && t.stable_stage == 0,
          std::string(to_string(t.status)));

  ChainReport chains = detect_chains(dyn, L.periods);
  b.check("two chains", chains.chains.size() == 2, count_text(chains.chains.size(), "chains"));
  bool nonmax = chains.chains.size() == 2;
  for (const auto& c : chains.chains) nonmax = nonmax && chainprime_maximal(dyn, c, L).is_no();
  b.check("no chain prime is maximal", nonmax);
  NoetherianProbe np = noetherian_probe(dyn, o.noetherian_stage.value_or(0), L);
  b.check("maximal ideal generated by x, z",
          np.verdict.is_yes() && np.generators == std::vector<ExponentVector>{X, Z} && np.generator_count <= 2,
          count_text(np.generator_count, "generators"));

  ClassificationReport r = gcd_classify(dyn, o);
  bool valuations = !r.chain_verdicts.empty();
  for (const auto& cv : r.chain_verdicts) valuations = valuations && cv.valuation.verdict.is_yes();
  b.check("GCD via chain valuations", r.gcd.is_yes() && r.gcd_path == GcdPath::Theorem && valuations,
          std::string(to_string(r.gcd_path)));
  b.check("sampled pairs all principal", r.cross_validated && r.sampled_diverging == 0 && r.sampled_unknown == 0,
          count_text(r.sampled_pairs, "pairs"));

  std::vector<ExponentVector> members;
  for (const auto& w : box_vectors(3, -4, 4))
    if (member_S(dyn, w, L).is_yes()) members.push_back(w);
  std::size_t not_principal = 0;
  std::vector<std::size_t> bad_pairs(members.size(), 0);
  parallel_for(members.size(), o.threads, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (intersect_principal(dyn, {members[i], members[j]}, L).kind != Intersection::Kind::Principal) ++bad_pairs[i];
  });
  for (auto n : bad_pairs) not_principal += n;
  b.check("every pair of S-members with |exp| <= 4 has principal intersection", not_principal == 0,
          count_text(members.size(), "members") + ", " + count_text(not_principal, "failures"));

  HullTally h = hull_identity(dyn, 5, L);
  b.check("S = hull meet chain localizations, |exp| <= 5", h.mismatches == 0 && h.unknown == 0,
          count_text(h.checked, "checked") + ", " + count_text(h.mismatches, "mismatches") + ", " +
              count_text(h.unknown, "unknown"));

  PrimeChainCheck pc = verify_prime_chain(dyn, {{Ideal::power_intersection(X), Y}, {Ideal::principal(X), X}}, L);
  b.check("height of xS at least 2", pc.verdict.is_yes() && pc.height_bound >= 2,
          "height bound " + std::to_string(pc.height_bound));
}

void example_battery(const CycleDynamics& dyn, const ClassifyOptions& o, Battery& b) {
  const Limits& L = o.limits;
  NoetherianProbe np = noetherian_probe(dyn, o.noetherian_stage.value_or(0), L);
  b.check("maximal ideal is xS", np.verdict.is_yes() && np.generators == std::vector<ExponentVector>{X},
          count_text(np.generator_count, "generators"));
  ChainCount cc = finitely_many_chains(dyn, L.periods);
  b.check("exactly two chain primes", cc.verdict.is_yes() && cc.count == 2, count_text(cc.count, "chains"));
  Ideal P = Ideal::power_intersection(X), Q = Ideal::power_intersection(Y);
  b.check("y in P", ideal_member(dyn, P, Y, L).is_yes());
  b.check("z in Q", ideal_member(dyn, Q, Z, L).is_yes());
  b.check("P is not quadratic", quadratic_test(dyn, P, L).verdict.is_no());
  ValuationCheck v = valuation_check_at(dyn, Ideal::maximal(), o.window, o.search_degree, L);
  b.check("S is a valuation domain (window)", v.verdict.is_yes(),
          count_text(v.comparable, "comparable") + ", window " + std::to_string(v.window));
  PrimeChainCheck pc = verify_prime_chain(dyn, {{Q, Z}, {P, Y}, {Ideal::maximal(), X}}, L);
  b.check("dimension at least 3", pc.verdict.is_yes() && pc.height_bound >= 3,
          "height bound " + std::to_string(pc.height_bound));
  std::size_t mi = classify_M_i(dyn.program());
  b.check("class M_2, dimension bound met with equality", mi == 2 && pc.height_bound == dyn.dimension(),
          "M_" + std::to_string(mi));
}

void pure_quadratic_battery(const CycleDynamics& dyn, const ClassifyOptions& o, Battery& b) {
  const Limits& L = o.limits;
  b.check("S is an SBID", sbid_check(dyn, L).is_yes());
  GcdTrace t = gcd_trace(dyn, Y, Z, L);
  bool xpow = t.gcd.size() == 3 && t.gcd[0] > 0 && t.gcd[1] == 0 && t.gcd[2] == 0;
  b.check("gcd trace of (y, z) diverges with gcd_n a power of x",
          t.status == TraceStatus::Diverges && t.certificate.has_value() && xpow,
          std::string(to_string(t.status)) + ", last gcd " + t.gcd.to_string());
  Intersection in = intersect_principal(dyn, {Y, Z}, L);
  b.check("yS meet zS not finitely generated", in.kind == Intersection::Kind::NotFinitelyGenerated,
          std::string(to_string(in.kind)));
  ClassificationReport r = gcd_classify(dyn, o);
  b.check("not a GCD domain", r.gcd.is_no() && r.gcd_path == GcdPath::Counterexample,
          std::string(to_string(r.gcd_path)));
  ValuationCheck v = valuation_check_at(dyn, Ideal::maximal(), o.window, o.search_degree, L);
  b.check("not a valuation domain", v.verdict.is_no(), status_text(v.verdict));
  // y/x^k = x * y/x^(k+1), so the maximal ideal is principal.
  NoetherianProbe np = noetherian_probe(dyn, o.noetherian_stage.value_or(0), L);
  b.check("maximal ideal is xS", np.verdict.is_yes() && np.generators == std::vector<ExponentVector>{X},
          count_text(np.generator_count, "generators"));
}

void d4_battery(const CycleDynamics& dyn, const ClassifyOptions& o, Battery& b) {
  const Limits& L = o.limits;
  ChainCount cc = finitely_many_chains(dyn, L.periods);
  b.check("three chains, all absorbed", cc.verdict.is_yes() && cc.count == 3, count_text(cc.count, "chains"));
  std::vector<ExponentVector> monomials = box_vectors(4, 0, 2);
  OracleTally t = intersection_box_oracle(dyn, monomials, 2, L);
  b.check("box oracle agrees on principal intersections", t.mismatches == 0 && t.undecided == 0,
          count_text(t.principal, "principal") + ", " + count_text(t.checked, "checks") + ", " +
              count_text(t.mismatches, "mismatches"));
}

}  // namespace

FixtureRun run_fixture(const std::string& name, const ClassifyOptions& options) {
  auto start = std::chrono::steady_clock::now();
  CycleDynamics dyn(fixtures::by_name(name));
  FixtureRun run;
  run.fixture = name;
  Battery b(run);
  if (name == "construction-3-4") construction_battery(dyn, options, b);
  else if (name == "example-5-6") example_battery(dyn, options, b);
  else if (name == "pure-quadratic") pure_quadratic_battery(dyn, options, b);
  else d4_battery(dyn, options, b);
  run.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return run;
}

Json to_json(const FixtureRun& run) {
  Json checks = Json::array();
  for (const auto& c : run.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"fixture", run.fixture}, {"passed", run.passed()}, {"checks", checks}, {"elapsed_ms", run.elapsed_ms}};
}

}  // namespace monoidal
