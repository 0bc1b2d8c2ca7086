// Acceptance battery: one PASS/FAIL line per criterion.
//
// Tolerances are exact (0 mismatches, 0 unknowns) unless a line says otherwise.
// Exit status is nonzero when a criterion fails that is not listed in
// kKnownFailures, or when a listed one unexpectedly passes.

#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "monoidal/battery.hpp"
#include "monoidal/fixtures.hpp"

using namespace monoidal;

namespace {

// Criterion 3 asks for a non-Noetherian maximal ideal in the pure quadratic
// union, but y/x^k = x * (y/x^(k+1)) puts every member of m_S in xS.
const std::set<std::string> kKnownFailures = {"3"};

const ExponentVector X{1, 0, 0}, Y{0, 1, 0}, Z{0, 0, 1};

struct Line {
  std::string id;
  bool passed;
  std::string detail;
  double seconds;
};

std::vector<Line> lines;

template <class F>
void criterion(const std::string& id, F&& body) {
  auto start = std::chrono::steady_clock::now();
  std::ostringstream detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail << "exception: " << e.what();
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  lines.push_back({id, ok, detail.str(), s});
  std::cout << (ok ? "PASS " : "FAIL ") << id << ": " << detail.str() << " [" << s << " s]" << std::endl;
}

std::string st(Status s) { return std::string(to_string(s)); }

TransformProgram random_program(std::mt19937_64& rng, std::size_t d) {
  auto step = [&] {
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(2 + rng() % (d - 1));
    return TransformStep{idx, idx[rng() % idx.size()]};
  };
  TransformProgram p;
  p.dimension = d;
  for (std::size_t i = rng() % 3; i > 0; --i) p.prefix.push_back(step());
  for (std::size_t i = 1 + rng() % 3; i > 0; --i) p.cycle.push_back(step());
  require_valid(p);
  return p;
}

}  // namespace

int main() {
  const Limits L;
  CycleDynamics c34(fixtures::construction_3_4());
  CycleDynamics e56(fixtures::example_5_6());
  CycleDynamics pq(fixtures::pure_quadratic());
  CycleDynamics d4(fixtures::quadratic_extended_d4());

  criterion("1a", [&](std::ostream& out) {
    std::size_t bad = 0, worst = 0;
    for (long i = 0; i <= 10; ++i) {
      for (long j = 0; j <= 10; ++j) {
        Verdict v = member_S(c34, {-i, 1, -j}, L);
        if (!v.is_yes() || v.witness->stage > static_cast<std::size_t>(2 * std::max(i, j))) ++bad;
        if (v.is_yes()) worst = std::max(worst, v.witness->stage);
      }
    }
    out << "y/(x^i z^j), 0<=i,j<=10: " << bad << " failures, latest witness stage " << worst;
    return bad == 0;
  });

  criterion("1b", [&](std::ostream& out) {
    Verdict m = member_S(c34, {1, 0, -1}, L);
    Verdict o = boundary_ord_check(c34, {1, 0, -1}, L);
    bool rec = m.certificate && m.certificate->kind == CertificateKind::Recurrence;
    out << "member_S(x/z) = " << st(m.status) << (rec ? " (recurrence)" : "") << ", boundary_ord_check = "
        << st(o.status);
    return m.is_no() && rec && o.is_yes();
  });

  criterion("1c", [&](std::ostream& out) {
    Intersection in = intersect_principal(c34, {X, Z}, L);
    GcdTrace t = gcd_trace(c34, X, Z, L);
    bool principal = in.kind == Intersection::Kind::Principal && *in.generator == ExponentVector{1, 0, 1};
    out << "intersect(x,z) = " << to_string(in.kind) << (in.generator ? " " + in.generator->to_string() : "")
        << ", gcd_trace = " << to_string(t.status) << " at " << t.stable_stage;
    return principal && t.status == TraceStatus::Stabilized && t.stable_stage == 0;
  });

  criterion("1d", [&](std::ostream& out) {
    ChainReport r = detect_chains(c34, L.periods);
    bool nonmax = r.chains.size() == 2;
    for (const auto& c : r.chains) nonmax = nonmax && chainprime_maximal(c34, c, L).is_no();
    NoetherianProbe n = noetherian_probe(c34, 0, L);
    bool gens = n.verdict.is_yes() && n.generators == std::vector<ExponentVector>{X, Z};
    out << r.chains.size() << " chains, both nonmaximal " << nonmax << ", noetherian " << st(n.verdict.status)
        << "(" << n.generator_count << "), bound " << n.generator_count << " <= " << c34.dimension() - 1;
    return r.chains.size() == 2 && nonmax && gens && n.generator_count <= c34.dimension() - 1;
  });

  criterion("1e", [&](std::ostream& out) {
    ClassifyOptions o;
    ClassificationReport r = gcd_classify(c34, o);
    bool vals = r.chain_verdicts.size() == 2;
    for (const auto& cv : r.chain_verdicts)
      vals = vals && cv.valuation.verdict.is_yes() && cv.valuation.window == 4 && cv.valuation.search_degree == 8;
    std::vector<ExponentVector> members;
    for (const auto& w : box_vectors(3, -4, 4))
      if (member_S(c34, w, L).is_yes()) members.push_back(w);
    std::vector<std::size_t> failures(members.size(), 0);
    parallel_for(members.size(), 0, [&](std::size_t i) {
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (intersect_principal(c34, {members[i], members[j]}, L).kind != Intersection::Kind::Principal)
          ++failures[i];
    });
    std::size_t total = 0;
    for (auto f : failures) total += f;
    out << "gcd " << st(r.gcd.status) << " via " << to_string(r.gcd_path) << ", chain valuations (B=4, D=8) "
        << (vals ? "yes" : "no") << ", " << members.size() << " S-members in box, " << total
        << " non-principal pairs";
    return r.gcd.is_yes() && r.gcd_path == GcdPath::Theorem && vals && total == 0;
  });

  criterion("1f", [&](std::ostream& out) {
    HullTally h = hull_identity(c34, 5, L);
    out << h.checked << " monomials with |exp| <= 5, " << h.mismatches << " mismatches, " << h.unknown
        << " unknown";
    return h.mismatches == 0 && h.unknown == 0;
  });

  criterion("1g", [&](std::ostream& out) {
    PrimeChainCheck pc = verify_prime_chain(c34, {{Ideal::power_intersection(X), Y}, {Ideal::principal(X), X}}, L);
    out << "chain [P, xS]: " << st(pc.verdict.status) << ", height bound " << pc.height_bound;
    return pc.verdict.is_yes() && pc.height_bound >= 2;
  });

  criterion("2", [&](std::ostream& out) {
    NoetherianProbe n = noetherian_probe(e56, 0, L);
    ChainCount cc = finitely_many_chains(e56, L.periods);
    ChainReport& r = cc.report;
    bool py = false;
    for (const auto& c : r.chains) {
      bool contains_y = chainprime_member(e56, c, Y, L).is_yes();
      bool contains_x = chainprime_member(e56, c, X, L).is_yes();
      if (contains_y && !contains_x) py = true;  // the chain prime P = meet of x^n S
    }
    Verdict qz = ideal_member(e56, Ideal::power_intersection(Y), Z, L);
    Verdict quad = quadratic_test(e56, Ideal::power_intersection(X), L).verdict;
    ValuationCheck v = valuation_check_at(e56, Ideal::maximal(), 4, 8, L);
    PrimeChainCheck pc = verify_prime_chain(
        e56, {{Ideal::power_intersection(Y), Z}, {Ideal::power_intersection(X), Y}, {Ideal::maximal(), X}}, L);
    std::size_t mi = classify_M_i(e56.program());
    bool ok = n.verdict.is_yes() && n.generators == std::vector<ExponentVector>{X} && cc.verdict.is_yes() &&
              cc.count == 2 && py && qz.is_yes() && quad.is_no() && v.verdict.is_yes() && pc.verdict.is_yes() &&
              pc.height_bound >= 3 && mi == 2 && e56.dimension() == 3 && pc.height_bound == e56.dimension();
    out << "noetherian " << st(n.verdict.status) << "(" << n.generator_count << "), chains " << cc.count
        << ", y in P " << py << ", z in Q " << st(qz.status) << ", quadratic(P) " << st(quad.status)
        << ", valuation(m_S) " << st(v.verdict.status) << ", dim >= " << pc.height_bound << ", M_" << mi;
    return ok;
  });

  criterion("3", [&](std::ostream& out) {
    Verdict sbid = sbid_check(pq, L);
    GcdTrace t = gcd_trace(pq, Y, Z, L);
    // gcd at stage n is x^n: the recorded entries and the certified per-period increment.
    bool xn = t.status == TraceStatus::Diverges && t.certificate &&
              t.certificate->kind == CertificateKind::AffineDrift &&
              t.certificate->increment == IntVec{1, 0, 0};
    auto frames = expand_frames(pq.program(), t.entries.empty() ? 0 : t.entries.back().stage);
    for (const auto& e : t.entries)
      xn = xn && frames[e.stage].apply(e.gcd) == ExponentVector{static_cast<long>(e.stage), 0, 0};
    Intersection in = intersect_principal(pq, {Y, Z}, L);
    ClassificationReport r = gcd_classify(pq);
    NoetherianProbe n = noetherian_probe(pq, 0, L);
    out << "sbid " << st(sbid.status) << ", gcd_trace(y,z) " << to_string(t.status) << " with gcd_n = x^n " << xn
        << ", intersect " << to_string(in.kind) << ", gcd " << st(r.gcd.status) << ", noetherian "
        << st(n.verdict.status) << "(" << n.generator_count << ") expected no";
    if (n.verdict.is_yes()) out << " [m_S = xS]";
    return sbid.is_yes() && xn && in.kind == Intersection::Kind::NotFinitelyGenerated && r.gcd.is_no() &&
           n.verdict.is_no();
  });

  criterion("4", [&](std::ostream& out) {
    std::mt19937_64 rng(4);
    std::size_t pairs = 0, both = 0, disagree = 0;
    for (const CycleDynamics* dyn : {&c34, &e56, &pq, &d4}) {
      const std::size_t d = dyn->dimension();
      std::vector<std::pair<ExponentVector, ExponentVector>> sample(200, {ExponentVector(d), ExponentVector(d)});
      for (auto& [a, b] : sample) {
        for (std::size_t i = 0; i < d; ++i) {
          a[i] = static_cast<long>(rng() % 13) - 6;
          b[i] = static_cast<long>(rng() % 13) - 6;
        }
      }
      std::vector<int> outcome(sample.size());  // 0 undecided, 1 agree, 2 disagree
      parallel_for(sample.size(), 0, [&](std::size_t k) {
        GcdTrace t = gcd_trace(*dyn, sample[k].first, sample[k].second, L);
        Verdict p = primitive_residual(*dyn, sample[k].first, sample[k].second, L);
        if (t.status == TraceStatus::Unknown || p.is_unknown()) return;
        outcome[k] = (t.status == TraceStatus::Stabilized) == p.is_yes() ? 1 : 2;
      });
      pairs += sample.size();
      for (int o : outcome) {
        both += o != 0;
        disagree += o == 2;
      }
    }
    out << pairs << " pairs over 4 fixtures, " << both << " decided by both, " << disagree << " disagreements";
    return disagree == 0 && both >= 400;
  });

  criterion("5", [&](std::ostream& out) {
    OracleTally total;
    for (const CycleDynamics* dyn : {&c34, &e56, &pq, &d4}) {
      const bool big = dyn->dimension() > 3;
      OracleTally t = intersection_box_oracle(*dyn, box_vectors(dyn->dimension(), 0, big ? 2 : 6), big ? 3 : 6, L);
      total.pairs += t.pairs;
      total.principal += t.principal;
      total.checked += t.checked;
      total.mismatches += t.mismatches;
      total.undecided += t.undecided;
    }
    out << total.pairs << " pairs, " << total.principal << " principal, " << total.checked << " divisibility checks, "
        << total.mismatches << " mismatches, " << total.undecided << " undecided";
    return total.mismatches == 0 && total.undecided == 0 && total.principal > 0;
  });

  criterion("6", [&](std::ostream& out) {
    std::mt19937_64 rng(6);
    std::size_t steps = 0, failures = 0, programs = 0;
    while (steps < 10000) {
      const std::size_t d = 2 + rng() % 4;
      TransformProgram p = random_program(rng, d);
      ++programs;
      auto frames = expand_frames(p, 30);
      for (std::size_t n = 1; n < frames.size(); ++n, ++steps) {
        Integer det = frames[n].determinant();
        ExponentVector w(d);
        for (std::size_t i = 0; i < d; ++i) w[i] = static_cast<long>(rng() % 41) - 20;
        IntVec c = coords(frames[n], w).entries;
        if (!(det == 1 || det == -1) || frames[n].apply(c) != w) ++failures;
      }
    }
    out << steps << " steps on " << programs << " random programs (d <= 5), " << failures << " failures";
    return failures == 0;
  });

  criterion("7", [&](std::ostream& out) {
    std::size_t differing = 0;
    for (const auto& name : fixtures::names()) {
      if (name == "quadratic-extended-d4") continue;
      CycleDynamics dyn(fixtures::by_name(name));
      const auto vars = variable_names(dyn.program());
      ClassifyOptions o;
      o.seed = 7;
      std::string first = to_json(gcd_classify(dyn, o), vars).dump();
      std::string second = to_json(gcd_classify(dyn, o), vars).dump();
      Json a = to_json(run_fixture(name)), b = to_json(run_fixture(name));
      a.erase("elapsed_ms");
      b.erase("elapsed_ms");
      differing += first != second;
      differing += a.dump() != b.dump();
    }
    out << differing << " differing report pairs (classification and fixture reports, seed 7)";
    return differing == 0;
  });

  int status = 0;
  std::size_t failed = 0;
  for (const auto& l : lines) {
    const bool known = kKnownFailures.count(l.id) > 0;
    if (!l.passed) ++failed;
    if (l.passed == known) status = 1;
    if (!l.passed && known) std::cout << "note: criterion " << l.id << " fails as recorded in the known list\n";
    if (l.passed && known) std::cout << "note: criterion " << l.id << " passes but is listed as a known failure\n";
  }
  std::cout << lines.size() - failed << "/" << lines.size() << " criteria passed\n";
  return status;
}
