#include "monoidal/report.hpp"

namespace monoidal {

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Json intvec_json(const IntVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(integer_json(x));
  return a;
}

Json monomial_json(const ExponentVector& w, const std::vector<std::string>& vars) {
  return {{"text", format_monomial(w, vars)}, {"exponents", intvec_json(w.entries())}};
}

Json to_json(const Verdict& v, const std::vector<std::string>& vars) {
  Json j;
  j["status"] = std::string(to_string(v.status));
  if (v.witness) {
    Json w;
    w["stage"] = v.witness->stage;
    w["coords"] = intvec_json(v.witness->coords);
    if (v.witness->monomial) w["monomial"] = monomial_json(*v.witness->monomial, vars);
    w["detail"] = v.witness->detail;
    j["witness"] = std::move(w);
  }
  if (v.certificate) {
    const Certificate& c = *v.certificate;
    Json cj;
    cj["kind"] = std::string(to_string(c.kind));
    cj["stage"] = c.stage;
    cj["cycle_position"] = c.cycle_position;
    cj["period"] = c.period;
    cj["state"] = intvec_json(c.state);
    cj["increment"] = intvec_json(c.increment);
    if (c.coordinate) cj["parameter"] = *c.coordinate + 1;
    cj["degree"] = c.degree;
    cj["detail"] = c.detail;
    j["certificate"] = std::move(cj);
  }
  if (v.cutoff) j["cutoff"] = *v.cutoff;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

Json to_json(const Limits& l) { return {{"cutoff", l.cutoff}, {"periods", l.periods}}; }

Json to_json(const TransformProgram& p) {
  auto steps = [](const std::vector<TransformStep>& s) {
    Json a = Json::array();
    for (const auto& st : s) {
      Json locus = Json::array();
      for (std::size_t i : st.locus) locus.push_back(i + 1);
      a.push_back({{"locus", locus}, {"divisor", st.divisor + 1}});
    }
    return a;
  };
  return {{"name", p.name},
          {"dimension", p.dimension},
          {"variables", variable_names(p)},
          {"prefix", steps(p.prefix)},
          {"cycle", steps(p.cycle)}};
}

Json to_json(const GcdTrace& t, const std::vector<std::string>& vars, bool with_entries) {
  Json j;
  j["a"] = monomial_json(t.a, vars);
  j["b"] = monomial_json(t.b, vars);
  j["shift"] = monomial_json(t.shift, vars);
  j["status"] = std::string(to_string(t.status));
  if (t.status == TraceStatus::Stabilized) j["stable_stage"] = t.stable_stage;
  j["gcd"] = monomial_json(t.gcd, vars);
  if (t.certificate) j["certificate"] = to_json(Verdict::no(*t.certificate), vars)["certificate"];
  if (t.status == TraceStatus::Unknown) j["cutoff"] = t.cutoff;
  if (with_entries) {
    Json e = Json::array();
    for (const auto& x : t.entries) {
      e.push_back({{"stage", x.stage},
                   {"gcd", intvec_json(x.gcd)},
                   {"residual_a", intvec_json(x.residual_a)},
                   {"residual_b", intvec_json(x.residual_b)}});
    }
    j["entries"] = std::move(e);
  }
  return j;
}

Json to_json(const Intersection& i, const std::vector<std::string>& vars) {
  Json j;
  j["kind"] = std::string(to_string(i.kind));
  if (i.generator) j["generator"] = monomial_json(*i.generator, vars);
  if (i.diverging) j["diverging_trace"] = to_json(*i.diverging, vars, false);
  if (i.kind == Intersection::Kind::Unknown) j["cutoff"] = i.cutoff;
  if (!i.note.empty()) j["note"] = i.note;
  return j;
}

Json to_json(const ChainPrime& c, const std::vector<std::string>& vars) {
  Json divisors = Json::array();
  for (std::size_t i = 0; i < c.stages.size(); ++i) {
    divisors.push_back({{"stage", c.stages[i]}, {"divisor", monomial_json(c.divisor_monomials[i], vars)}});
  }
  return {{"label", c.label}, {"positions", c.positions}, {"period", c.period}, {"prefix", c.prefix},
          {"divisors", divisors}};
}

Json to_json(const ChainReport& r, const std::vector<std::string>& vars) {
  Json chains = Json::array();
  for (const auto& c : r.chains) chains.push_back(to_json(c, vars));
  Json positions = Json::array();
  for (std::size_t q = 0; q < r.ascending.size(); ++q) {
    Json p{{"position", q}, {"ascending", static_cast<bool>(r.ascending[q])}};
    if (r.chain_of_position[q] != ChainReport::npos) p["chain"] = r.chains[r.chain_of_position[q]].label;
    positions.push_back(std::move(p));
  }
  return {{"periods", r.periods}, {"chains", chains}, {"positions", positions}, {"unabsorbed", r.unabsorbed}};
}

Json to_json(const ValuationCheck& v, const std::vector<std::string>& vars) {
  Json j;
  j["verdict"] = to_json(v.verdict, vars);
  j["window"] = v.window;
  j["search_degree"] = v.search_degree;
  j["quotients"] = v.differences;
  j["comparable"] = v.comparable;
  j["comparable_beyond_degree"] = v.beyond_degree;
  j["incomparable"] = v.incomparable;
  j["undecided"] = v.undecided;
  if (v.counterexample) {
    j["counterexample"] = {monomial_json(v.counterexample->first, vars), monomial_json(v.counterexample->second, vars)};
  }
  return j;
}

Json to_json(const NoetherianProbe& n, const std::vector<std::string>& vars) {
  Json gens = Json::array();
  for (const auto& g : n.generators) gens.push_back(monomial_json(g, vars));
  Json j{{"verdict", to_json(n.verdict, vars)}, {"stage", n.stage}};
  if (n.verdict.is_yes()) {
    j["generator_count"] = n.generator_count;
    j["generators"] = gens;
    j["bound_holds"] = n.bound_holds;
  }
  return j;
}

Json to_json(const ClassificationReport& r, const std::vector<std::string>& vars) {
  Json j;
  j["program"] = r.program;
  j["dimension"] = r.dimension;
  j["mi_class"] = r.mi_class;
  j["chains"] = {{"verdict", to_json(r.chains.verdict, vars)},
                 {"count", r.chains.count},
                 {"report", to_json(r.chains.report, vars)}};
  Json per = Json::array();
  for (const auto& c : r.chain_verdicts) {
    per.push_back({{"label", c.label},
                   {"positions", c.positions},
                   {"maximal", to_json(c.maximal, vars)},
                   {"valuation", to_json(c.valuation, vars)}});
  }
  j["chain_primes"] = per;
  j["sbid"] = to_json(r.sbid, vars);
  j["gcd"] = to_json(r.gcd, vars);
  j["gcd_path"] = std::string(to_string(r.gcd_path));
  if (r.counterexample) j["gcd_counterexample"] = to_json(*r.counterexample, vars, false);
  j["samples"] = {{"pairs", r.sampled_pairs},
                  {"stabilized", r.sampled_stabilized},
                  {"diverging", r.sampled_diverging},
                  {"unknown", r.sampled_unknown},
                  {"cross_validated", r.cross_validated}};
  j["noetherian"] = to_json(r.noetherian, vars);
  j["parameters"] = {{"cutoff", r.options.limits.cutoff},
                     {"periods", r.options.limits.periods},
                     {"window", r.options.window},
                     {"search_degree", r.options.search_degree},
                     {"box", r.options.box},
                     {"random_pairs", r.options.random_pairs},
                     {"random_max", r.options.random_max},
                     {"seed", r.options.seed}};
  return j;
}

std::string summarize(const Verdict& v, const std::vector<std::string>& vars) {
  std::string s(to_string(v.status));
  if (v.witness) {
    s += " at stage " + std::to_string(v.witness->stage);
    if (!v.witness->coords.empty()) s += ", coords " + to_string(v.witness->coords);
    if (v.witness->monomial) s += ", monomial " + format_monomial(*v.witness->monomial, vars);
    if (!v.witness->detail.empty()) s += " (" + v.witness->detail + ")";
  }
  if (v.certificate) {
    const Certificate& c = *v.certificate;
    s += ": " + std::string(to_string(c.kind)) + " certificate at stage " + std::to_string(c.stage);
    if (c.period) s += ", period " + std::to_string(c.period);
    if (!c.state.empty()) s += ", state " + to_string(c.state);
    if (!c.increment.empty()) s += ", increment " + to_string(c.increment);
    if (!c.detail.empty()) s += " (" + c.detail + ")";
  }
  if (v.is_unknown()) {
    s += " (cutoff " + std::to_string(v.cutoff.value_or(0)) + ")";
    if (!v.note.empty()) s += " " + v.note;
  }
  return s;
}

}  // namespace monoidal
