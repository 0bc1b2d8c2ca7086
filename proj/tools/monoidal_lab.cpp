// monoidal-lab: command-line front end for the monoidal transform library.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "monoidal/battery.hpp"
#include "monoidal/fixtures.hpp"

using namespace monoidal;

namespace {

struct Settings {
  std::string program_path;
  std::size_t cutoff = Limits{}.cutoff;
  std::size_t periods = Limits{}.periods;
  std::size_t window = ClassifyOptions{}.window;
  std::size_t search_degree = ClassifyOptions{}.search_degree;
  std::uint64_t seed = ClassifyOptions{}.seed;
  std::size_t threads = 0;
  bool json = false;

  Limits limits() const { return {cutoff, periods}; }
  ClassifyOptions options() const {
    ClassifyOptions o;
    o.limits = limits();
    o.window = window;
    o.search_degree = search_degree;
    o.seed = seed;
    o.threads = threads;
    return o;
  }
  Json parameters() const {
    return {{"cutoff", cutoff}, {"periods", periods}, {"window", window},
            {"search_degree", search_degree}, {"seed", seed}};
  }
};

/// A program path, or the name of a built-in fixture.
TransformProgram resolve_program(const std::string& path) {
  if (!std::filesystem::exists(path)) {
    for (const auto& n : fixtures::names())
      if (n == path) return fixtures::by_name(n);
  }
  return load_program(path);
}

struct Output {
  Json result = Json::object();
  std::ostringstream text;
  int status = 0;
};

class Session {
 public:
  explicit Session(const Settings& s) : s_(s) {}

  void load() {
    program_ = resolve_program(s_.program_path);
    dyn_.emplace(program_);
    vars_ = variable_names(program_);
  }
  ExponentVector monomial(const std::string& text) const { return parse_monomial(text, vars_); }
  std::string fmt(const ExponentVector& w) const { return format_monomial(w, vars_); }

  const Settings& s_;
  TransformProgram program_;
  std::optional<CycleDynamics> dyn_;
  std::vector<std::string> vars_;
};

void cmd_validate(Session& ss, Output& out) {
  const auto& p = ss.program_;
  out.result["program"] = to_json(p);
  out.result["class"] = classify_M_i(p);
  out.result["unipotent"] = ss.dyn_->unipotent();
  out.text << "valid program " << (p.name.empty() ? "(unnamed)" : p.name) << ": dimension " << p.dimension
           << ", prefix " << p.prefix.size() << ", cycle " << p.cycle.size() << ", class M_" << classify_M_i(p)
           << "\n";
}

void cmd_stage(Session& ss, Output& out, std::size_t n) {
  StageView v = expand(ss.program_, n);
  Json cols = Json::array();
  out.text << "stage " << n << "\nparameters:";
  for (const auto& c : v.frame.columns()) {
    cols.push_back(monomial_json(c, ss.vars_));
    out.text << " " << ss.fmt(c);
  }
  out.text << "\n";
  out.result["stage"] = n;
  out.result["parameters"] = cols;
  if (v.divisor_monomial) {
    Json locus = Json::array();
    out.text << "locus:";
    for (const auto& m : v.locus_monomials) {
      locus.push_back(monomial_json(m, ss.vars_));
      out.text << " " << ss.fmt(m);
    }
    out.text << "\ndivisor: " << ss.fmt(*v.divisor_monomial) << "\n";
    out.result["locus"] = locus;
    out.result["divisor"] = monomial_json(*v.divisor_monomial, ss.vars_);
  }
}

void cmd_member(Session& ss, Output& out, const std::string& w_text) {
  ExponentVector w = ss.monomial(w_text);
  Verdict v = member_S(*ss.dyn_, w, ss.s_.limits());
  out.result["monomial"] = monomial_json(w, ss.vars_);
  out.result["verdict"] = to_json(v, ss.vars_);
  out.text << ss.fmt(w) << " in S: " << summarize(v, ss.vars_) << "\n";
}

void cmd_divides(Session& ss, Output& out, const std::string& a_text, const std::string& b_text) {
  ExponentVector a = ss.monomial(a_text), b = ss.monomial(b_text);
  Verdict v = divides_S(*ss.dyn_, a, b, ss.s_.limits());
  out.result["a"] = monomial_json(a, ss.vars_);
  out.result["b"] = monomial_json(b, ss.vars_);
  out.result["verdict"] = to_json(v, ss.vars_);
  out.text << ss.fmt(a) << " divides " << ss.fmt(b) << ": " << summarize(v, ss.vars_) << "\n";
}

void cmd_gcd(Session& ss, Output& out, const std::string& a_text, const std::string& b_text) {
  ExponentVector a = ss.monomial(a_text), b = ss.monomial(b_text);
  GcdTrace t = gcd_trace(*ss.dyn_, a, b, ss.s_.limits());
  Verdict p = primitive_residual(*ss.dyn_, a, b, ss.s_.limits());
  out.result["trace"] = to_json(t, ss.vars_);
  out.result["primitive"] = to_json(p, ss.vars_);
  out.text << "gcd trace of " << ss.fmt(a) << ", " << ss.fmt(b) << ": " << to_string(t.status);
  if (t.status == TraceStatus::Stabilized) out.text << " at stage " << t.stable_stage;
  out.text << "\n";
  for (const auto& e : t.entries)
    out.text << "  stage " << e.stage << ": d = " << to_string(e.gcd) << ", residuals " << to_string(e.residual_a)
             << " " << to_string(e.residual_b) << "\n";
  out.text << "gcd " << ss.fmt(t.gcd) << "\n";
  if (t.certificate) {
    Verdict cv = Verdict::no(*t.certificate);
    out.text << "certificate: " << summarize(cv, ss.vars_).substr(4) << "\n";
  }
  out.text << "primitive residual: " << summarize(p, ss.vars_) << "\n";
}

void cmd_intersect(Session& ss, Output& out, const std::vector<std::string>& texts) {
  std::vector<ExponentVector> as;
  Json inputs = Json::array();
  for (const auto& t : texts) {
    as.push_back(ss.monomial(t));
    inputs.push_back(monomial_json(as.back(), ss.vars_));
  }
  Intersection in = intersect_principal(*ss.dyn_, as, ss.s_.limits());
  out.result["inputs"] = inputs;
  out.result["intersection"] = to_json(in, ss.vars_);
  out.text << "intersection: " << to_string(in.kind);
  if (in.generator) out.text << " " << ss.fmt(*in.generator) << "S";
  if (in.diverging) out.text << " (gcd trace of " << ss.fmt(in.diverging->a) << ", " << ss.fmt(in.diverging->b) << " diverges)";
  if (in.kind == Intersection::Kind::Unknown) out.text << " (cutoff " << in.cutoff << ")";
  out.text << "\n";
  if (!in.note.empty()) out.text << in.note << "\n";
}

void cmd_ord(Session& ss, Output& out, const std::string& w_text, std::optional<std::size_t> stage) {
  ExponentVector w = ss.monomial(w_text);
  out.result["monomial"] = monomial_json(w, ss.vars_);
  if (stage) {
    Integer o = ord_n(ss.program_, *stage, w);
    out.result["stage"] = *stage;
    out.result["ord"] = integer_json(o);
    out.text << "ord at stage " << *stage << ": " << o.get_str() << "\n";
  }
  Verdict v = boundary_ord_check(*ss.dyn_, w, ss.s_.limits());
  out.result["eventually_nonnegative"] = to_json(v, ss.vars_);
  out.text << "eventually nonnegative order: " << summarize(v, ss.vars_) << "\n";
}

void cmd_chains(Session& ss, Output& out) {
  const Limits limits = ss.s_.limits();
  ChainCount cc = finitely_many_chains(*ss.dyn_, limits.periods);
  out.result["report"] = to_json(cc.report, ss.vars_);
  out.result["finitely_many"] = to_json(cc.verdict, ss.vars_);
  out.result["count"] = cc.count;
  Json maximal = Json::array();
  out.text << cc.count << " chain(s); finitely many: " << summarize(cc.verdict, ss.vars_) << "\n";
  for (const auto& c : cc.report.chains) {
    Verdict m = chainprime_maximal(*ss.dyn_, c, limits);
    maximal.push_back(to_json(m, ss.vars_));
    out.text << "  " << c.label << " positions";
    for (auto p : c.positions) out.text << " " << p + 1;
    out.text << ", divisors";
    for (std::size_t i = 0; i < c.divisor_monomials.size() && i < 4; ++i)
      out.text << " " << ss.fmt(c.divisor_monomials[i]);
    if (c.divisor_monomials.size() > 4) out.text << " ...";
    out.text << "; maximal: " << summarize(m, ss.vars_) << "\n";
  }
  out.result["maximal"] = maximal;
}

void cmd_classify(Session& ss, Output& out) {
  ClassificationReport r = gcd_classify(*ss.dyn_, ss.s_.options());
  out.result["classification"] = to_json(r, ss.vars_);
  out.text << "class M_" << r.mi_class << ", " << r.chains.count << " chain(s)\n";
  for (const auto& cv : r.chain_verdicts)
    out.text << "  " << cv.label << ": maximal " << to_string(cv.maximal.status) << ", valuation "
             << to_string(cv.valuation.verdict.status) << " (window " << cv.valuation.window << ")\n";
  out.text << "SBID: " << summarize(r.sbid, ss.vars_) << "\n";
  out.text << "GCD: " << to_string(r.gcd.status) << " via " << to_string(r.gcd_path) << "\n";
  if (r.counterexample)
    out.text << "  counterexample " << ss.fmt(r.counterexample->a) << ", " << ss.fmt(r.counterexample->b) << "\n";
  out.text << "sampled " << r.sampled_pairs << " pairs: " << r.sampled_stabilized << " stabilized, "
           << r.sampled_diverging << " diverging, " << r.sampled_unknown << " unknown\n";
  out.text << "maximal ideal: " << to_string(r.noetherian.verdict.status);
  if (r.noetherian.verdict.is_yes()) {
    out.text << ", generators";
    for (const auto& g : r.noetherian.generators) out.text << " " << ss.fmt(g);
  }
  out.text << "\n";
}

void cmd_fixture(const Settings& s, Output& out, const std::string& name) {
  FixtureRun run = run_fixture(name, s.options());
  out.result = to_json(run);
  out.result.erase("elapsed_ms");
  for (const auto& c : run.checks) {
    out.text << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out.text << " (" << c.detail << ")";
    out.text << "\n";
  }
  out.text << name << ": " << (run.passed() ? "pass" : "FAIL") << "\n";
  if (!run.passed()) out.status = 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact experiments on iterated monoidal transforms of regular local rings"};
  app.require_subcommand(1);
  Settings s;
  app.add_option("--cutoff", s.cutoff, "Stage bound for iterative searches")->check(CLI::PositiveNumber);
  app.add_option("--periods", s.periods, "Cycle periods used for window confirmations")->check(CLI::PositiveNumber);
  app.add_option("--window", s.window, "Exponent box B for valuation checks");
  app.add_option("--search-degree", s.search_degree, "Search degree D reported with valuation checks");
  app.add_option("--seed", s.seed, "Seed for the random pair battery");
  app.add_option("--threads", s.threads, "Worker threads (0 = hardware concurrency)");
  app.add_flag("--json", s.json, "Emit a JSON report");

  auto with_program = [&](CLI::App* sub) {
    sub->add_option("program", s.program_path, "Program file or built-in fixture name")->required();
  };

  std::size_t stage_n = 0;
  std::string w_text, a_text, b_text, fixture_name;
  std::vector<std::string> texts;
  std::optional<std::size_t> ord_stage;

  auto* validate = app.add_subcommand("validate", "Parse and validate a program");
  with_program(validate);
  auto* stage = app.add_subcommand("stage", "Show the parameters and locus at stage n");
  with_program(stage);
  stage->add_option("n", stage_n)->required();
  auto* member = app.add_subcommand("member", "Decide membership in the union S");
  with_program(member);
  member->add_option("w", w_text, "Monomial")->required();
  auto* divides = app.add_subcommand("divides", "Decide whether a divides b in S");
  with_program(divides);
  divides->add_option("a", a_text)->required();
  divides->add_option("b", b_text)->required();
  auto* gcd = app.add_subcommand("gcd", "Trace stagewise gcds of a pair");
  with_program(gcd);
  gcd->add_option("a", a_text)->required();
  gcd->add_option("b", b_text)->required();
  auto* intersect = app.add_subcommand("intersect", "Intersect principal ideals");
  with_program(intersect);
  intersect->add_option("monomials", texts)->required()->expected(2, -1);
  auto* ord = app.add_subcommand("ord", "Order of a monomial along the sequence");
  with_program(ord);
  ord->add_option("w", w_text)->required();
  ord->add_option("--stage", ord_stage, "Report ord at this stage");
  auto* chains = app.add_subcommand("chains", "Detect chain primes");
  with_program(chains);
  auto* classify = app.add_subcommand("classify", "GCD / valuation classification");
  with_program(classify);
  auto* fixture = app.add_subcommand("fixture", "Run a built-in fixture battery");
  fixture->add_option("name", fixture_name)->required()->check(CLI::IsMember(fixtures::names()));

  CLI11_PARSE(app, argc, argv);

  const auto start = std::chrono::steady_clock::now();
  Output out;
  CLI::App* sub = app.get_subcommands().front();
  try {
    Session ss(s);
    if (sub != fixture) ss.load();
    if (sub == validate) cmd_validate(ss, out);
    else if (sub == stage) cmd_stage(ss, out, stage_n);
    else if (sub == member) cmd_member(ss, out, w_text);
    else if (sub == divides) cmd_divides(ss, out, a_text, b_text);
    else if (sub == gcd) cmd_gcd(ss, out, a_text, b_text);
    else if (sub == intersect) cmd_intersect(ss, out, texts);
    else if (sub == ord) cmd_ord(ss, out, w_text, ord_stage);
    else if (sub == chains) cmd_chains(ss, out);
    else if (sub == classify) cmd_classify(ss, out);
    else cmd_fixture(s, out, fixture_name);
  } catch (const std::exception& e) {
    if (s.json) {
      Json err{{"schema", kReportSchema}, {"command", sub->get_name()}, {"error", e.what()}};
      std::cout << err.dump(2) << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return 2;
  }
  const double elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (s.json) {
    Json report;
    report["schema"] = kReportSchema;
    std::vector<std::string> args(argv + 1, argv + argc);
    report["command"] = {{"name", sub->get_name()}, {"argv", args}};
    report["parameters"] = s.parameters();
    report["result"] = out.result;
    report["elapsed_ms"] = elapsed;
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << out.text.str();
  }
  return out.status;
}
