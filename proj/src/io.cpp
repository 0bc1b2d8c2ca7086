#include "monoidal/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace monoidal {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw InputError("line " + std::to_string(line) + ": " + msg);
}

std::size_t parse_index(const std::string& tok, std::size_t line) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
    fail(line, "expected a positive index, got '" + tok + "'");
  }
  unsigned long v = std::stoul(tok);
  if (v == 0) fail(line, "indices are 1-based");
  return v - 1;
}

TransformStep parse_step(const std::string& tok, std::size_t line) {
  auto open = tok.find('{'), close = tok.find('}');
  if (open != 0 || close == std::string::npos || close + 1 >= tok.size() || tok[close + 1] != ':') {
    fail(line, "malformed step '" + tok + "', expected {i,j,...}:k");
  }
  TransformStep st;
  std::string inner = tok.substr(1, close - 1);
  std::stringstream ss(inner);
  std::string part;
  while (std::getline(ss, part, ',')) st.locus.push_back(parse_index(trim(part), line));
  st.divisor = parse_index(tok.substr(close + 2), line);
  return st;
}

}  // namespace

TransformProgram parse_program(std::string_view text) {
  TransformProgram p;
  bool header = false, have_dimension = false;
  std::vector<std::size_t> prefix_lines, cycle_lines;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line = std::string(text.substr(start, end - start));
    start = end + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    std::stringstream ss(line);
    std::string key;
    ss >> key;
    std::vector<std::string> args;
    for (std::string a; ss >> a;) args.push_back(a);
    if (!header) {
      if (key != "monoidal-program" || args.size() != 1 || args[0] != "v1") {
        fail(lineno, "expected header 'monoidal-program v1'");
      }
      header = true;
    } else if (key == "name") {
      if (args.size() != 1) fail(lineno, "name takes one word");
      p.name = args[0];
    } else if (key == "dimension") {
      if (args.size() != 1) fail(lineno, "dimension takes one integer");
      p.dimension = parse_index(args[0], lineno) + 1;
      have_dimension = true;
    } else if (key == "variables") {
      p.variables = args;
    } else if (key == "prefix" || key == "cycle") {
      auto& steps = key == "prefix" ? p.prefix : p.cycle;
      auto& lines = key == "prefix" ? prefix_lines : cycle_lines;
      for (const auto& a : args) {
        steps.push_back(parse_step(a, lineno));
        lines.push_back(lineno);
      }
    } else {
      fail(lineno, "unknown directive '" + key + "'");
    }
    if (end == text.size()) break;
  }
  if (!header) throw InputError("line 1: expected header 'monoidal-program v1'");
  if (!have_dimension) throw InputError("missing 'dimension' line");
  auto violations = validate(p);
  if (!violations.empty()) {
    const Violation& v = violations.front();
    std::string where = v.where;
    std::size_t line = 0;
    auto index_of = [&](const std::string& prefix) -> std::size_t {
      return std::stoul(where.substr(prefix.size())) - 1;
    };
    if (where.rfind("prefix step ", 0) == 0) line = prefix_lines[index_of("prefix step ")];
    if (where.rfind("cycle step ", 0) == 0) line = cycle_lines[index_of("cycle step ")];
    std::string msg = where == "program" ? v.message : where + ": " + v.message;
    if (line) fail(line, msg);
    throw InputError(msg);
  }
  return p;
}

TransformProgram load_program(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read program file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_program(ss.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

namespace {

void write_steps(std::ostream& os, const char* key, const std::vector<TransformStep>& steps) {
  os << key;
  for (const auto& s : steps) {
    os << " {";
    for (std::size_t i = 0; i < s.locus.size(); ++i) os << (i ? "," : "") << s.locus[i] + 1;
    os << "}:" << s.divisor + 1;
  }
  os << '\n';
}

}  // namespace

std::string serialize_program(const TransformProgram& p) {
  std::ostringstream os;
  os << "monoidal-program v1\n";
  if (!p.name.empty()) os << "name " << p.name << '\n';
  os << "dimension " << p.dimension << '\n';
  if (!p.variables.empty()) {
    os << "variables";
    for (const auto& v : p.variables) os << ' ' << v;
    os << '\n';
  }
  if (!p.prefix.empty()) write_steps(os, "prefix", p.prefix);
  write_steps(os, "cycle", p.cycle);
  return os.str();
}

std::vector<std::string> variable_names(const TransformProgram& p) {
  if (!p.variables.empty()) return p.variables;
  std::vector<std::string> v;
  for (std::size_t i = 0; i < p.dimension; ++i) v.push_back("x" + std::to_string(i + 1));
  return v;
}

namespace {

class MonomialParser {
 public:
  MonomialParser(std::string_view s, const std::vector<std::string>& vars) : s_(s), vars_(vars) {}

  ExponentVector parse() {
    ExponentVector w = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return w;
  }

 private:
  std::string_view s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;

  [[noreturn]] void error(const std::string& msg) const {
    throw InputError("monomial '" + std::string(s_) + "' at column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Integer integer() {
    skip();
    std::size_t b = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) error("expected an integer");
    std::string tok(s_.substr(b, pos_ - b));
    if (tok[0] == '+') tok.erase(0, 1);
    return Integer(tok);
  }

  ExponentVector expr() {
    ExponentVector w = factor();
    while (true) {
      if (eat('*')) {
        w += factor();
      } else if (eat('/')) {
        w -= factor();
      } else {
        return w;
      }
    }
  }

  ExponentVector factor() {
    ExponentVector base = atom();
    if (eat('^')) {
      Integer e = integer();
      base = e * base;
    }
    return base;
  }

  ExponentVector atom() {
    skip();
    if (eat('(')) {
      ExponentVector w = expr();
      if (!eat(')')) error("expected ')'");
      return w;
    }
    if (pos_ < s_.size() && s_[pos_] == '1') {
      ++pos_;
      return ExponentVector(vars_.size());
    }
    std::size_t b = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    std::string name(s_.substr(b, pos_ - b));
    if (name.empty()) error("expected a variable");
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i] == name) return ExponentVector::unit(vars_.size(), i);
    }
    pos_ = b;
    error("unknown variable '" + name + "'");
  }
};

bool looks_like_tuple(std::string_view s) {
  std::string t = trim(s);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') return false;
  return t.find_first_not_of("()0123456789,-+ ") == std::string::npos && t.find(',') != std::string::npos;
}

}  // namespace

ExponentVector parse_monomial(std::string_view text, const std::vector<std::string>& variables) {
  if (looks_like_tuple(text)) {
    std::string t = trim(text);
    t = t.substr(1, t.size() - 2);
    std::stringstream ss(t);
    IntVec entries;
    for (std::string part; std::getline(ss, part, ',');) {
      part = trim(part);
      if (!part.empty() && part[0] == '+') part.erase(0, 1);
      if (part.empty() || part.find_first_not_of("-0123456789") != std::string::npos || part == "-") {
        throw InputError("malformed exponent tuple '" + std::string(text) + "'");
      }
      entries.emplace_back(part);
    }
    if (entries.size() != variables.size()) {
      throw InputError("exponent tuple has " + std::to_string(entries.size()) + " entries, expected " +
                       std::to_string(variables.size()));
    }
    return ExponentVector(std::move(entries));
  }
  return MonomialParser(text, variables).parse();
}

std::string format_monomial(const ExponentVector& w, const std::vector<std::string>& variables) {
  std::vector<std::string> num, den;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Integer& e = w[i];
    if (e == 0) continue;
    Integer a = abs(e);
    std::string term = variables[i] + (a == 1 ? "" : "^" + a.get_str());
    (sgn(e) > 0 ? num : den).push_back(term);
  }
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "*" : "") + v[i];
    return s;
  };
  std::string top = num.empty() ? "1" : join(num);
  if (den.empty()) return top;
  std::string bottom = den.size() == 1 ? den[0] : "(" + join(den) + ")";
  return top + "/" + bottom;
}

}  // namespace monoidal
