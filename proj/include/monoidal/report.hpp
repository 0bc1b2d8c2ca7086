#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "monoidal/classify.hpp"
#include "monoidal/io.hpp"

namespace monoidal {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "monoidal-lab.report/1";

/// Report renderers. Monomials are printed over `vars`; parameter indices in
/// certificates are 1-based, stage indices 0-based.
Json integer_json(const Integer& x);
Json intvec_json(const IntVec& v);
Json monomial_json(const ExponentVector& w, const std::vector<std::string>& vars);
Json to_json(const Verdict& v, const std::vector<std::string>& vars);
Json to_json(const Limits& l);
Json to_json(const TransformProgram& p);
Json to_json(const GcdTrace& t, const std::vector<std::string>& vars, bool with_entries = true);
Json to_json(const Intersection& i, const std::vector<std::string>& vars);
Json to_json(const ChainPrime& c, const std::vector<std::string>& vars);
Json to_json(const ChainReport& r, const std::vector<std::string>& vars);
Json to_json(const ValuationCheck& v, const std::vector<std::string>& vars);
Json to_json(const NoetherianProbe& n, const std::vector<std::string>& vars);
Json to_json(const ClassificationReport& r, const std::vector<std::string>& vars);

/// One-line human summary of a verdict.
std::string summarize(const Verdict& v, const std::vector<std::string>& vars);

}  // namespace monoidal
