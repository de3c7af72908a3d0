#include "bupoly/report.hpp"

#include <iomanip>
#include <sstream>

#include "bupoly/expr.hpp"

namespace bupoly {

std::string tool_version() {
#ifdef BUPOLY_VERSION
  return BUPOLY_VERSION;
#else
  return "dev";
#endif
}

namespace {

nlohmann::json factor_list(const Factorization& f) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& factor : f.factors()) arr.push_back(format_factorization(Factorization{factor}));
  return arr;
}

Factorization parse_factor_list(const nlohmann::json& arr) {
  std::vector<Factor> out;
  for (const auto& item : arr) {
    // Each entry is "base" or "base^e" with base "x" or "(...)".
    const std::string s = item.get<std::string>();
    const auto caret = s.rfind('^');
    const bool has_exp = caret != std::string::npos && s.find(')', caret) == std::string::npos;
    const std::string base_text = has_exp ? s.substr(0, caret) : s;
    const unsigned e = has_exp ? static_cast<unsigned>(std::stoul(s.substr(caret + 1))) : 1u;
    out.push_back({parse_poly(base_text), e});
  }
  return Factorization(std::move(out));
}

std::string exponent_set_name(const ExponentSet& e) {
  return e.kind == ExponentSet::Kind::EsTruncated ? "Es" : "full";
}

}  // namespace

nlohmann::json finding_to_json(const Finding& f) {
  return {
      {"type", "finding"},
      {"poly_hex", to_hex(f.poly)},
      {"poly_symbolic", to_symbolic(f.poly)},
      {"degree", f.poly.deg()},
      {"omega", f.factors.omega()},
      {"factors", factor_list(f.factors)},
      {"certificate", factor_list(f.certificate)},
      {"tag", f.tag},
  };
}

Finding finding_from_json(const nlohmann::json& j) {
  Finding f;
  f.poly = from_hex(j.at("poly_hex").get<std::string>());
  if (parse_poly(j.at("poly_symbolic").get<std::string>()) != f.poly) {
    throw std::invalid_argument("finding record: hex and symbolic forms disagree");
  }
  f.factors = parse_factor_list(j.at("factors"));
  f.certificate = parse_factor_list(j.at("certificate"));
  if (f.factors.expand() != f.poly) throw std::invalid_argument("finding record: factors do not multiply out");
  f.tag = j.at("tag").get<std::string>();
  return f;
}

nlohmann::json spec_to_json(const SearchSpec& spec) {
  return {
      {"type", "spec"},
      {"tool_version", tool_version()},
      {"mode", std::string(to_string(spec.mode))},
      {"max_xy_exponent", spec.max_xy_exponent},
      {"exponent_set", exponent_set_name(spec.exponents)},
      {"max_odd_exponent", spec.exponents.cap},
      {"max_irreducible_degree", spec.max_irreducible_degree},
      {"max_total_degree", spec.max_total_degree},
      {"omega", spec.omega_max},
      {"jobs", spec.jobs},
  };
}

std::string render_finding_text(const Finding& f) {
  std::ostringstream os;
  os << std::left << std::setw(12) << f.tag << " deg " << std::setw(3) << f.poly.deg() << " omega "
     << f.factors.omega() << "  " << format_factorization(f.factors, true) << "  " << to_hex(f.poly);
  return os.str();
}

void write_search_report(std::ostream& out, const SearchSpec& spec, const std::vector<Finding>& findings,
                         double seconds, OutputFormat format) {
  if (format == OutputFormat::JsonLines) {
    out << spec_to_json(spec).dump() << '\n' << std::flush;
    for (const auto& f : findings) out << finding_to_json(f).dump() << '\n' << std::flush;
    nlohmann::json summary = {{"type", "summary"}, {"count", findings.size()}, {"seconds", seconds}};
    out << summary.dump() << '\n' << std::flush;
    return;
  }
  out << "bupoly " << tool_version() << " search mode=" << to_string(spec.mode);
  switch (spec.mode) {
    case SearchMode::MersenneSpecial:
      out << " max_xy=" << spec.max_xy_exponent << " exponents=" << exponent_set_name(spec.exponents)
          << "<=" << spec.exponents.cap;
      break;
    case SearchMode::BruteForce:
      out << " omega=" << spec.omega_max << " max_xy=" << spec.max_xy_exponent
          << " max_exp=" << spec.exponents.cap << " max_irr_deg=" << spec.max_irreducible_degree
          << " max_deg=" << spec.max_total_degree;
      break;
    case SearchMode::GuidedFamilies:
      break;
  }
  out << '\n' << std::flush;
  for (const auto& f : findings) out << render_finding_text(f) << '\n' << std::flush;
  out << findings.size() << " finding(s) in " << std::fixed << std::setprecision(3) << seconds << " s\n";
}

}  // namespace bupoly
