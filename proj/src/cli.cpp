#include "bupoly/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>

#include "CLI11.hpp"

#include "bupoly/divisor.hpp"
#include "bupoly/expr.hpp"
#include "bupoly/perfect.hpp"
#include "bupoly/report.hpp"
#include "bupoly/search.hpp"

namespace bupoly::cli {

namespace {

const std::map<std::string, SigmaKind> kKindNames = {
    {"all", SigmaKind::AllDivisors},
    {"unitary", SigmaKind::Unitary},
    {"biunitary", SigmaKind::BiUnitary},
};

const std::map<std::string, SearchMode> kModeNames = {
    {"mersenne", SearchMode::MersenneSpecial},
    {"brute", SearchMode::BruteForce},
    {"guided", SearchMode::GuidedFamilies},
};

const std::map<std::string, OutputFormat> kFormatNames = {
    {"text", OutputFormat::Text},
    {"jsonl", OutputFormat::JsonLines},
};

const std::map<std::string, ExponentSet::Kind> kExponentSetNames = {
    {"es", ExponentSet::Kind::EsTruncated},
    {"full", ExponentSet::Kind::FullRange},
};

std::string sigma_name(SigmaKind kind) {
  switch (kind) {
    case SigmaKind::AllDivisors:
      return "sigma";
    case SigmaKind::Unitary:
      return "sigma*";
    case SigmaKind::BiUnitary:
      return "sigma**";
  }
  return "?";
}

void print_poly_block(std::ostream& out, const Poly& p, const Factorization& f) {
  out << "poly    " << to_symbolic(p) << '\n';
  out << "hex     " << to_hex(p) << '\n';
  out << "factors " << format_factorization(f) << '\n';
  out << "named   " << format_factorization(f, true) << '\n';
  out << "omega   " << f.omega() << '\n';
}

nlohmann::json poly_json(const Poly& p, const Factorization& f) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& factor : f.factors()) factors.push_back(format_factorization(Factorization{factor}));
  return {{"poly_hex", to_hex(p)},
          {"poly_symbolic", to_symbolic(p)},
          {"degree", p.is_zero() ? -1 : static_cast<long long>(p.deg())},
          {"omega", f.omega()},
          {"factors", factors}};
}

struct Options {
  std::string expr;
  std::string kind = "biunitary";
  std::string format = "text";
  std::string out_path;
  std::string mode = "brute";
  std::string exponent_set;
  unsigned omega = 3;
  unsigned max_xy = 0;
  unsigned max_exp = 0;
  unsigned max_irr_deg = 0;
  unsigned max_deg = 0;
  unsigned jobs = 0;
};

unsigned default_jobs() {
  if (const char* env = std::getenv(kJobsEnv)) {
    try {
      return static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      return 0;
    }
  }
  return 0;
}

int cmd_factor(const Options& o, std::ostream& out) {
  const Poly p = parse_poly(o.expr);
  if (p.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
  const Factorization f = factorize(p);
  if (o.format == "jsonl") {
    out << poly_json(p, f).dump() << '\n';
  } else {
    print_poly_block(out, p, f);
  }
  return kOk;
}

int cmd_sigma(const Options& o, std::ostream& out) {
  const SigmaKind kind = kKindNames.at(o.kind);
  const Poly p = parse_poly(o.expr);
  if (p.is_zero()) throw std::domain_error("divisor sum of the zero polynomial");
  const Poly s = sigma_of_kind(kind, p);
  const Factorization f = factorize(s);
  if (o.format == "jsonl") {
    auto j = poly_json(s, f);
    j["kind"] = std::string(to_string(kind));
    j["input_hex"] = to_hex(p);
    out << j.dump() << '\n';
  } else {
    out << sigma_name(kind) << "(" << to_symbolic(p) << ")\n";
    print_poly_block(out, s, f);
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const SigmaKind kind = kKindNames.at(o.kind);
  const Poly p = parse_poly(o.expr);
  if (p.is_zero()) throw std::domain_error("cannot verify the zero polynomial");
  const Poly s = sigma_of_kind(kind, p);
  const bool perfect = s == p;
  if (o.format == "jsonl") {
    nlohmann::json j = {{"kind", std::string(to_string(kind))},
                        {"poly_hex", to_hex(p)},
                        {"perfect", perfect},
                        {"defect_hex", to_hex(s + p)}};
    out << j.dump() << '\n';
  } else if (perfect) {
    out << "PERFECT\n";
  } else {
    out << "NOT PERFECT\n";
    const Poly defect = s + p;
    out << "defect  " << to_symbolic(defect) << "  " << to_hex(defect) << '\n';
  }
  return perfect ? kOk : kNotVerified;
}

int cmd_search(const Options& o, const CLI::App& sub, std::ostream& out) {
  const SearchMode mode = kModeNames.at(o.mode);
  SearchSpec spec;
  switch (mode) {
    case SearchMode::MersenneSpecial:
      spec = SearchSpec::MersenneDefaults();
      break;
    case SearchMode::BruteForce:
      spec = SearchSpec::BruteForceDefaults(o.omega);
      break;
    case SearchMode::GuidedFamilies:
      spec = SearchSpec::GuidedDefaults();
      break;
  }
  auto given = [&](const char* name) { return sub.get_option(name)->count() > 0; };
  if (given("--max-xy")) spec.max_xy_exponent = o.max_xy;
  if (given("--max-exp")) spec.exponents.cap = o.max_exp;
  if (given("--exponent-set")) spec.exponents.kind = kExponentSetNames.at(o.exponent_set);
  if (given("--max-irr-deg")) spec.max_irreducible_degree = o.max_irr_deg;
  if (given("--max-deg")) spec.max_total_degree = o.max_deg;
  spec.jobs = given("--jobs") ? o.jobs : default_jobs();
  spec.validate();

  std::unique_ptr<std::ofstream> file;
  std::ostream* sink = &out;
  if (!o.out_path.empty()) {
    file = std::make_unique<std::ofstream>(o.out_path);
    if (!*file) throw std::runtime_error("cannot open output file '" + o.out_path + "'");
    sink = file.get();
  }
  const auto start = std::chrono::steady_clock::now();
  const auto findings = run_search(spec);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  write_search_report(*sink, spec, findings, seconds, kFormatNames.at(o.format));
  return kOk;
}

int cmd_tables(const Options& o, std::ostream& out) {
  const auto& t = constants();
  const bool json = o.format == "jsonl";
  auto row = [&](const std::string& name, const Poly& p, const Factorization& f) {
    if (json) {
      auto j = poly_json(p, f);
      j["name"] = name;
      out << j.dump() << '\n';
    } else {
      out << std::left << std::setw(4) << name << " = " << std::setw(40) << format_factorization(f, true) << "  "
          << to_hex(p) << '\n';
      out << "       " << format_factorization(f) << '\n';
      out << "       " << to_symbolic(p) << '\n';
    }
  };
  for (std::size_t i = 0; i < t.M.size(); ++i) {
    row("M" + std::to_string(i + 1), t.M[i], Factorization{{t.M[i], 1}});
  }
  for (std::size_t i = 0; i < t.C.size(); ++i) row("C" + std::to_string(i + 1), t.C[i], t.C_factored[i]);
  if (!json) out << "Es   = {2, 4} u {2^n - 1 : n >= 1}\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Divisor sums and bi-unitary perfect polynomials over F2", "bupoly"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);
  Options o;

  auto add_expr = [&](CLI::App* sub) {
    sub->add_option("expr", o.expr, "Polynomial expression, e.g. \"x^3*(x+1)^4*M1\" or 0x17")->required();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "jsonl"}));
  };
  auto add_kind = [&](CLI::App* sub) {
    sub->add_option("--kind", o.kind, "Divisor sum: all, unitary or biunitary")
        ->check(CLI::IsMember({"all", "unitary", "biunitary"}));
  };

  auto* factor = app.add_subcommand("factor", "Factor a polynomial into irreducibles");
  add_expr(factor);
  add_format(factor);

  auto* sigma = app.add_subcommand("sigma", "Evaluate a divisor sum and factor the result");
  add_kind(sigma);
  add_expr(sigma);
  add_format(sigma);

  auto* verify = app.add_subcommand("verify", "Check whether a polynomial is perfect for a divisor sum");
  add_kind(verify);
  add_expr(verify);
  add_format(verify);

  auto* search = app.add_subcommand("search", "Search for bi-unitary perfect polynomials");
  search->add_option("--mode", o.mode, "mersenne, brute or guided")->check(CLI::IsMember({"mersenne", "brute", "guided"}));
  search->add_option("--omega", o.omega, "Brute force: exact number of distinct prime factors (2..4)");
  search->add_option("--max-xy", o.max_xy, "Cap on the exponents of x and x+1");
  search->add_option("--max-exp", o.max_exp, "Cap on the exponents of odd prime factors");
  search->add_option("--exponent-set", o.exponent_set, "Odd exponents: es or full")
      ->check(CLI::IsMember({"es", "full"}));
  search->add_option("--max-irr-deg", o.max_irr_deg, "Brute force: largest degree of odd prime factors");
  search->add_option("--max-deg", o.max_deg, "Cap on the total degree");
  search->add_option("--jobs", o.jobs, std::string("Worker threads (default: $") + kJobsEnv + " or all cores)");
  search->add_option("--out", o.out_path, "Write the report to a file instead of stdout");
  add_format(search);

  auto* tables = app.add_subcommand("tables", "Print M1..M5 and C1..C15");
  add_format(tables);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (factor->parsed()) return cmd_factor(o, out);
    if (sigma->parsed()) return cmd_sigma(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (search->parsed()) return cmd_search(o, *search, out);
    if (tables->parsed()) return cmd_tables(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace bupoly::cli
