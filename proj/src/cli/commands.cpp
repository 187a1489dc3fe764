#include "cli/commands.hpp"

#include "catalog/catalog.hpp"
#include "exactalg/sl2z.hpp"

#include <fstream>
#include <sstream>

namespace cli {

using spaces::SpacePresentation;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

namespace {

struct Loaded {
  SpacePresentation presentation;
  std::vector<spaces::Violation> violations;
};

int load(const std::string& path, Loaded& out, const Options& opt, std::ostream& err) {
  std::string text;
  try {
    text = read_file(path);
    out.presentation = parse_document(text);
  } catch (const ParseError& e) {
    if (opt.format == "json") {
      Json j{{"error", "parse"}, {"message", e.what()}, {"file", path}};
      err << j.dump(2) << "\n";
    } else {
      err << "parse error in " << path << ": " << e.what() << "\n";
    }
    return kParseError;
  }
  out.violations = spaces::validate(out.presentation);
  return kOk;
}

Json violations_json(const std::vector<spaces::Violation>& violations) {
  Json arr = Json::array();
  for (const auto& v : violations) arr.push_back({{"code", v.code}, {"detail", v.detail}});
  return arr;
}

void print_violations(const std::string& path, const std::vector<spaces::Violation>& violations,
                      const Options& opt, std::ostream& out) {
  if (opt.format == "json") {
    Json j{{"file", path}, {"status", "invalid"}, {"violations", violations_json(violations)}};
    out << j.dump(2) << "\n";
    return;
  }
  out << path << ": invalid\n";
  for (const auto& v : violations)
    out << "  " << v.code << (v.detail.empty() ? "" : ": " + v.detail) << "\n";
}

}  // namespace

int cmd_validate(const std::string& path, const Options& opt, std::ostream& out,
                 std::ostream& err) {
  Loaded loaded;
  if (int rc = load(path, loaded, opt, err)) return rc;
  if (!loaded.violations.empty()) {
    print_violations(path, loaded.violations, opt, out);
    return kInvalid;
  }
  if (opt.format == "json")
    out << Json{{"file", path}, {"status", "ok"}}.dump(2) << "\n";
  else
    out << "ok\n";
  return kOk;
}

int cmd_invariants(const std::string& path, const Options& opt, std::ostream& out,
                   std::ostream& err) {
  Loaded loaded;
  if (int rc = load(path, loaded, opt, err)) return rc;
  if (!loaded.violations.empty()) {
    print_violations(path, loaded.violations, opt, err);
    return kInvalid;
  }
  const SpacePresentation& p = loaded.presentation;

  auto d = spaces::digest(p);
  auto [b1, b2] = spaces::quotient_betti(p);
  auto coh = torusbundle::quotient_cohomology(p.orbit_context().induced_h1());
  auto witness = spaces::model_witness(p);
  auto canonical_fib = orbits::fibration_orbit_canonical(p.fibration, p.orbit_context());
  bool condition_one = torusbundle::condition_one_holds(p.orbit_context().induced_h1());

  if (opt.format == "json") {
    Json j;
    j["tau"] = symbolic_to_json(p.tau);
    j["c_dh"] = symbolic_to_json(p.c_dh);
    j["genus"] = p.genus;
    j["isotropy"] = d.isotropy;
    j["monodromy"] = d.monodromy;
    j["fibration"] = p.fibration.to_string();
    j["fibration_canonical"] =
        canonical_fib.canonical ? canonical_fib.canonical->to_string() : "undecided";
    j["derham"] = p.derham.to_string();
    j["b1"] = b1;
    j["b2"] = b2;
    j["h1_quotient"] = coh.h1.to_string();
    j["h2_quotient"] = coh.h2.to_string();
    j["condition_one"] = condition_one;
    j["level_set_seifert"] = witness.level_set.to_string();
    j["level_set_euler"] =
        exactalg::rational_to_string(seifert::euler_number(witness.level_set));
    out << j.dump(2) << "\n";
    return kOk;
  }

  out << "tau: " << p.tau.to_string() << "\n";
  out << "c_dh: " << p.c_dh.to_string() << "\n";
  out << "genus: " << p.genus << "\n";
  out << "isotropy: " << d.isotropy << "\n";
  out << "monodromy: " << d.monodromy << "\n";
  out << "fibration: " << p.fibration.to_string() << "\n";
  out << "fibration_canonical: "
      << (canonical_fib.canonical ? canonical_fib.canonical->to_string() : "undecided") << "\n";
  out << "derham: " << p.derham.to_string() << "\n";
  out << "b1: " << b1 << "\n";
  out << "b2: " << b2 << "\n";
  out << "h1_quotient: " << coh.h1.to_string() << "\n";
  out << "h2_quotient: " << coh.h2.to_string() << "\n";
  out << "condition_one: " << (condition_one ? "true" : "false") << "\n";
  out << "level_set_seifert: " << witness.level_set.to_string() << "\n";
  out << "level_set_euler: "
      << exactalg::rational_to_string(seifert::euler_number(witness.level_set)) << "\n";
  return kOk;
}

int cmd_compare(const std::string& path_a, const std::string& path_b, const Options& opt,
                std::ostream& out, std::ostream& err) {
  Loaded a, b;
  if (int rc = load(path_a, a, opt, err)) return rc;
  if (int rc = load(path_b, b, opt, err)) return rc;
  bool invalid = false;
  if (!a.violations.empty()) {
    print_violations(path_a, a.violations, opt, err);
    invalid = true;
  }
  if (!b.violations.empty()) {
    print_violations(path_b, b.violations, opt, err);
    invalid = true;
  }
  if (invalid) return kInvalid;

  auto report = spaces::isomorphic_compare(a.presentation, b.presentation, opt.budget());
  if (opt.format == "json") {
    Json j;
    switch (report.verdict.kind()) {
      case monodromy::Verdict::Kind::Equivalent: j["verdict"] = "equivalent"; break;
      case monodromy::Verdict::Kind::Distinct: j["verdict"] = "distinct"; break;
      case monodromy::Verdict::Kind::Undecided: j["verdict"] = "undecided"; break;
    }
    if (!report.invariant.empty()) j["invariant"] = report.invariant;
    if (!report.verdict.detail().empty()) j["detail"] = report.verdict.detail();
    out << j.dump(2) << "\n";
  } else {
    out << report.verdict.to_string();
    if (report.verdict.is_distinct()) out << " [differing invariant: " << report.invariant << "]";
    out << "\n";
  }
  switch (report.verdict.kind()) {
    case monodromy::Verdict::Kind::Equivalent: return kOk;
    case monodromy::Verdict::Kind::Distinct: return kDistinct;
    case monodromy::Verdict::Kind::Undecided: return kUndecided;
  }
  return kUndecided;
}

int cmd_model(const std::string& args_path, const Options& opt, std::ostream& out,
              std::ostream& err) {
  SpacePresentation p;
  try {
    Json j = Json::parse(read_file(args_path));
    // accept either bare invariants or a full document
    p = j.contains("presentation") ? parse_document(j.dump()) : presentation_from_json(j);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const nlohmann::json::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  }
  auto violations = spaces::validate(p);
  if (!violations.empty()) {
    print_violations(args_path, violations, opt, err);
    return kInvalid;
  }
  out << serialize_document(p, /*include_witness=*/true);
  return kOk;
}

namespace {

exactalg::SymbolicReal param_symbolic(const std::map<std::string, std::string>& params,
                                      const std::string& key, const std::string& fallback) {
  auto it = params.find(key);
  return exactalg::parse_symbolic(it == params.end() ? fallback : it->second);
}

exactalg::Int param_int(const std::map<std::string, std::string>& params, const std::string& key,
                        const std::string& fallback) {
  auto it = params.find(key);
  return exactalg::parse_int(it == params.end() ? fallback : it->second);
}

}  // namespace

int cmd_catalog(const std::string& name, const std::map<std::string, std::string>& params,
                const Options& opt, std::ostream& out, std::ostream& err) {
  SpacePresentation p;
  try {
    if (name == "t2xs2") {
      catalog::DiagonalParams dp{param_symbolic(params, "A", "A"), param_symbolic(params, "B", "B"),
                                 param_int(params, "k", "1"), param_int(params, "l", "0")};
      p = catalog::torus_times_sphere(dp);
    } else if (name == "t2xt2") {
      catalog::DiagonalParams dp{param_symbolic(params, "A", "A"), param_symbolic(params, "B", "B"),
                                 param_int(params, "k", "1"), param_int(params, "l", "0")};
      exactalg::SymbolicReal tau;
      if (params.contains("tau")) {
        tau = exactalg::parse_symbolic(params.at("tau"));
      } else if (dp.l == 0) {
        // P = (A k / 2 pi) Z exactly
        tau = dp.area_a.scaled(exactalg::Rational(dp.k, 2)) *
              exactalg::SymbolicReal::term(exactalg::Rational(1),
                                           exactalg::Monomial::symbol("pi", -1));
      } else {
        err << "t2xt2 with l != 0 needs an explicit tau parameter\n";
        return kInvalid;
      }
      p = catalog::torus_times_torus(dp, tau);
    } else if (name == "kodaira-thurston") {
      p = catalog::kodaira_thurston();
    } else if (name == "t4-family") {
      p = catalog::t4_family(param_symbolic(params, "A", "A"), param_symbolic(params, "B", "B"));
    } else {
      err << "unknown catalog entry: " << name
          << " (available: t2xs2, t2xt2, kodaira-thurston, t4-family)\n";
      return kParseError;
    }
  } catch (const std::invalid_argument& e) {
    err << "bad catalog parameters: " << e.what() << "\n";
    return kParseError;
  } catch (const std::domain_error& e) {
    err << "invalid catalog arguments: " << e.what() << "\n";
    return kInvalid;
  }
  out << serialize_document(p, /*include_witness=*/true);
  return kOk;
}

}  // namespace cli
