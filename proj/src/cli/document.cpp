#include "cli/document.hpp"

namespace cli {

using exactalg::Int;
using exactalg::IntMatrix;
using exactalg::Monomial;
using exactalg::SymbolicReal;

namespace {

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  std::size_t rows = j.size();
  std::size_t cols = rows == 0 ? 0 : j.at(0).size();
  std::vector<Int> entries;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) throw ParseError("ragged matrix rows");
    for (const auto& e : row) entries.push_back(exactalg::parse_int(e.get<std::string>()));
  }
  return IntMatrix(rows, cols, std::move(entries));
}

Json monodromy_to_json(const monodromy::MappingClassRep& rep) {
  Json j;
  if (std::holds_alternative<monodromy::IdentityClass>(rep)) {
    j["type"] = "identity";
  } else if (const auto* t = std::get_if<monodromy::TorusLinear>(&rep)) {
    j["type"] = "torus_linear";
    j["matrix"] = matrix_to_json(t->m);
  } else {
    const auto& h = std::get<monodromy::HomologyPermutation>(rep);
    j["type"] = "homology_permutation";
    Json perm = Json::array();
    for (std::size_t v : h.perm) perm.push_back(v);
    j["perm"] = perm;
    j["h1"] = matrix_to_json(h.h1);
  }
  return j;
}

monodromy::MappingClassRep monodromy_from_json(const Json& j) {
  std::string type = j.at("type").get<std::string>();
  if (type == "identity") return monodromy::IdentityClass{};
  if (type == "torus_linear") return monodromy::TorusLinear{matrix_from_json(j.at("matrix"))};
  if (type == "homology_permutation") {
    monodromy::HomologyPermutation h;
    for (const auto& v : j.at("perm")) h.perm.push_back(v.get<std::size_t>());
    h.h1 = matrix_from_json(j.at("h1"));
    return h;
  }
  throw ParseError("unknown monodromy type: " + type);
}

Json isotropy_to_json(const seifert::IsotropyData& d) {
  Json j = Json::array();
  for (const auto& c : d.classes()) j.push_back(Json::array({c.n.str(), c.a.str()}));
  return j;
}

seifert::IsotropyData isotropy_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("isotropy must be an array of [n, a] pairs");
  std::vector<seifert::CoprimeResidueClass> classes;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw ParseError("isotropy entry must be [n, a]");
    classes.push_back({exactalg::parse_int(pair.at(0).get<std::string>()),
                       exactalg::parse_int(pair.at(1).get<std::string>())});
  }
  return seifert::IsotropyData(std::move(classes));
}

template <typename T>
T get_field(const Json& j, const char* name) {
  if (!j.contains(name)) throw ParseError(std::string("missing field: ") + name);
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("field ") + name + ": " + e.what());
  }
}

}  // namespace

Json symbolic_to_json(const SymbolicReal& x) {
  Json j = Json::object();
  for (const auto& [m, c] : x.terms()) j[m.to_string()] = exactalg::rational_to_string(c);
  return j;
}

SymbolicReal symbolic_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("symbolic value must be a {monomial: coefficient} map");
  SymbolicReal out;
  for (const auto& [key, value] : j.items()) {
    try {
      out = out + SymbolicReal::term(exactalg::parse_rational(value.get<std::string>()),
                                     Monomial::parse(key));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("symbolic term '") + key + "': " + e.what());
    }
  }
  return out;
}

Json presentation_to_json(const spaces::SpacePresentation& p) {
  Json j;
  j["tau"] = symbolic_to_json(p.tau);
  j["c_dh"] = symbolic_to_json(p.c_dh);
  j["genus"] = p.genus;
  j["isotropy"] = isotropy_to_json(p.isotropy);
  j["monodromy"] = monodromy_to_json(p.monodromy);
  Json fib = Json::array();
  for (const Int& v : p.fibration.coords) fib.push_back(v.str());
  j["fibration"] = fib;
  Json der = Json::array();
  for (const auto& v : p.derham.coords) der.push_back(symbolic_to_json(v));
  j["derham"] = der;
  return j;
}

spaces::SpacePresentation presentation_from_json(const Json& j) {
  spaces::SpacePresentation p;
  if (!j.contains("tau")) throw ParseError("missing field: tau");
  p.tau = symbolic_from_json(j.at("tau"));
  if (!j.contains("c_dh")) throw ParseError("missing field: c_dh");
  p.c_dh = symbolic_from_json(j.at("c_dh"));
  p.genus = get_field<int>(j, "genus");
  if (!j.contains("isotropy")) throw ParseError("missing field: isotropy");
  p.isotropy = isotropy_from_json(j.at("isotropy"));
  if (!j.contains("monodromy")) throw ParseError("missing field: monodromy");
  try {
    p.monodromy = monodromy_from_json(j.at("monodromy"));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("monodromy: ") + e.what());
  }
  if (!j.contains("fibration")) throw ParseError("missing field: fibration");
  for (const auto& v : j.at("fibration"))
    p.fibration.coords.push_back(exactalg::parse_int(v.get<std::string>()));
  if (!j.contains("derham")) throw ParseError("missing field: derham");
  for (const auto& v : j.at("derham")) p.derham.coords.push_back(symbolic_from_json(v));
  return p;
}

Json document_for(const spaces::SpacePresentation& p, bool include_witness) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["presentation"] = presentation_to_json(p);
  if (include_witness) {
    auto witness = spaces::model_witness(p);
    Json w;
    w["level_set_seifert"] = {{"genus", witness.level_set.genus},
                              {"b", witness.level_set.b.str()},
                              {"exceptional", isotropy_to_json(witness.level_set.exceptional)}};
    w["euler_number"] = exactalg::rational_to_string(seifert::euler_number(witness.level_set));
    w["gluing_interval"] = symbolic_to_json(witness.period);
    w["gluing_class"] = monodromy_to_json(witness.gluing);
    j["witness"] = w;
  }
  return j;
}

std::string serialize_document(const spaces::SpacePresentation& p, bool include_witness) {
  return document_for(p, include_witness).dump(2) + "\n";
}

spaces::SpacePresentation parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.contains("schema_version") || !j.at("schema_version").is_string())
    throw ParseError("missing schema_version");
  if (j.at("schema_version").get<std::string>() != kSchemaVersion)
    throw ParseError("unsupported schema_version: " + j.at("schema_version").get<std::string>());
  if (!j.contains("presentation")) throw ParseError("missing presentation");
  try {
    return presentation_from_json(j.at("presentation"));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed presentation: ") + e.what());
  }
}

}  // namespace cli
