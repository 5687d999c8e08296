#include "grasp/serialization.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace grasp {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  json parsed = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (parsed.is_discarded())
    throw ValidationError(ValidationError::Kind::Format, "malformed JSON input");
  return parsed;
}

json poly_to_node(const GrassmannPoly& poly) {
  json node;
  node["generators"] = json::array();
  const auto& reg = *poly.registry();
  for (std::size_t i = 0; i < reg.count(); ++i)
    node["generators"].push_back(reg.label(static_cast<int>(i)).str());
  node["terms"] = json::array();
  for (const auto& [mask, coeff] : poly.terms()) {
    json term;
    term["monomial"] = Monomial{mask}.indices();
    term["re"] = coeff.real();
    term["im"] = coeff.imag();
    node["terms"].push_back(std::move(term));
  }
  return node;
}

GrassmannPoly poly_from_node(const json& node) {
  if (!node.contains("generators") || !node["generators"].is_array())
    throw ValidationError(ValidationError::Kind::Format,
                          "polynomial JSON needs a 'generators' array");
  auto reg = std::make_shared<GeneratorRegistry>();
  for (const auto& entry : node["generators"]) {
    if (!entry.is_string())
      throw ValidationError(ValidationError::Kind::Format,
                            "generator labels must be strings");
    reg->add_generator(
        GeneratorRegistry::parse_label(entry.get<std::string>()));
  }

  GrassmannPoly poly{RegistryPtr(reg)};
  if (!node.contains("terms") || !node["terms"].is_array())
    throw ValidationError(ValidationError::Kind::Format,
                          "polynomial JSON needs a 'terms' array");
  for (const auto& term : node["terms"]) {
    if (!term.contains("monomial") || !term["monomial"].is_array())
      throw ValidationError(ValidationError::Kind::Format,
                            "term needs a 'monomial' index array");
    std::vector<int> sequence;
    for (const auto& index : term["monomial"]) sequence.push_back(index.get<int>());
    const Cplx coeff(term.value("re", 0.0), term.value("im", 0.0));
    const auto canon = canonicalize(*poly.registry(), sequence);
    if (canon.sign == 0) continue;  // repeated generator: the term vanishes
    poly.add_term(canon.monomial.mask,
                  static_cast<double>(canon.sign) * coeff);
  }
  return poly;
}

}  // namespace

std::string poly_to_json(const GrassmannPoly& poly) {
  return poly_to_node(poly).dump(2);
}

GrassmannPoly poly_from_json(const std::string& text) {
  return poly_from_node(parse(text));
}

std::string representation_to_json(const PRepresentation& rep) {
  json node = poly_to_node(rep.poly);
  node["flavor"] = flavor_name(rep.flavor);
  node["modes"] = rep.modes;
  return node.dump(2);
}

PRepresentation representation_from_json(const std::string& text) {
  const json node = parse(text);
  PRepresentation rep;
  const std::string flavor = node.value("flavor", "");
  if (flavor == "p")
    rep.flavor = Flavor::P;
  else if (flavor == "phi")
    rep.flavor = Flavor::Phi;
  else
    throw ValidationError(ValidationError::Kind::Format,
                          "representation flavor must be 'p' or 'phi'");
  rep.modes = node.value("modes", 0);
  if (rep.modes < 1)
    throw ValidationError(ValidationError::Kind::Format,
                          "representation needs a positive mode count");
  rep.poly = poly_from_node(node);
  return rep;
}

std::string state_spec_to_json(const StateSpec& spec) {
  json node;
  node["modes"] = spec.modes;
  node["elements"] = json::array();
  for (const auto& element : spec.elements) {
    json e;
    e["bra"] = element.bra;
    e["ket"] = element.ket;
    e["re"] = element.value.real();
    e["im"] = element.value.imag();
    node["elements"].push_back(std::move(e));
  }
  node["allow_parity_violation"] = spec.allow_parity_violation;
  node["skip_psd_check"] = spec.skip_psd_check;
  return node.dump(2);
}

StateSpec state_spec_from_json(const std::string& text) {
  const json node = parse(text);
  StateSpec spec;
  if (!node.contains("modes") || !node["modes"].is_number_integer())
    throw ValidationError(ValidationError::Kind::Format,
                          "state spec needs an integer 'modes' field");
  spec.modes = node["modes"].get<int>();
  if (!node.contains("elements") || !node["elements"].is_array())
    throw ValidationError(ValidationError::Kind::Format,
                          "state spec needs an 'elements' array");
  for (const auto& e : node["elements"]) {
    if (!e.contains("bra") || !e.contains("ket"))
      throw ValidationError(ValidationError::Kind::Format,
                            "state element needs 'bra' and 'ket' bitstrings");
    spec.elements.push_back({e["bra"].get<std::string>(),
                             e["ket"].get<std::string>(),
                             Cplx(e.value("re", 0.0), e.value("im", 0.0))});
  }
  spec.allow_parity_violation = node.value("allow_parity_violation", false);
  spec.skip_psd_check = node.value("skip_psd_check", false);
  return spec;
}

std::string grid_field_to_json(const GridField& field) {
  json node;
  node["xi_halfwidth"] = field.grid.halfwidth;
  node["points"] = field.grid.points;
  node["values"] = json::array();
  for (const Cplx& v : field.values)
    node["values"].push_back(json::array({v.real(), v.imag()}));
  return node.dump();
}

GridField grid_field_from_json(const std::string& text) {
  const json node = parse(text);
  GridField field;
  field.grid.halfwidth = node.value("xi_halfwidth", 0.0);
  field.grid.points = node.value("points", 0);
  if (!node.contains("values") || !node["values"].is_array())
    throw ValidationError(ValidationError::Kind::Format,
                          "grid field needs a 'values' array");
  for (const auto& v : node["values"])
    field.values.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
  const std::size_t expected = static_cast<std::size_t>(field.grid.points) *
                               field.grid.points;
  if (field.values.size() != expected)
    throw ValidationError(ValidationError::Kind::Format,
                          "grid field value count does not match points^2");
  return field;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ValidationError(ValidationError::Kind::Format,
                          "cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file '" + path + "'");
  out << content;
}

}  // namespace grasp
