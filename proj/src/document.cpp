#include "icds/document.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"

namespace icds {

namespace {

using Json = nlohmann::ordered_json;

const std::set<std::string> kIcFields = {"kind",      "propositions",
                                         "worlds",    "measure",
                                         "psi_basis", "incidence"};
const std::set<std::string> kDsFields = {"kind",      "propositions",
                                         "worlds",    "chi_basis",
                                         "measure",   "incidence"};

[[noreturn]] void fail(const std::string& what) { throw DocumentError(what); }

const Json& field(const Json& doc, const char* name) {
  const auto it = doc.find(name);
  if (it == doc.end()) fail(std::string("missing field '") + name + "'");
  return *it;
}

std::vector<std::string> string_list(const Json& j, const std::string& what) {
  if (!j.is_array()) fail(what + " must be a list of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) fail(what + " must be a list of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

WorldSet world_set(const Json& j, const SampleSpace& space,
                   const std::string& what) {
  WorldSet out;
  for (const auto& name : string_list(j, what)) {
    const auto w = space.index_of(name);
    if (!w) fail(what + " names unknown world '" + name + "'");
    if (out.contains(*w)) fail(what + " lists world '" + name + "' twice");
    out |= WorldSet::single(*w);
  }
  return out;
}

Formula formula_field(const std::string& text, const Language& lang,
                      const std::string& what) {
  try {
    return parse_formula(text, lang);
  } catch (const Error& e) {
    fail(what + ": " + e.what());
  }
}

std::vector<Rational> measure_weights(const Json& j, std::size_t n_blocks) {
  if (!j.is_object()) fail("measure must be a map from block index to rational");
  std::vector<std::optional<Rational>> slots(n_blocks);
  for (const auto& [key, value] : j.items()) {
    std::size_t index = 0;
    const auto [end, ec] =
        std::from_chars(key.data(), key.data() + key.size(), index);
    if (ec != std::errc{} || end != key.data() + key.size() || key.empty())
      fail("measure key '" + key + "' is not a block index");
    if (index >= n_blocks)
      fail("measure key " + key + " is out of range (" +
           std::to_string(n_blocks) + " blocks)");
    if (!value.is_string()) fail("measure value for block " + key + " must be a string like \"1/2\"");
    try {
      slots[index] = Rational::parse(value.get<std::string>());
    } catch (const Error& e) {
      fail("measure value for block " + key + ": " + e.what());
    }
  }
  std::vector<Rational> out;
  for (std::size_t k = 0; k < n_blocks; ++k) {
    if (!slots[k]) fail("measure has no weight for block " + std::to_string(k));
    out.push_back(*slots[k]);
  }
  return out;
}

ProbabilityStructure build(const Json& doc) {
  if (!doc.is_object()) fail("document must be an object");
  const Json& kind_json = field(doc, "kind");
  if (!kind_json.is_string()) fail("kind must be \"ic\" or \"ds\"");
  const std::string kind = kind_json.get<std::string>();
  if (kind != "ic" && kind != "ds")
    fail("kind must be \"ic\" or \"ds\", got \"" + kind + "\"");
  const bool ic = kind == "ic";

  const auto& allowed = ic ? kIcFields : kDsFields;
  for (const auto& [key, value] : doc.items()) {
    if (allowed.count(key)) continue;
    if (key == "chi_basis")
      fail("redundant field 'chi_basis': ic documents imply chi = 2^S");
    if (key == "psi_basis")
      fail("redundant field 'psi_basis': ds documents imply psi = 2^At");
    fail("unknown field '" + key + "'");
  }

  std::optional<Language> lang_opt;
  std::optional<SampleSpace> space_opt;
  try {
    lang_opt.emplace(string_list(field(doc, "propositions"), "propositions"));
    space_opt.emplace(string_list(field(doc, "worlds"), "worlds"));
  } catch (const DocumentError&) {
    throw;
  } catch (const Error& e) {
    fail(e.what());
  }
  const Language& lang = *lang_opt;
  const SampleSpace& space = *space_opt;

  const Json& incidence_json = field(doc, "incidence");
  if (!incidence_json.is_object())
    fail("incidence must be a map from formula to world list");

  if (ic) {
    const Json& psi_json = field(doc, "psi_basis");
    std::vector<Formula> blocks;
    for (const auto& text : string_list(psi_json, "psi_basis"))
      blocks.push_back(formula_field(text, lang, "psi_basis entry '" + text + "'"));
    std::vector<std::optional<WorldSet>> images(blocks.size());
    for (const auto& [key, value] : incidence_json.items()) {
      const Formula f = formula_field(key, lang, "incidence key '" + key + "'");
      const auto it = std::find(blocks.begin(), blocks.end(), f);
      if (it == blocks.end())
        fail("incidence key '" + key + "' is not a psi_basis block");
      auto& slot = images[static_cast<std::size_t>(it - blocks.begin())];
      if (slot) fail("incidence key '" + key + "' is given twice");
      slot = world_set(value, space, "incidence of '" + key + "'");
    }
    std::vector<WorldSet> resolved;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      if (!images[k])
        fail("incidence missing for psi_basis block '" +
             format_formula(blocks[k]) + "'");
      resolved.push_back(*images[k]);
    }
    auto weights = measure_weights(field(doc, "measure"), space.size());
    return ProbabilityStructure::incidence_calculus(
        space, std::move(weights), FormulaAlgebra(lang, std::move(blocks)),
        std::move(resolved));
  }

  std::vector<WorldSet> chi;
  const Json& chi_json = field(doc, "chi_basis");
  if (!chi_json.is_array()) fail("chi_basis must be a list of world lists");
  for (std::size_t k = 0; k < chi_json.size(); ++k)
    chi.push_back(world_set(chi_json[k], space,
                            "chi_basis block " + std::to_string(k)));
  auto weights = measure_weights(field(doc, "measure"), chi.size());

  std::vector<std::optional<WorldSet>> images(lang.atom_count());
  for (const auto& [key, value] : incidence_json.items()) {
    const Formula f = formula_field(key, lang, "incidence key '" + key + "'");
    if (f.count() != 1)
      fail("incidence key '" + key + "' is not a single atom");
    auto& slot = images[f.first_atom()];
    if (slot) fail("incidence key '" + key + "' is given twice");
    slot = world_set(value, space, "incidence of '" + key + "'");
  }
  std::vector<WorldSet> resolved;
  for (std::size_t a = 0; a < images.size(); ++a) {
    if (!images[a])
      fail("incidence missing for atom '" + atom_text(lang, Atom{a}) + "'");
    resolved.push_back(*images[a]);
  }
  ProbabilitySpace ps(space, SetAlgebra(std::move(chi)), std::move(weights));
  return ProbabilityStructure::dempster_shafer(std::move(ps), lang,
                                               std::move(resolved));
}

Json world_list(const SampleSpace& space, WorldSet x) {
  Json out = Json::array();
  for (const auto& n : space.names_of(x)) out.push_back(n);
  return out;
}

bool is_flat(const Json& j) {
  return std::none_of(j.begin(), j.end(),
                      [](const Json& e) { return e.is_structured(); });
}

// Like dump(2), but lists of scalars stay on one line.
void write_json(const Json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  if (j.is_array() && (j.empty() || is_flat(j))) {
    out += '[';
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i > 0) out += ", ";
      out += j[i].dump();
    }
    out += ']';
  } else if (j.is_array()) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      write_json(j[i], indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + ']';
  } else if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (const auto& [key, value] : j.items()) {
      out += pad + Json(key).dump() + ": ";
      write_json(value, indent + 2, out);
      out += ++i < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + '}';
  } else {
    out += j.dump();
  }
}

}  // namespace

ProbabilityStructure parse_document(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is the 1-based index of the last character read.
    const std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw DocumentError("malformed JSON", line, column);
  }
  const ProbabilityStructure st = build(doc).canonical();
  auto report = validate(st);
  if (!report.ok()) throw ValidationError(std::move(report.violations));
  return st;
}

std::string render_document(const ProbabilityStructure& input) {
  const ProbabilityStructure st = input.canonical();
  const auto& ps = st.space();
  const auto& space = ps.space();
  Json doc;
  doc["kind"] = st.is_ic() ? "ic" : "ds";
  doc["propositions"] = st.language().props();
  doc["worlds"] = space.names();
  if (st.is_ds()) {
    Json chi = Json::array();
    for (const WorldSet b : ps.algebra().basis()) chi.push_back(world_list(space, b));
    doc["chi_basis"] = std::move(chi);
  }
  Json measure = Json::object();
  for (std::size_t k = 0; k < ps.weights().size(); ++k)
    measure[std::to_string(k)] = ps.weights()[k].str();
  doc["measure"] = std::move(measure);
  if (st.is_ic()) {
    Json psi = Json::array();
    for (const auto& b : st.psi().basis()) psi.push_back(format_formula(b));
    doc["psi_basis"] = std::move(psi);
  }
  Json inc = Json::object();
  for (std::size_t k = 0; k < st.psi().size(); ++k)
    inc[format_formula(st.psi().basis()[k])] = world_list(space, st.images()[k]);
  doc["incidence"] = std::move(inc);
  std::string out;
  write_json(doc, 0, out);
  return out + "\n";
}

ProbabilityStructure load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

void save(const ProbabilityStructure& st, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DocumentError("cannot write " + path.string());
  out << render_document(st);
  if (!out) throw DocumentError("failed writing " + path.string());
}

}  // namespace icds
