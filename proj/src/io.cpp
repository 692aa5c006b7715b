#include "kitebl/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kitebl/errors.hpp"

namespace kitebl::io {

using ordered = nlohmann::ordered_json;
using nlohmann::json;

namespace {

// Objects one field per line; arrays of scalars inline; nested arrays one
// element per line.
void emit(std::ostream& os, const ordered& v, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * depth), ' ');
  const std::string inner(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  if (v.is_object()) {
    if (v.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    std::size_t k = 0;
    for (auto it = v.begin(); it != v.end(); ++it, ++k) {
      os << inner << ordered(it.key()).dump() << ": ";
      emit(os, it.value(), depth + 1);
      os << (k + 1 < v.size() ? ",\n" : "\n");
    }
    os << pad << '}';
  } else if (v.is_array()) {
    const bool flat = std::all_of(v.begin(), v.end(), [](const ordered& e) { return e.is_primitive(); });
    if (flat || v.empty()) {
      os << '[';
      for (std::size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << v[k].dump();
      os << ']';
      return;
    }
    os << "[\n";
    for (std::size_t k = 0; k < v.size(); ++k) {
      os << inner;
      emit(os, v[k], depth + 1);
      os << (k + 1 < v.size() ? ",\n" : "\n");
    }
    os << pad << ']';
  } else {
    os << v.dump();
  }
}

std::string render(const ordered& v) {
  std::ostringstream os;
  emit(os, v, 0);
  os << '\n';
  return os.str();
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'", 0);
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what(), 0);
  }
}

template <class T>
T optional_field(const json& j, const char* key, T fallback) {
  return j.contains(key) ? field<T>(j, key) : fallback;
}

void expect_header(const json& j, const char* kind) {
  const auto version = field<int>(j, "format_version");
  if (version != format_version) {
    throw ParseError("unsupported format_version " + std::to_string(version), 0);
  }
  const auto k = field<std::string>(j, "kind");
  if (k != kind) throw ParseError("expected kind '" + std::string(kind) + "', found '" + k + "'", 0);
}

ordered header(const char* kind) {
  ordered o;
  o["format_version"] = format_version;
  o["kind"] = kind;
  return o;
}

Table table_field(const json& j, const char* key) {
  return Table::from_rows(field<std::vector<std::vector<Elem>>>(j, key), key);
}

ordered hoop_json(const FiniteHoop& h) {
  ordered o = header("hoop");
  o["name"] = h.name();
  o["size"] = h.size();
  o["unit"] = h.unit();
  if (!h.element_names().empty()) o["elements"] = h.element_names();
  o["mul"] = h.mul_table().rows();
  o["ldiv"] = h.ldiv_table().rows();
  o["rdiv"] = h.rdiv_table().rows();
  return o;
}

FiniteHoop hoop_from_json(const json& j) {
  expect_header(j, "hoop");
  const auto size = field<std::size_t>(j, "size");
  FiniteHoop h(field<Elem>(j, "unit"), table_field(j, "mul"), table_field(j, "ldiv"),
               table_field(j, "rdiv"), optional_field<std::string>(j, "name", ""),
               optional_field<std::vector<std::string>>(j, "elements", {}));
  if (h.size() != size) throw StructuralError("size field disagrees with the tables");
  return h;
}

std::string index_literal(const KiteElement& e) {
  std::string s = e.part == Part::lower ? "L#" : "U#";
  for (std::size_t k = 0; k < e.coords.size(); ++k) {
    s += (k ? "," : "") + std::to_string(e.coords[k]);
  }
  return s;
}

KiteElement parse_index_literal(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'L' && s[0] != 'U') || s[1] != '#') {
    throw ParseError("bad element literal '" + s + "'", 0);
  }
  KiteElement e{s[0] == 'L' ? Part::lower : Part::upper, {}};
  std::istringstream in(s.substr(2));
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      e.coords.push_back(static_cast<Elem>(v));
    } catch (const std::exception&) {
      throw ParseError("bad coordinate in element literal '" + s + "'", 0);
    }
  }
  return e;
}

}  // namespace

std::string detect_kind(std::string_view text) {
  return field<std::string>(parse_json(text), "kind");
}

std::string to_text(const FiniteHoop& h) { return render(hoop_json(h)); }

FiniteHoop hoop_from_text(std::string_view text) { return hoop_from_json(parse_json(text)); }

std::string to_text(const FiniteBL& b) {
  ordered o = header("bl");
  o["name"] = b.name();
  if (!b.provenance().empty()) o["provenance"] = b.provenance();
  o["size"] = b.size();
  o["zero"] = b.zero();
  o["one"] = b.one();
  if (!b.labels().empty()) o["labels"] = b.labels();
  if (!b.elements().empty()) {
    ordered elems = ordered::array();
    for (const auto& e : b.elements()) elems.push_back(index_literal(e));
    o["elements"] = elems;
  }
  const auto& t = b.tables();
  o["mul"] = t.mul.rows();
  o["ldiv"] = t.ldiv.rows();
  o["rdiv"] = t.rdiv.rows();
  o["meet"] = t.meet.rows();
  o["join"] = t.join.rows();
  return render(o);
}

FiniteBL bl_from_text(std::string_view text) {
  const json j = parse_json(text);
  expect_header(j, "bl");
  std::vector<KiteElement> elems;
  for (const auto& s : optional_field<std::vector<std::string>>(j, "elements", {})) {
    elems.push_back(parse_index_literal(s));
  }
  FiniteBL b(field<Elem>(j, "zero"), field<Elem>(j, "one"),
             {table_field(j, "mul"), table_field(j, "ldiv"), table_field(j, "rdiv"),
              table_field(j, "meet"), table_field(j, "join")},
             optional_field<std::string>(j, "name", ""),
             optional_field<std::vector<std::string>>(j, "labels", {}), std::move(elems),
             optional_field<std::string>(j, "provenance", ""));
  if (b.size() != field<std::size_t>(j, "size")) {
    throw StructuralError("size field disagrees with the tables");
  }
  return b;
}

std::string to_text(const AxiomReport& r) {
  ordered o = header("axiom-report");
  o["passed"] = r.passed();
  ordered vs = ordered::array();
  for (const auto& v : r.violations) {
    ordered e;
    e["axiom"] = v.axiom;
    e["witness"] = v.witness;
    vs.push_back(e);
  }
  o["violations"] = vs;
  return render(o);
}

AxiomReport report_from_text(std::string_view text) {
  const json j = parse_json(text);
  expect_header(j, "axiom-report");
  AxiomReport r;
  for (const auto& v : field<json>(j, "violations")) {
    r.violations.push_back({field<std::string>(v, "axiom"), field<std::vector<Elem>>(v, "witness")});
  }
  if (field<bool>(j, "passed") != r.passed()) {
    throw ParseError("'passed' disagrees with the violation list", 0);
  }
  return r;
}

std::string to_text(const KiteSpecFile& f) {
  ordered o = header("kite-spec");
  if (const auto* h = std::get_if<FiniteHoop>(&f.hoop)) {
    o["hoop"] = hoop_json(*h);
  } else {
    o["hoop"] = std::get<std::string>(f.hoop);
  }
  o["i_size"] = f.spec.i_size;
  o["j_size"] = f.spec.j_size;
  o["lambda"] = f.spec.lambda;
  o["rho"] = f.spec.rho;
  return render(o);
}

KiteSpecFile spec_file_from_text(std::string_view text) {
  const json j = parse_json(text);
  expect_header(j, "kite-spec");
  KiteSpecFile f{std::string{}, {}};
  const json hoop = field<json>(j, "hoop");
  if (hoop.is_string()) {
    f.hoop = hoop.get<std::string>();
  } else {
    f.hoop = hoop_from_json(hoop);
  }
  f.spec.i_size = field<std::size_t>(j, "i_size");
  f.spec.j_size = field<std::size_t>(j, "j_size");
  f.spec.lambda = field<std::vector<Elem>>(j, "lambda");
  f.spec.rho = field<std::vector<Elem>>(j, "rho");
  return f;
}

FiniteHoop resolve_hoop(const KiteSpecFile& f, const std::filesystem::path& base_dir) {
  if (const auto* h = std::get_if<FiniteHoop>(&f.hoop)) return *h;
  std::filesystem::path p = std::get<std::string>(f.hoop);
  if (p.is_relative()) p = base_dir / p;
  return hoop_from_text(read_file(p));
}

std::string to_text(const FilterSet& f) { return ordered(f.members()).dump(); }

std::string to_text(const CongruencePartition& p) {
  ordered o;
  o["classes"] = p.classes;
  o["class_of"] = p.class_of;
  return render(o);
}

std::string to_text(const ComponentPartition& p) {
  ordered o;
  o["components"] = p.components;
  o["j_of"] = p.j_of;
  return render(o);
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ParseError("cannot read " + p.string(), 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& p, std::string_view contents) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error("cannot write " + p.string());
  out << contents;
}

}  // namespace kitebl::io
