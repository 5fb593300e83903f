#include "qvlab/knot_table.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "qvlab/errors.hpp"

namespace qvl {

namespace {

using nlohmann::json;

KnotRecord parse_record(const json& j) {
  if (!j.is_object()) throw InputError("knot table entry must be an object");
  if (!j.contains("name") || !j["name"].is_string()) throw InputError("knot table entry needs a string \"name\"");
  KnotRecord rec;
  rec.name = j["name"].get<std::string>();
  auto fail = [&rec](const std::string& what) { return InputError("knot '" + rec.name + "': " + what); };

  if (!j.contains("pd") || !j["pd"].is_array()) throw fail("missing \"pd\" array");
  std::vector<Crossing> crossings;
  for (const auto& x : j["pd"]) {
    if (!x.is_array() || x.size() != 4) throw fail("each PD crossing needs four arc labels");
    Crossing c;
    for (std::size_t k = 0; k < 4; ++k) {
      if (!x[k].is_number_integer()) throw fail("arc labels must be integers");
      c.arcs[k] = x[k].get<int>();
    }
    crossings.push_back(c);
  }
  const bool is_link = j.value("link", false);
  const int free_loops = j.value("free_loops", crossings.empty() ? 1 : 0);
  try {
    rec.diagram = PlanarDiagram(std::move(crossings), free_loops, is_link);
  } catch (const InputError& e) {
    throw fail(e.what());
  }

  if (j.contains("a_poly")) {
    if (!j["a_poly"].is_array()) throw fail("\"a_poly\" must be an array");
    std::vector<BivarPoly::Term> terms;
    for (const auto& t : j["a_poly"]) {
      if (!t.is_array() || t.size() != 3) throw fail("A-polynomial terms are [coeff, degL, degM]");
      for (const auto& v : t) {
        if (!v.is_number_integer()) throw fail("A-polynomial terms must be integers");
      }
      terms.push_back({mpz_class(t[0].get<long>()), t[1].get<int>(), t[2].get<int>()});
    }
    rec.a_poly = BivarPoly(terms);
  }
  if (j.contains("vol")) {
    if (!j["vol"].is_string()) throw fail("\"vol\" must be a decimal string");
    rec.vol = j["vol"].get<std::string>();
  }
  return rec;
}

}  // namespace

KnotTable KnotTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open knot table " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

KnotTable KnotTable::parse(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("knot table is not valid JSON: ") + e.what());
  }
  const json* list = &doc;
  if (doc.is_object()) {
    if (!doc.contains("knots")) throw InputError("knot table needs a \"knots\" array");
    list = &doc["knots"];
  }
  if (!list->is_array()) throw InputError("knot table needs a \"knots\" array");

  KnotTable table;
  std::set<std::string> seen;
  for (const auto& entry : *list) {
    KnotRecord rec = parse_record(entry);
    if (!seen.insert(rec.name).second) throw InputError("duplicate knot name '" + rec.name + "'");
    table.records_.push_back(std::move(rec));
  }
  return table;
}

const KnotRecord& KnotTable::get(const std::string& name) const {
  for (const auto& r : records_) {
    if (r.name == name) return r;
  }
  throw InputError("unknown knot '" + name + "'");
}

bool KnotTable::contains(const std::string& name) const {
  for (const auto& r : records_) {
    if (r.name == name) return true;
  }
  return false;
}

std::vector<std::string> KnotTable::names() const {
  std::vector<std::string> out;
  for (const auto& r : records_) out.push_back(r.name);
  return out;
}

}  // namespace qvl
