#include "declat/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace declat {
namespace {

[[noreturn]] void parse_fail(const std::string& detail) { throw Error(ErrorCode::kParse, detail); }

std::string line_context(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n');
  const auto last_nl = text.rfind('\n', byte == 0 ? 0 : byte - 1);
  const std::size_t column = last_nl == std::string::npos || byte == 0 ? byte : byte - last_nl - 1;
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

std::vector<LabelPair> read_pairs(const nlohmann::json& doc, const std::string& key) {
  const auto& arr = doc.at(key);
  if (!arr.is_array()) parse_fail("key '" + key + "': expected an array of [lower, upper] pairs");
  std::vector<LabelPair> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto& p = arr[i];
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
      parse_fail("key '" + key + "'[" + std::to_string(i) + "]: expected [lower, upper] as two strings");
    out.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }
  return out;
}

Json family_json(const Lattice& l, const std::vector<Ideal>& family) {
  Json out = Json::array();
  for (const Ideal& i : family) out.push_back(ideal_labels(l, i));
  return out;
}

std::string family_text(const Lattice& l, const std::vector<Ideal>& family) {
  std::vector<std::pair<std::string, std::string>> names;
  for (const Ideal& i : family) names.emplace_back(l.label(i.generator), ideal_name(l, i));
  std::sort(names.begin(), names.end());
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : " ") + n.second;
  return out.empty() ? "-" : out;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

Lattice parse_lattice_json(const std::string& text, const std::string& default_name) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail(line_context(text, e.byte) + ": malformed JSON");
  }
  if (!doc.is_object()) parse_fail("top level: expected an object");

  std::string name = default_name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) parse_fail("key 'name': expected a string");
    name = doc["name"].get<std::string>();
  }
  if (!doc.contains("elements")) parse_fail("missing key 'elements'");
  const auto& elems = doc["elements"];
  if (!elems.is_array()) parse_fail("key 'elements': expected an array of strings");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (!elems[i].is_string()) parse_fail("key 'elements'[" + std::to_string(i) + "]: expected a string");
    labels.push_back(elems[i].get<std::string>());
  }

  const bool has_covers = doc.contains("covers");
  const bool has_leq = doc.contains("leq");
  if (has_covers == has_leq) parse_fail("exactly one of 'covers' and 'leq' must be present");
  if (has_covers) return build_from_covers(name, std::move(labels), read_pairs(doc, "covers"));
  return build_from_leq(name, std::move(labels), read_pairs(doc, "leq"));
}

Lattice load_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string stem = path;
  if (auto slash = stem.find_last_of('/'); slash != std::string::npos) stem = stem.substr(slash + 1);
  if (auto dot = stem.rfind('.'); dot != std::string::npos && dot > 0) stem = stem.substr(0, dot);
  return parse_lattice_json(buf.str(), stem);
}

Json lattice_to_json(const Lattice& l) {
  Json covers = Json::array();
  for (const auto& [lo, hi] : l.covers()) covers.push_back({l.label(lo), l.label(hi)});
  return Json{{"name", l.name()}, {"elements", l.labels()}, {"covers", covers}};
}

std::vector<std::string> ideal_labels(const Lattice& l, const Ideal& ideal) {
  std::vector<std::string> out;
  ideal.carrier.for_each([&](Elem e) { out.push_back(l.label(e)); });
  return out;
}

std::string ideal_name(const Lattice& l, const Ideal& ideal) {
  if (ideal.generator == Lattice::bottom()) return "{" + l.label(Lattice::bottom()) + "}";
  return "(" + l.label(ideal.generator) + "]";
}

Json spectrum_to_json(const Lattice& l, const SpectrumReport& r) {
  Json val = Json::object();
  for (const auto& [x, family] : r.val_of) val[l.label(x)] = family_json(l, family);
  Json sp = Json::array();
  for (const auto& [p, s] : r.s_p) sp.push_back({{"prime", ideal_labels(l, p)}, {"s_p", ideal_labels(l, s)}});
  Json ultra = Json::array();
  for (const Filter& f : r.ultrafilters) {
    std::vector<std::string> labels;
    f.carrier.for_each([&](Elem e) { labels.push_back(l.label(e)); });
    ultra.push_back(labels);
  }
  return Json{{"lattice", l.name()},
              {"elements", l.labels()},
              {"ideals", family_json(l, r.all_ideals)},
              {"primes", family_json(l, r.primes)},
              {"min_primes", family_json(l, r.min_primes)},
              {"values", family_json(l, r.values)},
              {"specials", family_json(l, r.specials)},
              {"polars", family_json(l, r.polar_ideals)},
              {"ultrafilters", ultra},
              {"val", val},
              {"s_p", sp}};
}

std::string spectrum_to_text(const Lattice& l, const SpectrumReport& r) {
  std::ostringstream os;
  os << "lattice: " << l.name() << " (" << l.size() << " elements)\n";
  os << "ideals: " << family_text(l, r.all_ideals) << "\n";
  os << "primes: " << family_text(l, r.primes) << "\n";
  os << "min primes: " << family_text(l, r.min_primes) << "\n";
  os << "values: " << family_text(l, r.values) << "\n";
  os << "specials: " << family_text(l, r.specials) << "\n";
  os << "polars: " << family_text(l, r.polar_ideals) << "\n";
  std::vector<std::string> ultra;
  for (const Filter& f : r.ultrafilters) ultra.push_back("[" + l.label(f.least) + ")");
  std::sort(ultra.begin(), ultra.end());
  os << "ultrafilters:";
  for (const auto& u : ultra) os << " " << u;
  os << (ultra.empty() ? " -\n" : "\n");
  std::vector<std::pair<std::string, std::string>> val;
  for (const auto& [x, family] : r.val_of) val.emplace_back(l.label(x), family_text(l, family));
  std::sort(val.begin(), val.end());
  for (const auto& [x, family] : val) os << "Val(" << x << "): " << family << "\n";
  return os.str();
}

Json decomposition_to_json(const Lattice& l, const SpecialDecomposition& d) {
  Json parts = Json::array();
  for (std::size_t i = 0; i < d.parts.size(); ++i)
    parts.push_back({{"part", l.label(d.parts[i])}, {"value", ideal_labels(l, d.value_map[i])}});
  return Json{{"lattice", l.name()}, {"element", l.label(d.element)}, {"parts", parts}};
}

Json instance_to_json(const Instance& inst) {
  Json bindings = Json::object();
  for (const auto& [k, v] : inst.bindings) bindings[k] = v;
  Json conds = Json::object();
  for (const auto& c : inst.conditions) conds[c.label] = c.value;
  return Json{{"scope", inst.scope}, {"bindings", bindings}, {"conditions", conds}};
}

std::string instance_to_text(const Instance& inst) {
  std::string out = inst.scope + ":";
  for (const auto& c : inst.conditions) out += " (" + c.label + ")=" + (c.value ? "true" : "false");
  return out;
}

Json verdict_to_json(const TheoremVerdict& v) {
  Json failing = Json::array();
  for (const auto& inst : v.instances)
    if (!inst.consistent()) failing.push_back(instance_to_json(inst));
  return Json{{"theorem", v.theorem_id},
              {"lattice", v.lattice},
              {"holds", v.holds},
              {"degenerate", v.degenerate},
              {"counterexample", v.counterexample ? instance_to_json(*v.counterexample) : Json(nullptr)},
              {"status", std::string(to_string(v.status))},
              {"note", v.note},
              {"instances", v.instances.size()},
              {"failing", failing}};
}

std::string to_dot(const Lattice& l) {
  std::ostringstream os;
  os << "digraph " << dot_quote(l.name()) << " {\n";
  os << "  rankdir=BT;\n";
  for (Elem e = 0; e < l.size(); ++e) os << "  " << dot_quote(l.label(e)) << ";\n";
  for (const auto& [lo, hi] : l.covers()) os << "  " << dot_quote(l.label(lo)) << " -> " << dot_quote(l.label(hi)) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace declat
