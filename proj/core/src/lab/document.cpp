#include "convlab/lab/document.hpp"

#include <fstream>
#include <sstream>

namespace convlab::lab {

namespace {

const Json& field(const Json& doc, const char* name) {
  if (!doc.is_object()) throw InputError("document must be a JSON object");
  auto it = doc.find(name);
  if (it == doc.end()) throw InputError(std::string("document is missing \"") + name + "\"");
  return *it;
}

Carrier parse_carrier(const Json& atoms, const Bounds& bounds) {
  if (!atoms.is_array()) throw InputError("carrier must be an array of atom names");
  std::vector<std::string> names;
  for (const auto& a : atoms) {
    if (!a.is_string()) throw InputError("atom names must be strings");
    names.push_back(a.get<std::string>());
  }
  if (names.size() > bounds.max_carrier || names.size() > kMaxAtoms) {
    throw BoundExceeded("carrier of " + std::to_string(names.size()) + " atoms exceeds the bound of " +
                        std::to_string(std::min(bounds.max_carrier, kMaxAtoms)));
  }
  return Carrier(std::move(names));
}

Json atoms_json(const Carrier& c, Subset s) {
  Json out = Json::array();
  for (const auto& n : c.names_of(s)) out.push_back(n);
  return out;
}

Json carrier_json(const Carrier& c) {
  Json out = Json::array();
  for (const auto& n : c.names()) out.push_back(n);
  return out;
}

}  // namespace

Subset parse_subset(const Carrier& c, const Json& atoms) {
  if (!atoms.is_array()) throw InputError("atom set must be an array");
  std::vector<std::string> names;
  for (const auto& a : atoms) {
    if (!a.is_string()) throw InputError("atom names must be strings");
    names.push_back(a.get<std::string>());
  }
  return c.subset(names);
}

Json serialize_subset(const Carrier& c, Subset s) { return atoms_json(c, s); }

Convergence parse_space(const Json& doc, const Bounds& bounds) {
  const Carrier carrier = parse_carrier(field(doc, "carrier"), bounds);
  Completion completion = Completion::strict;
  if (auto it = doc.find("completion"); it != doc.end()) {
    if (*it == "strict") {
      completion = Completion::strict;
    } else if (*it == "isotone") {
      completion = Completion::isotone;
    } else {
      throw InputError("completion must be \"strict\" or \"isotone\"");
    }
  }
  const Json& limits = field(doc, "limits");
  if (!limits.is_array()) throw InputError("limits must be an array of rows");

  std::vector<std::pair<Subset, Subset>> rows;
  std::vector<bool> seen(carrier.powerset_size(), false);
  for (const auto& row : limits) {
    const Subset k = parse_subset(carrier, field(row, "kernel"));
    const Subset l = parse_subset(carrier, field(row, "limits"));
    if (k.empty()) throw InputError("kernels must be nonempty");
    if (seen[k.bits()]) throw InputError("duplicate kernel " + carrier.format(k));
    seen[k.bits()] = true;
    rows.emplace_back(k, l);
  }

  if (completion == Completion::isotone) {
    std::vector<Subset> table(carrier.powerset_size());
    for (const auto& [k, l] : rows) table[k.bits()] = l;
    // Larger kernels first; the immediate supersets carry everything above.
    for (Subset::Bits k = static_cast<Subset::Bits>(table.size() - 1); k >= 1; --k) {
      for (std::size_t x = 0; x < carrier.size(); ++x) {
        if (!Subset(k).contains(x)) table[k] |= table[k | Subset::atom(x).bits()];
      }
      if (Subset(k).is_singleton()) table[k] |= Subset(k);
    }
    rows.clear();
    for (Subset::Bits k = 1; k < table.size(); ++k) rows.emplace_back(Subset(k), table[k]);
  }

  auto result = validate(carrier, rows);
  if (auto* v = std::get_if<AxiomViolation>(&result)) {
    std::string msg = std::string("axiom violation (") + to_string(v->kind) + "): " + v->message;
    throw InputError(msg);
  }
  return std::get<Convergence>(std::move(result));
}

Convergence parse_space_text(const std::string& text, const Bounds& bounds) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return parse_space(doc, bounds);
}

Json serialize_space(const Convergence& xi) {
  Json doc;
  doc["carrier"] = carrier_json(xi.carrier());
  doc["completion"] = "strict";
  Json rows = Json::array();
  for (Subset::Bits k = 1; k < xi.table().size(); ++k) {
    Json row;
    row["kernel"] = atoms_json(xi.carrier(), Subset(k));
    row["limits"] = atoms_json(xi.carrier(), xi.table()[k]);
    rows.push_back(std::move(row));
  }
  doc["limits"] = std::move(rows);
  return doc;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json serialize_atom_map(const AtomMap& f) {
  Json doc;
  doc["domain"] = carrier_json(f.domain());
  doc["codomain"] = carrier_json(f.codomain());
  Json a = Json::object();
  for (std::size_t x = 0; x < f.domain().size(); ++x) a[f.domain().name(x)] = f.codomain().name(f(x));
  doc["assignment"] = std::move(a);
  return doc;
}

namespace {

std::vector<std::size_t> parse_assignment(const Json& a, const Carrier& dom, const Carrier& cod) {
  if (!a.is_object()) throw InputError("assignment must be an object from domain atoms to codomain atoms");
  std::vector<std::size_t> out(dom.size(), 0);
  std::vector<bool> set(dom.size(), false);
  for (auto it = a.begin(); it != a.end(); ++it) {
    auto x = dom.index_of(it.key());
    if (!x) throw InputError("unknown domain atom '" + it.key() + "'");
    if (!it->is_string()) throw InputError("assignment values must be atom names");
    auto y = cod.index_of(it->get<std::string>());
    if (!y) throw InputError("unknown codomain atom '" + it->get<std::string>() + "'");
    out[*x] = *y;
    set[*x] = true;
  }
  for (std::size_t x = 0; x < dom.size(); ++x) {
    if (!set[x]) throw InputError("assignment misses domain atom '" + dom.name(x) + "'");
  }
  return out;
}

}  // namespace

AtomMap parse_atom_map(const Json& doc) {
  const Bounds wide{kMaxAtoms};
  const Carrier dom = parse_carrier(field(doc, "domain"), wide);
  const Carrier cod = parse_carrier(field(doc, "codomain"), wide);
  return AtomMap(dom, cod, parse_assignment(field(doc, "assignment"), dom, cod));
}

SpaceMap parse_map(const Json& doc, const Bounds& bounds) {
  Convergence dom = parse_space(field(doc, "domain"), bounds);
  Convergence cod = parse_space(field(doc, "codomain"), bounds);
  auto a = parse_assignment(field(doc, "assignment"), dom.carrier(), cod.carrier());
  return SpaceMap(std::move(dom), std::move(cod), std::move(a));
}

SpaceMap parse_map_text(const std::string& text, const Bounds& bounds) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return parse_map(doc, bounds);
}

Json serialize_map(const SpaceMap& m) {
  Json doc;
  doc["domain"] = serialize_space(m.domain());
  doc["codomain"] = serialize_space(m.codomain());
  Json a = Json::object();
  const AtomMap& f = m.map();
  for (std::size_t x = 0; x < f.domain().size(); ++x) a[f.domain().name(x)] = f.codomain().name(f(x));
  doc["assignment"] = std::move(a);
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace convlab::lab
