#include "rotabrace/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace rotabrace {

const char* to_string(EntryKind k) {
  switch (k) {
    case EntryKind::Group: return "group";
    case EntryKind::Clifford: return "clifford";
    case EntryKind::Spec: return "spec";
  }
  return "?";
}

namespace {

CayleyTable cyclic(int n) {
  CayleyTable t(n, std::vector<Element>(static_cast<std::size_t>(n) * n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) t.at(a, b) = (a + b) % n;
  return t;
}

CayleyTable klein() {
  CayleyTable t(4, std::vector<Element>(16));
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b) t.at(a, b) = a ^ b;
  return t;
}

// Permutations of {0,1,2} in lexicographic one-line order; product fg is
// "apply g, then f".
CayleyTable sym3() {
  const int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto index_of = [&](const int p[3]) {
    for (int i = 0; i < 6; ++i)
      if (perm[i][0] == p[0] && perm[i][1] == p[1] && perm[i][2] == p[2]) return i;
    return -1;
  };
  CayleyTable t(6, std::vector<Element>(36));
  for (int f = 0; f < 6; ++f)
    for (int g = 0; g < 6; ++g) {
      int fg[3];
      for (int x = 0; x < 3; ++x) fg[x] = perm[f][perm[g][x]];
      t.at(f, g) = index_of(fg);
    }
  return t;
}

CayleyTable cs3() {
  return CayleyTable::from_rows({{0, 1, 2}, {1, 0, 2}, {2, 2, 2}});
}

CayleyTable sl2() {
  return CayleyTable::from_rows({{0, 1}, {1, 1}});
}

StrongSemilatticeSpec chain_z2z2() {
  StrongSemilatticeSpec spec;
  spec.meet = CayleyTable::from_rows({{0, 1}, {1, 1}});
  spec.groups = {cyclic(2), cyclic(2)};
  spec.links = {{0, 1, {0, 1}}};
  return spec;
}

std::string normalize(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (c == '/' || c == '_' || c == ' ') continue;
    out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  return out;
}

std::vector<std::vector<Element>> parse_rows(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of rows");
  std::vector<std::vector<Element>> rows;
  for (const Json& row : j) {
    if (!row.is_array()) throw ParseError(std::string(what) + " rows must be arrays");
    std::vector<Element> r;
    for (const Json& x : row) {
      if (!x.is_number_integer()) throw ParseError(std::string(what) + " entries must be integers");
      r.push_back(x.get<Element>());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

ElementMap parse_images(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  ElementMap out;
  for (const Json& x : j) {
    if (!x.is_number_integer()) throw ParseError(std::string(what) + " entries must be integers");
    out.push_back(x.get<Element>());
  }
  return out;
}

Json table_rows(const CayleyTable& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows()) rows.push_back(row);
  return rows;
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"Z2", "Z3", "Z4",  "V4",        "Z6",
                                                 "S3", "CS3", "SL2", "CHAIN-Z2Z2"};
  return names;
}

CatalogEntry load_builtin(const std::string& name) {
  const std::string key = normalize(name);
  CatalogEntry e;
  e.provenance = "builtin";
  if (key == "Z2" || key == "Z3" || key == "Z4" || key == "Z6") {
    const int n = key[1] - '0';
    e.name = key;
    e.kind = EntryKind::Group;
    e.carrier = verify_clifford_shared(cyclic(n));
  } else if (key == "V4") {
    e.name = "V4";
    e.kind = EntryKind::Group;
    e.carrier = verify_clifford_shared(klein());
  } else if (key == "S3") {
    e.name = "S3";
    e.kind = EntryKind::Group;
    e.carrier = verify_clifford_shared(sym3());
  } else if (key == "CS3") {
    e.name = "CS3";
    e.kind = EntryKind::Clifford;
    e.carrier = verify_clifford_shared(cs3());
  } else if (key == "SL2") {
    e.name = "SL2";
    e.kind = EntryKind::Clifford;
    e.carrier = verify_clifford_shared(sl2());
  } else if (key == "CHAIN-Z2Z2" || key == "CHAINZ2Z2") {
    e.name = "CHAIN-Z2Z2";
    e.kind = EntryKind::Spec;
    e.semilattice = build_strong_semilattice(chain_z2z2());
    e.carrier = e.semilattice->carrier;
  } else {
    throw ParseError("unknown builtin carrier: " + name);
  }
  return e;
}

CatalogEntry entry_from_json(const Json& j, const std::string& provenance) {
  if (!j.is_object()) throw ParseError("carrier document must be a JSON object");
  CatalogEntry e;
  e.provenance = provenance;
  e.name = j.value("name", std::filesystem::path(provenance).stem().string());

  if (j.contains("meet")) {
    StrongSemilatticeSpec spec;
    spec.meet = CayleyTable::from_rows(parse_rows(j.at("meet"), "meet"));
    if (!j.contains("groups")) throw ParseError("spec document missing \"groups\"");
    for (const Json& g : j.at("groups")) {
      if (!g.is_object() || !g.contains("table"))
        throw ParseError("spec groups must be objects with a \"table\"");
      spec.groups.push_back(CayleyTable::from_rows(parse_rows(g.at("table"), "group table")));
    }
    if (j.contains("links"))
      for (const Json& l : j.at("links")) {
        if (!l.is_object() || !l.contains("from") || !l.contains("to") || !l.contains("images"))
          throw ParseError("spec links must carry from/to/images");
        spec.links.push_back({l.at("from").get<int>(), l.at("to").get<int>(),
                              parse_images(l.at("images"), "link images")});
      }
    e.kind = EntryKind::Spec;
    e.semilattice = build_strong_semilattice(spec);
    e.carrier = e.semilattice->carrier;
    return e;
  }

  if (!j.contains("table")) throw ParseError("carrier document missing \"table\"");
  CayleyTable t = CayleyTable::from_rows(parse_rows(j.at("table"), "table"));
  if (j.contains("order") && j.at("order").get<int>() != t.order)
    throw ParseError("carrier \"order\" does not match the table size");
  e.carrier = verify_clifford_shared(std::move(t));
  e.kind = e.carrier->is_group() ? EntryKind::Group : EntryKind::Clifford;
  return e;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError(std::string("malformed JSON in ") + path + ": " + err.what());
  }
  return j;
}

CatalogEntry load_carrier(const std::string& ref) {
  if (ref.rfind("builtin:", 0) == 0) return load_builtin(ref.substr(8));

  namespace fs = std::filesystem;
  if (fs::exists(ref) && fs::is_regular_file(ref))
    return entry_from_json(load_json_file(ref), ref);

  if (const char* env = std::getenv("ROTABRACE_CATALOG")) {
    std::stringstream dirs(env);
    std::string dir;
    while (std::getline(dirs, dir, ':')) {
      if (dir.empty()) continue;
      for (const std::string& candidate : {dir + "/" + ref, dir + "/" + ref + ".json"}) {
        if (fs::exists(candidate) && fs::is_regular_file(candidate))
          return entry_from_json(load_json_file(candidate), candidate);
      }
    }
  }

  try {
    return load_builtin(ref);
  } catch (const ParseError&) {
    throw ParseError("carrier not found: " + ref);
  }
}

// ---- JSON documents --------------------------------------------------------------

Json carrier_to_json(const std::string& name, const CayleyTable& table) {
  Json j;
  j["name"] = name;
  j["order"] = table.order;
  j["table"] = table_rows(table);
  return j;
}

Json spec_to_json(const std::string& name, const StrongSemilatticeSpec& spec) {
  Json j;
  j["name"] = name;
  j["meet"] = table_rows(spec.meet);
  j["groups"] = Json::array();
  for (const CayleyTable& g : spec.groups) {
    Json gj;
    gj["table"] = table_rows(g);
    j["groups"].push_back(std::move(gj));
  }
  j["links"] = Json::array();
  for (const LinkMap& l : spec.links) {
    Json lj;
    lj["from"] = l.from;
    lj["to"] = l.to;
    lj["images"] = l.images;
    j["links"].push_back(std::move(lj));
  }
  return j;
}

Json operator_to_json(const std::string& carrier, const ElementMap& images) {
  Json j;
  j["carrier"] = carrier;
  j["images"] = images;
  return j;
}

OperatorFile operator_file_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("images"))
    throw ParseError("operator document requires \"carrier\" and \"images\"");
  return {j.value("carrier", ""), parse_images(j.at("images"), "operator images")};
}

Json brace_to_json(const std::string& name, const DualWeakBrace& B) {
  Json j;
  j["name"] = name;
  j["order"] = B.order();
  j["add_table"] = table_rows(B.additive().table());
  j["circ_table"] = table_rows(B.multiplicative().table());
  return j;
}

BraceFile brace_file_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("add_table") || !j.contains("circ_table"))
    throw ParseError("brace document requires \"add_table\" and \"circ_table\"");
  CayleyTable add = CayleyTable::from_rows(parse_rows(j.at("add_table"), "add_table"));
  CayleyTable circ = CayleyTable::from_rows(parse_rows(j.at("circ_table"), "circ_table"));
  if (j.contains("order") && j.at("order").get<int>() != add.order)
    throw ParseError("brace \"order\" does not match the tables");
  return {j.value("name", "brace"), verify_dual_weak_brace(std::move(add), std::move(circ))};
}

Json solution_to_json(const SolutionMap& r) {
  Json j;
  j["order"] = r.order;
  Json rows = Json::array();
  for (Element a = 0; a < r.order; ++a) {
    Json row = Json::array();
    for (Element b = 0; b < r.order; ++b)
      row.push_back(Json::array({r.l(a, b), r.r(a, b)}));
    rows.push_back(std::move(row));
  }
  j["r"] = std::move(rows);
  return j;
}

SolutionMap solution_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("r"))
    throw ParseError("solution document requires \"order\" and \"r\"");
  SolutionMap r;
  r.order = j.at("order").get<int>();
  if (r.order <= 0) throw ParseError("solution order must be positive");
  const Json& rows = j.at("r");
  if (!rows.is_array() || static_cast<int>(rows.size()) != r.order)
    throw ParseError("solution \"r\" must have one row per element");
  for (const Json& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != r.order)
      throw ParseError("solution rows must have one pair per element");
    for (const Json& cell : row) {
      if (!cell.is_array() || cell.size() != 2)
        throw ParseError("solution cells must be [left, right] pairs");
      r.left.push_back(cell.at(0).get<Element>());
      r.right.push_back(cell.at(1).get<Element>());
    }
  }
  for (const auto* side : {&r.left, &r.right})
    for (Element x : *side)
      if (x < 0 || x >= r.order) throw ParseError("solution image out of range");
  return r;
}

}  // namespace rotabrace
