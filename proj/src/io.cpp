#include "invcorr/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "invcorr/fixtures.hpp"

namespace invcorr {

using nlohmann::json;

const char* kind_name(FileKind k) {
  switch (k) {
    case FileKind::Semigroup:
      return "semigroup";
    case FileKind::Set:
      return "set";
    case FileKind::Morita:
      return "morita";
    case FileKind::Correspondence:
      return "correspondence";
    case FileKind::McAlister:
      return "mcalister";
    case FileKind::Hom:
      return "hom";
    case FileKind::Presheaf:
      return "presheaf";
  }
  return "?";
}

FileKind kind_from_name(const std::string& name) {
  for (FileKind k :
       {FileKind::Semigroup, FileKind::Set, FileKind::Morita,
        FileKind::Correspondence, FileKind::McAlister, FileKind::Hom,
        FileKind::Presheaf}) {
    if (name == kind_name(k)) {
      return k;
    }
  }
  throw InputError("UNKNOWN_KIND: " + name);
}

SgPtr Workspace::semigroup(const std::string& name) const {
  auto it = semigroups.find(name);
  if (it != semigroups.end()) {
    return it->second;
  }
  for (const auto& f : fixture_semigroups()) {
    if (f.name == name) {
      return f.sg;
    }
  }
  throw InputError("unknown semigroup name: " + name);
}

namespace {

// accepts either a flat row-major array or an array of rows
std::vector<Idx> read_table(const json& j, Idx rows, Idx cols,
                            const std::string& what) {
  if (!j.is_array()) {
    throw InputError(what + ": expected an array");
  }
  std::vector<Idx> out;
  out.reserve(static_cast<size_t>(rows) * cols);
  if (!j.empty() && j.front().is_array()) {
    if (static_cast<Idx>(j.size()) != rows) {
      throw InputError(what + ": expected " + std::to_string(rows) +
                       " rows");
    }
    for (const auto& row : j) {
      if (static_cast<Idx>(row.size()) != cols) {
        throw InputError(what + ": ragged rows");
      }
      for (const auto& v : row) {
        out.push_back(v.get<Idx>());
      }
    }
  } else {
    if (static_cast<Idx>(j.size()) != rows * cols) {
      throw InputError(what + ": expected " + std::to_string(rows * cols) +
                       " entries");
    }
    for (const auto& v : j) {
      out.push_back(v.get<Idx>());
    }
  }
  return out;
}

void check_range(const std::vector<Idx>& v, Idx bound,
                 const std::string& what) {
  for (Idx x : v) {
    if (x < 0 || x >= bound) {
      throw InputError(what + ": index " + std::to_string(x) +
                       " out of range [0," + std::to_string(bound) + ")");
    }
  }
}

std::string stem_of(const std::string& path) {
  size_t slash = path.find_last_of('/');
  std::string base =
      slash == std::string::npos ? path : path.substr(slash + 1);
  size_t dot = base.find_last_of('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

FileKind detect_kind(const json& j) {
  if (j.contains("p") || j.contains("index_size")) {
    return FileKind::McAlister;
  }
  if (j.contains("part_sizes") || j.contains("restrictions")) {
    return FileKind::Presheaf;
  }
  if (j.contains("map") && j.contains("source")) {
    return FileKind::Hom;
  }
  if (j.contains("table")) {
    return FileKind::Semigroup;
  }
  if (j.contains("left_pairing")) {
    return FileKind::Morita;
  }
  if (j.contains("left_action")) {
    return FileKind::Correspondence;
  }
  if (j.contains("action") && j.contains("pairing")) {
    return FileKind::Set;
  }
  throw InputError("UNKNOWN_KIND: cannot detect structure kind");
}

SgPtr resolve_semigroup(Workspace& ws, const json& ref,
                        const std::string& what);

SgPtr parse_semigroup(Workspace& ws, const json& j) {
  Idx order = j.at("order").get<Idx>();
  if (order < 0) {
    throw InputError("semigroup: negative order");
  }
  MulTable t;
  t.n = order;
  t.tab = read_table(j.at("table"), order, order, "semigroup table");
  check_range(t.tab, order, "semigroup table");
  RecognizeResult r = recognize_inverse(t);
  if (!r.ok()) {
    throw InputError(std::string("semigroup: ") +
                     recognize_error_name(r.failure->reason) +
                     (r.failure->witness >= 0
                          ? " at element " + std::to_string(r.failure->witness)
                          : ""));
  }
  auto sg = std::make_shared<const InverseSemigroup>(std::move(*r.sg));
  if (j.contains("name")) {
    ws.semigroups.emplace(j.at("name").get<std::string>(), sg);
  }
  return sg;
}

SgPtr resolve_semigroup(Workspace& ws, const json& ref,
                        const std::string& what) {
  if (ref.is_string()) {
    return ws.semigroup(ref.get<std::string>());
  }
  if (ref.is_object()) {
    return parse_semigroup(ws, ref);
  }
  throw InputError(what + ": semigroup reference must be a name or object");
}

RightSet parse_set(Workspace& ws, const json& j, LeftSet* left_out,
                   bool* is_left) {
  SgPtr sg = resolve_semigroup(ws, j.at("semigroup"), "set");
  Idx size = j.at("size").get<Idx>();
  if (size < 0) {
    throw InputError("set: negative size");
  }
  std::vector<Idx> action =
      read_table(j.at("action"), size, sg->size(), "set action");
  std::vector<Idx> pairing =
      read_table(j.at("pairing"), size, size, "set pairing");
  check_range(action, size, "set action");
  check_range(pairing, sg->size(), "set pairing");
  *is_left = j.value("side", "right") == std::string("left");
  if (*is_left) {
    *left_out = LeftSet{sg, size, std::move(action), std::move(pairing)};
    return {};
  }
  return RightSet{sg, size, std::move(action), std::move(pairing)};
}

PartialMorita parse_morita(Workspace& ws, const json& j) {
  PartialMorita m;
  m.right = resolve_semigroup(ws, j.at("semigroup"), "morita");
  m.left = resolve_semigroup(ws, j.at("left_semigroup"), "morita");
  m.size = j.at("size").get<Idx>();
  if (m.size < 0) {
    throw InputError("morita: negative size");
  }
  m.right_action =
      read_table(j.at("action"), m.size, m.right->size(), "right action");
  m.right_pairing =
      read_table(j.at("pairing"), m.size, m.size, "right pairing");
  m.left_action = read_table(j.at("left_action"), m.size, m.left->size(),
                             "left action");
  m.left_pairing =
      read_table(j.at("left_pairing"), m.size, m.size, "left pairing");
  check_range(m.right_action, m.size, "right action");
  check_range(m.right_pairing, m.right->size(), "right pairing");
  check_range(m.left_action, m.size, "left action");
  check_range(m.left_pairing, m.left->size(), "left pairing");
  return m;
}

Correspondence parse_correspondence(Workspace& ws, const json& j) {
  Correspondence c;
  c.right.sg = resolve_semigroup(ws, j.at("semigroup"), "correspondence");
  c.left_sg =
      resolve_semigroup(ws, j.at("left_semigroup"), "correspondence");
  Idx size = j.at("size").get<Idx>();
  if (size < 0) {
    throw InputError("correspondence: negative size");
  }
  c.right.size = size;
  c.right.action = read_table(j.at("action"), size, c.right.sg->size(),
                              "correspondence action");
  c.right.pairing =
      read_table(j.at("pairing"), size, size, "correspondence pairing");
  c.left_action = read_table(j.at("left_action"), size, c.left_sg->size(),
                             "correspondence left action");
  check_range(c.right.action, size, "correspondence action");
  check_range(c.right.pairing, c.right.sg->size(), "correspondence pairing");
  check_range(c.left_action, size, "correspondence left action");
  return c;
}

McAlisterFn parse_mcalister(Workspace& ws, const json& j) {
  SgPtr sg = resolve_semigroup(ws, j.at("semigroup"), "mcalister");
  Idx k = j.at("index_size").get<Idx>();
  if (k < 0) {
    throw InputError("mcalister: negative index_size");
  }
  std::vector<Idx> p = read_table(j.at("p"), k, k, "mcalister p");
  check_range(p, sg->size(), "mcalister p");
  auto check = check_mcalister(sg, k, std::move(p));
  if (!check.fn) {
    const auto& v = check.report.violations.front();
    std::string wit;
    for (Idx x : v.witness) {
      wit += " " + std::to_string(x);
    }
    throw InputError("mcalister: axiom " + v.axiom + " fails at" + wit);
  }
  return std::move(*check.fn);
}

SemigroupHom parse_hom(Workspace& ws, const json& j) {
  SemigroupHom h;
  h.source = resolve_semigroup(ws, j.at("source"), "hom");
  h.target = resolve_semigroup(ws, j.at("target"), "hom");
  h.map = read_table(j.at("map"), 1, h.source->size(), "hom map");
  check_range(h.map, h.target->size(), "hom map");
  if (!check_hom(h)) {
    throw InputError("hom: not multiplicative");
  }
  return h;
}

LeftSet parse_presheaf(Workspace& ws, const json& j) {
  PresheafInput in;
  in.semilattice = resolve_semigroup(ws, j.at("semigroup"), "presheaf");
  for (const auto& v : j.at("part_sizes")) {
    in.part_sizes.push_back(v.get<Idx>());
  }
  for (const auto& r : j.at("restrictions")) {
    Idx e = r.at("e").get<Idx>();
    Idx f = r.at("f").get<Idx>();
    std::vector<Idx> map;
    for (const auto& v : r.at("map")) {
      map.push_back(v.get<Idx>());
    }
    in.restrictions[{e, f}] = std::move(map);
  }
  return presheaf_set(in).set;
}

json parse_with_position(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    size_t line = 1, col = 1;
    for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError("PARSE_ERROR at line " + std::to_string(line) +
                     ", column " + std::to_string(col) + ": " + e.what());
  }
}

template <typename T>
void store(std::map<std::string, T>& into, const std::string& name, T value,
           const char* what) {
  if (!into.emplace(name, std::move(value)).second) {
    throw InputError(std::string(what) + " name already in use: " + name);
  }
}

}  // namespace

LoadedFile load_text(Workspace& ws, const std::string& text,
                     const std::string& fallback_name,
                     const std::string& rename) {
  json j = parse_with_position(text);
  if (!j.is_object()) {
    throw InputError("PARSE_ERROR: top level must be an object");
  }
  FileKind kind = detect_kind(j);
  std::string name =
      rename.empty() ? j.value("name", fallback_name) : rename;
  switch (kind) {
    case FileKind::Semigroup: {
      // parse_semigroup registers under the embedded name only
      json copy = j;
      copy.erase("name");
      SgPtr sg = parse_semigroup(ws, copy);
      store(ws.semigroups, name, std::move(sg), "semigroup");
      break;
    }
    case FileKind::Set: {
      LeftSet ls;
      bool is_left = false;
      RightSet rs = parse_set(ws, j, &ls, &is_left);
      if (is_left) {
        store(ws.left_sets, name, std::move(ls), "set");
      } else {
        store(ws.sets, name, std::move(rs), "set");
      }
      break;
    }
    case FileKind::Morita:
      store(ws.moritas, name, parse_morita(ws, j), "morita");
      break;
    case FileKind::Correspondence:
      store(ws.correspondences, name, parse_correspondence(ws, j),
            "correspondence");
      break;
    case FileKind::McAlister:
      store(ws.mcalisters, name, parse_mcalister(ws, j), "mcalister");
      break;
    case FileKind::Hom:
      store(ws.homs, name, parse_hom(ws, j), "hom");
      break;
    case FileKind::Presheaf:
      store(ws.left_sets, name, parse_presheaf(ws, j), "presheaf set");
      break;
  }
  return {kind, name};
}

LoadedFile load_file(Workspace& ws, const std::string& path,
                     const std::string& rename) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open file: " + path);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return load_text(ws, buf.str(), stem_of(path), rename);
}

CheckedFile check_file(Workspace& ws, const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open file: " + path);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  json j = parse_with_position(text);
  if (!j.is_object()) {
    throw InputError("PARSE_ERROR: top level must be an object");
  }
  CheckedFile out{detect_kind(j), j.value("name", stem_of(path)), {}, false};
  switch (out.kind) {
    case FileKind::Semigroup: {
      Idx order = j.at("order").get<Idx>();
      if (order < 0) {
        throw InputError("semigroup: negative order");
      }
      MulTable t{order,
                 read_table(j.at("table"), order, order, "semigroup table")};
      check_range(t.tab, order, "semigroup table");
      if (auto w = associativity_witness(t)) {
        out.report.add("NOT_ASSOCIATIVE", {(*w)[0], (*w)[1], (*w)[2]});
        return out;
      }
      RecognizeResult r = recognize_inverse(t);
      if (!r.ok()) {
        out.report.add(recognize_error_name(r.failure->reason),
                       r.failure->witness >= 0
                           ? std::vector<Idx>{r.failure->witness}
                           : std::vector<Idx>{});
        return out;
      }
      ws.semigroups.emplace(
          out.name,
          std::make_shared<const InverseSemigroup>(std::move(*r.sg)));
      out.loaded = true;
      return out;
    }
    case FileKind::McAlister: {
      SgPtr sg = resolve_semigroup(ws, j.at("semigroup"), "mcalister");
      Idx k = j.at("index_size").get<Idx>();
      if (k < 0) {
        throw InputError("mcalister: negative index_size");
      }
      std::vector<Idx> p = read_table(j.at("p"), k, k, "mcalister p");
      check_range(p, sg->size(), "mcalister p");
      auto check = check_mcalister(sg, k, std::move(p));
      if (!check.fn) {
        out.report = check.report;
        return out;
      }
      ws.mcalisters.emplace(out.name, std::move(*check.fn));
      out.loaded = true;
      return out;
    }
    case FileKind::Hom: {
      SemigroupHom h;
      h.source = resolve_semigroup(ws, j.at("source"), "hom");
      h.target = resolve_semigroup(ws, j.at("target"), "hom");
      h.map = read_table(j.at("map"), 1, h.source->size(), "hom map");
      check_range(h.map, h.target->size(), "hom map");
      if (!check_hom(h)) {
        out.report.add("NOT_MULTIPLICATIVE", {});
        return out;
      }
      ws.homs.emplace(out.name, std::move(h));
      out.loaded = true;
      return out;
    }
    case FileKind::Presheaf: {
      try {
        load_text(ws, text, out.name);
        out.loaded = true;
      } catch (const InputError& e) {
        std::string msg = e.what();
        if (msg.find("presheaf_set:") == std::string::npos) {
          throw;
        }
        out.report.add(msg, {});
      }
      return out;
    }
    default:
      // sets, moritas, and correspondences load raw; their axiom suites
      // run report-style downstream
      load_text(ws, text, out.name);
      out.loaded = true;
      return out;
  }
}

namespace {

json table_json(const std::vector<Idx>& tab) {
  json out = json::array();
  for (Idx x : tab) {
    out.push_back(x);
  }
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string table_to_text(const std::string& name, const MulTable& t) {
  json j;
  j["name"] = name;
  j["order"] = t.n;
  j["table"] = table_json(t.tab);
  return dump(j);
}

std::string semigroup_to_text(const std::string& name,
                              const InverseSemigroup& sg) {
  return table_to_text(name, sg.base);
}

std::string set_to_text(const std::string& name, const RightSet& u,
                        const std::string& sg_name) {
  json j;
  j["name"] = name;
  if (!sg_name.empty()) {
    j["semigroup"] = sg_name;
  } else {
    j["semigroup"] = {{"order", u.sg->size()},
                      {"table", table_json(u.sg->base.tab)}};
  }
  j["size"] = u.size;
  j["action"] = table_json(u.action);
  j["pairing"] = table_json(u.pairing);
  return dump(j);
}

std::string left_set_to_text(const std::string& name, const LeftSet& u,
                             const std::string& sg_name) {
  json j;
  j["name"] = name;
  if (!sg_name.empty()) {
    j["semigroup"] = sg_name;
  } else {
    j["semigroup"] = {{"order", u.sg->size()},
                      {"table", table_json(u.sg->base.tab)}};
  }
  j["side"] = "left";
  j["size"] = u.size;
  j["action"] = table_json(u.action);
  j["pairing"] = table_json(u.pairing);
  return dump(j);
}

std::string morita_to_text(const std::string& name, const PartialMorita& m) {
  json j;
  j["name"] = name;
  j["semigroup"] = {{"order", m.right->size()},
                    {"table", table_json(m.right->base.tab)}};
  j["left_semigroup"] = {{"order", m.left->size()},
                         {"table", table_json(m.left->base.tab)}};
  j["size"] = m.size;
  j["action"] = table_json(m.right_action);
  j["pairing"] = table_json(m.right_pairing);
  j["left_action"] = table_json(m.left_action);
  j["left_pairing"] = table_json(m.left_pairing);
  return dump(j);
}

std::string correspondence_to_text(const std::string& name,
                                   const Correspondence& c) {
  json j;
  j["name"] = name;
  j["semigroup"] = {{"order", c.right.sg->size()},
                    {"table", table_json(c.right.sg->base.tab)}};
  j["left_semigroup"] = {{"order", c.left_sg->size()},
                         {"table", table_json(c.left_sg->base.tab)}};
  j["size"] = c.size();
  j["action"] = table_json(c.right.action);
  j["pairing"] = table_json(c.right.pairing);
  j["left_action"] = table_json(c.left_action);
  return dump(j);
}

std::string mcalister_to_text(const std::string& name,
                              const McAlisterFn& p) {
  json j;
  j["name"] = name;
  j["semigroup"] = {{"order", p.t->size()},
                    {"table", table_json(p.t->base.tab)}};
  j["index_size"] = p.index_size;
  j["p"] = table_json(p.p);
  return dump(j);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) {
    throw InputError("cannot write file: " + path);
  }
  out << content;
}

}  // namespace invcorr
