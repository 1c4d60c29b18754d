#include "io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace gbds::cli {

using nlohmann::json;

namespace {

class Reader {
 public:
  explicit Reader(std::string origin) : origin_(std::move(origin)) {}

  [[noreturn]] void fail(const std::string& field, const std::string& msg) const {
    throw InputError(origin_ + ": " + (field.empty() ? std::string("<root>") : field) + ": " + msg);
  }

  json parse(std::string_view text) const {
    try {
      return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
      std::size_t line = 1, col = 1;
      const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
      for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
          ++line;
          col = 1;
        } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
          ++col;
        }
      }
      std::string what = e.what();
      if (auto pos = what.find("; "); pos != std::string::npos) what = what.substr(pos + 2);
      throw InputError(origin_ + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
    }
  }

  void keys(const json& obj, const std::string& field, std::initializer_list<std::string_view> allowed) const {
    object(obj, field);
    for (const auto& [k, v] : obj.items()) {
      if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) fail(join(field, k), "unknown key");
    }
  }

  const json& object(const json& j, const std::string& field) const {
    if (!j.is_object()) fail(field, "expected an object");
    return j;
  }

  const json& member(const json& obj, const std::string& field, const std::string& key) const {
    auto it = obj.find(key);
    if (it == obj.end()) fail(join(field, key), "missing");
    return *it;
  }

  std::vector<std::string> strings(const json& j, const std::string& field) const {
    if (!j.is_array()) fail(field, "expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (!j[i].is_string()) fail(field + "[" + std::to_string(i) + "]", "expected a string");
      out.push_back(j[i].get<std::string>());
    }
    return out;
  }

  void distinct(const std::vector<std::string>& names, const std::string& field) const {
    std::set<std::string> seen;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!seen.insert(names[i]).second) fail(field + "[" + std::to_string(i) + "]", "duplicate name '" + names[i] + "'");
    }
  }

  static std::string join(const std::string& field, const std::string& key) {
    return field.empty() ? key : field + "." + key;
  }

 private:
  std::string origin_;
};

template <class Index>
std::size_t lookup(const Reader& rd, const Index& index, const std::string& name, const std::string& field,
                   const char* what) {
  auto it = index.find(name);
  if (it == index.end()) rd.fail(field, std::string("unknown ") + what + " '" + name + "'");
  return it->second;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

System parse_system(std::string_view text, const std::string& origin) {
  Reader rd(origin);
  const json root = rd.parse(text);
  rd.keys(root, "", {"atoms", "labels", "actions", "ideals", "unital"});
  const auto atoms = rd.strings(rd.member(root, "", "atoms"), "atoms");
  const auto labels = rd.strings(rd.member(root, "", "labels"), "labels");
  rd.distinct(atoms, "atoms");
  rd.distinct(labels, "labels");
  if (atoms.size() > kMaxAtoms) rd.fail("atoms", "at most " + std::to_string(kMaxAtoms) + " atoms are supported");
  if (auto it = root.find("unital"); it != root.end()) {
    if (!it->is_boolean()) rd.fail("unital", "expected a boolean");
    if (!it->get<bool>()) rd.fail("unital", "only unital algebras are supported");
  }

  BooleanAlgebra alg(atoms);
  std::map<std::string, std::size_t> atom_ix, label_ix;
  for (std::size_t i = 0; i < atoms.size(); ++i) atom_ix[atoms[i]] = i;
  for (std::size_t i = 0; i < labels.size(); ++i) label_ix[labels[i]] = i;

  auto atom_list = [&](const json& j, const std::string& field) {
    std::vector<AtomId> ids;
    const auto names = rd.strings(j, field);
    for (std::size_t i = 0; i < names.size(); ++i) {
      ids.push_back(static_cast<AtomId>(
          lookup(rd, atom_ix, names[i], field + "[" + std::to_string(i) + "]", "atom")));
    }
    return alg.from_atoms(ids);
  };

  const json& acts = rd.object(rd.member(root, "", "actions"), "actions");
  std::vector<Action> actions;
  for (const auto& l : labels) actions.push_back({l, std::vector<Element>(atoms.size(), alg.empty())});
  for (const auto& [name, table] : acts.items()) {
    const std::string field = "actions." + name;
    const std::size_t l = lookup(rd, label_ix, name, field, "label");
    rd.object(table, field);
    for (const auto& [src, img] : table.items()) {
      const std::size_t a = lookup(rd, atom_ix, src, field + "." + src, "atom");
      actions[l].atom_image[a] = atom_list(img, field + "." + src);
    }
  }
  for (const auto& l : labels) {
    if (!acts.contains(l)) rd.fail("actions." + l, "missing");
  }

  std::vector<Element> ideals;
  for (const auto& act : actions) {
    Element range = alg.empty();
    for (const auto& img : act.atom_image) range = range | img;
    ideals.push_back(range);
  }
  if (auto it = root.find("ideals"); it != root.end()) {
    rd.object(*it, "ideals");
    for (const auto& [name, gen] : it->items()) {
      const std::size_t l = lookup(rd, label_ix, name, "ideals." + name, "label");
      ideals[l] = atom_list(gen, "ideals." + name);
    }
  }
  try {
    return System(alg, std::move(actions), std::move(ideals));
  } catch (const Error& e) {
    rd.fail("", e.what());
  }
}

System load_system(const std::string& path) { return parse_system(read_file(path), path); }

FinitePartialAction parse_action(std::string_view text, const std::string& origin) {
  Reader rd(origin);
  const json root = rd.parse(text);
  rd.keys(root, "", {"points", "generators"});
  FinitePartialAction a;
  a.points = rd.strings(rd.member(root, "", "points"), "points");
  rd.distinct(a.points, "points");
  std::map<std::string, std::size_t> ix;
  for (std::size_t i = 0; i < a.points.size(); ++i) ix[a.points[i]] = i;

  const json& gens = rd.member(root, "", "generators");
  if (!gens.is_array()) rd.fail("generators", "expected an array");
  auto point_list = [&](const json& j, const std::string& field) {
    std::vector<PointId> out;
    const auto names = rd.strings(j, field);
    for (std::size_t i = 0; i < names.size(); ++i) {
      out.push_back(lookup(rd, ix, names[i], field + "[" + std::to_string(i) + "]", "point"));
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) rd.fail(field, "repeated point");
    return out;
  };
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const std::string field = "generators[" + std::to_string(g) + "]";
    const json& gj = gens[g];
    rd.keys(gj, field, {"label", "V", "V_inv", "rho"});
    const json& label = rd.member(gj, field, "label");
    if (!label.is_string()) rd.fail(field + ".label", "expected a string");
    GeneratorData d;
    d.label = label.get<std::string>();
    d.V = point_list(rd.member(gj, field, "V"), field + ".V");
    d.V_inv = point_list(rd.member(gj, field, "V_inv"), field + ".V_inv");
    const json& rho = rd.member(gj, field, "rho");
    if (!rho.is_array()) rd.fail(field + ".rho", "expected an array of [from, to] pairs");
    for (std::size_t i = 0; i < rho.size(); ++i) {
      const std::string pf = field + ".rho[" + std::to_string(i) + "]";
      const auto pair = rd.strings(rho[i], pf);
      if (pair.size() != 2) rd.fail(pf, "expected [from, to]");
      d.rho.emplace_back(lookup(rd, ix, pair[0], pf + "[0]", "point"), lookup(rd, ix, pair[1], pf + "[1]", "point"));
    }
    a.generators.push_back(std::move(d));
  }
  return a;
}

FinitePartialAction load_action(const std::string& path) { return parse_action(read_file(path), path); }

nlohmann::ordered_json system_to_json(const System& sys) {
  const BooleanAlgebra& alg = sys.algebra();
  auto names = [&](const Element& e) {
    auto arr = nlohmann::ordered_json::array();
    for (AtomId a : e.atoms()) arr.push_back(alg.atom_name(a));
    return arr;
  };
  nlohmann::ordered_json out;
  out["atoms"] = alg.atom_names();
  auto labels = nlohmann::ordered_json::array();
  nlohmann::ordered_json actions = nlohmann::ordered_json::object();
  nlohmann::ordered_json ideals = nlohmann::ordered_json::object();
  for (LabelId l = 0; l < sys.label_count(); ++l) {
    const std::string& name = sys.label_name(l);
    labels.push_back(name);
    nlohmann::ordered_json table = nlohmann::ordered_json::object();
    for (AtomId a = 0; a < alg.size(); ++a) table[alg.atom_name(a)] = names(sys.action(l).atom_image[a]);
    actions[name] = std::move(table);
    ideals[name] = names(sys.ideal_gen(l));
  }
  out["labels"] = std::move(labels);
  out["actions"] = std::move(actions);
  out["ideals"] = std::move(ideals);
  out["unital"] = true;
  return out;
}

nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json out;
  out["title"] = r.title();
  out["ok"] = r.ok();
  auto entries = nlohmann::ordered_json::array();
  for (const auto& e : r.entries()) {
    nlohmann::ordered_json j;
    if (e.kind == ReportEntry::Kind::Fact) {
      j["kind"] = "fact";
      j["key"] = e.key;
      j["value"] = e.value;
    } else {
      j["kind"] = "check";
      j["name"] = e.key;
      j["pass"] = e.pass;
      j["detail"] = e.value;
    }
    entries.push_back(std::move(j));
  }
  out["entries"] = std::move(entries);
  return out;
}

}  // namespace gbds::cli
