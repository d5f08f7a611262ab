#include "mvalg/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "mvalg/error.hpp"

namespace mvalg {

using Json = nlohmann::ordered_json;

std::string_view kind_name(const Structure& s) {
  static constexpr std::string_view names[] = {"multigroup", "multiring", "special_group", "real_semigroup",
                                               "sign_space"};
  return names[s.index()];
}

namespace {

// A JSON value together with its path, for error messages.
struct Node {
  const Json& j;
  std::string path;

  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("at " + (path.empty() ? std::string("/") : path) + ": " + msg);
  }
  bool has(const char* key) const { return j.is_object() && j.contains(key); }
  Node operator[](const char* key) const {
    if (!j.is_object()) fail("expected an object");
    if (!j.contains(key)) fail(std::string("missing key '") + key + "'");
    return {j.at(key), path + "/" + key};
  }
  Node at(std::size_t i) const { return {j.at(i), path + "/" + std::to_string(i)}; }
  std::size_t array(std::optional<std::size_t> expected = std::nullopt) const {
    if (!j.is_array()) fail("expected an array");
    if (expected && j.size() != *expected) {
      fail("expected " + std::to_string(*expected) + " entries, found " + std::to_string(j.size()) +
           " (ragged table?)");
    }
    return j.size();
  }
  std::string str() const {
    if (!j.is_string()) fail("expected a string");
    return j.get<std::string>();
  }
  int integer() const {
    if (!j.is_number_integer()) fail("expected an integer");
    return j.get<int>();
  }
  std::size_t label(const Carrier& c) const {
    const std::string s = str();
    if (auto i = c.find(s)) return *i;
    fail("unknown element label '" + s + "'");
  }
  ElementSet label_set(const Carrier& c) const {
    ElementSet out;
    const std::size_t k = array();
    for (std::size_t i = 0; i < k; ++i) out.insert(at(i).label(c));
    return out;
  }
};

Carrier read_carrier(const Node& n) {
  const std::size_t k = n.array();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back(n.at(i).str());
  try {
    return Carrier(std::move(names));
  } catch (const InputError& e) {
    n.fail(e.what());
  }
}

std::vector<ElementSet> read_cells(const Node& n, const Carrier& c) {
  const std::size_t size = c.size();
  n.array(size);
  std::vector<ElementSet> out;
  for (std::size_t i = 0; i < size; ++i) {
    Node row = n.at(i);
    row.array(size);
    for (std::size_t j = 0; j < size; ++j) out.push_back(row.at(j).label_set(c));
  }
  return out;
}

std::vector<std::size_t> read_table(const Node& n, const Carrier& c) {
  const std::size_t size = c.size();
  n.array(size);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size; ++i) {
    Node row = n.at(i);
    row.array(size);
    for (std::size_t j = 0; j < size; ++j) out.push_back(row.at(j).label(c));
  }
  return out;
}

std::vector<std::size_t> read_unary(const Node& n, const Carrier& c) {
  if (!n.j.is_object()) n.fail("expected an object mapping labels to labels");
  std::vector<std::size_t> out(c.size(), c.size());
  for (auto it = n.j.begin(); it != n.j.end(); ++it) {
    Node v{it.value(), n.path + "/" + it.key()};
    auto from = c.find(it.key());
    if (!from) v.fail("unknown element label '" + it.key() + "'");
    out[*from] = v.label(c);
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (out[i] == c.size()) n.fail("no image for '" + c.name(i) + "'");
  }
  return out;
}

template <class F>
auto guarded(const Node& n, F&& build) -> decltype(build()) {
  try {
    return build();
  } catch (const InputError& e) {
    n.fail(e.what());
  }
}

Structure read_body(const std::string& kind, const Node& root) {
  if (kind == "multigroup") {
    const Carrier c = read_carrier(root["elements"]);
    auto op = read_cells(root["op"], c);
    auto inv = read_unary(root["inv"], c);
    const std::size_t id = root["identity"].label(c);
    return guarded(root, [&] { return Structure(FiniteMultigroup(c, std::move(op), std::move(inv), id)); });
  }
  if (kind == "multiring") {
    const Carrier c = read_carrier(root["elements"]);
    auto add = read_cells(root["add"], c);
    auto mul = read_table(root["mul"], c);
    auto neg = read_unary(root["neg"], c);
    const std::size_t zero = root["zero"].label(c), one = root["one"].label(c);
    return guarded(root["add"], [&] {
      return Structure(FiniteMultiring(c, std::move(add), std::move(mul), std::move(neg), zero, one));
    });
  }
  if (kind == "special_group") {
    const Carrier c = read_carrier(root["elements"]);
    auto mul = read_table(root["mul"], c);
    const std::size_t m1 = root["minus_one"].label(c);
    Node iso = root["iso"];
    std::vector<Quad> quads;
    for (std::size_t i = 0, k = iso.array(); i < k; ++i) {
      Node q = iso.at(i);
      q.array(4);
      quads.push_back({q.at(0).label(c), q.at(1).label(c), q.at(2).label(c), q.at(3).label(c)});
    }
    return guarded(root["mul"], [&] { return Structure(SpecialGroup(c, std::move(mul), m1, quads)); });
  }
  if (kind == "real_semigroup") {
    const Carrier c = read_carrier(root["elements"]);
    auto mul = read_table(root["mul"], c);
    const std::size_t one = root["one"].label(c), zero = root["zero"].label(c), m1 = root["minus_one"].label(c);
    Node d = root["D"];
    std::vector<ElementSet> cells(c.size() * c.size());
    for (std::size_t i = 0, k = d.array(); i < k; ++i) {
      Node t = d.at(i);
      t.array(3);
      cells[t.at(1).label(c) * c.size() + t.at(2).label(c)].insert(t.at(0).label(c));
    }
    return guarded(root, [&] { return Structure(RealSemigroup(c, std::move(mul), one, zero, m1, std::move(cells))); });
  }
  if (kind == "sign_space") {
    const std::string mode = root["mode"].str();
    if (mode != "aos" && mode != "ars") root["mode"].fail("mode must be \"aos\" or \"ars\"");
    const Carrier points = read_carrier(root["points"]);
    Node fns = root["functions"];
    if (!fns.j.is_object() || fns.j.empty()) fns.fail("expected a nonempty object mapping labels to sign lists");
    std::vector<std::string> labels;
    std::vector<SignVector> rows;
    for (auto it = fns.j.begin(); it != fns.j.end(); ++it) {
      Node row{it.value(), fns.path + "/" + it.key()};
      row.array(points.size());
      SignVector v;
      for (std::size_t x = 0; x < points.size(); ++x) v.push_back(row.at(x).integer());
      labels.push_back(it.key());
      rows.push_back(std::move(v));
    }
    return guarded(fns, [&] {
      return Structure(SignSpace(mode == "aos" ? SpaceMode::aos : SpaceMode::ars, points, Carrier(std::move(labels)),
                                 std::move(rows)));
    });
  }
  root["kind"].fail("unknown kind '" + kind + "'");
}

// Output: top-level keys in a fixed order; tables one row per line.
class Writer {
 public:
  void scalar(const std::string& key, const Json& v) { fields_.push_back("  " + Json(key).dump() + ": " + v.dump()); }
  void rows(const std::string& key, const std::vector<Json>& rows) {
    std::string out = "  " + Json(key).dump() + ": [";
    if (rows.empty()) {
      fields_.push_back(out + "]");
      return;
    }
    out += "\n";
    for (std::size_t i = 0; i < rows.size(); ++i) out += "    " + rows[i].dump() + (i + 1 < rows.size() ? ",\n" : "\n");
    fields_.push_back(out + "  ]");
  }
  void entries(const std::string& key, const std::vector<std::pair<std::string, Json>>& entries) {
    std::string out = "  " + Json(key).dump() + ": {\n";
    for (std::size_t i = 0; i < entries.size(); ++i) {
      out += "    " + Json(entries[i].first).dump() + ": " + entries[i].second.dump() +
             (i + 1 < entries.size() ? ",\n" : "\n");
    }
    fields_.push_back(out + "  }");
  }
  std::string str() const {
    std::string out = "{\n";
    for (std::size_t i = 0; i < fields_.size(); ++i) out += fields_[i] + (i + 1 < fields_.size() ? ",\n" : "\n");
    return out + "}\n";
  }

 private:
  std::vector<std::string> fields_;
};

Json labels(const Carrier& c) { return Json(c.names()); }
Json labels(const Carrier& c, ElementSet s) {
  Json out = Json::array();
  for (std::size_t i : s) out.push_back(c.name(i));
  return out;
}

std::vector<Json> cell_rows(const Carrier& c, std::span<const ElementSet> cells) {
  std::vector<Json> out;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(labels(c, cells[i * n + j]));
    out.push_back(row);
  }
  return out;
}

std::vector<Json> table_rows(const Carrier& c, std::span<const std::size_t> t) {
  std::vector<Json> out;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(c.name(t[i * n + j]));
    out.push_back(row);
  }
  return out;
}

std::vector<std::pair<std::string, Json>> unary(const Carrier& c, std::span<const std::size_t> m) {
  std::vector<std::pair<std::string, Json>> out;
  for (std::size_t i = 0; i < c.size(); ++i) out.push_back({c.name(i), c.name(m[i])});
  return out;
}

}  // namespace

StructureFile parse_structure(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // The library message carries line and column.
    throw InputError(std::string("syntax error: ") + e.what());
  }
  Node root{j, ""};
  if (!j.is_object()) root.fail("expected an object");
  StructureFile f{"", "", FiniteMultigroup(Carrier({"0"}), {ElementSet::singleton(0)}, {0}, 0)};
  const std::string kind = root["kind"].str();
  if (root.has("name")) f.name = root["name"].str();
  if (root.has("provenance")) f.provenance = root["provenance"].str();
  f.value = read_body(kind, root);
  return f;
}

std::string serialize(const StructureFile& f) {
  Writer w;
  w.scalar("kind", std::string(kind_name(f.value)));
  if (!f.name.empty()) w.scalar("name", f.name);
  if (!f.provenance.empty()) w.scalar("provenance", f.provenance);
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FiniteMultigroup>) {
          const Carrier& c = s.carrier();
          w.scalar("elements", labels(c));
          w.scalar("identity", c.name(s.identity()));
          w.entries("inv", unary(c, s.inv_table()));
          w.rows("op", cell_rows(c, s.table()));
        } else if constexpr (std::is_same_v<T, FiniteMultiring>) {
          const Carrier& c = s.carrier();
          w.scalar("elements", labels(c));
          w.scalar("zero", c.name(s.zero()));
          w.scalar("one", c.name(s.one()));
          w.entries("neg", unary(c, s.neg_table()));
          w.rows("add", cell_rows(c, s.add_table()));
          w.rows("mul", table_rows(c, s.mul_table()));
        } else if constexpr (std::is_same_v<T, SpecialGroup>) {
          const Carrier& c = s.carrier();
          w.scalar("elements", labels(c));
          w.scalar("minus_one", c.name(s.minus_one()));
          w.rows("mul", table_rows(c, s.mul_table()));
          std::vector<Json> quads;
          for (const Quad& q : s.quadruples()) quads.push_back(Json{c.name(q[0]), c.name(q[1]), c.name(q[2]), c.name(q[3])});
          w.rows("iso", quads);
        } else if constexpr (std::is_same_v<T, RealSemigroup>) {
          const Carrier& c = s.carrier();
          w.scalar("elements", labels(c));
          w.scalar("one", c.name(s.one()));
          w.scalar("zero", c.name(s.zero()));
          w.scalar("minus_one", c.name(s.minus_one()));
          w.rows("mul", table_rows(c, s.mul_table()));
          std::vector<Json> triples;
          for (std::size_t b = 0; b < s.size(); ++b)
            for (std::size_t cc = 0; cc < s.size(); ++cc)
              for (std::size_t a : s.d_cell(b, cc)) triples.push_back(Json{c.name(a), c.name(b), c.name(cc)});
          w.rows("D", triples);
        } else {
          w.scalar("mode", std::string(to_string(s.mode())));
          w.scalar("points", labels(s.points()));
          std::vector<std::pair<std::string, Json>> fns;
          for (std::size_t i = 0; i < s.size(); ++i) fns.push_back({s.functions().name(i), Json(s.values(i))});
          w.entries("functions", fns);
        }
      },
      f.value);
  return w.str();
}

StructureFile load_structure(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_structure(buf.str());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void save_structure(const std::filesystem::path& path, const StructureFile& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << serialize(f);
}

}  // namespace mvalg
