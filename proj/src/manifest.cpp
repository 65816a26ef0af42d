#include "bracoid/manifest.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "bracoid/errors.hpp"

namespace bracoid {

using nlohmann::json;

std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::group: return "group";
    case Kind::hopf: return "hopf";
    case Kind::gskb: return "gskb";
    case Kind::bracoid: return "bracoid";
    case Kind::brace: return "brace";
    case Kind::cocycle: return "cocycle";
    case Kind::morphism: return "morphism";
  }
  return "?";
}

Kind Manifest::kind() const {
  switch (payload.index()) {
    case 0: return Kind::group;
    case 1: return Kind::hopf;
    case 2: return Kind::gskb;
    case 3: return Kind::bracoid;
    case 4: return Kind::brace;
    case 5: return Kind::cocycle;
    default: return Kind::morphism;
  }
}

namespace {

std::atomic<std::size_t> g_max_dim{0};

std::size_t env_max_dim() {
  const char* v = std::getenv("BRACOID_MAX_DIM");
  if (v == nullptr || *v == '\0') return 64;
  char* end = nullptr;
  unsigned long long n = std::strtoull(v, &end, 10);
  if (*end != '\0' || n == 0) throw ParseError("BRACOID_MAX_DIM must be a positive integer, got '" + std::string(v) + "'");
  return static_cast<std::size_t>(n);
}

// Reading ------------------------------------------------------------------

class Reader {
 public:
  Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError((path_.empty() ? std::string("top level") : path_) + ": " + what);
  }

  Reader at(const std::string& key) const {
    if (!j_.is_object()) fail("expected an object");
    auto it = j_.find(key);
    if (it == j_.end()) fail("missing field '" + key + "'");
    return Reader(*it, path_ + "/" + key);
  }
  Reader at(std::size_t i) const { return Reader(j_[i], path_ + "/" + std::to_string(i)); }

  bool has(const std::string& key) const { return j_.is_object() && j_.contains(key); }

  void expect_keys(std::initializer_list<std::string_view> keys) const {
    if (!j_.is_object()) fail("expected an object");
    for (const auto& [k, v] : j_.items()) {
      bool known = false;
      for (auto key : keys) known |= key == k;
      if (!known) fail("unknown field '" + k + "'");
    }
  }

  std::size_t size() const {
    if (!j_.is_array()) fail("expected an array");
    return j_.size();
  }

  std::size_t index() const {
    if (!j_.is_number_unsigned()) fail("expected a non-negative integer");
    return j_.get<std::size_t>();
  }

  std::string string() const {
    if (!j_.is_string()) fail("expected a string");
    return j_.get<std::string>();
  }

  Scalar scalar() const {
    if (!j_.is_string()) fail("expected a rational as a string \"p\" or \"p/q\"");
    try {
      return Scalar::parse(j_.get<std::string>());
    } catch (const ParseError& e) {
      fail(e.what());
    }
  }

  const std::string& path() const { return path_; }

 private:
  const json& j_;
  std::string path_;
};

LinMap read_map(const Reader& r, std::size_t dom, std::size_t cod) {
  std::vector<LinMap::Entry> entries;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t i = 0; i < r.size(); ++i) {
    Reader t = r.at(i);
    if (t.size() != 3) t.fail("expected a [row, col, value] triplet");
    std::size_t row = t.at(std::size_t{0}).index();
    std::size_t col = t.at(1).index();
    if (row >= cod || col >= dom) {
      throw ShapeError(t.path() + ": entry (" + std::to_string(row) + ", " + std::to_string(col) +
                       ") outside a " + std::to_string(cod) + "x" + std::to_string(dom) + " map");
    }
    if (!seen.insert({row, col}).second) {
      throw ShapeError(t.path() + ": duplicate entry (" + std::to_string(row) + ", " + std::to_string(col) + ")");
    }
    entries.push_back({row, col, t.at(2).scalar()});
  }
  return LinMap(dom, cod, std::move(entries));
}

std::size_t read_dim(const Reader& r) {
  std::size_t n = r.index();
  if (n == 0) r.fail("dimension must be positive");
  check_dim(n, r.path());
  return n;
}

HopfAlgebraData read_hopf(const Reader& r) {
  r.expect_keys({"dim", "unit", "mult", "counit", "comult", "antipode"});
  const std::size_t n = read_dim(r.at("dim"));
  // Named locals rather than braced aggregates: g++ 11 leaks built members
  // when a later initializer throws.
  LinMap unit = read_map(r.at("unit"), 1, n);
  LinMap mult = read_map(r.at("mult"), n * n, n);
  LinMap counit = read_map(r.at("counit"), n, 1);
  LinMap comult = read_map(r.at("comult"), n, n * n);
  LinMap antipode = read_map(r.at("antipode"), n, n);
  HopfAlgebraData h;
  h.algebra = {n, std::move(unit), std::move(mult)};
  h.coalgebra = {n, std::move(counit), std::move(comult)};
  h.antipode = std::move(antipode);
  return h;
}

CayleyTable read_table(const Reader& r, std::size_t rows, std::size_t cols, std::size_t bound) {
  if (r.size() != rows) throw ShapeError(r.path() + ": expected " + std::to_string(rows) + " rows");
  CayleyTable t(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    Reader row = r.at(i);
    if (row.size() != cols) throw ShapeError(row.path() + ": expected " + std::to_string(cols) + " entries");
    for (std::size_t j = 0; j < cols; ++j) {
      std::size_t v = row.at(j).index();
      if (v >= bound) throw ShapeError(row.at(j).path() + ": index " + std::to_string(v) + " out of range");
      t[i].push_back(v);
    }
  }
  return t;
}

GroupData read_group_data(const Reader& r) {
  r.expect_keys({"order", "unit", "table"});
  const std::size_t n = r.at("order").index();
  if (n == 0) r.at("order").fail("order must be positive");
  check_dim(n, r.at("order").path());
  const std::size_t unit = r.at("unit").index();
  if (unit >= n) throw ShapeError(r.at("unit").path() + ": unit out of range");
  return GroupData{read_table(r.at("table"), n, n, n), unit};
}

FiniteGroup read_group(const Reader& r) {
  GroupData d = read_group_data(r);
  Report v = validate_group(d.table, d.unit);
  if (const auto* f = v.first_failure()) throw PreconditionError(r.path() + ": not a group (" + f->equation + " fails)");
  return FiniteGroup(std::move(d.table), d.unit);
}

GeneralizedSkewBracoid read_gskb(const Reader& r) {
  r.expect_keys({"G", "N", "action"});
  FiniteGroup g = read_group(r.at("G"));
  FiniteGroup n = read_group(r.at("N"));
  const std::size_t go = g.order(), no = n.order();
  CayleyTable t = read_table(r.at("action"), go, no, no);
  return GeneralizedSkewBracoid{std::move(g), std::move(n), ActionTable{go, no, std::move(t)}};
}

HopfBracoid read_bracoid(const Reader& r) {
  r.expect_keys({"H", "B", "action"});
  HopfAlgebraData h = read_hopf(r.at("H"));
  HopfAlgebraData b = read_hopf(r.at("B"));
  LinMap action = read_map(r.at("action"), h.dim() * b.dim(), b.dim());
  return HopfBracoid(std::move(h), std::move(b), std::move(action));
}

HopfBrace read_brace(const Reader& r) {
  r.expect_keys({"dim", "counit", "comult", "unit1", "mult1", "antipode1", "unit2", "mult2", "antipode2"});
  const std::size_t n = read_dim(r.at("dim"));
  LinMap counit = read_map(r.at("counit"), n, 1);
  LinMap comult = read_map(r.at("comult"), n, n * n);
  LinMap unit1 = read_map(r.at("unit1"), 1, n);
  LinMap mult1 = read_map(r.at("mult1"), n * n, n);
  LinMap antipode1 = read_map(r.at("antipode1"), n, n);
  LinMap unit2 = read_map(r.at("unit2"), 1, n);
  LinMap mult2 = read_map(r.at("mult2"), n * n, n);
  LinMap antipode2 = read_map(r.at("antipode2"), n, n);
  HopfBrace b;
  b.coalgebra = {n, std::move(counit), std::move(comult)};
  b.first = {n, std::move(unit1), std::move(mult1)};
  b.first_antipode = std::move(antipode1);
  b.second = {n, std::move(unit2), std::move(mult2)};
  b.second_antipode = std::move(antipode2);
  return b;
}

Cocycle read_cocycle(const Reader& r) {
  r.expect_keys({"H", "B", "gamma", "pi"});
  HopfAlgebraData h = read_hopf(r.at("H"));
  HopfAlgebraData b = read_hopf(r.at("B"));
  LinMap gamma = read_map(r.at("gamma"), h.dim() * b.dim(), b.dim());
  LinMap pi = read_map(r.at("pi"), h.dim(), b.dim());
  Cocycle c;
  c.acting = std::move(h);
  c.carrier = std::move(b);
  c.gamma = std::move(gamma);
  c.pi = std::move(pi);
  return c;
}

IndexMap read_index_map(const Reader& r, std::size_t size, std::size_t bound) {
  if (r.size() != size) throw ShapeError(r.path() + ": expected " + std::to_string(size) + " images");
  IndexMap m;
  for (std::size_t i = 0; i < size; ++i) {
    std::size_t v = r.at(i).index();
    if (v >= bound) throw ShapeError(r.at(i).path() + ": index " + std::to_string(v) + " out of range");
    m.push_back(v);
  }
  return m;
}

Payload read_morphism(const Reader& r) {
  r.expect_keys({"category", "source", "target", "f", "g"});
  const std::string category = r.at("category").string();
  if (category == "gskb") {
    GeneralizedSkewBracoid s = read_gskb(r.at("source"));
    GeneralizedSkewBracoid t = read_gskb(r.at("target"));
    IndexMap f = read_index_map(r.at("f"), s.acting.order(), t.acting.order());
    IndexMap g = read_index_map(r.at("g"), s.carrier.order(), t.carrier.order());
    GskbMorphismData d{std::move(s), std::move(t), GskbMorphism{std::move(f), std::move(g)}};
    return d;
  }
  if (category == "bracoid") {
    HopfBracoid s = read_bracoid(r.at("source"));
    HopfBracoid t = read_bracoid(r.at("target"));
    LinMap f = read_map(r.at("f"), s.h_dim(), t.h_dim());
    LinMap g = read_map(r.at("g"), s.b_dim(), t.b_dim());
    BracoidMorphismData d{std::move(s), std::move(t), BracoidMorphism{std::move(f), std::move(g)}};
    return d;
  }
  r.at("category").fail("category must be \"gskb\" or \"bracoid\"");
}

// Writing ------------------------------------------------------------------

json write_map(const LinMap& f) {
  json a = json::array();
  for (const auto& e : f.entries()) a.push_back(json::array({e.row, e.col, e.value.str()}));
  return a;
}

json write_hopf(const HopfAlgebraData& h) {
  return json{{"dim", h.dim()},          {"unit", write_map(h.unit())},     {"mult", write_map(h.mult())},
              {"counit", write_map(h.counit())}, {"comult", write_map(h.comult())}, {"antipode", write_map(h.antipode)}};
}

json write_group(const CayleyTable& t, std::size_t unit) {
  return json{{"order", t.size()}, {"unit", unit}, {"table", t}};
}

json write_gskb(const GeneralizedSkewBracoid& b) {
  return json{{"G", write_group(b.acting.table(), b.acting.unit())},
              {"N", write_group(b.carrier.table(), b.carrier.unit())},
              {"action", b.action.table}};
}

json write_bracoid(const HopfBracoid& b) {
  return json{{"H", write_hopf(b.acting())}, {"B", write_hopf(b.carrier())}, {"action", write_map(b.action())}};
}

json write_payload(const Payload& p) {
  struct Visitor {
    json operator()(const GroupData& g) const { return write_group(g.table, g.unit); }
    json operator()(const HopfAlgebraData& h) const { return write_hopf(h); }
    json operator()(const GeneralizedSkewBracoid& b) const { return write_gskb(b); }
    json operator()(const HopfBracoid& b) const { return write_bracoid(b); }
    json operator()(const HopfBrace& b) const {
      return json{{"dim", b.dim()},
                  {"counit", write_map(b.coalgebra.counit)},
                  {"comult", write_map(b.coalgebra.comult)},
                  {"unit1", write_map(b.first.unit)},
                  {"mult1", write_map(b.first.mult)},
                  {"antipode1", write_map(b.first_antipode)},
                  {"unit2", write_map(b.second.unit)},
                  {"mult2", write_map(b.second.mult)},
                  {"antipode2", write_map(b.second_antipode)}};
    }
    json operator()(const Cocycle& c) const {
      return json{{"H", write_hopf(c.acting)}, {"B", write_hopf(c.carrier)}, {"gamma", write_map(c.gamma)},
                  {"pi", write_map(c.pi)}};
    }
    json operator()(const GskbMorphismData& m) const {
      return json{{"category", "gskb"}, {"source", write_gskb(m.source)}, {"target", write_gskb(m.target)},
                  {"f", m.map.acting_map}, {"g", m.map.carrier_map}};
    }
    json operator()(const BracoidMorphismData& m) const {
      return json{{"category", "bracoid"}, {"source", write_bracoid(m.source)}, {"target", write_bracoid(m.target)},
                  {"f", write_map(m.map.acting_map)}, {"g", write_map(m.map.carrier_map)}};
    }
  };
  return std::visit(Visitor{}, p);
}

bool is_flat(const json& a) {
  for (const auto& x : a)
    if (x.is_structured()) return false;
  return true;
}

void pretty(const json& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      if (!first) out += ",\n";
      first = false;
      out += inner + json(k).dump() + ": ";
      pretty(v, out, indent + 2);
    }
    out += "\n" + pad + "}";
  } else if (j.is_array()) {
    if (is_flat(j)) {
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ", ";
        out += j[i].dump();
      }
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",\n";
      out += inner;
      pretty(j[i], out, indent + 2);
    }
    out += "\n" + pad + "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::size_t max_dim() {
  std::size_t v = g_max_dim.load();
  if (v == 0) {
    v = env_max_dim();
    g_max_dim.store(v);
  }
  return v;
}

void set_max_dim(std::size_t n) { g_max_dim.store(n); }

void check_dim(std::size_t dim, std::string_view what) {
  if (dim > max_dim()) {
    throw BoundExceeded(std::string(what) + ": dimension " + std::to_string(dim) + " exceeds the limit " +
                        std::to_string(max_dim()) + " (set BRACOID_MAX_DIM to raise it)");
  }
}

Manifest parse_manifest(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
  Reader root(j, "");
  root.expect_keys({"kind", "name", "notes", "payload"});
  Manifest m;
  if (root.has("name")) m.name = root.at("name").string();
  if (root.has("notes")) m.notes = root.at("notes").string();
  const std::string kind = root.at("kind").string();
  Reader p = root.at("payload");
  if (kind == "group") {
    m.payload = read_group_data(p);
  } else if (kind == "hopf") {
    m.payload = read_hopf(p);
  } else if (kind == "gskb") {
    m.payload = read_gskb(p);
  } else if (kind == "bracoid") {
    m.payload = read_bracoid(p);
  } else if (kind == "brace") {
    m.payload = read_brace(p);
  } else if (kind == "cocycle") {
    m.payload = read_cocycle(p);
  } else if (kind == "morphism") {
    m.payload = read_morphism(p);
  } else {
    root.at("kind").fail("unknown kind '" + kind + "'");
  }
  return m;
}

Manifest load_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_manifest(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string serialize_manifest(const Manifest& m) {
  json j{{"kind", kind_name(m.kind())}, {"name", m.name}, {"notes", m.notes}, {"payload", write_payload(m.payload)}};
  std::string out;
  pretty(j, out, 0);
  out += "\n";
  return out;
}

}  // namespace bracoid
