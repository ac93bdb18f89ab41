#include "linext/schema.hpp"

#include <charconv>

namespace linext::schema {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw StructuralError("schema: " + what);
}

const json& field(const json& j, const char* name) {
  if (!j.is_object()) fail(std::string("expected an object holding \"") + name + "\"");
  const auto it = j.find(name);
  if (it == j.end()) fail(std::string("missing field \"") + name + "\"");
  return *it;
}

void expect_kind(const json& j, std::string_view kind) {
  if (!j.is_object()) fail("expected a " + std::string(kind) + " object");
  const auto it = j.find("kind");
  if (it != j.end() && (!it->is_string() || it->get<std::string>() != kind)) {
    fail("expected kind \"" + std::string(kind) + "\", got " + it->dump());
  }
}

std::size_t read_size(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    fail(std::string(what) + ": expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

Elem read_elem(const json& j, const char* what) {
  const std::size_t v = read_size(j, what);
  if (v >= kNone) fail(std::string(what) + ": id out of range");
  return static_cast<Elem>(v);
}

std::vector<Elem> read_ids(const json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + ": expected an array");
  std::vector<Elem> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(read_elem(v, what));
  return out;
}

Table read_table(const json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + ": expected an array of rows");
  std::vector<std::vector<Elem>> rows;
  for (const auto& r : j) rows.push_back(read_ids(r, what));
  try {
    return Table::from_rows(rows);
  } catch (const StructuralError& e) {
    fail(std::string(what) + ": " + e.what());
  }
}

std::vector<Table> read_tables(const json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + ": expected an array of tables");
  std::vector<Table> out;
  for (const auto& t : j) out.push_back(read_table(t, what));
  return out;
}

void check_order(const json& j, std::size_t actual, const char* what) {
  const auto it = j.find("order");
  if (it == j.end()) return;
  if (read_size(*it, "order") != actual) {
    fail(std::string(what) + ": \"order\" is " + it->dump() + " but the table has " +
         std::to_string(actual) + " rows");
  }
}

std::size_t parse_ref_number(std::string_view ref, std::string_view prefix) {
  std::size_t n = 0;
  const auto digits = ref.substr(prefix.size());
  const auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || p != digits.data() + digits.size() || digits.empty()) {
    fail("bad reference \"" + std::string(ref) + "\"");
  }
  return n;
}

json block_tables_json(const BlockTable& t) {
  json tables = json::array();
  for (const auto& b : t.tables()) tables.push_back(b.to_rows());
  return json{{"block_tables", std::move(tables)}};
}

BlockTable read_block_table(const json& j, const char* what) {
  return BlockTable(read_tables(field(j, "block_tables"), what));
}

template <typename Fn>
auto wrap(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    fail(std::string(what) + ": " + e.what());
  }
}

}  // namespace

std::string kind_of(const json& doc) {
  if (!doc.is_object()) fail("document is not a JSON object");
  const auto it = doc.find("kind");
  if (it == doc.end() || !it->is_string()) fail("document has no string \"kind\"");
  return it->get<std::string>();
}

// ---------------------------------------------------------------- emit

json to_json(const FiniteGroup& g) {
  return {{"kind", "group"}, {"order", g.order()}, {"mul", g.table().to_rows()}};
}

json to_json(const FiniteRing& r) {
  json j{{"kind", "ring"},
         {"order", r.order()},
         {"add", r.add_table().to_rows()},
         {"mul", r.mul_table().to_rows()}};
  if (r.has_zero()) j["zero"] = r.zero();
  if (r.has_one()) j["one"] = r.one();
  return j;
}

json to_json(const FiniteModule& m) {
  return {{"kind", "module"},
          {"ring", to_json(m.ring())},
          {"order", m.order()},
          {"add", m.add_table().to_rows()},
          {"act", m.act_table().to_rows()}};
}

json to_json(const Quandle& q) {
  return {{"kind", "quandle"}, {"order", q.order()}, {"tri", q.table().to_rows()}};
}

json to_json(const Mcq& x) {
  json block_mul = json::array();
  for (std::size_t k = 0; k < x.block_count(); ++k) {
    const auto blk = x.block(k);
    json rows = json::array();
    for (Elem a : blk) {
      json row = json::array();
      for (Elem b : blk) row.push_back(x.mul(a, b));
      rows.push_back(std::move(row));
    }
    block_mul.push_back(std::move(rows));
  }
  return {{"kind", "mcq"},
          {"order", x.order()},
          {"blocks", x.blocks()},
          {"block_mul", std::move(block_mul)},
          {"tri", x.op_table().to_rows()}};
}

json to_json(const GFamily& f) {
  json ops = json::array();
  for (const auto& t : f.ops()) ops.push_back(t.to_rows());
  return {{"kind", "gfamily"},
          {"group", to_json(f.group())},
          {"order", f.order()},
          {"tri_g", std::move(ops)}};
}

json to_json(const AlexanderPair& p) {
  return {{"kind", "alexpair"},
          {"mcq", to_json(p.mcq())},
          {"ring", to_json(p.ring())},
          {"f1", p.f1_table().to_rows()},
          {"f2", p.f2_table().to_rows()}};
}

json to_json(const Quadruple& q) {
  return {{"kind", "quadruple"},
          {"mcq", to_json(q.mcq())},
          {"ring", to_json(q.ring())},
          {"f1", q.f1_table().to_rows()},
          {"f2", q.f2_table().to_rows()},
          {"f3", block_tables_json(q.f3_table())},
          {"f4", block_tables_json(q.f4_table())}};
}

// ---------------------------------------------------------------- parse

FiniteGroup group_from_json(const json& j) {
  expect_kind(j, "group");
  Table mul = read_table(field(j, "mul"), "group mul");
  check_order(j, mul.rows(), "group");
  return FiniteGroup(std::move(mul));
}

FiniteRing ring_from_ref(std::string_view ref) {
  if (!ref.starts_with("zn:")) fail("unknown ring reference \"" + std::string(ref) + "\"");
  const std::size_t n = parse_ref_number(ref, "zn:");
  if (n < 2) fail("zn:N needs N >= 2");
  return zn_ring(n);
}

FiniteRing ring_from_json(const json& j) {
  if (j.is_string()) return ring_from_ref(j.get<std::string>());
  expect_kind(j, "ring");
  Table add = read_table(field(j, "add"), "ring add");
  Table mul = read_table(field(j, "mul"), "ring mul");
  check_order(j, add.rows(), "ring");
  FiniteRing r(std::move(add), std::move(mul));
  for (const char* name : {"zero", "one"}) {
    const auto it = j.find(name);
    if (it == j.end()) continue;
    const Elem declared = read_elem(*it, name);
    const bool is_zero = name[0] == 'z';
    const bool known = is_zero ? r.has_zero() : r.has_one();
    if (known && declared != (is_zero ? r.zero() : r.one())) {
      fail(std::string("ring declares ") + name + " = " + std::to_string(declared) +
           " but the tables give " + std::to_string(is_zero ? r.zero() : r.one()));
    }
  }
  return r;
}

FiniteModule module_from_json(const json& j) {
  expect_kind(j, "module");
  FiniteRing r = ring_from_json(field(j, "ring"));
  Table add = read_table(field(j, "add"), "module add");
  Table act = read_table(field(j, "act"), "module act");
  check_order(j, add.rows(), "module");
  return FiniteModule(std::move(r), std::move(add), std::move(act));
}

Quandle quandle_from_json(const json& j) {
  expect_kind(j, "quandle");
  Table tri = read_table(field(j, "tri"), "quandle tri");
  check_order(j, tri.rows(), "quandle");
  return Quandle(std::move(tri));
}

Mcq mcq_from_json(const json& j) {
  if (j.is_string()) {
    const auto ref = j.get<std::string>();
    if (ref.starts_with("cyclic:")) {
      const std::size_t n = parse_ref_number(ref, "cyclic:");
      if (n == 0) fail("cyclic:N needs N >= 1");
      return group_mcq(cyclic_group(n));
    }
    if (ref.starts_with("trivial:")) {
      const std::size_t n = parse_ref_number(ref, "trivial:");
      if (n == 0) fail("trivial:N needs N >= 1");
      return trivial_mcq(n);
    }
    fail("unknown mcq reference \"" + ref + "\"");
  }
  expect_kind(j, "mcq");
  const json& bj = field(j, "blocks");
  if (!bj.is_array()) fail("mcq blocks: expected an array");
  std::vector<std::vector<Elem>> blocks;
  for (const auto& b : bj) blocks.push_back(read_ids(b, "mcq blocks"));
  std::vector<Table> global = read_tables(field(j, "block_mul"), "mcq block_mul");
  Table tri = read_table(field(j, "tri"), "mcq tri");
  check_order(j, tri.rows(), "mcq");
  if (global.size() != blocks.size()) {
    fail("mcq: " + std::to_string(blocks.size()) + " blocks but " +
         std::to_string(global.size()) + " block_mul tables");
  }
  // block_mul entries are element ids; the constructor wants local positions.
  std::vector<Elem> local(tri.rows(), kNone), owner(tri.rows(), kNone);
  for (std::size_t k = 0; k < blocks.size(); ++k)
    for (std::size_t i = 0; i < blocks[k].size(); ++i) {
      const Elem x = blocks[k][i];
      if (x >= tri.rows()) fail("mcq blocks: id " + std::to_string(x) + " out of range");
      if (owner[x] != kNone) fail("mcq blocks: id " + std::to_string(x) + " repeated");
      owner[x] = static_cast<Elem>(k);
      local[x] = static_cast<Elem>(i);
    }
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    Table& t = global[k];
    const std::size_t s = blocks[k].size();
    t.require_shape(s, s, tri.rows(), "mcq block_mul[" + std::to_string(k) + "]");
    for (auto& v : t.data()) {
      if (owner[v] != k) {
        fail("mcq block_mul[" + std::to_string(k) + "]: product " +
             std::to_string(v) + " leaves the block");
      }
      v = local[v];
    }
  }
  return Mcq(std::move(blocks), std::move(global), std::move(tri));
}

GFamily gfamily_from_json(const json& j) {
  expect_kind(j, "gfamily");
  FiniteGroup g = group_from_json(field(j, "group"));
  std::vector<Table> ops = read_tables(field(j, "tri_g"), "gfamily tri_g");
  if (!ops.empty()) check_order(j, ops.front().rows(), "gfamily");
  return GFamily(std::move(g), std::move(ops));
}

AlexanderPair pair_from_json(const json& j) {
  expect_kind(j, "alexpair");
  return wrap("alexpair", [&] {
    auto x = std::make_shared<const Mcq>(mcq_from_json(field(j, "mcq")));
    auto r = std::make_shared<const FiniteRing>(ring_from_json(field(j, "ring")));
    return AlexanderPair(std::move(x), std::move(r), read_table(field(j, "f1"), "f1"),
                         read_table(field(j, "f2"), "f2"));
  });
}

Quadruple quadruple_from_json(const json& j) {
  expect_kind(j, "quadruple");
  return wrap("quadruple", [&] {
    auto x = std::make_shared<const Mcq>(mcq_from_json(field(j, "mcq")));
    auto r = std::make_shared<const FiniteRing>(ring_from_json(field(j, "ring")));
    return Quadruple(std::move(x), std::move(r), read_table(field(j, "f1"), "f1"),
                     read_table(field(j, "f2"), "f2"),
                     read_block_table(field(j, "f3"), "f3"),
                     read_block_table(field(j, "f4"), "f4"));
  });
}

// ---------------------------------------------------------------- reports

json report_json(std::string_view of, const ValidityReport& r) {
  json v = json::array();
  for (const auto& x : r.violations()) {
    json e{{"axiom", x.axiom}, {"witness", x.witness}};
    if (!x.detail.empty()) e["detail"] = x.detail;
    v.push_back(std::move(e));
  }
  return {{"kind", "report"}, {"of", of}, {"valid", r.valid()}, {"violations", std::move(v)}};
}

json extension_json(const Mcq& ext, const Mcq& base,
                    std::span<const Elem> projection) {
  return {{"kind", "extension"},
          {"mcq", to_json(ext)},
          {"base", to_json(base)},
          {"projection", std::vector<Elem>(projection.begin(), projection.end())},
          {"fiber_size", base.order() == 0 ? 0 : ext.order() / base.order()}};
}

json reduction_json(const Quadruple& q, const Reduction& r) {
  return {{"kind", "reduction"},
          {"quadruple", to_json(q)},
          {"reduced", to_json(r.reduced)},
          {"pair", to_json(r.pair)},
          {"h", r.h}};
}

}  // namespace linext::schema
