#include "linext/mcq.hpp"

#include "iso_search.hpp"

namespace linext {

namespace {

Elem local_identity(const Table& t) {
  for (Elem e = 0; e < t.rows(); ++e) {
    bool ok = true;
    for (Elem a = 0; a < t.rows() && ok; ++a) ok = t(e, a) == a && t(a, e) == a;
    if (ok) return e;
  }
  return kNone;
}

}  // namespace

Mcq::Mcq(std::vector<std::vector<Elem>> blocks, std::vector<Table> block_mul,
         Table op)
    : blocks_(std::move(blocks)), block_mul_(std::move(block_mul)),
      op_(std::move(op)) {
  const std::size_t n = op_.rows();
  if (n == 0) throw StructuralError("mcq: order must be positive");
  op_.require_shape(n, n, n, "mcq op");
  if (blocks_.size() != block_mul_.size()) {
    throw StructuralError("mcq: " + std::to_string(blocks_.size()) +
                          " blocks but " + std::to_string(block_mul_.size()) +
                          " block tables");
  }
  block_of_.assign(n, static_cast<std::size_t>(-1));
  local_.assign(n, 0);
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (blocks_[k].empty()) {
      throw StructuralError("mcq: block " + std::to_string(k) + " is empty");
    }
    for (std::size_t i = 0; i < blocks_[k].size(); ++i) {
      const Elem x = blocks_[k][i];
      if (x >= n) {
        throw StructuralError("mcq: block " + std::to_string(k) +
                              " contains out-of-range id " + std::to_string(x));
      }
      if (block_of_[x] != static_cast<std::size_t>(-1)) {
        throw StructuralError("mcq: id " + std::to_string(x) +
                              " appears in more than one block position");
      }
      block_of_[x] = k;
      local_[x] = i;
    }
    const std::size_t s = blocks_[k].size();
    block_mul_[k].require_shape(s, s, s,
                                "mcq block_mul[" + std::to_string(k) + "]");
  }
  for (Elem x = 0; x < n; ++x) {
    if (block_of_[x] == static_cast<std::size_t>(-1)) {
      throw StructuralError("mcq: id " + std::to_string(x) +
                            " is not covered by any block");
    }
  }
  identity_.assign(blocks_.size(), kNone);
  inverse_.assign(n, kNone);
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    const Table& t = block_mul_[k];
    const Elem e = local_identity(t);
    if (e == kNone) continue;
    identity_[k] = blocks_[k][e];
    for (Elem i = 0; i < t.rows(); ++i)
      for (Elem j = 0; j < t.rows(); ++j)
        if (t(i, j) == e && t(j, i) == e) {
          inverse_[blocks_[k][i]] = blocks_[k][j];
          break;
        }
  }
}

Mcq Mcq::from_product(std::vector<std::vector<Elem>> blocks,
                      const std::function<Elem(Elem, Elem)>& mul, Table op) {
  const std::size_t n = op.rows();
  std::vector<std::size_t> local(n, static_cast<std::size_t>(-1));
  std::vector<std::size_t> owner(n, static_cast<std::size_t>(-1));
  for (std::size_t k = 0; k < blocks.size(); ++k)
    for (std::size_t i = 0; i < blocks[k].size(); ++i) {
      if (blocks[k][i] >= n) throw StructuralError("mcq: block id out of range");
      local[blocks[k][i]] = i;
      owner[blocks[k][i]] = k;
    }
  std::vector<Table> tables;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const auto& b = blocks[k];
    Table t(b.size(), b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) {
        const Elem p = mul(b[i], b[j]);
        if (p >= n || owner[p] != k) {
          throw StructuralError("mcq: block product leaves block " +
                                std::to_string(k));
        }
        t(i, j) = static_cast<Elem>(local[p]);
      }
    tables.push_back(std::move(t));
  }
  return Mcq(std::move(blocks), std::move(tables), std::move(op));
}

Elem Mcq::identity(std::size_t k) const {
  if (identity_.at(k) == kNone) {
    throw PreconditionError("mcq block " + std::to_string(k) +
                            " has no identity");
  }
  return identity_[k];
}

Elem Mcq::inverse(Elem a) const {
  if (inverse_.at(a) == kNone) {
    throw PreconditionError("mcq element " + std::to_string(a) +
                            " has no inverse in its block");
  }
  return inverse_[a];
}

ValidityReport check_mcq(const Mcq& x) {
  ValidityReport out;
  const std::size_t n = x.order();
  std::vector<bool> group_ok(x.block_count());
  for (std::size_t k = 0; k < x.block_count(); ++k) {
    const auto r = check_group(x.block_group(k));
    group_ok[k] = r.valid();
    if (!r.valid()) {
      const auto& v = r.violations().front();
      std::vector<Elem> w;
      for (Elem l : v.witness) w.push_back(x.block(k)[l]);
      out.add("block-group", w, "block " + std::to_string(k) + ": " + v.axiom);
    }
  }

  // Axiom 1: a ◁ b = b^-1 a b inside each block.
  for (std::size_t k = 0; k < x.block_count() && !out.has("axiom-1"); ++k) {
    if (!group_ok[k]) continue;
    for (Elem a : x.block(k))
      for (Elem b : x.block(k))
        if (x.op(a, b) != x.mul(x.mul(x.inverse(b), a), b)) {
          out.add("axiom-1", {a, b});
          break;
        }
  }

  // Axiom 2: x ◁ e = x and x ◁ (ab) = (x ◁ a) ◁ b.
  for (std::size_t k = 0; k < x.block_count() && !out.has("axiom-2-identity"); ++k) {
    if (!x.block_has_identity(k)) continue;
    const Elem e = x.identity(k);
    for (Elem y = 0; y < n; ++y)
      if (x.op(y, e) != y) {
        out.add("axiom-2-identity", {y, e});
        break;
      }
  }
  for (std::size_t k = 0; k < x.block_count() && !out.has("axiom-2-product"); ++k)
    for (Elem a : x.block(k)) {
      if (out.has("axiom-2-product")) break;
      for (Elem b : x.block(k)) {
        const Elem ab = x.mul(a, b);
        bool bad = false;
        for (Elem y = 0; y < n; ++y)
          if (x.op(y, ab) != x.op(x.op(y, a), b)) {
            out.add("axiom-2-product", {y, a, b});
            bad = true;
            break;
          }
        if (bad) break;
      }
    }

  // Axiom 3: right self-distributivity.
  for (Elem a = 0; a < n && !out.has("axiom-3"); ++a)
    for (Elem b = 0; b < n && !out.has("axiom-3"); ++b) {
      const Elem ab = x.op(a, b);
      for (Elem c = 0; c < n; ++c)
        if (x.op(ab, c) != x.op(x.op(a, c), x.op(b, c))) {
          out.add("axiom-3", {a, b, c});
          break;
        }
    }

  // Axiom 4: (ab) ◁ y = (a ◁ y)(b ◁ y), the right side living in one block.
  for (std::size_t k = 0; k < x.block_count(); ++k)
    for (Elem a : x.block(k))
      for (Elem b : x.block(k))
        for (Elem y = 0; y < n; ++y) {
          const Elem ay = x.op(a, y), by = x.op(b, y);
          if (!x.same_block(ay, by)) {
            out.add("axiom-4-blocks", {a, b, y});
            continue;
          }
          if (x.op(x.mul(a, b), y) != x.mul(ay, by)) out.add("axiom-4", {a, b, y});
        }
  return out;
}

Mcq group_mcq(const FiniteGroup& g) {
  std::vector<Elem> ids(g.order());
  for (Elem a = 0; a < g.order(); ++a) ids[a] = a;
  return Mcq({ids}, {g.table()}, conjugation_quandle(g).table());
}

Mcq trivial_mcq(std::size_t n) {
  std::vector<std::vector<Elem>> blocks;
  std::vector<Table> tables;
  for (Elem a = 0; a < n; ++a) {
    blocks.push_back({a});
    tables.emplace_back(1, 1, 0);
  }
  return Mcq(std::move(blocks), std::move(tables), trivial_quandle(n).table());
}

bool check_mcq_hom(const Mcq& from, const Mcq& to, std::span<const Elem> f) {
  if (f.size() != from.order()) return false;
  for (Elem v : f)
    if (v >= to.order()) return false;
  const std::size_t n = from.order();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (f[from.op(a, b)] != to.op(f[a], f[b])) return false;
      if (from.same_block(a, b)) {
        if (!to.same_block(f[a], f[b])) return false;
        if (f[from.mul(a, b)] != to.mul(f[a], f[b])) return false;
      }
    }
  return true;
}

namespace {

Table global_product(const Mcq& x) {
  Table t(x.order(), x.order(), kNone);
  for (std::size_t k = 0; k < x.block_count(); ++k)
    for (Elem a : x.block(k))
      for (Elem b : x.block(k)) t(a, b) = x.mul(a, b);
  return t;
}

detail::IsoView mcq_view(const Mcq& x, const Table& product) {
  detail::IsoView v;
  v.op = &x.op_table();
  v.mul = &product;
  v.block_count = x.block_count();
  for (Elem a = 0; a < x.order(); ++a) {
    v.block.push_back(x.block_of(a));
    auto sig = detail::op_signature(x.op_table(), a);
    const std::size_t k = x.block_of(a);
    sig.push_back(x.block(k).size());
    std::uint64_t elem_order = 0;
    if (x.block_has_identity(k)) {
      const Elem e = x.identity(k);
      Elem p = a;
      for (std::uint64_t i = 1; i <= x.block(k).size(); ++i) {
        if (p == e) {
          elem_order = i;
          break;
        }
        p = x.mul(p, a);
      }
    }
    sig.push_back(elem_order);
    v.signature.push_back(std::move(sig));
  }
  return v;
}

}  // namespace

std::vector<std::vector<Elem>> find_mcq_isos(const Mcq& a, const Mcq& b,
                                             std::size_t limit) {
  if (a.order() != b.order() || a.block_count() != b.block_count()) return {};
  const Table pa = global_product(a), pb = global_product(b);
  return detail::search_isomorphisms(mcq_view(a, pa), mcq_view(b, pb), limit);
}

ExtensionCheck check_extension(const Mcq& xt, const Mcq& x,
                               std::span<const Elem> f) {
  ExtensionCheck r;
  if (f.size() != xt.order()) {
    r.reason = "map has wrong length";
    return r;
  }
  for (Elem v : f)
    if (v >= x.order()) {
      r.reason = "map value out of range";
      return r;
    }
  std::vector<std::size_t> fiber(x.order(), 0);
  for (Elem v : f) ++fiber[v];
  for (Elem y = 0; y < x.order(); ++y) {
    if (fiber[y] == 0) {
      r.reason = "not surjective: " + std::to_string(y) + " has empty fiber";
      return r;
    }
    if (fiber[y] != fiber[0]) {
      r.reason = "fiber sizes differ at " + std::to_string(y);
      return r;
    }
  }
  if (!check_mcq_hom(xt, x, f)) {
    r.reason = "not an MCQ homomorphism";
    return r;
  }
  r.ok = true;
  r.fiber_size = fiber[0];
  return r;
}

ProductForm product_form(const Mcq& xt, const Mcq& x, std::span<const Elem> f) {
  const auto ext = check_extension(xt, x, f);
  if (!ext) throw PreconditionError("product_form: " + ext.reason);
  const std::size_t k = ext.fiber_size;
  std::vector<Elem> phi(xt.order());
  std::vector<std::size_t> rank(x.order(), 0);
  for (Elem w = 0; w < xt.order(); ++w)
    phi[w] = static_cast<Elem>(f[w] * k + rank[f[w]]++);

  std::vector<std::vector<Elem>> blocks;
  std::vector<Table> tables;
  for (std::size_t b = 0; b < xt.block_count(); ++b) {
    std::vector<Elem> ids;
    for (Elem w : xt.block(b)) ids.push_back(phi[w]);
    blocks.push_back(std::move(ids));
    tables.push_back(xt.block_table(b));
  }
  Table op(xt.order(), xt.order());
  for (Elem a = 0; a < xt.order(); ++a)
    for (Elem b = 0; b < xt.order(); ++b) op(phi[a], phi[b]) = phi[xt.op(a, b)];
  return ProductForm{Mcq(std::move(blocks), std::move(tables), std::move(op)),
                     std::move(phi), k};
}

// -------------------------------------------------------------- G-families

GFamily::GFamily(FiniteGroup group, std::vector<Table> ops)
    : group_(std::move(group)), ops_(std::move(ops)) {
  if (ops_.size() != group_.order()) {
    throw StructuralError("gfamily: expected " + std::to_string(group_.order()) +
                          " operation tables, got " + std::to_string(ops_.size()));
  }
  const std::size_t m = ops_.front().rows();
  if (m == 0) throw StructuralError("gfamily: order must be positive");
  for (std::size_t g = 0; g < ops_.size(); ++g)
    ops_[g].require_shape(m, m, m, "gfamily tri_g[" + std::to_string(g) + "]");
}

ValidityReport check_gfamily(const GFamily& f) {
  ValidityReport out;
  const FiniteGroup& G = f.group();
  out.merge(check_group(G), "group:");
  if (!out.valid()) return out;
  const std::size_t m = f.order();
  const Elem e = G.identity();
  for (Elem g = 0; g < G.order() && !out.has("family-idempotence"); ++g)
    for (Elem x = 0; x < m; ++x)
      if (f.op(g, x, x) != x) {
        out.add("family-idempotence", {g, x});
        break;
      }
  for (Elem x = 0; x < m && !out.has("family-identity"); ++x)
    for (Elem y = 0; y < m; ++y)
      if (f.op(e, x, y) != x) {
        out.add("family-identity", {x, y});
        break;
      }
  for (Elem g = 0; g < G.order(); ++g)
    for (Elem h = 0; h < G.order(); ++h) {
      const Elem gh = G.mul(g, h);
      const Elem conj = G.mul(G.mul(G.inverse(h), g), h);
      for (Elem x = 0; x < m; ++x)
        for (Elem y = 0; y < m; ++y) {
          if (f.op(gh, x, y) != f.op(h, f.op(g, x, y), y))
            out.add("family-product", {g, h, x, y});
          if (out.has("family-distributivity")) continue;
          for (Elem z = 0; z < m; ++z)
            if (f.op(h, f.op(g, x, y), z) !=
                f.op(conj, f.op(h, x, z), f.op(h, y, z))) {
              out.add("family-distributivity", {g, h, x, y, z});
              break;
            }
        }
    }
  return out;
}

GFamily alexander_gfamily(const FiniteModule& m, const FiniteGroup& g,
                          std::span<const Elem> rep, const Budget& budget) {
  const FiniteRing& r = m.ring();
  require_valid(check_group(g), "alexander_gfamily: group");
  if (rep.size() != g.order()) {
    throw PreconditionError("alexander_gfamily: rep must have one value per group element");
  }
  if (m.order() > budget.max_structure_order) {
    throw CapacityError("alexander_gfamily: module order exceeds budget");
  }
  for (Elem a = 0; a < g.order(); ++a) {
    if (rep[a] >= r.order() || !r.is_unit(rep[a])) {
      throw PreconditionError("alexander_gfamily: rep(" + std::to_string(a) +
                              ") is not a unit");
    }
  }
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) {
      if (rep[g.mul(a, b)] != r.mul(rep[a], rep[b])) {
        throw PreconditionError("alexander_gfamily: rep is not a homomorphism at (" +
                                std::to_string(a) + "," + std::to_string(b) + ")");
      }
      if (r.mul(rep[a], rep[b]) != r.mul(rep[b], rep[a])) {
        throw PreconditionError("alexander_gfamily: rep values do not commute");
      }
    }
  const std::size_t n = m.order();
  std::vector<Table> ops;
  for (Elem a = 0; a < g.order(); ++a) {
    const Elem t = rep[a];
    const Elem s = r.sub(r.one(), t);
    Table op(n, n);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) op(x, y) = m.add(m.act(t, x), m.act(s, y));
    ops.push_back(std::move(op));
  }
  return GFamily(g, std::move(ops));
}

GFamily zk_family(const Quandle& q) {
  const auto k = quandle_type(q);
  std::vector<Table> ops;
  for (std::uint64_t i = 0; i < k; ++i)
    ops.push_back(iterated_tri(q, static_cast<std::int64_t>(i)).table());
  return GFamily(cyclic_group(k), std::move(ops));
}

Mcq associated_mcq(const GFamily& f, const Budget& budget) {
  const FiniteGroup& G = f.group();
  const std::size_t gn = G.order(), m = f.order();
  if (gn * m > budget.max_structure_order) {
    throw CapacityError("associated_mcq: order " + std::to_string(gn * m) +
                        " exceeds budget");
  }
  const auto id = [gn](Elem g, Elem y) { return static_cast<Elem>(y * gn + g); };
  std::vector<std::vector<Elem>> blocks(m);
  std::vector<Table> tables(m, G.table());
  for (Elem y = 0; y < m; ++y)
    for (Elem g = 0; g < gn; ++g) blocks[y].push_back(id(g, y));
  Table op(gn * m, gn * m);
  for (Elem x = 0; x < m; ++x)
    for (Elem g = 0; g < gn; ++g)
      for (Elem y = 0; y < m; ++y)
        for (Elem h = 0; h < gn; ++h)
          op(id(g, x), id(h, y)) =
              id(G.mul(G.mul(G.inverse(h), g), h), f.op(h, x, y));
  return Mcq(std::move(blocks), std::move(tables), std::move(op));
}

std::vector<Elem> associated_projection(const GFamily& f) {
  const std::size_t gn = f.group().order();
  std::vector<Elem> p(gn * f.order());
  for (Elem i = 0; i < p.size(); ++i) p[i] = static_cast<Elem>(i % gn);
  return p;
}

}  // namespace linext
