#include "linext/quadruple.hpp"

namespace linext {

BlockTable BlockTable::constant(const Mcq& shape, Elem value) {
  std::vector<Table> t;
  for (std::size_t k = 0; k < shape.block_count(); ++k) {
    const std::size_t s = shape.block(k).size();
    t.emplace_back(s, s, value);
  }
  return BlockTable(std::move(t));
}

Quadruple::Quadruple(std::shared_ptr<const Mcq> mcq,
                     std::shared_ptr<const FiniteRing> ring, Table f1, Table f2,
                     BlockTable f3, BlockTable f4)
    : mcq_(std::move(mcq)), ring_(std::move(ring)), f1_(std::move(f1)),
      f2_(std::move(f2)), f3_(std::move(f3)), f4_(std::move(f4)) {
  if (!mcq_ || !ring_) throw StructuralError("quadruple: missing mcq or ring");
  const std::size_t n = mcq_->order(), r = ring_->order();
  f1_.require_shape(n, n, r, "quadruple f1");
  f2_.require_shape(n, n, r, "quadruple f2");
  for (const auto* t : {&f3_, &f4_}) {
    const char* name = t == &f3_ ? "f3" : "f4";
    if (t->tables().size() != mcq_->block_count()) {
      throw StructuralError(std::string("quadruple ") + name + ": expected " +
                            std::to_string(mcq_->block_count()) +
                            " block tables, got " +
                            std::to_string(t->tables().size()));
    }
    for (std::size_t k = 0; k < mcq_->block_count(); ++k) {
      const std::size_t s = mcq_->block(k).size();
      t->tables()[k].require_shape(
          s, s, r, std::string("quadruple ") + name + "[" + std::to_string(k) + "]");
    }
  }
}

namespace {

void require_group_blocks(const Mcq& x) {
  for (std::size_t k = 0; k < x.block_count(); ++k) {
    if (!check_group(x.block_group(k)).valid()) {
      throw PreconditionError("quadruple: block " + std::to_string(k) +
                              " is not a group");
    }
  }
}

// (0-i)..(0-iv): the group layer on each block.
void scan_group_layer(const Quadruple& q, ValidityReport& out) {
  const Mcq& X = q.mcq();
  const FiniteRing& R = q.ring();
  const auto mul = [&](Elem a, Elem b) { return R.mul(a, b); };
  for (std::size_t k = 0; k < X.block_count(); ++k) {
    const auto blk = X.block(k);
    for (Elem a : blk)
      for (Elem b : blk) {
        if (!R.is_unit(q.f3(a, b)) || !R.is_unit(q.f4(a, b)))
          out.add("(0-i)", {a, b});
        const Elem ab = X.mul(a, b);
        for (Elem c : blk) {
          const Elem bc = X.mul(b, c);
          if (mul(q.f3(ab, c), q.f3(a, b)) != q.f3(a, bc))
            out.add("(0-ii)", {a, b, c});
          if (mul(q.f3(ab, c), q.f4(a, b)) != mul(q.f4(a, bc), q.f3(b, c)))
            out.add("(0-iii)", {a, b, c});
          if (q.f4(ab, c) != mul(q.f4(a, bc), q.f4(b, c)))
            out.add("(0-iv)", {a, b, c});
        }
      }
  }
}

}  // namespace

ValidityReport check_quadruple(const Quadruple& q) {
  const Mcq& X = q.mcq();
  const FiniteRing& R = q.ring();
  require_group_blocks(X);
  const auto add = [&](Elem a, Elem b) { return R.add(a, b); };
  const auto mul = [&](Elem a, Elem b) { return R.mul(a, b); };
  const auto op = [&](Elem x, Elem y) { return X.op(x, y); };
  const std::size_t n = X.order();
  ValidityReport out;
  scan_group_layer(q, out);

  for (std::size_t k = 0; k < X.block_count(); ++k) {
    const auto blk = X.block(k);
    const Elem e = X.identity(k);
    for (Elem a : blk)
      for (Elem b : blk) {
        const Elem bi = X.inverse(b), ab = X.mul(a, b);
        if (q.f1(a, b) != mul(q.f4(bi, ab), q.f3(a, b))) out.add("(1-i)", {a, b});
        const Elem lhs = add(
            R.neg(mul(mul(q.f3(bi, ab), q.f4(bi, e)), q.f3(b, bi))),
            mul(q.f4(bi, ab), q.f4(a, b)));
        if (q.f2(a, b) != lhs) out.add("(1-ii)", {a, b});

        for (Elem x = 0; x < n; ++x) {
          const Elem xa = op(x, a);
          if (q.f1(x, ab) != mul(q.f1(xa, b), q.f1(x, a))) out.add("(2-ii)", {x, a, b});
          if (mul(q.f2(x, ab), q.f3(a, b)) != mul(q.f1(xa, b), q.f2(x, a)))
            out.add("(2-iii)", {x, a, b});
          if (mul(q.f2(x, ab), q.f4(a, b)) != q.f2(xa, b))
            out.add("(2-iv)", {x, a, b});

          const Elem ax = op(a, x), bx = op(b, x);
          if (!X.same_block(ax, bx)) {
            out.add("(4-i)", {a, b, x}, "a◁x and b◁x lie in different blocks");
            continue;
          }
          if (mul(q.f1(ab, x), q.f3(a, b)) != mul(q.f3(ax, bx), q.f1(a, x)))
            out.add("(4-i)", {a, b, x});
          if (mul(q.f1(ab, x), q.f4(a, b)) != mul(q.f4(ax, bx), q.f1(b, x)))
            out.add("(4-ii)", {a, b, x});
          if (q.f2(ab, x) != add(mul(q.f3(ax, bx), q.f2(a, x)),
                                 mul(q.f4(ax, bx), q.f2(b, x))))
            out.add("(4-iii)", {a, b, x});
        }
      }
    for (Elem x = 0; x < n; ++x)
      if (q.f1(x, e) != R.one()) out.add("(2-i)", {x, e});
  }

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem xy = op(x, y);
      for (Elem z = 0; z < n; ++z) {
        const Elem xz = op(x, z), yz = op(y, z);
        if (mul(q.f1(xy, z), q.f1(x, y)) != mul(q.f1(xz, yz), q.f1(x, z)))
          out.add("(3-i)", {x, y, z});
        if (mul(q.f1(xy, z), q.f2(x, y)) != mul(q.f2(xz, yz), q.f1(y, z)))
          out.add("(3-ii)", {x, y, z});
        if (q.f2(xy, z) !=
            add(mul(q.f1(xz, yz), q.f2(x, z)), mul(q.f2(xz, yz), q.f2(y, z))))
          out.add("(3-iii)", {x, y, z});
      }
    }
  return out;
}

Quadruple verify_quadruple(Quadruple q) {
  require_valid(check_quadruple(q), "quadruple");
  q.verified_ = true;
  return q;
}

ValidityReport check_group_layer(const Quadruple& q) {
  const Mcq& X = q.mcq();
  const FiniteRing& R = q.ring();
  require_group_blocks(X);
  ValidityReport out;
  scan_group_layer(q, out);
  const auto mul = [&](Elem a, Elem b) { return R.mul(a, b); };
  for (std::size_t k = 0; k < X.block_count(); ++k) {
    const Elem e = X.identity(k);
    for (Elem a : X.block(k)) {
      if (q.f3(a, e) != R.one()) out.add("f3-right-identity", {a, e});
      if (q.f4(e, a) != R.one()) out.add("f4-left-identity", {e, a});
      const Elem ai = X.inverse(a);
      for (Elem b : X.block(k)) {
        const Elem ab = X.mul(a, b);
        const Elem s = q.f3(a, b), s_inv = q.f3(ab, X.inverse(b));
        if (mul(s, s_inv) != R.one() || mul(s_inv, s) != R.one())
          out.add("f3-inverse", {a, b});
        const Elem t = q.f4(a, b), t_inv = q.f4(ai, ab);
        if (mul(t, t_inv) != R.one() || mul(t_inv, t) != R.one())
          out.add("f4-inverse", {a, b});
      }
    }
  }
  return out;
}

FiniteGroup group_layer_product(const Quadruple& q, std::size_t block,
                                const FiniteModule& m) {
  const Mcq& X = q.mcq();
  const auto blk = X.block(block);
  const std::size_t mo = m.order(), s = blk.size() * mo;
  Table t(s, s);
  for (std::size_t i = 0; i < blk.size(); ++i)
    for (std::size_t j = 0; j < blk.size(); ++j) {
      const Elem a = blk[i], b = blk[j];
      const Elem ab = static_cast<Elem>(X.local_index(X.mul(a, b)));
      const Elem c3 = q.f3(a, b), c4 = q.f4(a, b);
      for (Elem u = 0; u < mo; ++u)
        for (Elem v = 0; v < mo; ++v)
          t(i * mo + u, j * mo + v) =
              static_cast<Elem>(ab * mo + m.add(m.act(c3, u), m.act(c4, v)));
    }
  return FiniteGroup(std::move(t));
}

Mcq raw_quadruple_extension(const Quadruple& q, const FiniteModule& m,
                            const Budget& budget) {
  const Mcq& X = q.mcq();
  if (!(m.ring() == q.ring())) {
    throw PreconditionError("quadruple extension: module is over a different ring");
  }
  const std::size_t mo = m.order();
  const std::size_t order = X.order() * mo;
  if (order > budget.max_structure_order) {
    throw CapacityError("quadruple extension: order " + std::to_string(order) +
                        " exceeds budget " +
                        std::to_string(budget.max_structure_order));
  }
  const auto id = [mo](Elem x, Elem u) { return static_cast<Elem>(x * mo + u); };
  Table op(order, order);
  for (Elem x = 0; x < X.order(); ++x)
    for (Elem y = 0; y < X.order(); ++y) {
      const Elem xy = X.op(x, y), a = q.f1(x, y), b = q.f2(x, y);
      for (Elem u = 0; u < mo; ++u)
        for (Elem v = 0; v < mo; ++v)
          op(id(x, u), id(y, v)) = id(xy, m.add(m.act(a, u), m.act(b, v)));
    }
  std::vector<std::vector<Elem>> blocks;
  std::vector<Table> tables;
  for (std::size_t k = 0; k < X.block_count(); ++k) {
    std::vector<Elem> ids;
    for (Elem a : X.block(k))
      for (Elem u = 0; u < mo; ++u) ids.push_back(id(a, u));
    blocks.push_back(std::move(ids));
    tables.push_back(group_layer_product(q, k, m).table());
  }
  return Mcq(std::move(blocks), std::move(tables), std::move(op));
}

Mcq build_quadruple_extension(const Quadruple& q, const FiniteModule& m,
                              const Budget& budget) {
  if (!q.verified()) {
    throw PreconditionError("build_quadruple_extension: quadruple is not verified");
  }
  return raw_quadruple_extension(q, m, budget);
}

Quadruple trivial_quadruple(std::shared_ptr<const Mcq> mcq,
                            std::shared_ptr<const FiniteRing> ring) {
  const std::size_t n = mcq->order();
  const Elem one = ring->one();
  BlockTable ones = BlockTable::constant(*mcq, one);
  Table f1(n, n, one), f2(n, n, ring->zero());
  return verify_quadruple(Quadruple(std::move(mcq), std::move(ring),
                                    std::move(f1), std::move(f2), ones, ones));
}

}  // namespace linext
