#include "linext/alexpair.hpp"

#include "linext/quandle.hpp"

namespace linext {

AlexanderPair::AlexanderPair(std::shared_ptr<const Mcq> mcq,
                             std::shared_ptr<const FiniteRing> ring, Table f1,
                             Table f2)
    : mcq_(std::move(mcq)), ring_(std::move(ring)), f1_(std::move(f1)),
      f2_(std::move(f2)) {
  if (!mcq_ || !ring_) throw StructuralError("alexpair: missing mcq or ring");
  const std::size_t n = mcq_->order();
  f1_.require_shape(n, n, ring_->order(), "alexpair f1");
  f2_.require_shape(n, n, ring_->order(), "alexpair f2");
}

namespace {

void require_group_blocks(const Mcq& x, std::string_view what) {
  for (std::size_t k = 0; k < x.block_count(); ++k) {
    if (!check_group(x.block_group(k)).valid()) {
      throw PreconditionError(std::string(what) + ": block " +
                              std::to_string(k) + " is not a group");
    }
  }
}

}  // namespace

ValidityReport check_pair(const AlexanderPair& p) {
  const Mcq& X = p.mcq();
  const FiniteRing& R = p.ring();
  require_group_blocks(X, "check_pair");
  const auto add = [&](Elem a, Elem b) { return R.add(a, b); };
  const auto mul = [&](Elem a, Elem b) { return R.mul(a, b); };
  const auto f1 = [&](Elem x, Elem y) { return p.f1(x, y); };
  const auto f2 = [&](Elem x, Elem y) { return p.f2(x, y); };
  const auto op = [&](Elem x, Elem y) { return X.op(x, y); };
  const std::size_t n = X.order();
  const Elem one = R.one();
  ValidityReport out;

  for (std::size_t k = 0; k < X.block_count(); ++k) {
    const auto blk = X.block(k);
    const Elem e = X.identity(k);
    for (Elem a : blk)
      for (Elem b : blk) {
        const Elem ai = X.inverse(a);
        if (add(f1(a, b), f2(a, b)) != f1(a, X.mul(ai, b)))
          out.add("block-sum", {a, b});
        for (Elem x = 0; x < n; ++x) {
          if (f1(a, x) != f1(b, x)) out.add("block-f1", {a, b, x});
          if (f2(X.mul(a, b), x) !=
              add(f2(a, x), mul(f1(op(b, x), op(ai, x)), f2(b, x))))
            out.add("block-f2", {a, b, x});
          if (f1(x, X.mul(a, b)) != mul(f1(op(x, a), b), f1(x, a)))
            out.add("f1-product", {x, a, b});
          if (f2(x, X.mul(a, b)) != mul(f1(op(x, a), b), f2(x, a)))
            out.add("f2-product", {x, a, b});
        }
      }
    for (Elem x = 0; x < n; ++x)
      if (f1(x, e) != one) out.add("unit", {x, e});
  }

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem xy = op(x, y);
      for (Elem z = 0; z < n; ++z) {
        const Elem xz = op(x, z), yz = op(y, z);
        if (mul(f1(xy, z), f1(x, y)) != mul(f1(xz, yz), f1(x, z)))
          out.add("exchange-f1", {x, y, z});
        if (mul(f1(xy, z), f2(x, y)) != mul(f2(xz, yz), f1(y, z)))
          out.add("exchange-f1f2", {x, y, z});
        if (f2(xy, z) != add(mul(f1(xz, yz), f2(x, z)), mul(f2(xz, yz), f2(y, z))))
          out.add("exchange-f2", {x, y, z});
      }
    }
  return out;
}

AlexanderPair verify_pair(AlexanderPair p) {
  require_valid(check_pair(p), "MCQ Alexander pair");
  p.verified_ = true;
  return p;
}

ValidityReport check_lemma23(const AlexanderPair& p) {
  const Mcq& X = p.mcq();
  const FiniteRing& R = p.ring();
  require_group_blocks(X, "check_lemma23");
  const auto mul = [&](Elem a, Elem b) { return R.mul(a, b); };
  const std::size_t n = X.order();
  ValidityReport out;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem inv = p.f1(X.op(x, y), X.inverse(y));
      if (mul(p.f1(x, y), inv) != R.one() || mul(inv, p.f1(x, y)) != R.one())
        out.add("f1-inverse", {x, y});
    }
  for (std::size_t k = 0; k < X.block_count(); ++k) {
    const Elem e = X.identity(k);
    for (Elem x = 0; x < n; ++x)
      if (p.f2(e, x) != R.zero()) out.add("f2-identity", {e, x});
    for (Elem a : X.block(k)) {
      const Elem ai = X.inverse(a);
      for (Elem b : X.block(k))
        for (Elem x = 0; x < n; ++x) {
          if (mul(p.f1(X.mul(a, b), x), p.f1(a, ai)) !=
              mul(p.f1(X.op(b, x), X.op(ai, x)), p.f1(b, x)))
            out.add("f1-block-shift", {a, b, x});
          if (p.f2(X.op(x, a), b) != mul(p.f2(x, X.mul(a, b)), p.f1(a, ai)))
            out.add("f2-shift", {x, a, b});
        }
    }
  }
  return out;
}

ValidityReport check_quandle_alexander_pair(const AlexanderPair& p) {
  const Mcq& X = p.mcq();
  const FiniteRing& R = p.ring();
  const auto add = [&](Elem a, Elem b) { return R.add(a, b); };
  const auto mul = [&](Elem a, Elem b) { return R.mul(a, b); };
  const std::size_t n = X.order();
  ValidityReport out;
  for (Elem a = 0; a < n; ++a)
    if (add(p.f1(a, a), p.f2(a, a)) != R.one()) out.add("diagonal", {a});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (!R.is_unit(p.f1(a, b))) out.add("f1-invertible", {a, b});
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        const Elem xy = X.op(x, y), xz = X.op(x, z), yz = X.op(y, z);
        if (mul(p.f1(xy, z), p.f1(x, y)) != mul(p.f1(xz, yz), p.f1(x, z)))
          out.add("exchange-f1", {x, y, z});
        if (mul(p.f1(xy, z), p.f2(x, y)) != mul(p.f2(xz, yz), p.f1(y, z)))
          out.add("exchange-f1f2", {x, y, z});
        if (p.f2(xy, z) !=
            add(mul(p.f1(xz, yz), p.f2(x, z)), mul(p.f2(xz, yz), p.f2(y, z))))
          out.add("exchange-f2", {x, y, z});
      }
  return out;
}

AlexanderPair trivial_pair(std::shared_ptr<const Mcq> mcq,
                           std::shared_ptr<const FiniteRing> ring) {
  const std::size_t n = mcq->order();
  Table f1(n, n, ring->one()), f2(n, n, ring->zero());
  return verify_pair(AlexanderPair(std::move(mcq), std::move(ring),
                                   std::move(f1), std::move(f2)));
}

Mcq raw_pair_extension(const AlexanderPair& p, const FiniteModule& m,
                       const Budget& budget) {
  const Mcq& X = p.mcq();
  if (!(m.ring() == p.ring())) {
    throw PreconditionError("pair extension: module is over a different ring");
  }
  require_group_blocks(X, "pair extension");
  const std::size_t mo = m.order();
  const std::size_t order = X.order() * mo;
  if (order > budget.max_structure_order) {
    throw CapacityError("pair extension: order " + std::to_string(order) +
                        " exceeds budget " +
                        std::to_string(budget.max_structure_order));
  }
  const auto id = [mo](Elem x, Elem u) { return static_cast<Elem>(x * mo + u); };

  Table op(order, order);
  for (Elem x = 0; x < X.order(); ++x)
    for (Elem y = 0; y < X.order(); ++y) {
      const Elem xy = X.op(x, y), a = p.f1(x, y), b = p.f2(x, y);
      for (Elem u = 0; u < mo; ++u)
        for (Elem v = 0; v < mo; ++v)
          op(id(x, u), id(y, v)) = id(xy, m.add(m.act(a, u), m.act(b, v)));
    }

  std::vector<std::vector<Elem>> blocks;
  std::vector<Table> tables;
  for (std::size_t k = 0; k < X.block_count(); ++k) {
    const auto blk = X.block(k);
    std::vector<Elem> ids;
    for (Elem a : blk)
      for (Elem u = 0; u < mo; ++u) ids.push_back(id(a, u));
    const std::size_t s = blk.size() * mo;
    Table t(s, s);
    for (std::size_t i = 0; i < blk.size(); ++i) {
      const Elem a = blk[i];
      const Elem c = p.f1(a, X.inverse(a));
      for (std::size_t j = 0; j < blk.size(); ++j) {
        const Elem ab_local = static_cast<Elem>(X.local_index(X.mul(a, blk[j])));
        for (Elem u = 0; u < mo; ++u)
          for (Elem v = 0; v < mo; ++v)
            t(i * mo + u, j * mo + v) =
                static_cast<Elem>(ab_local * mo + m.add(u, m.act(c, v)));
      }
    }
    blocks.push_back(std::move(ids));
    tables.push_back(std::move(t));
  }
  return Mcq(std::move(blocks), std::move(tables), std::move(op));
}

Mcq build_pair_extension(const AlexanderPair& p, const FiniteModule& m,
                         const Budget& budget) {
  if (!p.verified()) {
    throw PreconditionError("build_pair_extension: pair is not verified");
  }
  return raw_pair_extension(p, m, budget);
}

std::vector<Elem> extension_projection(std::size_t base_order,
                                       std::size_t m_order) {
  std::vector<Elem> pr(base_order * m_order);
  for (std::size_t i = 0; i < pr.size(); ++i) pr[i] = static_cast<Elem>(i / m_order);
  return pr;
}

AlexanderPair example25_pair(const FiniteRing& r, std::span<const std::size_t> k,
                             const Budget& budget) {
  const FiniteGroup g = finite_abelian_group(k);
  const GroupRing gr = group_ring(r, g, budget);
  const FiniteRing& rg = gr.ring();
  const std::size_t n = g.order();
  Table f1(n, n), f2(n, n);
  for (Elem s = 0; s < n; ++s)
    for (Elem t = 0; t < n; ++t) {
      const Elem ti = embed_group_element(gr, g.inverse(t));
      f1(s, t) = ti;
      f2(s, t) = rg.sub(rg.mul(ti, embed_group_element(gr, s)), ti);
    }
  return verify_pair(AlexanderPair(std::make_shared<const Mcq>(group_mcq(g)),
                                   std::make_shared<const FiniteRing>(rg),
                                   std::move(f1), std::move(f2)));
}

AlexanderPair example26_pair(const GFamily& f, std::span<const Elem> hom,
                             const FiniteRing& r, const Budget& budget) {
  const FiniteGroup& g = f.group();
  if (!is_group_hom(g, g, hom)) {
    throw PreconditionError("example26_pair: map is not a group endomorphism");
  }
  const GroupRing gr = group_ring(r, g, budget);
  const FiniteRing& rg = gr.ring();
  const Mcq x = associated_mcq(f, budget);
  const std::size_t gn = g.order();
  const std::size_t n = x.order();
  Table f1(n, n), f2(n, n);
  for (Elem p = 0; p < n; ++p)
    for (Elem q = 0; q < n; ++q) {
      const Elem a = p % gn, b = q % gn;
      const Elem fbi = embed_group_element(gr, g.inverse(hom[b]));
      f1(p, q) = fbi;
      f2(p, q) = rg.mul(fbi, rg.sub(embed_group_element(gr, hom[a]), rg.one()));
    }
  return verify_pair(AlexanderPair(std::make_shared<const Mcq>(x),
                                   std::make_shared<const FiniteRing>(rg),
                                   std::move(f1), std::move(f2)));
}

}  // namespace linext
