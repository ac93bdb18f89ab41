#include "linext/reduction.hpp"

#include <stdexcept>

namespace linext {

namespace {

void require_same_base(const Quadruple& q1, const Quadruple& q2) {
  if (!(q1.mcq() == q2.mcq()) || !(q1.ring() == q2.ring())) {
    throw PreconditionError("quadruples live over different MCQs or rings");
  }
}

// One relation family of the equivalence:  h(target) * f = g * h(source).
struct Relation {
  Elem target, source, f, g;
};

std::vector<Relation> relations(const Quadruple& q1, const Quadruple& q2) {
  const Mcq& X = q1.mcq();
  std::vector<Relation> out;
  for (Elem x = 0; x < X.order(); ++x)
    for (Elem y = 0; y < X.order(); ++y) {
      const Elem xy = X.op(x, y);
      out.push_back({xy, x, q1.f1(x, y), q2.f1(x, y)});
      out.push_back({xy, y, q1.f2(x, y), q2.f2(x, y)});
    }
  for (std::size_t k = 0; k < X.block_count(); ++k)
    for (Elem a : X.block(k))
      for (Elem b : X.block(k)) {
        const Elem ab = X.mul(a, b);
        out.push_back({ab, a, q1.f3(a, b), q2.f3(a, b)});
        out.push_back({ab, b, q1.f4(a, b), q2.f4(a, b)});
      }
  return out;
}

class EquivalenceSearcher {
 public:
  EquivalenceSearcher(const Quadruple& q1, const Quadruple& q2,
                      const Budget& budget)
      : ring_(q1.ring()), order_(q1.mcq().order()), rel_(relations(q1, q2)),
        units_(ring_.units()), budget_(budget) {}

  EquivalenceSearch run() {
    EquivalenceSearch result;
    std::vector<Elem> h(order_, kNone);
    const bool ok = branch(h);
    result.nodes = nodes_;
    if (ok) {
      result.outcome = EquivalenceSearch::Outcome::found;
      result.h = std::move(found_);
    } else {
      result.outcome = exhausted_ ? EquivalenceSearch::Outcome::undecided
                                  : EquivalenceSearch::Outcome::none;
    }
    return result;
  }

 private:
  // Fills every value forced by a relation; false on contradiction.
  bool propagate(std::vector<Elem>& h) const {
    const FiniteRing& R = ring_;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& r : rel_) {
        const bool ht = h[r.target] != kNone, hs = h[r.source] != kNone;
        if (ht && hs) {
          if (R.mul(h[r.target], r.f) != R.mul(r.g, h[r.source])) return false;
        } else if (hs && R.is_unit(r.f)) {
          const Elem v = R.mul(R.mul(r.g, h[r.source]), R.unit_inverse(r.f));
          if (!R.is_unit(v)) return false;
          h[r.target] = v;
          changed = true;
        } else if (ht && R.is_unit(r.g)) {
          const Elem v = R.mul(R.mul(R.unit_inverse(r.g), h[r.target]), r.f);
          if (!R.is_unit(v)) return false;
          h[r.source] = v;
          changed = true;
        }
      }
    }
    return true;
  }

  bool branch(std::vector<Elem> h) {
    if (++nodes_ > budget_.max_search_nodes) {
      exhausted_ = true;
      return false;
    }
    if (!propagate(h)) return false;
    Elem free = kNone;
    for (Elem x = 0; x < order_ && free == kNone; ++x)
      if (h[x] == kNone) free = x;
    if (free == kNone) {
      found_ = std::move(h);
      return true;
    }
    for (Elem u : units_) {
      auto next = h;
      next[free] = u;
      if (branch(std::move(next))) return true;
      if (exhausted_) return false;
    }
    return false;
  }

  const FiniteRing& ring_;
  std::size_t order_;
  std::vector<Relation> rel_;
  std::vector<Elem> units_;
  Budget budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<Elem> found_;
};

}  // namespace

bool check_equivalent(const Quadruple& q1, const Quadruple& q2,
                      std::span<const Elem> h) {
  require_same_base(q1, q2);
  const FiniteRing& R = q1.ring();
  if (h.size() != q1.mcq().order()) {
    throw PreconditionError("check_equivalent: h has wrong length");
  }
  for (Elem v : h)
    if (v >= R.order() || !R.is_unit(v)) {
      throw PreconditionError("check_equivalent: h takes non-unit value " +
                              std::to_string(v));
    }
  for (const auto& r : relations(q1, q2))
    if (R.mul(h[r.target], r.f) != R.mul(r.g, h[r.source])) return false;
  return true;
}

EquivalenceSearch find_equivalence(const Quadruple& q1, const Quadruple& q2,
                                   const Budget& budget) {
  require_same_base(q1, q2);
  auto result = EquivalenceSearcher(q1, q2, budget).run();
  if (result.outcome == EquivalenceSearch::Outcome::found &&
      !check_equivalent(q1, q2, result.h)) {
    throw std::logic_error("find_equivalence: propagated witness fails re-check");
  }
  return result;
}

Quadruple pair_to_quadruple(const AlexanderPair& p) {
  if (!p.verified()) {
    throw PreconditionError("pair_to_quadruple: pair is not verified");
  }
  const Mcq& X = p.mcq();
  const FiniteRing& R = p.ring();
  std::vector<Table> f3, f4;
  for (std::size_t k = 0; k < X.block_count(); ++k) {
    const auto blk = X.block(k);
    Table t3(blk.size(), blk.size(), R.one()), t4(blk.size(), blk.size());
    for (std::size_t i = 0; i < blk.size(); ++i) {
      const Elem v = p.f1(blk[i], X.inverse(blk[i]));
      for (std::size_t j = 0; j < blk.size(); ++j) t4(i, j) = v;
    }
    f3.push_back(std::move(t3));
    f4.push_back(std::move(t4));
  }
  return verify_quadruple(Quadruple(p.mcq_ptr(), p.ring_ptr(), p.f1_table(),
                                    p.f2_table(), BlockTable(std::move(f3)),
                                    BlockTable(std::move(f4))));
}

Reduction reduce(const Quadruple& q) {
  if (!q.verified()) throw PreconditionError("reduce: quadruple is not verified");
  const Mcq& X = q.mcq();
  const FiniteRing& R = q.ring();
  const std::size_t n = X.order();
  Table g1(n, n), g2(n, n);
  for (Elem x = 0; x < n; ++x) {
    const Elem xi = X.inverse(x);
    for (Elem y = 0; y < n; ++y) {
      g1(x, y) = q.f1(X.identity_of(x), y);
      g2(x, y) = R.mul(R.mul(q.f3(X.op(x, y), X.op(xi, y)), q.f2(x, y)),
                       q.f3(X.identity_of(y), y));
    }
  }
  std::vector<Table> g3, g4;
  for (std::size_t k = 0; k < X.block_count(); ++k) {
    const auto blk = X.block(k);
    const Elem e = X.identity(k);
    Table t3(blk.size(), blk.size(), R.one()), t4(blk.size(), blk.size());
    for (std::size_t i = 0; i < blk.size(); ++i) {
      const Elem v = q.f1(e, X.inverse(blk[i]));
      for (std::size_t j = 0; j < blk.size(); ++j) t4(i, j) = v;
    }
    g3.push_back(std::move(t3));
    g4.push_back(std::move(t4));
  }
  std::vector<Elem> h(n);
  for (Elem x = 0; x < n; ++x) h[x] = q.f3(x, X.inverse(x));

  try {
    Quadruple reduced = verify_quadruple(Quadruple(
        q.mcq_ptr(), q.ring_ptr(), g1, g2, BlockTable(std::move(g3)),
        BlockTable(std::move(g4))));
    AlexanderPair pair = verify_pair(AlexanderPair(q.mcq_ptr(), q.ring_ptr(),
                                                   std::move(g1), std::move(g2)));
    return Reduction{std::move(reduced), std::move(pair), std::move(h)};
  } catch (const PreconditionError& e) {
    throw std::logic_error(std::string("reduce: ") + e.what());
  }
}

std::vector<Elem> cohomologous_iso(const Quadruple& q1, const Quadruple& q2,
                                   std::span<const Elem> h,
                                   const FiniteModule& m) {
  if (!check_equivalent(q1, q2, h)) {
    throw PreconditionError("cohomologous_iso: h is not an equivalence witness");
  }
  if (!(m.ring() == q1.ring())) {
    throw PreconditionError("cohomologous_iso: module is over a different ring");
  }
  const std::size_t mo = m.order();
  std::vector<Elem> phi(q1.mcq().order() * mo);
  for (Elem x = 0; x < q1.mcq().order(); ++x)
    for (Elem u = 0; u < mo; ++u)
      phi[x * mo + u] = static_cast<Elem>(x * mo + m.act(h[x], u));
  return phi;
}

ValidityReport audit_reduction(const Quadruple& q, const FiniteModule& m,
                               const Budget& budget) {
  ValidityReport out;
  const Reduction r = reduce(q);
  out.merge(check_quadruple(r.reduced), "reduced-quadruple:");
  out.merge(check_pair(r.pair), "reduced-pair:");
  if (!pair_to_quadruple(r.pair).same_tables(r.reduced)) {
    out.add("pair-induced", {});
  }
  if (!check_equivalent(q, r.reduced, r.h)) {
    out.add("equivalence", r.h);
    return out;
  }
  const auto phi = cohomologous_iso(q, r.reduced, r.h, m);
  const Mcq source = build_quadruple_extension(q, m, budget);
  const Mcq target = build_pair_extension(r.pair, m, budget);
  std::vector<bool> hit(phi.size(), false);
  for (Elem w = 0; w < phi.size(); ++w) {
    if (hit[phi[w]]) {
      out.add("iso-bijective", {w});
      break;
    }
    hit[phi[w]] = true;
  }
  if (!check_mcq_hom(source, target, phi)) out.add("iso-hom", {});
  for (Elem w = 0; w < phi.size(); ++w)
    if (phi[w] / m.order() != w / m.order()) {
      out.add("iso-projection", {w});
      break;
    }
  return out;
}

}  // namespace linext
