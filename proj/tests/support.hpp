#pragma once

// Test-side oracles and generators. Nothing here calls the library's
// checkers: the oracles recompute verdicts from the defining formulas so
// they can be compared against the library.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "linext/alexpair.hpp"
#include "linext/mcq.hpp"
#include "linext/quadruple.hpp"
#include "linext/quandle.hpp"
#include "linext/reduction.hpp"

namespace oracle {

using linext::Elem;

inline std::vector<Elem> units_mod(std::size_t n) {
  std::vector<Elem> out;
  for (Elem a = 0; a < n; ++a)
    if (std::gcd<std::size_t, std::size_t>(a, n) == 1) out.push_back(a);
  return out;
}

/// Plain quandle hom test straight from f(a◁b) = f(a)◁f(b).
inline bool quandle_hom(const linext::Table& a, const linext::Table& b,
                        const std::vector<Elem>& f) {
  for (Elem x = 0; x < a.rows(); ++x)
    for (Elem y = 0; y < a.rows(); ++y)
      if (f[a(x, y)] != b(f[x], f[y])) return false;
  return true;
}

/// Every bijection, sorted lexicographically.
inline std::vector<std::vector<Elem>> brute_isos(const linext::Table& a,
                                                 const linext::Table& b) {
  std::vector<std::vector<Elem>> out;
  if (a.rows() != b.rows()) return out;
  std::vector<Elem> p(a.rows());
  std::iota(p.begin(), p.end(), 0);
  do {
    if (quandle_hom(a, b, p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// A structure on ⊔ blocks given by raw callbacks; decides the MCQ axioms
/// by direct scans with no shared code.
struct RawMcq {
  std::size_t order;
  std::vector<std::size_t> block;                  // block index of each element
  std::function<Elem(Elem, Elem)> mul;             // same-block only
  std::function<Elem(Elem, Elem)> tri;
};

inline bool raw_is_mcq(const RawMcq& s) {
  const std::size_t n = s.order;
  std::size_t nb = 0;
  for (auto b : s.block) nb = std::max(nb, b + 1);
  std::vector<std::vector<Elem>> blocks(nb);
  for (Elem x = 0; x < n; ++x) blocks[s.block[x]].push_back(x);
  std::vector<Elem> id(nb, linext::kNone), inv(n, linext::kNone);
  for (std::size_t k = 0; k < nb; ++k) {
    const auto& B = blocks[k];
    for (Elem a : B)
      for (Elem b : B) {
        if (s.block[s.mul(a, b)] != k) return false;
        for (Elem c : B)
          if (s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c))) return false;
      }
    for (Elem e : B) {
      bool ok = true;
      for (Elem a : B) ok = ok && s.mul(e, a) == a && s.mul(a, e) == a;
      if (ok) id[k] = e;
    }
    if (id[k] == linext::kNone) return false;
    for (Elem a : B) {
      for (Elem b : B)
        if (s.mul(a, b) == id[k] && s.mul(b, a) == id[k]) inv[a] = b;
      if (inv[a] == linext::kNone) return false;
    }
    for (Elem a : B)
      for (Elem b : B)
        if (s.tri(a, b) != s.mul(s.mul(inv[b], a), b)) return false;
  }
  for (Elem x = 0; x < n; ++x) {
    for (std::size_t k = 0; k < nb; ++k) {
      if (s.tri(x, id[k]) != x) return false;
      for (Elem a : blocks[k])
        for (Elem b : blocks[k])
          if (s.tri(x, s.mul(a, b)) != s.tri(s.tri(x, a), b)) return false;
    }
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (s.tri(s.tri(x, y), z) != s.tri(s.tri(x, z), s.tri(y, z))) return false;
  }
  for (std::size_t k = 0; k < nb; ++k)
    for (Elem a : blocks[k])
      for (Elem b : blocks[k])
        for (Elem x = 0; x < n; ++x) {
          const Elem ax = s.tri(a, x), bx = s.tri(b, x);
          if (s.block[ax] != s.block[bx]) return false;
          if (s.tri(s.mul(a, b), x) != s.mul(ax, bx)) return false;
        }
  return true;
}

/// The linear extension of (f1..f4) over Z_n with M = Z_n, written with
/// plain modular arithmetic. f3/f4 are read through global ids.
inline bool extension_is_mcq_mod(const linext::Mcq& x, std::size_t n,
                                 const std::function<Elem(Elem, Elem)>& f1,
                                 const std::function<Elem(Elem, Elem)>& f2,
                                 const std::function<Elem(Elem, Elem)>& f3,
                                 const std::function<Elem(Elem, Elem)>& f4) {
  RawMcq s;
  s.order = x.order() * n;
  for (Elem w = 0; w < s.order; ++w) s.block.push_back(x.block_of(w / n));
  s.mul = [&](Elem p, Elem q) {
    const Elem a = p / n, u = p % n, b = q / n, v = q % n;
    return static_cast<Elem>(x.mul(a, b) * n + (f3(a, b) * u + f4(a, b) * v) % n);
  };
  s.tri = [&](Elem p, Elem q) {
    const Elem a = p / n, u = p % n, b = q / n, v = q % n;
    return static_cast<Elem>(x.op(a, b) * n + (f1(a, b) * u + f2(a, b) * v) % n);
  };
  return raw_is_mcq(s);
}

}  // namespace oracle

namespace gen {

using linext::Elem;

inline linext::Table table(std::mt19937_64& rng, std::size_t rows,
                           std::size_t cols, std::size_t bound) {
  linext::Table t(rows, cols);
  for (auto& v : t.data()) v = static_cast<Elem>(rng() % bound);
  return t;
}

inline Elem pick(std::mt19937_64& rng, const std::vector<Elem>& from) {
  return from[rng() % from.size()];
}

inline std::vector<Elem> unit_map(std::mt19937_64& rng, const linext::FiniteRing& r,
                                  std::size_t n) {
  const auto u = r.units();
  std::vector<Elem> h(n);
  for (auto& v : h) v = pick(rng, u);
  return h;
}

/// The quadruple q' with q ~_h q': g = h(target) f h(source)^-1 for each
/// relation family. Valid whenever q is.
inline linext::Quadruple twist(const linext::Quadruple& q, const std::vector<Elem>& h) {
  const auto& X = q.mcq();
  const auto& R = q.ring();
  const auto conj = [&](Elem target, Elem f, Elem source) {
    return R.mul(R.mul(h[target], f), R.unit_inverse(h[source]));
  };
  const std::size_t n = X.order();
  linext::Table g1(n, n), g2(n, n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      g1(x, y) = conj(X.op(x, y), q.f1(x, y), x);
      g2(x, y) = conj(X.op(x, y), q.f2(x, y), y);
    }
  std::vector<linext::Table> g3, g4;
  for (std::size_t k = 0; k < X.block_count(); ++k) {
    const auto blk = X.block(k);
    linext::Table t3(blk.size(), blk.size()), t4(blk.size(), blk.size());
    for (std::size_t i = 0; i < blk.size(); ++i)
      for (std::size_t j = 0; j < blk.size(); ++j) {
        const Elem a = blk[i], b = blk[j], ab = X.mul(a, b);
        t3(i, j) = conj(ab, q.f3(a, b), a);
        t4(i, j) = conj(ab, q.f4(a, b), b);
      }
    g3.push_back(std::move(t3));
    g4.push_back(std::move(t4));
  }
  return linext::Quadruple(q.mcq_ptr(), q.ring_ptr(), std::move(g1), std::move(g2),
                           linext::BlockTable(std::move(g3)),
                           linext::BlockTable(std::move(g4)));
}

/// Same tables with `k` random cells overwritten.
inline linext::AlexanderPair mutate(std::mt19937_64& rng, const linext::AlexanderPair& p,
                                    int k) {
  linext::Table f1 = p.f1_table(), f2 = p.f2_table();
  const std::size_t r = p.ring().order();
  for (int i = 0; i < k; ++i) {
    auto& t = (rng() & 1) ? f1 : f2;
    t.data()[rng() % t.data().size()] = static_cast<Elem>(rng() % r);
  }
  return linext::AlexanderPair(p.mcq_ptr(), p.ring_ptr(), std::move(f1), std::move(f2));
}

inline linext::Quadruple mutate(std::mt19937_64& rng, const linext::Quadruple& q, int k) {
  linext::Table f1 = q.f1_table(), f2 = q.f2_table();
  linext::BlockTable f3 = q.f3_table(), f4 = q.f4_table();
  const std::size_t r = q.ring().order();
  for (int i = 0; i < k; ++i) {
    const auto which = rng() % 4;
    std::vector<Elem>* cells;
    if (which == 0) {
      cells = &f1.data();
    } else if (which == 1) {
      cells = &f2.data();
    } else {
      auto& bt = which == 2 ? f3 : f4;
      cells = &bt.tables()[rng() % bt.tables().size()].data();
    }
    (*cells)[rng() % cells->size()] = static_cast<Elem>(rng() % r);
  }
  return linext::Quadruple(q.mcq_ptr(), q.ring_ptr(), std::move(f1), std::move(f2),
                           std::move(f3), std::move(f4));
}

}  // namespace gen
