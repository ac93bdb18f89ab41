#include "linext/quandle.hpp"

#include <numeric>

#include "iso_search.hpp"

namespace linext {

Quandle::Quandle(Table op) : op_(std::move(op)) {
  if (op_.rows() == 0) throw StructuralError("quandle: order must be positive");
  op_.require_shape(op_.rows(), op_.rows(), op_.rows(), "quandle op");
}

ValidityReport check_quandle(const Quandle& q) {
  ValidityReport out;
  const std::size_t n = q.order();
  for (Elem a = 0; a < n; ++a)
    if (q.op(a, a) != a) {
      out.add("(Q1)", {a});
      break;
    }
  std::vector<Elem> hit(n);
  for (Elem b = 0; b < n && !out.has("(Q2)"); ++b) {
    std::fill(hit.begin(), hit.end(), kNone);
    for (Elem a = 0; a < n; ++a) {
      const Elem c = q.op(a, b);
      if (hit[c] != kNone) {
        out.add("(Q2)", {hit[c], a, b}, "right translation not injective");
        break;
      }
      hit[c] = a;
    }
  }
  for (Elem a = 0; a < n && !out.has("(Q3)"); ++a)
    for (Elem b = 0; b < n && !out.has("(Q3)"); ++b)
      for (Elem c = 0; c < n; ++c)
        if (q.op(q.op(a, b), c) != q.op(q.op(a, c), q.op(b, c))) {
          out.add("(Q3)", {a, b, c});
          break;
        }
  return out;
}

Quandle trivial_quandle(std::size_t n) {
  Table t(n, n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t(a, b) = a;
  return Quandle(std::move(t));
}

Quandle conjugation_quandle(const FiniteGroup& g) {
  const std::size_t n = g.order();
  Table t(n, n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t(a, b) = g.mul(g.mul(g.inverse(b), a), b);
  return Quandle(std::move(t));
}

Quandle dihedral_quandle(std::size_t n, const Budget& budget) {
  if (n == 0) throw PreconditionError("dihedral_quandle: n must be positive");
  if (n > budget.max_structure_order) {
    throw CapacityError("dihedral_quandle: order exceeds budget");
  }
  Table t(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      t(a, b) = static_cast<Elem>((2 * b + n - a) % n);
  return Quandle(std::move(t));
}

Quandle alexander_quandle(const FiniteModule& m, Elem t, const Budget& budget) {
  const FiniteRing& r = m.ring();
  if (t >= r.order() || !r.is_unit(t)) {
    throw PreconditionError("alexander_quandle: t = " + std::to_string(t) +
                            " is not a unit");
  }
  if (m.order() > budget.max_structure_order) {
    throw CapacityError("alexander_quandle: order exceeds budget");
  }
  const Elem one_minus_t = r.sub(r.one(), t);
  const std::size_t n = m.order();
  Table op(n, n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      op(a, b) = m.add(m.act(t, a), m.act(one_minus_t, b));
  return Quandle(std::move(op));
}

std::uint64_t quandle_type(const Quandle& q) {
  const std::size_t n = q.order();
  std::uint64_t type = 1;
  std::vector<bool> seen(n);
  for (Elem b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), false);
    for (Elem a = 0; a < n; ++a) {
      if (seen[a]) continue;
      std::uint64_t len = 0;
      Elem x = a;
      do {
        seen[x] = true;
        x = q.op(x, b);
        ++len;
        if (len > n) throw PreconditionError("quandle_type: (Q2) fails");
      } while (x != a);
      type = std::lcm(type, len);
    }
  }
  return type;
}

Quandle iterated_tri(const Quandle& q, std::int64_t i) {
  const std::size_t n = q.order();
  const std::int64_t k = static_cast<std::int64_t>(quandle_type(q));
  const std::int64_t e = ((i % k) + k) % k;
  Table t(n, n);
  for (Elem b = 0; b < n; ++b)
    for (Elem a = 0; a < n; ++a) {
      Elem x = a;
      for (std::int64_t s = 0; s < e; ++s) x = q.op(x, b);
      t(a, b) = x;
    }
  return Quandle(std::move(t));
}

bool check_quandle_hom(const Quandle& from, const Quandle& to,
                       std::span<const Elem> f) {
  if (f.size() != from.order()) return false;
  for (Elem v : f)
    if (v >= to.order()) return false;
  for (Elem a = 0; a < from.order(); ++a)
    for (Elem b = 0; b < from.order(); ++b)
      if (f[from.op(a, b)] != to.op(f[a], f[b])) return false;
  return true;
}

namespace {

detail::IsoView quandle_view(const Quandle& q) {
  detail::IsoView v;
  v.op = &q.table();
  for (Elem a = 0; a < q.order(); ++a)
    v.signature.push_back(detail::op_signature(q.table(), a));
  return v;
}

}  // namespace

std::vector<std::vector<Elem>> find_quandle_isos(const Quandle& a,
                                                 const Quandle& b,
                                                 std::size_t limit) {
  if (a.order() != b.order()) return {};
  return detail::search_isomorphisms(quandle_view(a), quandle_view(b), limit);
}

}  // namespace linext
