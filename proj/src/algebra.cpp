#include "linext/algebra.hpp"

#include <algorithm>
#include <numeric>

namespace linext {

namespace {

// Mixed-radix codec, most significant digit first.
std::vector<Elem> decode(std::size_t id, std::span<const std::size_t> radix) {
  std::vector<Elem> digits(radix.size());
  for (std::size_t i = radix.size(); i-- > 0;) {
    digits[i] = static_cast<Elem>(id % radix[i]);
    id /= radix[i];
  }
  return digits;
}

std::size_t encode(std::span<const Elem> digits,
                   std::span<const std::size_t> radix) {
  std::size_t id = 0;
  for (std::size_t i = 0; i < radix.size(); ++i) id = id * radix[i] + digits[i];
  return id;
}

Elem find_two_sided_identity(const Table& t) {
  const std::size_t n = t.rows();
  for (Elem e = 0; e < n; ++e) {
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a) ok = t(e, a) == a && t(a, e) == a;
    if (ok) return e;
  }
  return kNone;
}

std::vector<Elem> find_inverses(const Table& t, Elem e) {
  const std::size_t n = t.rows();
  std::vector<Elem> inv(n, kNone);
  if (e == kNone) return inv;
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (t(a, b) == e && t(b, a) == e) {
        inv[a] = b;
        break;
      }
    }
  }
  return inv;
}

void check_associative(const Table& t, std::string_view label,
                       ValidityReport& out) {
  const std::size_t n = t.rows();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (t(t(a, b), c) != t(a, t(b, c))) {
          out.add(std::string(label), {a, b, c});
          return;
        }
}

void check_commutative(const Table& t, std::string_view label,
                       ValidityReport& out) {
  const std::size_t n = t.rows();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (t(a, b) != t(b, a)) {
        out.add(std::string(label), {a, b});
        return;
      }
}

}  // namespace

// ---------------------------------------------------------------- groups

FiniteGroup::FiniteGroup(Table mul) : mul_(std::move(mul)) {
  if (mul_.rows() == 0) throw StructuralError("group: order must be positive");
  mul_.require_shape(mul_.rows(), mul_.rows(), mul_.rows(), "group mul");
  identity_ = find_two_sided_identity(mul_);
  inv_ = find_inverses(mul_, identity_);
}

Elem FiniteGroup::identity() const {
  if (identity_ == kNone) throw PreconditionError("group has no identity");
  return identity_;
}

Elem FiniteGroup::inverse(Elem a) const {
  if (inv_.at(a) == kNone) {
    throw PreconditionError("group element " + std::to_string(a) +
                            " has no inverse");
  }
  return inv_[a];
}

ValidityReport check_group(const FiniteGroup& g) {
  ValidityReport out;
  check_associative(g.table(), "associativity", out);
  if (!g.has_identity()) {
    out.add("identity", {}, "no two-sided identity");
  } else {
    for (Elem a = 0; a < g.order(); ++a) {
      if (!g.has_inverse(a)) {
        out.add("inverse", {a});
        break;
      }
    }
  }
  return out;
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw PreconditionError("cyclic_group: n must be positive");
  Table t(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t(a, b) = static_cast<Elem>((a + b) % n);
  return FiniteGroup(std::move(t));
}

FiniteGroup finite_abelian_group(std::span<const std::size_t> k) {
  std::size_t order = 1;
  for (std::size_t ki : k) {
    if (ki == 0) throw FiniteOnlyError("exponent 0 gives an infinite cyclic factor");
    order *= ki;
  }
  Table t(order, order);
  for (std::size_t a = 0; a < order; ++a) {
    const auto da = decode(a, k);
    for (std::size_t b = 0; b < order; ++b) {
      auto db = decode(b, k);
      for (std::size_t i = 0; i < k.size(); ++i)
        db[i] = static_cast<Elem>((da[i] + db[i]) % k[i]);
      t(a, b) = static_cast<Elem>(encode(db, k));
    }
  }
  return FiniteGroup(std::move(t));
}

FiniteGroup symmetric_group(std::size_t n) {
  std::vector<std::vector<Elem>> perms;
  std::vector<Elem> p(n);
  std::iota(p.begin(), p.end(), Elem{0});
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const auto index = [&](const std::vector<Elem>& q) {
    return static_cast<Elem>(
        std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  Table t(perms.size(), perms.size());
  std::vector<Elem> r(n);
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      for (std::size_t i = 0; i < n; ++i) r[i] = perms[b][perms[a][i]];
      t(a, b) = index(r);
    }
  return FiniteGroup(std::move(t));
}

bool is_group_hom(const FiniteGroup& from, const FiniteGroup& to,
                  std::span<const Elem> f) {
  if (f.size() != from.order()) return false;
  for (Elem v : f)
    if (v >= to.order()) return false;
  for (Elem a = 0; a < from.order(); ++a)
    for (Elem b = 0; b < from.order(); ++b)
      if (f[from.mul(a, b)] != to.mul(f[a], f[b])) return false;
  return true;
}

bool is_abelian(const FiniteGroup& g) {
  ValidityReport r;
  check_commutative(g.table(), "commutative", r);
  return r.valid();
}

// ----------------------------------------------------------------- rings

FiniteRing::FiniteRing(Table add, Table mul)
    : add_(std::move(add)), mul_(std::move(mul)) {
  const std::size_t n = add_.rows();
  if (n == 0) throw StructuralError("ring: order must be positive");
  add_.require_shape(n, n, n, "ring add");
  mul_.require_shape(n, n, n, "ring mul");
  zero_ = find_two_sided_identity(add_);
  one_ = find_two_sided_identity(mul_);
  neg_ = find_inverses(add_, zero_);
  if (one_ != kNone) unit_inv_ = find_inverses(mul_, one_);
}

Elem FiniteRing::zero() const {
  if (zero_ == kNone) throw PreconditionError("ring has no additive identity");
  return zero_;
}

Elem FiniteRing::one() const {
  if (one_ == kNone) throw PreconditionError("ring has no multiplicative identity");
  return one_;
}

Elem FiniteRing::neg(Elem a) const {
  if (neg_.at(a) == kNone) {
    throw PreconditionError("ring element " + std::to_string(a) +
                            " has no additive inverse");
  }
  return neg_[a];
}

Elem FiniteRing::unit_inverse(Elem a) const {
  if (!is_unit(a)) {
    throw PreconditionError("ring element " + std::to_string(a) +
                            " is not a unit");
  }
  return unit_inv_[a];
}

std::vector<Elem> FiniteRing::units() const {
  std::vector<Elem> out;
  for (Elem a = 0; a < unit_inv_.size(); ++a)
    if (unit_inv_[a] != kNone) out.push_back(a);
  return out;
}

ValidityReport check_ring(const FiniteRing& r) {
  ValidityReport out;
  const std::size_t n = r.order();
  check_associative(r.add_table(), "add-associativity", out);
  check_commutative(r.add_table(), "add-commutativity", out);
  if (!r.has_zero()) {
    out.add("add-identity", {}, "no additive identity");
  } else {
    for (Elem a = 0; a < n; ++a) {
      bool found = false;
      for (Elem b = 0; b < n && !found; ++b) found = r.add(a, b) == r.zero();
      if (!found) {
        out.add("add-inverse", {a});
        break;
      }
    }
  }
  check_associative(r.mul_table(), "mul-associativity", out);
  if (!r.has_one()) out.add("mul-identity", {}, "no multiplicative identity");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)))
          out.add("left-distributivity", {a, b, c});
        if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c)))
          out.add("right-distributivity", {a, b, c});
      }
  if (r.has_one() && r.has_zero() && r.one() == r.zero())
    out.add("one-nonzero", {r.one()});
  return out;
}

FiniteRing zn_ring(std::size_t n) {
  if (n < 2) throw PreconditionError("zn_ring: n must be at least 2");
  Table add(n, n), mul(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      add(a, b) = static_cast<Elem>((a + b) % n);
      mul(a, b) = static_cast<Elem>((a * b) % n);
    }
  return FiniteRing(std::move(add), std::move(mul));
}

std::vector<Elem> GroupRing::coefficients(Elem x) const {
  std::vector<std::size_t> radix(group_.order(), base_.order());
  return decode(x, radix);
}

Elem GroupRing::from_coefficients(std::span<const Elem> c) const {
  std::vector<std::size_t> radix(group_.order(), base_.order());
  return static_cast<Elem>(encode(c, radix));
}

GroupRing group_ring(const FiniteRing& r, const FiniteGroup& g,
                     const Budget& budget) {
  const auto n = bounded_pow(r.order(), g.order(), budget.max_ring_order);
  if (!n) {
    throw CapacityError("group_ring: |R|^|G| = " + std::to_string(r.order()) +
                        "^" + std::to_string(g.order()) +
                        " exceeds ring budget " +
                        std::to_string(budget.max_ring_order));
  }
  const std::size_t order = *n;
  const std::vector<std::size_t> radix(g.order(), r.order());
  std::vector<std::vector<Elem>> coeff(order);
  for (std::size_t x = 0; x < order; ++x) coeff[x] = decode(x, radix);

  Table add(order, order), mul(order, order);
  std::vector<Elem> acc(g.order());
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      for (std::size_t i = 0; i < g.order(); ++i)
        acc[i] = r.add(coeff[x][i], coeff[y][i]);
      add(x, y) = static_cast<Elem>(encode(acc, radix));

      std::fill(acc.begin(), acc.end(), r.zero());
      for (Elem a = 0; a < g.order(); ++a)
        for (Elem b = 0; b < g.order(); ++b) {
          const Elem ab = g.mul(a, b);
          acc[ab] = r.add(acc[ab], r.mul(coeff[x][a], coeff[y][b]));
        }
      mul(x, y) = static_cast<Elem>(encode(acc, radix));
    }
  return GroupRing(r, g, FiniteRing(std::move(add), std::move(mul)));
}

Elem embed_group_element(const GroupRing& gr, Elem a) {
  if (a >= gr.group().order()) {
    throw PreconditionError("embed_group_element: id out of range");
  }
  std::vector<Elem> c(gr.group().order(), gr.base().zero());
  c[a] = gr.base().one();
  return gr.from_coefficients(c);
}

// --------------------------------------------------------------- modules

FiniteModule::FiniteModule(FiniteRing ring, Table add, Table act)
    : ring_(std::move(ring)), add_(std::move(add)), act_(std::move(act)) {
  const std::size_t n = add_.rows();
  if (n == 0) throw StructuralError("module: order must be positive");
  add_.require_shape(n, n, n, "module add");
  act_.require_shape(ring_.order(), n, n, "module act");
  zero_ = find_two_sided_identity(add_);
  neg_ = find_inverses(add_, zero_);
}

Elem FiniteModule::zero() const {
  if (zero_ == kNone) throw PreconditionError("module has no zero");
  return zero_;
}

Elem FiniteModule::neg(Elem u) const {
  if (neg_.at(u) == kNone) {
    throw PreconditionError("module element " + std::to_string(u) +
                            " has no additive inverse");
  }
  return neg_[u];
}

ValidityReport check_module(const FiniteModule& m) {
  ValidityReport out;
  const FiniteRing& r = m.ring();
  const std::size_t n = m.order();
  check_associative(m.add_table(), "add-associativity", out);
  check_commutative(m.add_table(), "add-commutativity", out);
  if (!m.add_table().square() || n == 0) return out;
  try {
    const Elem z = m.zero();
    for (Elem u = 0; u < n; ++u) {
      bool found = false;
      for (Elem v = 0; v < n && !found; ++v) found = m.add(u, v) == z;
      if (!found) {
        out.add("add-inverse", {u});
        break;
      }
    }
  } catch (const PreconditionError&) {
    out.add("add-identity", {}, "no zero");
  }
  for (Elem a = 0; a < r.order(); ++a)
    for (Elem u = 0; u < n; ++u) {
      for (Elem v = 0; v < n; ++v)
        if (m.act(a, m.add(u, v)) != m.add(m.act(a, u), m.act(a, v)))
          out.add("act-vector-distributivity", {a, u, v});
      for (Elem b = 0; b < r.order(); ++b) {
        if (m.act(r.add(a, b), u) != m.add(m.act(a, u), m.act(b, u)))
          out.add("act-scalar-distributivity", {a, b, u});
        if (m.act(r.mul(a, b), u) != m.act(a, m.act(b, u)))
          out.add("act-associativity", {a, b, u});
      }
    }
  if (r.has_one()) {
    for (Elem u = 0; u < n; ++u)
      if (m.act(r.one(), u) != u) {
        out.add("act-unital", {u});
        break;
      }
  } else {
    out.add("act-unital", {}, "ring has no one");
  }
  return out;
}

FiniteModule regular_module(const FiniteRing& r, const Budget& budget) {
  if (r.order() > budget.max_ring_order) {
    throw CapacityError("regular_module: ring order exceeds budget");
  }
  return FiniteModule(r, r.add_table(), r.mul_table());
}

FiniteModule free_module(const FiniteRing& r, std::size_t rank,
                         const Budget& budget) {
  const auto n = bounded_pow(r.order(), rank, budget.max_ring_order);
  if (!n) throw CapacityError("free_module: |R|^rank exceeds budget");
  const std::vector<std::size_t> radix(rank, r.order());
  Table add(*n, *n), act(r.order(), *n);
  for (std::size_t u = 0; u < *n; ++u) {
    const auto du = decode(u, radix);
    for (std::size_t v = 0; v < *n; ++v) {
      auto dv = decode(v, radix);
      for (std::size_t i = 0; i < rank; ++i) dv[i] = r.add(du[i], dv[i]);
      add(u, v) = static_cast<Elem>(encode(dv, radix));
    }
    for (Elem a = 0; a < r.order(); ++a) {
      auto d = du;
      for (auto& x : d) x = r.mul(a, x);
      act(a, u) = static_cast<Elem>(encode(d, radix));
    }
  }
  return FiniteModule(r, std::move(add), std::move(act));
}

}  // namespace linext
