#pragma once

// Finite groups, rings and left modules backed by operation tables.
//
// Constructors only enforce structure (square tables, entries in range).
// Axioms are verified separately by check_group / check_ring / check_module,
// which return a witness for every violated law. Identities, inverses and
// units are detected from the tables at construction so that structures
// built from arbitrary tables can still be inspected.

#include <span>
#include <vector>

#include "linext/core.hpp"

namespace linext {

class FiniteGroup {
 public:
  /// Throws StructuralError unless `mul` is a non-empty square table with
  /// entries below its order.
  explicit FiniteGroup(Table mul);

  std::size_t order() const noexcept { return mul_.rows(); }
  Elem mul(Elem a, Elem b) const noexcept { return mul_(a, b); }
  const Table& table() const noexcept { return mul_; }

  bool has_identity() const noexcept { return identity_ != kNone; }
  bool has_inverse(Elem a) const noexcept { return inv_[a] != kNone; }
  Elem identity() const;
  Elem inverse(Elem a) const;

  bool operator==(const FiniteGroup& o) const { return mul_ == o.mul_; }

 private:
  Table mul_;
  Elem identity_ = kNone;
  std::vector<Elem> inv_;
};

ValidityReport check_group(const FiniteGroup& g);

/// Z/nZ under addition.
FiniteGroup cyclic_group(std::size_t n);

/// Z_{k_1} x ... x Z_{k_r}. Element ids are mixed-radix with the first
/// factor most significant. Any k_i = 0 throws FiniteOnlyError.
FiniteGroup finite_abelian_group(std::span<const std::size_t> k);

/// Permutations of {0..n-1} in lexicographic order, composed as
/// (p*q)(i) = q(p(i)).
FiniteGroup symmetric_group(std::size_t n);

bool is_group_hom(const FiniteGroup& from, const FiniteGroup& to,
                  std::span<const Elem> f);

bool is_abelian(const FiniteGroup& g);

class FiniteRing {
 public:
  explicit FiniteRing(Table add, Table mul);

  std::size_t order() const noexcept { return add_.rows(); }
  Elem add(Elem a, Elem b) const noexcept { return add_(a, b); }
  Elem mul(Elem a, Elem b) const noexcept { return mul_(a, b); }
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  const Table& add_table() const noexcept { return add_; }
  const Table& mul_table() const noexcept { return mul_; }

  bool has_zero() const noexcept { return zero_ != kNone; }
  bool has_one() const noexcept { return one_ != kNone; }
  Elem zero() const;
  Elem one() const;

  bool is_unit(Elem a) const noexcept {
    return !unit_inv_.empty() && unit_inv_[a] != kNone;
  }
  Elem unit_inverse(Elem a) const;
  /// Ascending ids r with rs = sr = one for some s.
  std::vector<Elem> units() const;

  bool operator==(const FiniteRing& o) const {
    return add_ == o.add_ && mul_ == o.mul_;
  }

 private:
  Table add_;
  Table mul_;
  Elem zero_ = kNone;
  Elem one_ = kNone;
  std::vector<Elem> neg_;
  std::vector<Elem> unit_inv_;
};

ValidityReport check_ring(const FiniteRing& r);

/// Z/nZ, n >= 2.
FiniteRing zn_ring(std::size_t n);

/// R[G] for finite R and G. Elements are coefficient vectors G -> R, numbered
/// lexicographically with the coefficient of group element 0 most significant.
class GroupRing {
 public:
  GroupRing(FiniteRing base, FiniteGroup group, FiniteRing ring)
      : base_(std::move(base)), group_(std::move(group)), ring_(std::move(ring)) {}

  const FiniteRing& ring() const noexcept { return ring_; }
  const FiniteRing& base() const noexcept { return base_; }
  const FiniteGroup& group() const noexcept { return group_; }

  std::vector<Elem> coefficients(Elem x) const;
  Elem from_coefficients(std::span<const Elem> c) const;

 private:
  FiniteRing base_;
  FiniteGroup group_;
  FiniteRing ring_;
};

/// Throws CapacityError when |R|^|G| exceeds budget.max_ring_order.
GroupRing group_ring(const FiniteRing& r, const FiniteGroup& g,
                     const Budget& budget = {});

/// Basis vector of group element `a`; a multiplicative injection G -> R[G].
Elem embed_group_element(const GroupRing& gr, Elem a);

class FiniteModule {
 public:
  /// `act` is ring.order() x order(): act(r, u) = r u.
  FiniteModule(FiniteRing ring, Table add, Table act);

  const FiniteRing& ring() const noexcept { return ring_; }
  std::size_t order() const noexcept { return add_.rows(); }
  Elem add(Elem u, Elem v) const noexcept { return add_(u, v); }
  Elem act(Elem r, Elem u) const noexcept { return act_(r, u); }
  const Table& add_table() const noexcept { return add_; }
  const Table& act_table() const noexcept { return act_; }
  Elem zero() const;
  Elem neg(Elem u) const;

  bool operator==(const FiniteModule& o) const {
    return ring_ == o.ring_ && add_ == o.add_ && act_ == o.act_;
  }

 private:
  FiniteRing ring_;
  Table add_;
  Table act_;
  Elem zero_ = kNone;
  std::vector<Elem> neg_;
};

ValidityReport check_module(const FiniteModule& m);

/// R as a left module over itself.
FiniteModule regular_module(const FiniteRing& r, const Budget& budget = {});

/// R^rank with componentwise operations; tuple ids lexicographic, first
/// component most significant.
FiniteModule free_module(const FiniteRing& r, std::size_t rank,
                         const Budget& budget = {});

}  // namespace linext
