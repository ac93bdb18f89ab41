#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "linext/algebra.hpp"
#include "linext/core.hpp"

namespace linext {

/// A finite set with a binary operation given by op(a, b) = a ◁ b.
class Quandle {
 public:
  explicit Quandle(Table op);

  std::size_t order() const noexcept { return op_.rows(); }
  Elem op(Elem a, Elem b) const noexcept { return op_(a, b); }
  const Table& table() const noexcept { return op_; }

  bool operator==(const Quandle&) const = default;

 private:
  Table op_;
};

/// Labels: "(Q1)" idempotence, "(Q2)" bijective right translations,
/// "(Q3)" right self-distributivity.
ValidityReport check_quandle(const Quandle& q);

Quandle trivial_quandle(std::size_t n);

/// a ◁ b = b^-1 a b.
Quandle conjugation_quandle(const FiniteGroup& g);

/// a ◁ b = 2b - a on Z_n.
Quandle dihedral_quandle(std::size_t n, const Budget& budget = {});

/// a ◁ b = t a + (1 - t) b on the elements of `m`. Throws PreconditionError
/// unless t is a unit of m.ring().
Quandle alexander_quandle(const FiniteModule& m, Elem t,
                          const Budget& budget = {});

/// Least n >= 1 with a ◁^n b = a everywhere: the lcm of the cycle lengths of
/// all right translations. Requires (Q2).
std::uint64_t quandle_type(const Quandle& q);

/// The quandle with operation ◁^i (negative i uses inverse translations).
Quandle iterated_tri(const Quandle& q, std::int64_t i);

bool check_quandle_hom(const Quandle& from, const Quandle& to,
                       std::span<const Elem> f);

/// Isomorphisms from `a` to `b`, at most `limit` of them, in a deterministic
/// search order. Orders that differ give none.
std::vector<std::vector<Elem>> find_quandle_isos(
    const Quandle& a, const Quandle& b,
    std::size_t limit = static_cast<std::size_t>(-1));

}  // namespace linext
