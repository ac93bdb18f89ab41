#pragma once

#include <memory>

#include "linext/algebra.hpp"
#include "linext/core.hpp"
#include "linext/mcq.hpp"

namespace linext {

/// A map defined on ⊔ (G_λ x G_λ): one square table per block, indexed by
/// local positions within the block.
class BlockTable {
 public:
  BlockTable() = default;
  explicit BlockTable(std::vector<Table> per_block)
      : tables_(std::move(per_block)) {}

  /// Constant map on the blocks of `shape`.
  static BlockTable constant(const Mcq& shape, Elem value);

  const std::vector<Table>& tables() const noexcept { return tables_; }
  std::vector<Table>& tables() noexcept { return tables_; }
  Elem local(std::size_t block, std::size_t i, std::size_t j) const noexcept {
    return tables_[block](i, j);
  }

  bool operator==(const BlockTable&) const = default;

 private:
  std::vector<Table> tables_;
};

/// (f1, f2, f3, f4): f1, f2 on X x X; f3, f4 block-diagonal.
class Quadruple {
 public:
  Quadruple(std::shared_ptr<const Mcq> mcq,
            std::shared_ptr<const FiniteRing> ring, Table f1, Table f2,
            BlockTable f3, BlockTable f4);

  const Mcq& mcq() const noexcept { return *mcq_; }
  const FiniteRing& ring() const noexcept { return *ring_; }
  const std::shared_ptr<const Mcq>& mcq_ptr() const noexcept { return mcq_; }
  const std::shared_ptr<const FiniteRing>& ring_ptr() const noexcept { return ring_; }

  Elem f1(Elem x, Elem y) const noexcept { return f1_(x, y); }
  Elem f2(Elem x, Elem y) const noexcept { return f2_(x, y); }
  /// Throws DomainError when a and b lie in different blocks.
  Elem f3(Elem a, Elem b) const { return lookup(f3_, a, b, "f3"); }
  Elem f4(Elem a, Elem b) const { return lookup(f4_, a, b, "f4"); }

  const Table& f1_table() const noexcept { return f1_; }
  const Table& f2_table() const noexcept { return f2_; }
  const BlockTable& f3_table() const noexcept { return f3_; }
  const BlockTable& f4_table() const noexcept { return f4_; }

  bool verified() const noexcept { return verified_; }

  bool same_tables(const Quadruple& o) const {
    return f1_ == o.f1_ && f2_ == o.f2_ && f3_ == o.f3_ && f4_ == o.f4_;
  }

 private:
  friend Quadruple verify_quadruple(Quadruple q);

  Elem lookup(const BlockTable& t, Elem a, Elem b, const char* name) const {
    if (!mcq_->same_block(a, b)) {
      throw DomainError(std::string(name) + "(" + std::to_string(a) + "," +
                        std::to_string(b) + "): arguments lie in different blocks");
    }
    return t.local(mcq_->block_of(a), mcq_->local_index(a), mcq_->local_index(b));
  }

  std::shared_ptr<const Mcq> mcq_;
  std::shared_ptr<const FiniteRing> ring_;
  Table f1_;
  Table f2_;
  BlockTable f3_;
  BlockTable f4_;
  bool verified_ = false;
};

/// Conditions "(0-i)" .. "(4-iii)". Requires group blocks.
ValidityReport check_quadruple(const Quadruple& q);

/// Returns q marked verified, or throws PreconditionError with the report.
Quadruple verify_quadruple(Quadruple q);

/// "(0-i)".."(0-iv)" plus the consequences "f3-right-identity"
/// f3(a,e) = 1, "f4-left-identity" f4(e,a) = 1, "f3-inverse"
/// f3(a,b)^-1 = f3(ab,b^-1) and "f4-inverse" f4(a,b)^-1 = f4(a^-1,ab).
ValidityReport check_group_layer(const Quadruple& q);

/// G_λ x M with (a,u)(b,v) = (ab, f3(a,b) u + f4(a,b) v), as a raw table
/// (id(a,u) = local(a) |M| + u). No validity guarantee.
FiniteGroup group_layer_product(const Quadruple& q, std::size_t block,
                                const FiniteModule& m);

/// Unchecked linear extension on ⊔ (G_λ x M), id(x,u) = x |M| + u:
///   (x,u) ◁ (y,v) = (x ◁ y, f1(x,y) u + f2(x,y) v)
///   (a,u)(b,v)    = (ab, f3(a,b) u + f4(a,b) v)
Mcq raw_quadruple_extension(const Quadruple& q, const FiniteModule& m,
                            const Budget& budget = {});

/// raw_quadruple_extension restricted to verified quadruples.
Mcq build_quadruple_extension(const Quadruple& q, const FiniteModule& m,
                              const Budget& budget = {});

/// (1, 0, 1, 1) (verified).
Quadruple trivial_quadruple(std::shared_ptr<const Mcq> mcq,
                            std::shared_ptr<const FiniteRing> ring);

}  // namespace linext
