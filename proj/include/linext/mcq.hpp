#pragma once

// Multiple conjugation quandles: a disjoint union of groups ("blocks") with a
// global operation ◁ that restricts to conjugation inside each block.

#include <functional>
#include <span>
#include <vector>

#include "linext/algebra.hpp"
#include "linext/core.hpp"
#include "linext/quandle.hpp"

namespace linext {

class Mcq {
 public:
  /// `blocks` must partition 0..order-1 into non-empty lists. block_mul[k] is
  /// a |block k| square table of *local* positions within that block.
  /// Structure only; the MCQ axioms are checked by check_mcq.
  Mcq(std::vector<std::vector<Elem>> blocks, std::vector<Table> block_mul,
      Table op);

  /// Builds block tables from a product on global ids. `mul` is only called
  /// on pairs from one block and must return an id from the same block.
  static Mcq from_product(std::vector<std::vector<Elem>> blocks,
                          const std::function<Elem(Elem, Elem)>& mul, Table op);

  std::size_t order() const noexcept { return op_.rows(); }
  Elem op(Elem x, Elem y) const noexcept { return op_(x, y); }
  const Table& op_table() const noexcept { return op_; }

  std::size_t block_count() const noexcept { return blocks_.size(); }
  std::size_t block_of(Elem x) const noexcept { return block_of_[x]; }
  std::size_t local_index(Elem x) const noexcept { return local_[x]; }
  bool same_block(Elem a, Elem b) const noexcept {
    return block_of_[a] == block_of_[b];
  }
  std::span<const Elem> block(std::size_t k) const noexcept { return blocks_[k]; }
  const std::vector<std::vector<Elem>>& blocks() const noexcept { return blocks_; }
  const Table& block_table(std::size_t k) const noexcept { return block_mul_[k]; }

  /// Product of two elements of one block (unchecked).
  Elem mul(Elem a, Elem b) const noexcept {
    const std::size_t k = block_of_[a];
    return blocks_[k][block_mul_[k](local_[a], local_[b])];
  }

  /// Product, or kNone for elements of different blocks.
  Elem mul_or_none(Elem a, Elem b) const noexcept {
    return same_block(a, b) ? mul(a, b) : kNone;
  }

  bool block_has_identity(std::size_t k) const noexcept {
    return identity_[k] != kNone;
  }
  /// Identity e_k of block k.
  Elem identity(std::size_t k) const;
  /// Identity of the block containing x.
  Elem identity_of(Elem x) const { return identity(block_of_[x]); }
  bool has_inverse(Elem a) const noexcept { return inverse_[a] != kNone; }
  Elem inverse(Elem a) const;

  /// The block as a standalone group, ids are local positions.
  FiniteGroup block_group(std::size_t k) const { return FiniteGroup(block_mul_[k]); }

  Quandle as_quandle() const { return Quandle(op_); }

  bool operator==(const Mcq& o) const {
    return blocks_ == o.blocks_ && block_mul_ == o.block_mul_ && op_ == o.op_;
  }

 private:
  std::vector<std::vector<Elem>> blocks_;
  std::vector<Table> block_mul_;
  Table op_;
  std::vector<std::size_t> block_of_;
  std::vector<std::size_t> local_;
  std::vector<Elem> identity_;
  std::vector<Elem> inverse_;
};

/// Labels: "block-group", "axiom-1" (conjugation in blocks),
/// "axiom-2-identity", "axiom-2-product", "axiom-3" (self-distributivity),
/// "axiom-4-blocks" (columns carry blocks into blocks), "axiom-4".
ValidityReport check_mcq(const Mcq& x);

/// A group as a one-block MCQ with the conjugation operation.
Mcq group_mcq(const FiniteGroup& g);

/// n trivial groups with the trivial quandle operation.
Mcq trivial_mcq(std::size_t n);

bool check_mcq_hom(const Mcq& from, const Mcq& to, std::span<const Elem> f);

std::vector<std::vector<Elem>> find_mcq_isos(
    const Mcq& a, const Mcq& b, std::size_t limit = static_cast<std::size_t>(-1));

struct ExtensionCheck {
  bool ok = false;
  std::size_t fiber_size = 0;
  std::string reason;
  explicit operator bool() const noexcept { return ok; }
};

/// f: xt -> x is a surjective MCQ homomorphism with fibers of equal size.
ExtensionCheck check_extension(const Mcq& xt, const Mcq& x,
                               std::span<const Elem> f);

/// An extension rewritten on pairs (x, i), x in the base and i < fiber size,
/// with id x * fiber_size + i. `phi` maps an element w of the extension to
/// (f(w), rank of w inside its fiber by ascending id).
struct ProductForm {
  Mcq mcq;
  std::vector<Elem> phi;
  std::size_t fiber_size;

  Elem base_of(Elem id) const noexcept {
    return static_cast<Elem>(id / fiber_size);
  }
};

/// Throws PreconditionError unless check_extension(xt, x, f) holds.
ProductForm product_form(const Mcq& xt, const Mcq& x, std::span<const Elem> f);

/// A set with a G-indexed family of binary operations x ◁^g y.
class GFamily {
 public:
  GFamily(FiniteGroup group, std::vector<Table> ops);

  const FiniteGroup& group() const noexcept { return group_; }
  std::size_t order() const noexcept { return ops_.front().rows(); }
  Elem op(Elem g, Elem x, Elem y) const noexcept { return ops_[g](x, y); }
  const std::vector<Table>& ops() const noexcept { return ops_; }

  bool operator==(const GFamily&) const = default;

 private:
  FiniteGroup group_;
  std::vector<Table> ops_;
};

/// Labels: "family-idempotence", "family-identity", "family-product",
/// "family-distributivity".
ValidityReport check_gfamily(const GFamily& f);

/// x ◁^g y = rep(g) x + (1 - rep(g)) y, realising a right R[G]-module
/// structure on m through a homomorphism G -> R^x with commuting image.
/// Throws PreconditionError if rep is not such a homomorphism.
GFamily alexander_gfamily(const FiniteModule& m, const FiniteGroup& g,
                          std::span<const Elem> rep, const Budget& budget = {});

/// The Z_k-family {◁^i} of a quandle, k = quandle_type(q).
GFamily zk_family(const Quandle& q);

/// MCQ on G x Y, id(g, y) = y * |G| + g, blocks G x {y}:
///   (g, x) ◁ (h, y) = (h^-1 g h, x ◁^h y),  (g, x)(h, x) = (gh, x).
Mcq associated_mcq(const GFamily& f, const Budget& budget = {});

/// Projection (g, y) -> g of associated_mcq(f) onto group_mcq(f.group()).
std::vector<Elem> associated_projection(const GFamily& f);

}  // namespace linext
