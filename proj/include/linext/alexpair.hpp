#pragma once

#include <memory>
#include <span>

#include "linext/algebra.hpp"
#include "linext/core.hpp"
#include "linext/mcq.hpp"

namespace linext {

/// Two ring-valued maps on X x X, stored as tables of ring element ids.
/// `verified()` is set only by verify_pair.
class AlexanderPair {
 public:
  AlexanderPair(std::shared_ptr<const Mcq> mcq,
                std::shared_ptr<const FiniteRing> ring, Table f1, Table f2);

  const Mcq& mcq() const noexcept { return *mcq_; }
  const FiniteRing& ring() const noexcept { return *ring_; }
  const std::shared_ptr<const Mcq>& mcq_ptr() const noexcept { return mcq_; }
  const std::shared_ptr<const FiniteRing>& ring_ptr() const noexcept { return ring_; }

  Elem f1(Elem x, Elem y) const noexcept { return f1_(x, y); }
  Elem f2(Elem x, Elem y) const noexcept { return f2_(x, y); }
  const Table& f1_table() const noexcept { return f1_; }
  const Table& f2_table() const noexcept { return f2_; }

  bool verified() const noexcept { return verified_; }

  bool same_tables(const AlexanderPair& o) const {
    return f1_ == o.f1_ && f2_ == o.f2_;
  }

 private:
  friend AlexanderPair verify_pair(AlexanderPair p);

  std::shared_ptr<const Mcq> mcq_;
  std::shared_ptr<const FiniteRing> ring_;
  Table f1_;
  Table f2_;
  bool verified_ = false;
};

/// All nine defining conditions. Labels:
///   "block-sum"          f1(a,b) + f2(a,b) = f1(a, a^-1 b)
///   "block-f1"           f1(a,x) = f1(b,x)
///   "block-f2"           f2(ab,x) = f2(a,x) + f1(b◁x, a^-1◁x) f2(b,x)
///   "unit"               f1(x, e) = 1
///   "f1-product"         f1(x,ab) = f1(x◁a, b) f1(x,a)
///   "f2-product"         f2(x,ab) = f1(x◁a, b) f2(x,a)
///   "exchange-f1"        f1(x◁y,z) f1(x,y) = f1(x◁z, y◁z) f1(x,z)
///   "exchange-f1f2"      f1(x◁y,z) f2(x,y) = f2(x◁z, y◁z) f1(y,z)
///   "exchange-f2"        f2(x◁y,z) = f1(x◁z,y◁z) f2(x,z) + f2(x◁z,y◁z) f2(y,z)
/// Requires every block of the MCQ to be a group.
ValidityReport check_pair(const AlexanderPair& p);

/// Returns p marked verified, or throws PreconditionError with the report.
AlexanderPair verify_pair(AlexanderPair p);

/// Consequences that every valid pair must satisfy. Labels:
///   "f1-inverse"      f1(x,y) f1(x◁y, y^-1) = 1 = f1(x◁y, y^-1) f1(x,y)
///   "f2-identity"     f2(e, x) = 0
///   "f1-block-shift"  f1(ab,x) f1(a,a^-1) = f1(b◁x, a^-1◁x) f1(b,x)
///   "f2-shift"        f2(x◁a, b) = f2(x,ab) f1(a,a^-1)
ValidityReport check_lemma23(const AlexanderPair& p);

/// Conditions of a plain Alexander pair on the underlying quandle:
/// "diagonal" f1(a,a) + f2(a,a) = 1, "f1-invertible", and the three
/// exchange laws.
ValidityReport check_quandle_alexander_pair(const AlexanderPair& p);

/// The trivial pair f1 = 1, f2 = 0 (verified).
AlexanderPair trivial_pair(std::shared_ptr<const Mcq> mcq,
                           std::shared_ptr<const FiniteRing> ring);

/// Unchecked extension on ⊔ (G_λ x M), id(x,u) = x |M| + u:
///   (x,u) ◁ (y,v) = (x ◁ y, f1(x,y) u + f2(x,y) v)
///   (a,u)(b,v)    = (ab, u + f1(a,a^-1) v)
/// The base MCQ must have group blocks; f1/f2 may be arbitrary.
Mcq raw_pair_extension(const AlexanderPair& p, const FiniteModule& m,
                       const Budget& budget = {});

/// raw_pair_extension restricted to verified pairs.
Mcq build_pair_extension(const AlexanderPair& p, const FiniteModule& m,
                         const Budget& budget = {});

/// The projection (x,u) -> x for an extension with fibers of size m_order.
std::vector<Elem> extension_projection(std::size_t base_order,
                                       std::size_t m_order);

/// f1(s,t) = t^-1, f2(s,t) = t^-1 s - t^-1 on the abelian group
/// Z_{k_1} x ... x Z_{k_r} (one block), values in R[G].
AlexanderPair example25_pair(const FiniteRing& r, std::span<const std::size_t> k,
                             const Budget& budget = {});

/// f1((a,x),(b,y)) = hom(b)^-1, f2((a,x),(b,y)) = hom(b)^-1 (hom(a) - 1) on
/// associated_mcq(f), values in R[G]. `hom` must be an endomorphism of
/// f.group().
AlexanderPair example26_pair(const GFamily& f, std::span<const Elem> hom,
                             const FiniteRing& r, const Budget& budget = {});

}  // namespace linext
