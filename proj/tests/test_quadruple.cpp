#include <doctest.h>

#include "linext/enumerate.hpp"
#include "support.hpp"

using namespace linext;

namespace {

std::shared_ptr<const Mcq> cyclic_mcq(std::size_t n) {
  return std::make_shared<const Mcq>(group_mcq(cyclic_group(n)));
}

std::shared_ptr<const FiniteRing> zn(std::size_t n) {
  return std::make_shared<const FiniteRing>(zn_ring(n));
}

// Group axioms of (a,u)(b,v) = (ab, f3 u + f4 v) on Z_k x Z_n, computed with
// plain integers.
bool layer_is_group(std::size_t k, std::size_t n, const Table& f3, const Table& f4) {
  const std::size_t order = k * n;
  const auto mul = [&](Elem p, Elem q) -> Elem {
    const Elem a = p / n, u = p % n, b = q / n, v = q % n;
    return static_cast<Elem>(((a + b) % k) * n + (f3(a, b) * u + f4(a, b) * v) % n);
  };
  for (Elem p = 0; p < order; ++p)
    for (Elem q = 0; q < order; ++q)
      for (Elem r = 0; r < order; ++r)
        if (mul(mul(p, q), r) != mul(p, mul(q, r))) return false;
  Elem e = kNone;
  for (Elem c = 0; c < order && e == kNone; ++c) {
    bool ok = true;
    for (Elem p = 0; p < order; ++p) ok = ok && mul(c, p) == p && mul(p, c) == p;
    if (ok) e = c;
  }
  if (e == kNone) return false;
  for (Elem p = 0; p < order; ++p) {
    bool inv = false;
    for (Elem q = 0; q < order; ++q) inv = inv || (mul(p, q) == e && mul(q, p) == e);
    if (!inv) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("trivial quadruple") {
  const auto x = cyclic_mcq(2);
  const Quadruple q = trivial_quadruple(x, zn(2));
  CHECK(check_quadruple(q).valid());
  CHECK(check_group_layer(q).valid());
  const Mcq ext = build_quadruple_extension(q, regular_module(zn_ring(2)));
  CHECK(ext.order() == 4);
  CHECK(check_mcq(ext).valid());
  CHECK(ext == build_pair_extension(trivial_pair(x, zn(2)), regular_module(zn_ring(2))));
}

TEST_CASE("non-unit f3 is caught by (0-i)") {
  const auto x = cyclic_mcq(2);
  const Quadruple t = trivial_quadruple(x, zn(3));
  BlockTable f3 = t.f3_table();
  f3.tables()[0](1, 1) = 0;
  const Quadruple q(x, zn(3), t.f1_table(), t.f2_table(), f3, t.f4_table());
  const auto rep = check_quadruple(q);
  REQUIRE(rep.has("(0-i)"));
  CHECK(rep.find("(0-i)")->witness == std::vector<Elem>{1, 1});
}

TEST_CASE("f4 off 1 at the identity is caught") {
  const auto x = cyclic_mcq(2);
  const Quadruple t = trivial_quadruple(x, zn(3));
  BlockTable f4 = t.f4_table();
  f4.tables()[0](0, 1) = 2;
  const Quadruple q(x, zn(3), t.f1_table(), t.f2_table(), t.f3_table(), f4);
  const auto rep = check_group_layer(q);
  CHECK(rep.has("f4-left-identity"));
  CHECK(!rep.valid());
}

TEST_CASE("f3 and f4 reject lookups across blocks") {
  const auto x = std::make_shared<const Mcq>(trivial_mcq(2));
  const Quadruple q = trivial_quadruple(x, zn(2));
  CHECK(q.f3(0, 0) == 1);
  CHECK_THROWS_AS(q.f3(0, 1), DomainError);
  CHECK_THROWS_AS(q.f4(1, 0), DomainError);
}

TEST_CASE("group layer conditions iff the product is a group") {
  struct Config {
    std::size_t group, ring;
  };
  for (const auto& c : {Config{2, 2}, Config{2, 3}, Config{2, 4}, Config{3, 2}}) {
    CAPTURE(c.group);
    CAPTURE(c.ring);
    const auto x = cyclic_mcq(c.group);
    const auto r = zn(c.ring);
    const FiniteModule m = regular_module(*r);
    const std::size_t layer = 2 * c.group * c.group;
    const std::size_t n = c.group;
    const std::uint64_t space = *bounded_pow(c.ring, layer, ~std::uint64_t{0});
    std::uint64_t mismatches = 0, valid = 0;
    for (std::uint64_t i = 0; i < space; ++i) {
      std::vector<Elem> cells(2 * n * n, 1);
      const auto digits = census_cells(i, layer, c.ring);
      cells.insert(cells.end(), digits.begin(), digits.end());
      const Quadruple q = quadruple_from_cells(x, r, cells);
      const auto rep = check_group_layer(q);
      bool ok = true;
      for (const auto& v : rep.violations()) ok = ok && !v.axiom.starts_with("(0-");
      const bool lib_group = check_group(group_layer_product(q, 0, m)).valid();
      const bool oracle_group =
          layer_is_group(c.group, c.ring, q.f3_table().tables()[0], q.f4_table().tables()[0]);
      if (ok != lib_group || ok != oracle_group) ++mismatches;
      if (ok) {
        ++valid;
        CHECK(rep.valid());
      }
    }
    CHECK(mismatches == 0);
    CHECK(valid > 0);
  }
}

TEST_CASE("quadruple verdicts agree with an independent extension oracle") {
  const auto x = cyclic_mcq(2);
  const auto r = zn(2);
  std::uint64_t mismatches = 0, valid = 0;
  for (std::uint64_t i = 0; i < 65536; ++i) {
    const Quadruple q = quadruple_from_cells(x, r, census_cells(i, 16, 2));
    const bool oracle_ok = oracle::extension_is_mcq_mod(
        *x, 2, [&](Elem a, Elem b) { return q.f1(a, b); },
        [&](Elem a, Elem b) { return q.f2(a, b); },
        [&](Elem a, Elem b) { return q.f3(a, b); },
        [&](Elem a, Elem b) { return q.f4(a, b); });
    if (oracle_ok != check_quadruple(q).valid()) ++mismatches;
    if (oracle_ok) ++valid;
  }
  CHECK(mismatches == 0);
  // Z_2 has one unit, so every map is forced: only (1,0,1,1) survives.
  CHECK(valid == 1);
}

TEST_CASE("pair-induced and twisted quadruples over Z_3") {
  const auto x = cyclic_mcq(2);
  const auto r = zn(3);
  const FiniteModule m = regular_module(*r);
  // The non-trivial pair over (Z_2, Z_3): f1(x,1) = 2.
  Table f1(2, 2, 1), f2(2, 2, 0);
  f1(0, 1) = f1(1, 1) = 2;
  f2(1, 0) = 1;
  f2(1, 1) = 2;
  const AlexanderPair p = verify_pair(AlexanderPair(x, r, f1, f2));
  const Quadruple q = pair_to_quadruple(p);
  CHECK(check_quadruple(q).valid());
  CHECK(build_quadruple_extension(q, m) == build_pair_extension(p, m));

  std::uint64_t checked = 0;
  for (Elem h0 : {1u, 2u})
    for (Elem h1 : {1u, 2u}) {
      const Quadruple t = gen::twist(q, {h0, h1});
      CHECK(check_quadruple(t).valid());
      const Mcq ext = build_quadruple_extension(verify_quadruple(t), m);
      CHECK(check_mcq(ext).valid());
      const auto ec = check_extension(ext, *x, extension_projection(2, 3));
      CHECK(ec.ok);
      CHECK(ec.fiber_size == 3);
      ++checked;
    }
  CHECK(checked == 4);
}

TEST_CASE("raw extensions of broken quadruples") {
  const auto x = cyclic_mcq(2);
  const auto r = zn(2);
  const FiniteModule m = regular_module(*r);
  const Quadruple t = trivial_quadruple(x, r);

  Table zero(2, 2, 0);
  const Quadruple dead(x, r, zero, t.f2_table(), t.f3_table(), t.f4_table());
  const auto rep = check_mcq(raw_quadruple_extension(dead, m));
  CHECK(rep.has("axiom-2-identity"));

  std::uint64_t failing_2iii = 0;
  for (std::uint64_t i = 0; i < 65536; ++i) {
    const Quadruple q = quadruple_from_cells(x, r, census_cells(i, 16, 2));
    if (!check_quadruple(q).has("(2-iii)")) continue;
    ++failing_2iii;
    CHECK(!check_mcq(raw_quadruple_extension(q, m)).valid());
  }
  CHECK(failing_2iii > 0);
  CHECK(raw_quadruple_extension(t, m) == build_quadruple_extension(t, m));
  CHECK_THROWS_AS(build_quadruple_extension(dead, m), PreconditionError);
}

TEST_CASE("group ring quadruple extension") {
  const AlexanderPair p = example25_pair(zn_ring(3), std::vector<std::size_t>{2});
  const Quadruple q = pair_to_quadruple(p);
  CHECK(check_quadruple(q).valid());
  const FiniteModule m = regular_module(p.ring());
  const Mcq ext = build_quadruple_extension(q, m);
  CHECK(check_mcq(ext).valid());
  CHECK(check_extension(ext, p.mcq(), extension_projection(2, 9)).fiber_size == 9);
}
