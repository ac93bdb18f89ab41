#include <doctest.h>

#include "support.hpp"

using namespace linext;

TEST_CASE("dihedral quandles") {
  const Quandle r3 = dihedral_quandle(3);
  CHECK(check_quandle(r3).valid());
  CHECK(r3.op(0, 1) == 2);
  CHECK(dihedral_quandle(1) == trivial_quandle(1));
  CHECK(check_quandle(dihedral_quandle(5)).valid());
  for (std::size_t n = 1; n <= 20; ++n) {
    const Quandle q = dihedral_quandle(n);
    CHECK(check_quandle(q).valid());
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) CHECK(q.op(a, b) == (2 * b + n - a % n) % n);
  }
}

TEST_CASE("axiom violations are labelled with witnesses") {
  Table t = trivial_quandle(3).table();
  t(0, 0) = 1;
  const auto rep = check_quandle(Quandle(t));
  REQUIRE(rep.has("(Q1)"));
  CHECK(rep.find("(Q1)")->witness == std::vector<Elem>{0});

  // Brute force for a right-invertible, idempotent table that is not
  // self-distributive, then ask the checker for its witness.
  std::mt19937_64 rng(11);
  bool found = false;
  for (int attempt = 0; attempt < 10000 && !found; ++attempt) {
    Table op(4, 4);
    for (Elem b = 0; b < 4; ++b) {
      std::vector<Elem> col{0, 1, 2, 3};
      std::shuffle(col.begin(), col.end(), rng);
      for (Elem a = 0; a < 4; ++a) op(a, b) = col[a];
    }
    bool idem = true;
    for (Elem a = 0; a < 4; ++a) idem = idem && op(a, a) == a;
    if (!idem) continue;
    bool distributive = true;
    for (Elem a = 0; a < 4; ++a)
      for (Elem b = 0; b < 4; ++b)
        for (Elem c = 0; c < 4; ++c)
          distributive = distributive && op(op(a, b), c) == op(op(a, c), op(b, c));
    if (distributive) continue;
    found = true;
    const auto r = check_quandle(Quandle(op));
    CHECK(!r.has("(Q1)"));
    CHECK(!r.has("(Q2)"));
    REQUIRE(r.has("(Q3)"));
    const auto& w = r.find("(Q3)")->witness;
    CHECK(op(op(w[0], w[1]), w[2]) != op(op(w[0], w[2]), op(w[1], w[2])));
  }
  CHECK(found);

  Table q2 = trivial_quandle(3).table();
  q2(1, 0) = 2;
  CHECK(check_quandle(Quandle(q2)).has("(Q2)"));
}

TEST_CASE("conjugation quandles") {
  const Quandle z4 = conjugation_quandle(cyclic_group(4));
  CHECK(z4 == trivial_quandle(4));
  CHECK(check_quandle(conjugation_quandle(symmetric_group(3))).valid());
  CHECK(conjugation_quandle(cyclic_group(1)).order() == 1);
  const FiniteGroup s3 = symmetric_group(3);
  const Quandle q = conjugation_quandle(s3);
  for (Elem a = 0; a < 6; ++a)
    for (Elem b = 0; b < 6; ++b) CHECK(q.op(a, b) == s3.mul(s3.mul(s3.inverse(b), a), b));
}

TEST_CASE("alexander quandles") {
  const FiniteRing z3 = zn_ring(3);
  const FiniteModule m3 = regular_module(z3);
  CHECK(alexander_quandle(m3, z3.one()) == trivial_quandle(3));
  CHECK(alexander_quandle(m3, 2) == dihedral_quandle(3));
  CHECK_THROWS_AS(alexander_quandle(regular_module(zn_ring(4)), 2), PreconditionError);
  const FiniteRing z5 = zn_ring(5);
  for (Elem t : z5.units()) CHECK(check_quandle(alexander_quandle(regular_module(z5), t)).valid());
  const FiniteModule m22 = free_module(zn_ring(2), 2);
  CHECK(check_quandle(alexander_quandle(m22, 1)).valid());
}

TEST_CASE("quandle type") {
  CHECK(quandle_type(trivial_quandle(4)) == 1);
  CHECK(quandle_type(dihedral_quandle(3)) == 2);
  CHECK(quandle_type(alexander_quandle(regular_module(zn_ring(5)), 2)) == 4);
  CHECK(quandle_type(alexander_quandle(regular_module(zn_ring(7)), 3)) == 6);
  CHECK(quandle_type(alexander_quandle(regular_module(zn_ring(7)), 2)) == 3);
  // conjugation by a 3-cycle has order 3, by a transposition order 2
  CHECK(quandle_type(conjugation_quandle(symmetric_group(3))) == 6);
}

TEST_CASE("iterated operations") {
  for (const Quandle& q :
       {dihedral_quandle(5), alexander_quandle(regular_module(zn_ring(7)), 3),
        conjugation_quandle(symmetric_group(3)), dihedral_quandle(4)}) {
    const auto type = static_cast<std::int64_t>(quandle_type(q));
    CHECK(iterated_tri(q, 0) == trivial_quandle(q.order()));
    CHECK(iterated_tri(q, 1) == q);
    CHECK(iterated_tri(q, type) == trivial_quandle(q.order()));
    for (std::int64_t i = 1; i < type; ++i) CHECK(!(iterated_tri(q, i) == trivial_quandle(q.order())));
    for (std::int64_t i = -2 * type; i <= 2 * type; ++i) {
      const Quandle qi = iterated_tri(q, i);
      CHECK(check_quandle(qi).valid());
      CHECK(iterated_tri(q, i + type) == qi);
    }
    // ◁^-1 undoes ◁.
    const Quandle inv = iterated_tri(q, -1);
    for (Elem a = 0; a < q.order(); ++a)
      for (Elem b = 0; b < q.order(); ++b) CHECK(inv.op(q.op(a, b), b) == a);
  }
}

TEST_CASE("quandle homomorphisms") {
  const Quandle r3 = dihedral_quandle(3);
  CHECK(check_quandle_hom(r3, r3, std::vector<Elem>{0, 1, 2}));
  CHECK(check_quandle_hom(r3, r3, std::vector<Elem>{1, 1, 1}));
  CHECK(!check_quandle_hom(r3, r3, std::vector<Elem>{0, 0, 1}));
  CHECK(!find_quandle_isos(alexander_quandle(regular_module(zn_ring(3)), 2), r3).empty());
  CHECK(find_quandle_isos(r3, trivial_quandle(3)).empty());
  CHECK(find_quandle_isos(r3, dihedral_quandle(4)).empty());
  CHECK(find_quandle_isos(r3, r3, 2).size() == 2);
}

TEST_CASE("iso search agrees with permutation enumeration up to order 5") {
  std::vector<Quandle> qs;
  for (std::size_t n = 1; n <= 5; ++n) {
    qs.push_back(trivial_quandle(n));
    qs.push_back(dihedral_quandle(n));
  }
  for (Elem t : zn_ring(5).units()) qs.push_back(alexander_quandle(regular_module(zn_ring(5)), t));
  qs.push_back(alexander_quandle(free_module(zn_ring(2), 2), 1));
  qs.push_back(conjugation_quandle(cyclic_group(4)));
  // R_4 with shuffled ids.
  const std::vector<Elem> perm{2, 0, 3, 1};
  Table relabel(4, 4);
  const Quandle r4 = dihedral_quandle(4);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) relabel(perm[a], perm[b]) = perm[r4.op(a, b)];
  qs.emplace_back(relabel);

  for (const auto& a : qs)
    for (const auto& b : qs) {
      if (a.order() != b.order()) continue;
      auto mine = find_quandle_isos(a, b);
      std::sort(mine.begin(), mine.end());
      const auto brute = oracle::brute_isos(a.table(), b.table());
      CHECK(mine == brute);
      for (const auto& f : mine) CHECK(check_quandle_hom(a, b, f));
    }
}
