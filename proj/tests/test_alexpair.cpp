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

// Every valid pair over (x, Z_n) found by the independent extension oracle.
std::vector<AlexanderPair> oracle_pairs(const std::shared_ptr<const Mcq>& x, std::size_t n,
                                        std::uint64_t* mismatches) {
  const auto r = zn(n);
  const std::size_t cells = census_cell_count(CensusTarget::pairs, *x);
  const std::uint64_t space = *bounded_pow(n, cells, ~std::uint64_t{0});
  std::vector<AlexanderPair> out;
  for (std::uint64_t i = 0; i < space; ++i) {
    AlexanderPair p = pair_from_cells(x, r, census_cells(i, cells, n));
    const auto one = [](Elem, Elem) -> Elem { return 1; };
    const bool oracle_ok = oracle::extension_is_mcq_mod(
        *x, n, [&](Elem a, Elem b) { return p.f1(a, b); },
        [&](Elem a, Elem b) { return p.f2(a, b); }, one,
        [&](Elem a, Elem) { return p.f1(a, x->inverse(a)); });
    if (oracle_ok != check_pair(p).valid()) ++*mismatches;
    if (oracle_ok) out.push_back(verify_pair(std::move(p)));
  }
  return out;
}

std::vector<AlexanderPair> example_pairs() {
  std::vector<AlexanderPair> out;
  out.push_back(example25_pair(zn_ring(3), std::vector<std::size_t>{2}));
  out.push_back(example25_pair(zn_ring(2), std::vector<std::size_t>{2, 2}));
  out.push_back(example25_pair(zn_ring(2), std::vector<std::size_t>{3}));
  out.push_back(example25_pair(zn_ring(3), std::vector<std::size_t>{3}, Budget{.max_ring_order = 27}));
  const GFamily fam = zk_family(dihedral_quandle(3));
  out.push_back(example26_pair(fam, std::vector<Elem>{0, 1}, zn_ring(2)));
  out.push_back(example26_pair(fam, std::vector<Elem>{0, 1}, zn_ring(3), Budget{.max_ring_order = 9}));
  return out;
}

}  // namespace

TEST_CASE("trivial pair") {
  const auto x = std::make_shared<const Mcq>(group_mcq(symmetric_group(3)));
  const AlexanderPair p = trivial_pair(x, zn(2));
  CHECK(p.verified());
  CHECK(check_pair(p).valid());
  CHECK(check_lemma23(p).valid());

  Table f1 = p.f1_table();
  f1(2, x->identity(0)) = 0;
  const auto rep = check_pair(AlexanderPair(x, zn(2), f1, p.f2_table()));
  REQUIRE(rep.has("unit"));
  CHECK(rep.find("unit")->witness == std::vector<Elem>{2, x->identity(0)});
  CHECK_THROWS_AS(verify_pair(AlexanderPair(x, zn(2), f1, p.f2_table())), PreconditionError);
}

TEST_CASE("trivial pair extension is the direct product") {
  const auto x = cyclic_mcq(2);
  const FiniteModule m = regular_module(zn_ring(2));
  const Mcq ext = build_pair_extension(trivial_pair(x, zn(2)), m);
  CHECK(ext.order() == 4);
  CHECK(check_mcq(ext).valid());
  CHECK(ext == group_mcq(finite_abelian_group(std::vector<std::size_t>{2, 2})));
}

TEST_CASE("group ring pair on an abelian group") {
  const AlexanderPair p = example25_pair(zn_ring(3), std::vector<std::size_t>{2});
  const GroupRing gr = group_ring(zn_ring(3), cyclic_group(2));
  CHECK(p.ring() == gr.ring());
  for (Elem s = 0; s < 2; ++s)
    for (Elem t = 0; t < 2; ++t) CHECK(p.f1(s, t) == embed_group_element(gr, t));
  CHECK(check_pair(p).valid());
  CHECK(check_lemma23(p).valid());

  const AlexanderPair one = example25_pair(zn_ring(2), std::vector<std::size_t>{1});
  CHECK(one.mcq().order() == 1);
  CHECK(one.same_tables(trivial_pair(one.mcq_ptr(), one.ring_ptr())));

  CHECK(check_pair(example25_pair(zn_ring(2), std::vector<std::size_t>{2, 2})).valid());
  CHECK_THROWS_AS(example25_pair(zn_ring(2), std::vector<std::size_t>{0}), FiniteOnlyError);
}

TEST_CASE("group ring pair on an associated MCQ") {
  const GFamily fam = zk_family(dihedral_quandle(3));
  const AlexanderPair p = example26_pair(fam, std::vector<Elem>{0, 1}, zn_ring(2));
  CHECK(check_pair(p).valid());
  const AlexanderPair t = example26_pair(fam, std::vector<Elem>{0, 0}, zn_ring(2));
  CHECK(t.same_tables(trivial_pair(t.mcq_ptr(), t.ring_ptr())));
  // The family has group Z_3 and {0,2,2} is not an endomorphism of it.
  CHECK_THROWS_AS(example26_pair(zk_family(alexander_quandle(regular_module(zn_ring(7)), 2)),
                                 std::vector<Elem>{0, 2, 2}, zn_ring(2)),
                  PreconditionError);
}

TEST_CASE("example pairs build extensions with fibers of size |M|") {
  for (const auto& p : example_pairs()) {
    CAPTURE(p.mcq().order());
    CAPTURE(p.ring().order());
    CHECK(check_pair(p).valid());
    CHECK(check_lemma23(p).valid());
    CHECK(check_quandle_alexander_pair(p).valid());
    const FiniteModule m = regular_module(p.ring());
    if (p.mcq().order() * m.order() > 64) continue;
    const Mcq ext = build_pair_extension(p, m);
    CHECK(check_mcq(ext).valid());
    const auto ec = check_extension(ext, p.mcq(), extension_projection(p.mcq().order(), m.order()));
    CHECK(ec.ok);
    CHECK(ec.fiber_size == m.order());
  }
}

TEST_CASE("pair verdicts agree with an independent extension oracle") {
  // Hand derivation for one block Z_k over Z_n: f1(x,y) = c^y with c^k = 1
  // and f2(x,y) = c^(y-x) - c^y. So the valid pairs are counted by the k-th
  // roots of 1 in Z_n.
  struct Config {
    std::size_t group, ring, expected;
  };
  for (const auto& c : {Config{2, 2, 1}, Config{2, 3, 2}, Config{2, 4, 2}, Config{1, 5, 1},
                        Config{3, 2, 1}}) {
    CAPTURE(c.group);
    CAPTURE(c.ring);
    std::uint64_t mismatches = 0;
    const auto x = cyclic_mcq(c.group);
    const auto pairs = oracle_pairs(x, c.ring, &mismatches);
    CHECK(mismatches == 0);
    CHECK(pairs.size() == c.expected);
    for (const auto& p : pairs) {
      CHECK(check_lemma23(p).valid());
      CHECK(check_quandle_alexander_pair(p).valid());
      for (std::size_t rank : {1, 2}) {
        const FiniteModule m = free_module(p.ring(), rank);
        const Mcq ext = build_pair_extension(p, m);
        CHECK(check_mcq(ext).valid());
        CHECK(check_extension(ext, p.mcq(), extension_projection(p.mcq().order(), m.order())).ok);
      }
    }
  }
}

TEST_CASE("raw extension of a failing pair is not an MCQ") {
  const auto x = cyclic_mcq(2);
  const auto r = zn(3);
  const FiniteModule m = regular_module(*r);
  std::uint64_t failing = 0;
  for (std::uint64_t i = 0; i < 6561; ++i) {
    const AlexanderPair p = pair_from_cells(x, r, census_cells(i, 8, 3));
    if (check_pair(p).valid()) continue;
    ++failing;
    CHECK(!check_mcq(raw_pair_extension(p, m)).valid());
  }
  CHECK(failing == 6561 - 2);
  CHECK_THROWS_AS(build_pair_extension(pair_from_cells(x, r, census_cells(0, 8, 3)), m),
                  PreconditionError);
}

TEST_CASE("one-element MCQ: f1 forced to 1") {
  const auto x = cyclic_mcq(1);
  const auto r = zn(2);
  std::vector<std::uint64_t> valid;
  for (std::uint64_t i = 0; i < 4; ++i)
    if (check_pair(pair_from_cells(x, r, census_cells(i, 2, 2))).valid()) valid.push_back(i);
  // Cells are (f1, f2) little-endian: index 1 is f1 = 1, f2 = 0.
  CHECK(valid == std::vector<std::uint64_t>{1});
}
