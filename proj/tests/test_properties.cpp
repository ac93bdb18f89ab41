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

// Seeds for the generators: valid pairs whose extensions stay small.
std::vector<AlexanderPair> seed_pairs() {
  std::vector<AlexanderPair> out;
  for (std::size_t n : {3, 4, 5, 7}) {
    const Census c = enumerate_pairs(cyclic_mcq(1), zn(n));
    for (const auto& rec : c.records)
      if (rec.structure_ok)
        out.push_back(verify_pair(pair_from_cells(cyclic_mcq(1), zn(n), census_cells(rec.index, 2, n))));
  }
  // f1(x,y) = c^y, f2(x,y) = c^(y-x) - c^y with c = -1 over Z_2 x Z_n.
  for (std::size_t n : {3, 4, 5}) {
    const Elem c = static_cast<Elem>(n - 1);
    const auto pw = [&](int e) { return static_cast<Elem>((e % 2 == 0) ? 1 : c); };
    Table f1(2, 2), f2(2, 2);
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) {
        f1(x, y) = pw(y);
        f2(x, y) = static_cast<Elem>((pw(y - x + 2) + n - pw(y)) % n);
      }
    out.push_back(verify_pair(AlexanderPair(cyclic_mcq(2), zn(n), f1, f2)));
  }
  out.push_back(example25_pair(zn_ring(3), std::vector<std::size_t>{2}));
  out.push_back(example25_pair(zn_ring(2), std::vector<std::size_t>{2, 2}));
  out.push_back(example25_pair(zn_ring(2), std::vector<std::size_t>{3}));
  out.push_back(
      example26_pair(zk_family(dihedral_quandle(3)), std::vector<Elem>{0, 1}, zn_ring(2)));
  return out;
}

bool raw_pair_ok(const AlexanderPair& p) {
  return check_mcq(raw_pair_extension(p, regular_module(p.ring()))).valid();
}

bool raw_quadruple_ok(const Quadruple& q) {
  return check_mcq(raw_quadruple_extension(q, regular_module(q.ring()))).valid();
}

bool is_zn(const FiniteRing& r) { return r == zn_ring(r.order()); }

}  // namespace

TEST_CASE("property: the seeds are what they claim") {
  for (const auto& p : seed_pairs()) {
    CAPTURE(p.mcq().order());
    CAPTURE(p.ring().order());
    CHECK(check_pair(p).valid());
    CHECK(raw_pair_ok(p));
    CHECK(p.mcq().order() * p.ring().order() <= 64);
  }
}

TEST_CASE("property: pair conditions hold iff the raw extension is an MCQ") {
  std::mt19937_64 rng(2024);
  std::uint64_t valid = 0, invalid = 0, mismatches = 0;
  for (const auto& seed : seed_pairs()) {
    CAPTURE(seed.mcq().order());
    CAPTURE(seed.ring().order());
    for (int trial = 0; trial < 200; ++trial) {
      const AlexanderPair p = gen::mutate(rng, seed, 1 + static_cast<int>(rng() % 3));
      const bool lib = check_pair(p).valid();
      const bool ext = raw_pair_ok(p);
      if (lib != ext) ++mismatches;
      if (is_zn(p.ring())) {
        const bool oracle_ok = oracle::extension_is_mcq_mod(
            p.mcq(), p.ring().order(), [&](Elem a, Elem b) { return p.f1(a, b); },
            [&](Elem a, Elem b) { return p.f2(a, b); }, [](Elem, Elem) -> Elem { return 1; },
            [&](Elem a, Elem) { return p.f1(a, p.mcq().inverse(a)); });
        if (oracle_ok != lib) ++mismatches;
      }
      if (lib) {
        ++valid;
        CHECK(check_lemma23(p).valid());
      } else {
        ++invalid;
        CHECK(!check_pair(p).violations().empty());
      }
    }
  }
  CHECK(mismatches == 0);
  CHECK(valid > 0);
  CHECK(invalid > 0);
}

TEST_CASE("property: quadruple conditions hold iff the raw extension is an MCQ") {
  std::mt19937_64 rng(77);
  std::uint64_t valid = 0, invalid = 0, mismatches = 0;
  for (const auto& seed : seed_pairs()) {
    CAPTURE(seed.mcq().order());
    CAPTURE(seed.ring().order());
    const Quadruple base = pair_to_quadruple(seed);
    for (int trial = 0; trial < 150; ++trial) {
      const Quadruple t = gen::twist(base, gen::unit_map(rng, seed.ring(), seed.mcq().order()));
      const Quadruple q = (trial % 4 == 0) ? t : gen::mutate(rng, t, 1 + static_cast<int>(rng() % 2));
      const bool lib = check_quadruple(q).valid();
      if (lib != raw_quadruple_ok(q)) ++mismatches;
      lib ? ++valid : ++invalid;
    }
  }
  CHECK(mismatches == 0);
  CHECK(valid > 0);
  CHECK(invalid > 0);
}

TEST_CASE("property: twisting preserves validity, valid or not") {
  std::mt19937_64 rng(5);
  std::uint64_t changed = 0;
  for (const auto& seed : seed_pairs()) {
    const Quadruple base = pair_to_quadruple(seed);
    for (int trial = 0; trial < 60; ++trial) {
      const Quadruple q = gen::mutate(rng, base, static_cast<int>(rng() % 3));
      const auto h = gen::unit_map(rng, seed.ring(), seed.mcq().order());
      const Quadruple t = gen::twist(q, h);
      CHECK(check_quadruple(t).valid() == check_quadruple(q).valid());
      CHECK(check_equivalent(q, t, h));
      if (!t.same_tables(q)) ++changed;
    }
  }
  CHECK(changed > 0);
}

TEST_CASE("property: every valid quadruple reduces to an equivalent pair") {
  std::mt19937_64 rng(99);
  for (const auto& seed : seed_pairs()) {
    CAPTURE(seed.mcq().order());
    CAPTURE(seed.ring().order());
    const Quadruple base = pair_to_quadruple(seed);
    const FiniteModule m = regular_module(seed.ring());
    for (int trial = 0; trial < 20; ++trial) {
      const auto h = gen::unit_map(rng, seed.ring(), seed.mcq().order());
      const Quadruple q = verify_quadruple(gen::twist(base, h));
      const Reduction r = reduce(q);
      CHECK(check_pair(r.pair).valid());
      CHECK(check_equivalent(q, r.reduced, r.h));
      CHECK(audit_reduction(q, m).valid());
      // Reduction is idempotent.
      const Reduction again = reduce(verify_quadruple(r.reduced));
      CHECK(again.pair.same_tables(r.pair));
    }
  }
}

TEST_CASE("property: MCQ checker agrees with an independent scan") {
  std::mt19937_64 rng(31);
  std::vector<Mcq> seeds{group_mcq(symmetric_group(3)), associated_mcq(zk_family(dihedral_quandle(3))),
                         group_mcq(cyclic_group(4)), trivial_mcq(3)};
  std::uint64_t valid = 0, invalid = 0, mismatches = 0;
  for (const auto& x : seeds) {
    for (int trial = 0; trial < 500; ++trial) {
      Table op = x.op_table();
      std::vector<Table> mul;
      for (std::size_t k = 0; k < x.block_count(); ++k) mul.push_back(x.block_table(k));
      const int edits = static_cast<int>(rng() % 3);
      for (int e = 0; e < edits; ++e) {
        if (rng() % 2) {
          op.data()[rng() % op.data().size()] = static_cast<Elem>(rng() % x.order());
        } else {
          auto& t = mul[rng() % mul.size()];
          t.data()[rng() % t.data().size()] = static_cast<Elem>(rng() % t.rows());
        }
      }
      const Mcq y(x.blocks(), mul, op);
      oracle::RawMcq s;
      s.order = y.order();
      for (Elem w = 0; w < y.order(); ++w) s.block.push_back(y.block_of(w));
      s.mul = [&y](Elem a, Elem b) { return y.mul(a, b); };
      s.tri = [&y](Elem a, Elem b) { return y.op(a, b); };
      const bool lib = check_mcq(y).valid();
      if (lib != oracle::raw_is_mcq(s)) ++mismatches;
      lib ? ++valid : ++invalid;
    }
  }
  CHECK(mismatches == 0);
  CHECK(valid > 0);
  CHECK(invalid > 0);
}
