#include "doctest.h"
#include "modgroup/abelianize.hpp"
#include "modgroup/autf2.hpp"
#include "modgroup/properties.hpp"

using namespace modgroup;

namespace {

AbelianInvariants inv(std::vector<Integer> torsion, long free) {
  return AbelianInvariants::from_cyclic_orders(std::move(torsion), free);
}

AbelianInvariants full(const char* spec) {
  FiniteGroup g = FiniteGroup::parse(spec);
  return full_abelianization(g, default_epimorphism(g));
}

}  // namespace

TEST_CASE("free automorphisms") {
  FreeAut r = FreeAut::of(AutGen::R);
  CHECK(r.x == Word{1, 2});
  CHECK(compose(r, FreeAut::of(AutGen::R, true)).is_identity());
  CHECK(aut_of(Word{1, 1}).is_identity());
  CHECK(aut_of(Word{2, 2}).is_identity());
  CHECK(aut_of(Word{4, -4}).is_identity());
  FreeAut inner = aut_of(Word{4, 5, -4});
  std::optional<Word> g = inner_conjugator(inner);
  REQUIRE(g.has_value());
  CHECK(*g == Word{1, 2, -1});
  CHECK_FALSE(inner_conjugator(r).has_value());
  CHECK(aut_of(inner_word(Word{2, -1, 2})) == aut_of(Word{5, -4, 5}));
  for (const Mat2& m : {Mat2(2, 1, 1, 1), Mat2(0, 1, 1, 0), Mat2(-1, 3, 0, 1), Mat2(5, 2, 7, 3)})
    CHECK(aut_of(gl2_word(m)).rho() == m);
}

TEST_CASE("Aut(F2) relators are sound") {
  const auto& rels = aut_f2_relators();
  CHECK(rels.size() >= 10);
  for (const Word& r : rels) CHECK(aut_of(r).is_identity());
  CHECK(props::check_relator_soundness().empty());
}

TEST_CASE("predicted abelianizations") {
  CHECK(theorem1_predicted(2, 1) == inv({2, 4}, 1));
  CHECK(theorem1_predicted(2, 2) == inv({2, 2, 2}, 2));
  CHECK(theorem1_predicted(3, 1) == inv({3, 3}, 1));
  CHECK(theorem1_predicted(4, 1) == inv({4}, 2));
  CHECK(theorem1_predicted(4, 4) == inv({4, 4}, 5));
  CHECK(theorem1_predicted(6, 1) == inv({6}, 3));
  CHECK_THROWS_AS(theorem1_predicted(4, 3), std::invalid_argument);
  CHECK_THROWS_AS(theorem1_predicted(1, 1), std::invalid_argument);
}

TEST_CASE("relation matrix route") {
  CHECK(hall_abelianization(4, 4) == inv({4, 4}, 5));
  CHECK(hall_abelianization(5, 1) == inv({5}, 3));
  CHECK(hall_abelianization(4, 2) == inv({2, 4}, 3));
  for (long m = 3; m <= 8; ++m)
    for (long n = 1; n <= m; ++n) {
      if (m % n || (m == 3 && n == 1)) continue;
      CHECK(hall_abelianization(m, n) == theorem1_predicted(m, n));
    }
  CHECK(hall_abelianization(6, 2, rs::Exec::serial) == hall_abelianization(6, 2, rs::Exec::parallel));
  CHECK_THROWS_AS(hall_abelianization(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(hall_abelianization(2, 2), std::invalid_argument);
}

TEST_CASE("full route") {
  CHECK(full("cyclic:2") == inv({2, 4}, 1));
  CHECK(full("cyclic:3") == inv({3, 3}, 1));
  CHECK(full("abelian:2,2") == inv({2, 2, 2}, 2));
  CHECK(full("cyclic:4") == inv({4}, 2));
  CHECK(full("dihedral:4") == inv({2}, 3));
  for (int m = 2; m <= 16; ++m)
    for (int n = 1; n <= m && m * n <= 16; ++n) {
      if (m % n) continue;
      CHECK(full(("abelian:" + std::to_string(m) + "," + std::to_string(n)).c_str()) == theorem1_predicted(m, n));
    }
  FiniteGroup z6 = FiniteGroup::cyclic(6);
  CHECK(full_abelianization(z6, {1, 0}, {}, rs::Exec::serial) == full_abelianization(z6, {1, 0}, {}, rs::Exec::parallel));
  CHECK_THROWS_AS(full_abelianization(z6, {1, 0}, {10}), CeilingExceeded);
}

TEST_CASE("full route does not depend on the chosen epimorphism") {
  for (const char* spec : {"cyclic:4", "abelian:2,2", "dihedral:3"}) {
    FiniteGroup g = FiniteGroup::parse(spec);
    AbelianInvariants ref = full_abelianization(g, default_epimorphism(g));
    for (const Epimorphism& e : epi_set(g)) CHECK(full_abelianization(g, e) == ref);
  }
}

TEST_CASE("dihedral groups") {
  for (int r = 3; r <= 8; ++r)
    CHECK(full(("dihedral:" + std::to_string(r)).c_str()) == inv({2}, r % 2 ? 2 : 3));
}

TEST_CASE("image route") {
  Theorem2Verdict z2 = theorem2_verdict(FiniteGroup::cyclic(2), {1, 0});
  CHECK(z2.image_index == 3);
  CHECK(z2.image_abelianization == inv({2}, 1));
  CHECK(z2.free_rank == 1);
  CHECK(z2.certified);
  for (const char* spec : {"sym:3", "dihedral:4", "dihedral:5", "quaternion", "alt:4", "dihedral:6", "sym:4"}) {
    FiniteGroup g = FiniteGroup::parse(spec);
    Theorem2Verdict v = theorem2_verdict(g, default_epimorphism(g));
    CHECK(v.certified);
    CHECK(v.free_rank == v.kurosh.free_rank);
  }
  FiniteGroup a5 = FiniteGroup::alternating(5);
  CHECK_THROWS_AS(theorem2_verdict(a5, default_epimorphism(a5)), OutOfTheoremScope);
}

TEST_CASE("principal congruence cross-check") {
  CHECK(satoh_crosscheck(3));
  CHECK(satoh_crosscheck(4));
  CHECK(satoh_crosscheck(5));
  SatohReport r3 = satoh_report(3);
  REQUIRE(r3.prime_rank.has_value());
  CHECK(*r3.prime_rank == 3);
  CHECK(r3.hall == inv({3, 3}, 3));
  SatohReport r5 = satoh_report(5);
  CHECK(*r5.prime_rank == 11);
  SatohReport r4 = satoh_report(4);
  CHECK_FALSE(r4.prime_rank.has_value());
  CHECK(r4.hall == inv({4, 4}, 5));
  CHECK_THROWS_AS(satoh_crosscheck(2), std::invalid_argument);
}
