#include <set>

#include "doctest.h"
#include "modgroup/autf2.hpp"
#include "modgroup/fingroups.hpp"
#include "modgroup/rewriting.hpp"

using namespace modgroup;

TEST_CASE("group constructors") {
  CHECK(FiniteGroup::cyclic(5).order() == 5);
  CHECK(FiniteGroup::abelian(4, 2).order() == 8);
  CHECK(FiniteGroup::dihedral(4).order() == 8);
  CHECK(FiniteGroup::symmetric(4).order() == 24);
  CHECK(FiniteGroup::alternating(4).order() == 12);
  CHECK(FiniteGroup::alternating(5).order() == 60);
  CHECK(FiniteGroup::quaternion().order() == 8);
  CHECK(FiniteGroup::symmetric(5).order() == 120);
  CHECK_FALSE(FiniteGroup::dihedral(3).is_abelian());
  CHECK(FiniteGroup::abelian(3, 3).is_abelian());
  CHECK(FiniteGroup::alternating(5).is_perfect());
  CHECK_FALSE(FiniteGroup::alternating(4).is_perfect());
  CHECK(FiniteGroup::alternating(4).commutator_subgroup().size() == 4);
  FiniteGroup q = FiniteGroup::quaternion();
  int orders4 = 0;
  for (int a = 0; a < q.order(); ++a) orders4 += q.element_order(a) == 4;
  CHECK(orders4 == 6);
}

TEST_CASE("group spec parsing") {
  CHECK(FiniteGroup::parse("cyclic:6").order() == 6);
  CHECK(FiniteGroup::parse("abelian:4,2").order() == 8);
  CHECK(FiniteGroup::parse("dihedral:5").order() == 10);
  CHECK(FiniteGroup::parse("sym:3").order() == 6);
  CHECK(FiniteGroup::parse("alt:5").order() == 60);
  CHECK(FiniteGroup::parse("quaternion").order() == 8);
  FiniteGroup p = FiniteGroup::parse("perm:(1 2)(3 4),(1 2 3)");
  CHECK(p.order() == 12);
  CHECK(FiniteGroup::parse("perm:(1 2),(1 2 3 4 5)").order() == 120);
  CHECK_THROWS_AS(FiniteGroup::parse("perm:(1 2),(1 2 3 4 5 6)"), std::invalid_argument);
  CHECK_THROWS_AS(FiniteGroup::parse("sym:6"), std::invalid_argument);
  CHECK_THROWS_AS(FiniteGroup::parse("cyclic:0"), std::invalid_argument);
  CHECK_THROWS_AS(FiniteGroup::parse("abelian:4"), std::invalid_argument);
  CHECK_THROWS_AS(FiniteGroup::parse("klein"), std::invalid_argument);
  CHECK_THROWS_AS(FiniteGroup::parse("perm:(1 2"), std::invalid_argument);
}

TEST_CASE("epimorphism counts") {
  auto z2 = epi_set(FiniteGroup::cyclic(2));
  CHECK(z2.size() == 3);
  CHECK(z2 == std::vector<Epimorphism>{{0, 1}, {1, 0}, {1, 1}});
  CHECK(epi_set(FiniteGroup::abelian(2, 2)).size() == 6);
  CHECK(epi_set(FiniteGroup::symmetric(3)).size() == 18);
  CHECK(epi_set(FiniteGroup::alternating(5)).size() == 2280);
  CHECK(epi_set(FiniteGroup::cyclic(1)).empty());
  CHECK(generates(FiniteGroup::dihedral(4), default_epimorphism(FiniteGroup::dihedral(4))));
}

TEST_CASE("action rules") {
  FiniteGroup g = FiniteGroup::symmetric(3);
  for (const Epimorphism& e : epi_set(g)) {
    SignedEpi s{e, 1};
    SignedEpi r = act(g, AutGen::R, false, s);
    CHECK(r.epi == Epimorphism{g.mul(e.gx, e.gy), e.gy});
    CHECK(r.sign == 1);
    SignedEpi p = act(g, AutGen::P, false, s);
    CHECK(p.epi == Epimorphism{e.gy, e.gx});
    CHECK(p.sign == -1);
    CHECK(act(g, Word{2, 2}, s) == s);
    CHECK(act(g, Word{3, -3}, s) == s);
    CHECK(act(g, Word{4, -4, 5, -5}, s) == s);
    // The word order matches composition of automorphisms.
    Word w{3, 1, -5, 2, 4};
    FreeAut phi = aut_of(w);
    SignedEpi via_word = act(g, w, s);
    auto eval = [&](const Word& v) {
      int out = g.identity();
      for (int l : v) {
        int x = letter_gen(l) == 0 ? e.gx : e.gy;
        out = g.mul(out, l > 0 ? x : g.inv(x));
      }
      return out;
    };
    CHECK(via_word.epi == Epimorphism{eval(phi.x), eval(phi.y)});
    CHECK(via_word.sign == phi.rho().det());
  }
}

TEST_CASE("orbits and stabilizers") {
  OrbitStabilizer z2 = orbit_stabilizer(FiniteGroup::cyclic(2), {1, 0});
  CHECK(z2.aut_plus_index == 3);
  CHECK(z2.epi_orbit_size == 3);
  CHECK(z2.signed_orbit_size == 6);
  CHECK(orbit_stabilizer(FiniteGroup::abelian(2, 2), {2, 1}).aut_plus_index == 6);

  for (const char* spec : {"cyclic:2", "cyclic:3", "abelian:2,2", "dihedral:4", "quaternion", "alt:4", "sym:3"}) {
    FiniteGroup g = FiniteGroup::parse(spec);
    Epimorphism e = default_epimorphism(g);
    OrbitStabilizer os = orbit_stabilizer(g, e);
    for (const Word& w : os.stabilizer_words) {
      CHECK(act(g, w, SignedEpi{e, 1}) == SignedEpi{e, 1});
      CHECK(rho_image(w).det() == 1);
    }
  }
}

TEST_CASE("orbits of abelian groups cover every epimorphism") {
  for (int m = 2; m <= 16; ++m)
    for (int n = 1; n <= m && m * n <= 16; ++n) {
      if (m % n) continue;
      FiniteGroup g = FiniteGroup::abelian(m, n);
      OrbitStabilizer os = orbit_stabilizer(g, default_epimorphism(g));
      CHECK(static_cast<std::size_t>(os.epi_orbit_size) == epi_set(g).size());
    }
}

TEST_CASE("abelianized action") {
  CHECK(rho_image(Word{3}) == Mat2(1, 0, 1, 1));
  CHECK(rho_image(Word{}) == Mat2::identity());
  CHECK(rho_image(Word{1}).det() == -1);
  CHECK(rho_image(Word{4, 5}) == Mat2::identity());
  for (AutGen gen : {AutGen::P, AutGen::O, AutGen::R, AutGen::Ax, AutGen::Ay})
    CHECK(rho_image(gen) == FreeAut::of(gen).rho());

  FiniteGroup z2 = FiniteGroup::cyclic(2);
  for (const Word& w : orbit_stabilizer(z2, {1, 0}).stabilizer_words) CHECK(is_member(2, 1, rho_image(w)));
}

TEST_CASE("stabilizer images") {
  CosetTable z2 = stabilizer_image_table(FiniteGroup::cyclic(2), {1, 0});
  CHECK(z2.size() == 3);
  CHECK(tables_isomorphic(z2, congruence_table(2, 1)));
  for (int m = 2; m <= 8; ++m)
    for (int n = 1; n <= m; ++n) {
      if (m % n) continue;
      FiniteGroup g = FiniteGroup::abelian(m, n);
      CHECK(tables_isomorphic(stabilizer_image_table(g, default_epimorphism(g)), congruence_table(m, n)));
    }
  CosetTable s3 = stabilizer_image_table(FiniteGroup::symmetric(3), default_epimorphism(FiniteGroup::symmetric(3)));
  CHECK(kurosh_decompose(s3).free_rank >= 1);
}
