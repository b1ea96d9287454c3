#include <random>

#include "doctest.h"
#include "modgroup/properties.hpp"
#include "modgroup/smith.hpp"

using namespace modgroup;

TEST_CASE("Smith normal form examples") {
  CHECK(smith_invariants(IntMatrix{{2, 0}, {0, 0}}, 2) == AbelianInvariants::from_cyclic_orders({2}, 1));
  CHECK(smith_invariants(IntMatrix{}, 3) == AbelianInvariants::from_cyclic_orders({}, 3));
  AbelianInvariants diag = smith_invariants(IntMatrix{{4, 0}, {0, 2}}, 2);
  CHECK(diag.torsion == std::vector<Integer>{2, 4});
  CHECK(diag.free_rank == 0);
  CHECK(smith_invariants(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, 3).to_string() == "Z/2 x Z/6 x Z/12");
  CHECK(smith_invariants(IntMatrix{{6, 0}, {0, 4}}, 2).to_string() == "Z/2 x Z/12");
  CHECK(smith_invariants(IntMatrix{{1, 1}}, 2).to_string() == "Z^1");
  CHECK(smith_invariants(IntMatrix{{1, 0}, {0, 1}}, 2).to_string() == "0");
  CHECK_THROWS_AS(smith_invariants(IntMatrix{{1, 0}}, 3), std::invalid_argument);
}

TEST_CASE("large entries stay exact") {
  Integer big("1000000000000000000000007");
  IntMatrix m(1, 1);
  m(0, 0) = big;
  AbelianInvariants inv = smith_invariants(m, 1);
  REQUIRE(inv.torsion.size() == 1);
  CHECK(inv.torsion[0] == big);
}

TEST_CASE("canonical form") {
  AbelianInvariants a = AbelianInvariants::from_cyclic_orders({6, 4, 1, 0, -3});
  CHECK(a.to_string() == "Z/6 x Z/12 x Z^1");
  CHECK(AbelianInvariants::parse("Z/2 x Z/4 x Z^1") == AbelianInvariants::from_cyclic_orders({2, 4}, 1));
  CHECK(AbelianInvariants::parse("Z/6 x Z/4") == AbelianInvariants::from_cyclic_orders({2, 12}));
  CHECK(AbelianInvariants::parse("0").to_string() == "0");
  CHECK(AbelianInvariants::parse("Z x Z").free_rank == 2);
  CHECK_THROWS_AS(AbelianInvariants::parse("Q/Z"), std::invalid_argument);
  for (const char* s : {"Z/2 x Z/4 x Z^1", "Z/3 x Z/3 x Z^1", "Z/2 x Z/2 x Z/2 x Z^2", "Z^5", "0"})
    CHECK(AbelianInvariants::parse(s).to_string() == s);
}

TEST_CASE("sparse and dense reductions agree") {
  std::vector<rs::SparseRow> rows{{{0, 1}, {1, 1}}, {{1, 2}, {2, 1}}, {{2, 4}}, {{3, 6}, {4, 4}}};
  IntMatrix dense{{1, 1, 0, 0, 0}, {0, 2, 1, 0, 0}, {0, 0, 4, 0, 0}, {0, 0, 0, 6, 4}};
  CHECK(smith_invariants(rows, 5) == smith_invariants(dense, 5));
  CHECK(smith_invariants(rows, 5).to_string() == "Z/2 x Z/8 x Z^1");
  CHECK(smith_invariants(std::vector<rs::SparseRow>{}, 2).to_string() == "Z^2");
}

TEST_CASE("oracle cross-check on 200 seeded matrices") {
  CHECK(props::determinantal_invariants(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}).to_string() ==
        "Z/2 x Z/6 x Z/12");
  auto failures = props::check_snf_oracle(20240229, 200);
  for (const auto& f : failures) MESSAGE(f);
  CHECK(failures.empty());
}
