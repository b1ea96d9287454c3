#include <random>

#include "doctest.h"
#include "modgroup/matgroup.hpp"
#include "modgroup/properties.hpp"

using namespace modgroup;

namespace {

Mat2 lower(long k) { return Mat2(1, 0, k, 1); }

}  // namespace

TEST_CASE("products of matrices") {
  CHECK(Mat2::identity() * Mat2::identity() == Mat2::identity());
  CHECK(gens::S() * gens::S() == -Mat2::identity());
  CHECK(lower(3) * lower(-7) == lower(-4));
  CHECK(gens::S() * gens::U() == gens::T());
  Mat2 u = gens::U();
  CHECK(u * u * u == -Mat2::identity());
  CHECK_THROWS_AS(Mat2(2, 0, 0, 1), std::invalid_argument);
}

TEST_CASE("determinant preserved by products and inverses") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Mat2 x = props::random_sl2(rng, 1'000'000), y = props::random_sl2(rng, 1'000'000);
    CHECK((x * y).det() == 1);
    CHECK(x.inverse().det() == 1);
    CHECK(x * x.inverse() == Mat2::identity());
  }
}

TEST_CASE("canonical PSL representative") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    Mat2 x = props::random_sl2(rng, 1000);
    CHECK(PslElement(x) == PslElement(-x));
    CHECK(canonical_sign(canonical_sign(x)) == canonical_sign(x));
  }
  CHECK(PslElement(Mat2(0, -1, 1, 0)).rep() == Mat2(0, 1, -1, 0));
  CHECK(PslElement(Mat2(-1, 0, 0, -1)).is_identity());
}

TEST_CASE("congruence membership") {
  CHECK(is_member(4, 2, Mat2::identity()));
  CHECK(is_member(2, 1, Mat2(1, 0, 1, 1)));
  CHECK_FALSE(is_member(4, 2, Mat2(1, 0, 1, 1)));
  CHECK_THROWS_AS(is_member(4, 3, Mat2::identity()), std::invalid_argument);
  CHECK(contains_minus_identity(2, 1));
  CHECK(contains_minus_identity(2, 2));
  CHECK_FALSE(contains_minus_identity(3, 3));
}

TEST_CASE("membership is closed under products and inverses") {
  std::mt19937_64 rng(13);
  const std::vector<std::pair<long, long>> levels{{2, 1}, {3, 3}, {4, 2}, {6, 3}};
  for (auto [m, n] : levels) {
    std::vector<Mat2> members;
    for (int i = 0; members.size() < 40 && i < 200'000; ++i) {
      Mat2 x = props::random_sl2(rng, 500);
      if (is_member(m, n, x)) members.push_back(x);
    }
    REQUIRE(members.size() >= 10);
    for (std::size_t i = 0; i + 1 < members.size(); ++i) {
      CHECK(is_member(m, n, members[i] * members[i + 1]));
      CHECK(is_member(m, n, members[i].inverse()));
    }
  }
}

TEST_CASE("index formulas") {
  CHECK(index_formula(2, 1) == 3);
  CHECK(index_formula(4, 4) == 48);
  CHECK(index_formula(1, 1) == 1);
  CHECK(index_formula(6, 2) == 48);
  CHECK(psl_index_formula(2, 1) == 3);
  CHECK(psl_index_formula(4, 4) == 24);
  CHECK(psl_index_formula(3, 3) == 12);
  CHECK(psl_index_formula(6, 2) == 24);
  for (long m = 1; m <= 30; ++m) {
    Integer expected = m * m * m;
    for (long p : prime_divisors(m)) expected = expected / (p * p) * (p * p - 1);
    CHECK(index_formula(m, m) == expected);
  }
}

TEST_CASE("words and normal forms") {
  CHECK(word_to_matrix(GeneratorWord::parse("S S", Alphabet::psl)).is_identity());
  CHECK(word_to_matrix(GeneratorWord::parse("U U U", Alphabet::psl)).is_identity());
  CHECK(GeneratorWord::parse("S S U U U", Alphabet::psl).normalized().empty());
  CHECK(GeneratorWord::parse("T T^-1 S", Alphabet::sl).normalized().to_string() == "S");
  CHECK(matrix_to_word(PslElement(Mat2::identity())).empty());
  CHECK(matrix_to_word(PslElement(gens::S())).to_string() == "S");
  PslElement t(gens::T());
  CHECK(word_to_matrix(matrix_to_word(t)) == t);
  CHECK(evaluate(matrix_to_sl_word(-Mat2::identity())) == -Mat2::identity());
  GeneratorWord w = GeneratorWord::parse("S U U2 S U", Alphabet::psl);
  CHECK(word_to_matrix(w + w.inverse()).is_identity());
  CHECK_THROWS_AS(GeneratorWord::parse("S X", Alphabet::psl), std::invalid_argument);
}

TEST_CASE("matrix to word round trip on 1000 seeded elements") {
  CHECK(props::check_word_round_trips(20240229, 1000).empty());
}
