#pragma once

// Seeded property checks shared by the test suites and `verify properties`.
// Each returns a list of failure descriptions; empty means all cases passed.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "modgroup/cosets.hpp"
#include "modgroup/fingroups.hpp"
#include "modgroup/matgroup.hpp"
#include "modgroup/smith.hpp"

namespace modgroup::props {

// Random element of SL2(Z) with entries bounded by max_entry in absolute value.
Mat2 random_sl2(std::mt19937_64& rng, long max_entry);

// Random matrix with entries in [-max_abs, max_abs].
IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long max_abs);

// Invariants from determinantal divisors: d_k = gcd of the k x k minors and
// the invariant factors are d_k / d_{k-1}.
AbelianInvariants determinantal_invariants(const IntMatrix& m);

// index = 6 (k - 1) + 3 f2 + 4 f3 for the fixed points f2 of S, f3 of U.
bool euler_identity_holds(const CosetTable& t);

// The groups used by relator-soundness checks.
std::vector<FiniteGroup> test_groups();

std::vector<std::string> check_euler_identity(long max_m);
std::vector<std::string> check_word_round_trips(std::uint64_t seed, int count, long max_entry = 1'000'000);
std::vector<std::string> check_snf_oracle(std::uint64_t seed, int count);
std::vector<std::string> check_relator_soundness();

}  // namespace modgroup::props
