#pragma once

// Coset tables of finite-index subgroups of PSL2(Z) = <S, U | S^2, U^3>.
// Coset 0 is the subgroup; cosets are right cosets and S, U act on the right.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "modgroup/matgroup.hpp"
#include "modgroup/reidemeister.hpp"

namespace modgroup {

enum class Provenance { enumerated, congruence_action, parsed };

struct CosetTable {
  std::vector<int> s;  // coset . S
  std::vector<int> u;  // coset . U
  Provenance provenance = Provenance::enumerated;

  int size() const { return static_cast<int>(s.size()); }
  int act(int coset, Letter l) const;
  int act(int coset, const GeneratorWord& w) const;

  // Generators S = 0, U = 1.
  rs::PermAction action() const;
};

// Throws std::logic_error naming the violated invariant: S^2 = 1, U^3 = 1,
// transitivity.
void check_invariants(const CosetTable& t);

// Renumbers cosets in BFS order from coset 0 trying S, U, U2 in turn.
CosetTable standardized(const CosetTable& t);

class CeilingExceeded : public std::runtime_error {
 public:
  explicit CeilingExceeded(std::size_t ceiling)
      : std::runtime_error("coset enumeration exceeded " + std::to_string(ceiling) +
                           " cosets: possible infinite index or ceiling too low"),
        ceiling_(ceiling) {}
  std::size_t ceiling() const { return ceiling_; }

 private:
  std::size_t ceiling_;
};

struct EnumerationOptions {
  std::size_t ceiling = 1'000'000;
};

// HLT Todd-Coxeter enumeration of the cosets of <subgroup_generators> in
// PSL2(Z), with a lookahead pass before giving up at the ceiling.
// Returns a standardized table.
CosetTable enumerate(std::span<const GeneratorWord> subgroup_generators,
                     EnumerationOptions options = {});

// Table of PG(m,n) from the right action on pairs (top row mod m, bottom row
// mod n) taken up to a common sign. Standardized.
CosetTable congruence_table(long m, long n);

// Table of the image of Gamma^0(m) = { b = 0 mod m }, from the action on
// top rows mod m up to unit multiples. Standardized.
CosetTable gamma0_table(long m);

// Base-point preserving isomorphism test by simultaneous BFS.
bool tables_isomorphic(const CosetTable& t1, const CosetTable& t2);

// "cosets N" followed by one "s u" line per coset.
std::string serialize(const CosetTable& t);
CosetTable parse_table(std::string_view text);

}  // namespace modgroup
