#pragma once

// Abelianizations of the standard congruence subgroups Gamma+(G, pi) of
// Aut+(F2): closed-form predictions for abelian G, the relation-matrix route
// through free generators of Gamma(m,n), the full Reidemeister-Schreier route
// over a presentation of Aut(F2), and the image route through PSL2(Z).

#include <optional>
#include <stdexcept>
#include <string>

#include "modgroup/cosets.hpp"
#include "modgroup/fingroups.hpp"
#include "modgroup/reidemeister.hpp"
#include "modgroup/rewriting.hpp"
#include "modgroup/smith.hpp"

namespace modgroup {

// Raised for perfect groups, where infinite abelianization is not predicted.
class OutOfTheoremScope : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Predicted abelianization of Gamma+(Z/m x Z/n, pi). Throws
// std::invalid_argument unless n | m and m >= 2.
AbelianInvariants theorem1_predicted(long m, long n);

// Cokernel of the rows (a-1, -c, 0..), (-b, d-1, 0..) for the free basis
// (a b ; c d) of Gamma(m,n), plus (m, 0, ..) and (0, n, ..), over the columns
// alpha_x, alpha_y, phi_1 .. phi_r. Requires m >= 3 and (m,n) != (3,1).
AbelianInvariants hall_abelianization(long m, long n, rs::Exec exec = rs::Exec::parallel);

// Reidemeister-Schreier over the Aut(F2) presentation with the signed-orbit
// action of P, O, R, Ax, Ay. Throws CeilingExceeded if the signed orbit is
// larger than options.ceiling.
AbelianInvariants full_abelianization(const FiniteGroup& g, Epimorphism pi0, EnumerationOptions options = {},
                                      rs::Exec exec = rs::Exec::parallel);

struct Theorem2Verdict {
  long image_index = 0;                 // [PSL2(Z) : image of Gamma+(G,pi)]
  KuroshDecomposition kurosh;
  AbelianInvariants image_abelianization;
  long free_rank = 0;
  bool certified = false;               // free_rank >= 1
};

// Throws OutOfTheoremScope for perfect G.
Theorem2Verdict theorem2_verdict(const FiniteGroup& g, Epimorphism pi0, EnumerationOptions options = {});

struct SatohReport {
  long m = 0;
  AbelianInvariants hall;
  AbelianInvariants expected;          // Z/m x Z/m x Z^{rank PG(m,m)}
  std::optional<long> prime_rank;      // 1 + (p^3 - p)/12 when m = p is prime
  bool ok = false;
};

// Throws std::invalid_argument for m < 3.
SatohReport satoh_report(long m);
bool satoh_crosscheck(long m);

}  // namespace modgroup
