#pragma once

// Automorphisms of F2 = <x, y> and a finite presentation of Aut(F2) on the
// generators P, O, R, Ax, Ay of fingroups.hpp.
//
// The presentation comes from the extension 1 -> Inn(F2) -> Aut(F2) -> GL2(Z)
// -> 1, where Inn(F2) is free on Ax, Ay. It consists of
//   - relators of GL2(Z) over P, O, R, each multiplied by the inner
//     automorphism that makes it trivial in Aut(F2);
//   - s A_v s^-1 = A_{s(v)} and s^-1 A_v s = A_{s^-1(v)} for s in {P, O, R}
//     and v in {x, y}.

#include <optional>
#include <string>
#include <vector>

#include "modgroup/fingroups.hpp"
#include "modgroup/freeword.hpp"
#include "modgroup/matgroup.hpp"

namespace modgroup {

// Images of x (generator 0) and y (generator 1), freely reduced.
struct FreeAut {
  Word x{1};
  Word y{2};

  static FreeAut identity() { return {}; }
  static FreeAut of(AutGen g, bool inverse = false);

  // phi(w)
  Word apply(const Word& w) const;
  bool is_identity() const { return x == Word{1} && y == Word{2}; }
  // Abelianized action, columns the exponent vectors of phi(x), phi(y).
  Mat2 rho() const;

  friend bool operator==(const FreeAut&, const FreeAut&) = default;
};

// (f o g)(w) = f(g(w))
FreeAut compose(const FreeAut& f, const FreeAut& g);

// The word l1 l2 ... over AutGen indices denotes l1 o l2 o ..., matching the
// right action pi . w = pi o l1 o l2 o ... .
FreeAut aut_of(const Word& w);

// g with phi(v) = g v g^-1 for all v, if phi is inner.
std::optional<Word> inner_conjugator(const FreeAut& phi);

// Word over Ax, Ay for conjugation by g.
Word inner_word(const Word& g);

// Word over P, O, R mapping under rho to the given matrix of GL2(Z).
Word gl2_word(const Mat2& m);

// The presentation described above. Every relator is checked to be the
// identity automorphism on construction.
const std::vector<Word>& aut_f2_relators();

// True iff every relator fixes every signed epimorphism onto g.
bool relators_fix_all(const FiniteGroup& g);

std::string format_aut_word(const Word& w);

}  // namespace modgroup
