#pragma once

// Reidemeister-Schreier on PSL2(Z) coset tables: Schreier transversals and
// generators, subgroup presentations, Kurosh decompositions, freeness.

#include <string>
#include <string_view>
#include <vector>

#include "modgroup/cosets.hpp"
#include "modgroup/freeword.hpp"
#include "modgroup/reidemeister.hpp"
#include "modgroup/smith.hpp"

namespace modgroup {

// Prefix-closed BFS representatives, letter order S < U < U2.
struct SchreierTransversal {
  rs::Transversal tree;  // over S = 0, U = 1; U^-1 plays the role of U2
  std::vector<GeneratorWord> words;
};

SchreierTransversal transversal(const CosetTable& t);

struct SchreierGenerator {
  int coset = 0;
  Letter generator = Letter::S;  // S or U
  GeneratorWord word;            // t_c g t_{c.g}^-1 in normal form
  PslElement element;
};

// Nontrivial Schreier generators, one per non-tree pair (coset, S|U): there
// are exactly index + 1 of them.
std::vector<SchreierGenerator> schreier_generators(const CosetTable& t, const SchreierTransversal& tr);

struct FiniteFactorWitness {
  int coset = 0;
  GeneratorWord conjugator;  // the factor is conjugator * g * conjugator^-1
  int order = 0;             // 2 (g = S) or 3 (g = U)
};

// A free group of rank free_rank, f2 conjugates of <S>, f3 conjugates of <U>.
struct KuroshDecomposition {
  long index = 0;
  long free_rank = 0;
  long f2 = 0;
  long f3 = 0;
  std::vector<FiniteFactorWitness> witnesses;

  AbelianInvariants abelianization() const;
  std::string to_string() const;
};

// Counts fixed points of S and U and solves
//   free_rank - 1 + f2/2 + 2 f3/3 = index/6.
// Throws std::logic_error if that gives a negative or fractional rank.
KuroshDecomposition kurosh_decompose(const CosetTable& t);

bool is_free(const CosetTable& t);

// Throws std::invalid_argument for subgroups with torsion.
long free_rank(const CosetTable& t);

struct SubgroupPresentation {
  std::vector<GeneratorWord> witnesses;  // generator i is witnesses[i] in PSL2(Z)
  std::vector<Word> relators;            // over generators 0..g-1

  int generator_count() const { return static_cast<int>(witnesses.size()); }
  AbelianInvariants abelianization() const;
};

// Relators S^2 and U^3 rewritten from every coset, freely and cyclically
// reduced; then every generator that occurs exactly once in some relator is
// eliminated together with that relator.
SubgroupPresentation subgroup_presentation(const CosetTable& t, const SchreierTransversal& tr,
                                           rs::Exec exec = rs::Exec::parallel);

// "gens g", one witness per line, "relators r", one relator per line over
// g0 .. g{g-1} with ^-1 marking inverses.
std::string serialize(const SubgroupPresentation& p);
SubgroupPresentation parse_presentation(std::string_view text);

// Normal-form words for the nontrivial Schreier generators, routed through
// their matrices and matrix_to_word.
std::vector<GeneratorWord> subgroup_generator_words(const CosetTable& t);

// Structure of the full preimage in SL2(Z) of the subgroup of PSL2(Z) given
// by the table, read off from Reidemeister-Schreier over
// <S, U | S^4, S^2 U^-3>. Meaningful as a statement about Gamma(m,n) when
// -I lies in it (m | 2); otherwise Gamma(m,n) is isomorphic to its image.
struct SlStructure {
  bool central_minus_identity = false;
  bool free = false;
  long free_part_rank = 0;
  std::string tag;
  AbelianInvariants abelianization;
};

SlStructure sl_structure(long m, long n);

}  // namespace modgroup
