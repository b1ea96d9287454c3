#pragma once

// Words in a free group on generators 0..k-1. Letter g+1 is generator g,
// letter -(g+1) its inverse.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "modgroup/matgroup.hpp"

namespace modgroup {

using Word = std::vector<int>;

inline int letter(int gen, bool inverse = false) { return inverse ? -(gen + 1) : gen + 1; }
inline int letter_gen(int l) { return (l > 0 ? l : -l) - 1; }
inline bool letter_inverse(int l) { return l < 0; }

Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& x, const Word& y);

// Least rotation of the cyclic reduction of w or of w^-1; equal for
// conjugate relators.
Word canonical_relator(const Word& w);

// Exponent sum of every generator, length n_gens.
std::vector<long> exponent_sums(const Word& w, int n_gens);

// Tokens are names, optionally followed by ^-1.
std::string format_word(const Word& w, std::span<const std::string> names);
Word parse_word(std::string_view text, std::span<const std::string> names);

// PSL words over S (gen 0) and U (gen 1). U^-1 is written U2 and S^-1 as S.
Word to_free_word(const GeneratorWord& w);
GeneratorWord to_psl_word(const Word& w);

// Exact value in SL2(Z) with S, U taken as the SL matrices.
Mat2 evaluate_sl(const Word& w);

}  // namespace modgroup
