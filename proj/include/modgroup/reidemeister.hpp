#pragma once

// Reidemeister-Schreier kernels over an arbitrary finite permutation action.
//
// A PermAction is the right action of free generators 0..k-1 on points
// 0..N-1, point 0 being the base point (the trivial coset). Subgroup
// generators are the Schreier symbols t_p g t_{p.g}^-1 that are not edges of
// the BFS spanning tree; relators of the ambient group are rewritten from
// every point into words over these symbols.
//
// The relator kernels come in a serial reference form and an OpenMP form.
// Both return sorted, de-duplicated output so they are interchangeable.

#include <span>
#include <utility>
#include <vector>

#include "modgroup/freeword.hpp"

namespace modgroup::rs {

enum class Exec { serial, parallel };

class PermAction {
 public:
  PermAction() = default;
  // images[g][p] = p . g; throws std::invalid_argument unless each is a
  // permutation.
  explicit PermAction(const std::vector<std::vector<int>>& images);

  int n_points() const { return n_points_; }
  int n_gens() const { return n_gens_; }

  int image(int p, int letter) const {
    std::size_t g = static_cast<std::size_t>(letter_gen(letter));
    std::size_t idx = g * static_cast<std::size_t>(n_points_) + static_cast<std::size_t>(p);
    return letter > 0 ? fwd_[idx] : bwd_[idx];
  }
  int image(int p, const Word& w) const {
    for (int l : w) p = image(p, l);
    return p;
  }

 private:
  int n_points_ = 0;
  int n_gens_ = 0;
  std::vector<int> fwd_, bwd_;
};

// Default BFS letter order: g0, g0^-1, g1, g1^-1, ...
std::vector<int> default_letter_order(int n_gens);

struct Transversal {
  std::vector<int> parent;         // -1 at the base point
  std::vector<int> parent_letter;  // parent[p] . parent_letter[p] == p
  std::vector<Word> words;         // prefix-closed representatives, words[0] empty
};

// Throws std::invalid_argument if the action is not transitive.
Transversal bfs_transversal(const PermAction& action, std::span<const int> letter_order);
Transversal bfs_transversal(const PermAction& action);

struct SchreierSymbols {
  int n_gens = 0;
  std::vector<int> id;                       // p * n_gens + g -> symbol, or -1 on a tree edge
  std::vector<std::pair<int, int>> origin;   // symbol -> (p, g)
  int count() const { return static_cast<int>(origin.size()); }
  int at(int p, int g) const { return id[static_cast<std::size_t>(p * n_gens + g)]; }
};

SchreierSymbols schreier_symbols(const PermAction& action, const Transversal& tr);

// t_p g t_{p.g}^-1, freely reduced, as a word in the ambient generators.
Word schreier_word(const PermAction& action, const Transversal& tr, int p, int g);

// Rewrites w read from point `start` into a word over Schreier symbols.
// Throws std::logic_error if w does not return to `start`.
Word rewrite(const PermAction& action, const SchreierSymbols& sym, int start, const Word& w);

// Rewritten conjugates t_p r t_p^-1 for every point p and relator r, in
// canonical cyclic form, trivial ones dropped, sorted and de-duplicated.
std::vector<Word> rewrite_relators(const PermAction& action, const SchreierSymbols& sym,
                                   std::span<const Word> relators, Exec exec = Exec::parallel);

// Exponent-sum rows of the same rewritten relators: the relation matrix of
// the subgroup's abelianization over sym.count() generators.
using SparseRow = std::vector<std::pair<int, long>>;
std::vector<SparseRow> relation_rows(const PermAction& action, const SchreierSymbols& sym,
                                     std::span<const Word> relators, Exec exec = Exec::parallel);

}  // namespace modgroup::rs
