#pragma once

// Finite groups as Cayley tables, epimorphisms F2 -> G, and the right action
// of Aut(F2) on signed epimorphisms, pi . phi = pi o phi.
//
// F2 = <x, y>; an epimorphism is the pair (pi(x), pi(y)). The sign tracks the
// determinant of the abelianized automorphism applied so far, so the
// stabilizer of (pi, +1) is Gamma+(G, pi) = Gamma(G, pi) n Aut+(F2).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "modgroup/cosets.hpp"
#include "modgroup/freeword.hpp"
#include "modgroup/matgroup.hpp"
#include "modgroup/reidemeister.hpp"

namespace modgroup {

struct Epimorphism {
  int gx = 0;
  int gy = 0;
  friend bool operator==(const Epimorphism&, const Epimorphism&) = default;
};

// Permutation of {0..d-1}; products apply the left factor first.
using Perm = std::vector<int>;

class FiniteGroup {
 public:
  static constexpr int kDefaultOrderCap = 120;

  // Z/m; element i is the residue i. Standard pair (1, 0).
  static FiniteGroup cyclic(int m);
  // Z/m x Z/n; element i*n + j is (i, j). Standard pair ((1,0), (0,1)).
  static FiniteGroup abelian(int m, int n);
  // Dihedral group of order 2r; element i + r*e is rot^i ref^e. Standard
  // pair (rot, ref).
  static FiniteGroup dihedral(int r);
  // Permutation groups list elements in BFS order from the identity,
  // multiplying by the generators on the right. Standard pair = the two
  // generators: (0 1), (0 1 ... s-1) for sym; 3-cycle and long cycle for alt;
  // i, j for quaternion.
  static FiniteGroup symmetric(int s);
  static FiniteGroup alternating(int s);
  static FiniteGroup quaternion();
  static FiniteGroup from_permutations(const std::vector<Perm>& generators, std::string name,
                                       int order_cap = kDefaultOrderCap);

  // "cyclic:m", "abelian:m,n", "dihedral:r", "sym:s", "alt:s", "quaternion",
  // "perm:(1 2)(3 4),(1 2 3)". Throws std::invalid_argument.
  static FiniteGroup parse(std::string_view spec, int order_cap = kDefaultOrderCap);

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a * order_ + b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  const std::string& name() const { return name_; }
  std::optional<Epimorphism> standard_pair() const { return standard_; }

  std::vector<int> closure(std::span<const int> generators) const;
  std::vector<int> commutator_subgroup() const;
  bool is_perfect() const;
  bool is_abelian() const;
  int element_order(int a) const;

  // Full axiom check; throws std::logic_error.
  void check_axioms() const;

 private:
  FiniteGroup(std::string name, int order, std::vector<int> table);
  void finish();

  std::string name_;
  int order_ = 0;
  int identity_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::optional<Epimorphism> standard_;
};

bool generates(const FiniteGroup& g, Epimorphism e);

// All generating pairs, ordered by (gx, gy).
std::vector<Epimorphism> epi_set(const FiniteGroup& g);

// Default epimorphism: the group's standard pair, else the first of epi_set.
Epimorphism default_epimorphism(const FiniteGroup& g);

struct SignedEpi {
  Epimorphism epi;
  int sign = 1;
  friend bool operator==(const SignedEpi&, const SignedEpi&) = default;
};

// P: x <-> y; O: x -> x^-1; R: x -> xy; Ax, Ay: conjugation by x, y.
enum class AutGen : std::uint8_t { P = 0, O = 1, R = 2, Ax = 3, Ay = 4 };
constexpr int kAutGenCount = 5;

int determinant(AutGen g);
std::span<const std::string> aut_gen_names();

SignedEpi act(const FiniteGroup& g, AutGen gen, bool inverse, SignedEpi s);
// Word letters index AutGen.
SignedEpi act(const FiniteGroup& g, const Word& w, SignedEpi s);

struct OrbitStabilizer {
  std::vector<AutGen> generators;       // local generator i is generators[i]
  std::vector<SignedEpi> orbit;         // point 0 is (pi0, +1)
  rs::PermAction action;
  rs::Transversal transversal;
  std::vector<Word> stabilizer_words;   // over AutGen indices
  long signed_orbit_size = 0;           // [Aut(F2) : Gamma+(G,pi)]
  long epi_orbit_size = 0;              // [Aut(F2) : Gamma(G,pi)]
  long aut_plus_index = 0;              // [Aut+(F2) : Gamma+(G,pi)]

  bool gamma_inside_aut_plus() const { return signed_orbit_size == epi_orbit_size; }
};

// BFS orbit of (pi0, +1); Schreier generators of its stabilizer.
OrbitStabilizer orbit_stabilizer(const FiniteGroup& g, Epimorphism pi0,
                                 std::vector<AutGen> generators = {AutGen::P, AutGen::O, AutGen::R});

// Action on the abelianization Z^2 of F2 with columns the exponent vectors of
// phi(x), phi(y); R maps to (1 0 ; 1 1).
Mat2 rho_image(AutGen gen);
Mat2 rho_image(const Word& w);

// Coset table of the image of Gamma+(G,pi) in PSL2(Z).
CosetTable stabilizer_image_table(const FiniteGroup& g, Epimorphism pi0, EnumerationOptions options = {});

}  // namespace modgroup
