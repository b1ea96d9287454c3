#pragma once

// Exact arithmetic in SL2(Z) and PSL2(Z), congruence conditions, and the
// translation between matrices and words in the standard generators
//
//   S = ( 0 1 ; -1 0 )   order 4 in SL2(Z), order 2 in PSL2(Z)
//   U = ( 0 -1 ; 1 1 )   order 6 in SL2(Z), order 3 in PSL2(Z)
//   T = ( 1 1 ; 0 1 ) = S U
//
// PSL2(Z) is the free product <S> * <U>.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace modgroup {

using Integer = mpz_class;

// 2x2 integer matrix of determinant +1 or -1, row-major (a b ; c d).
// Operations that only make sense in SL2(Z) require det() == 1.
class Mat2 {
 public:
  Mat2();
  Mat2(Integer a, Integer b, Integer c, Integer d);

  static Mat2 identity() { return Mat2(); }

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& d() const { return d_; }

  Integer det() const { return a_ * d_ - b_ * c_; }
  bool is_special() const { return det() == 1; }
  bool is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }

  Mat2 inverse() const;
  Mat2 operator-() const { return Mat2(-a_, -b_, -c_, -d_); }

  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

  std::string to_string() const;

 private:
  Integer a_, b_, c_, d_;
};

inline Mat2 mul(const Mat2& x, const Mat2& y) { return x * y; }

namespace gens {
Mat2 S();
Mat2 U();
Mat2 T();
}  // namespace gens

// {M, -M} stored by its representative whose first nonzero entry in scan
// order (a, b, c, d) is positive.
class PslElement {
 public:
  PslElement() = default;
  explicit PslElement(const Mat2& m);

  const Mat2& rep() const { return rep_; }
  bool is_identity() const { return rep_.is_identity(); }

  PslElement inverse() const { return PslElement(rep_.inverse()); }
  friend PslElement operator*(const PslElement& x, const PslElement& y) {
    return PslElement(x.rep_ * y.rep_);
  }
  friend bool operator==(const PslElement& x, const PslElement& y) { return x.rep_ == y.rep_; }
  friend bool operator<(const PslElement& x, const PslElement& y);

  std::string to_string() const { return rep_.to_string(); }

 private:
  Mat2 rep_;
};

Mat2 canonical_sign(const Mat2& m);

enum class Alphabet { psl, sl };

// PSL alphabet uses S, U, U2; SL alphabet uses S, T, Tinv.
enum class Letter : std::uint8_t { S, U, U2, T, Tinv };

class GeneratorWord {
 public:
  GeneratorWord() = default;
  GeneratorWord(Alphabet alphabet, std::vector<Letter> letters);

  // Whitespace-separated tokens: S U U2 (psl) or S T T^-1 (sl). "1" or an
  // empty string is the identity.
  static GeneratorWord parse(std::string_view text, Alphabet alphabet);

  Alphabet alphabet() const { return alphabet_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  // Removes S S and merges U powers mod 3 (psl), or cancels T Tinv (sl).
  GeneratorWord normalized() const;
  GeneratorWord inverse() const;
  GeneratorWord operator+(const GeneratorWord& rhs) const;

  std::string to_string() const;

  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;

 private:
  Alphabet alphabet_ = Alphabet::psl;
  std::vector<Letter> letters_;
};

// Throws std::invalid_argument unless m >= 1, n >= 1 and n | m.
void check_level(long m, long n);

std::vector<long> prime_divisors(long m);

// True iff x lies in Gamma(m,n): a = 1, b = 0 mod m and c = 0, d = 1 mod n.
bool is_member(long m, long n, const Mat2& x);

// -I lies in Gamma(m,n) exactly when m divides 2.
bool contains_minus_identity(long m, long n);

// [SL2(Z) : Gamma(m,n)] = n m^2 prod_{p | m} (1 - 1/p^2).
Integer index_formula(long m, long n);

// Index of the projective image PG(m,n) in PSL2(Z).
Integer psl_index_formula(long m, long n);

// SL-alphabet word that evaluates to x exactly in SL2(Z), obtained by
// Euclidean reduction of the first column. -I appears as S S.
GeneratorWord matrix_to_sl_word(const Mat2& x);

// PSL-alphabet word in normal form evaluating to x.
GeneratorWord matrix_to_word(const PslElement& x);

// Left-to-right product of generator representatives. PSL letters use
// S, U, U^2; SL letters use S, T, T^-1.
Mat2 evaluate(const GeneratorWord& w);
PslElement word_to_matrix(const GeneratorWord& w);

}  // namespace modgroup

template <>
struct std::hash<modgroup::PslElement> {
  std::size_t operator()(const modgroup::PslElement& x) const noexcept;
};
