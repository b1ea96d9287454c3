#include "modgroup/matgroup.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace modgroup {

Mat2::Mat2() : a_(1), b_(0), c_(0), d_(1) {}

Mat2::Mat2(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  Integer det = a_ * d_ - b_ * c_;
  if (det != 1 && det != -1)
    throw std::invalid_argument("Mat2: determinant " + det.get_str() + " is not +-1");
}

Mat2 Mat2::inverse() const {
  if (is_special()) return Mat2(d_, -b_, -c_, a_);
  return Mat2(-d_, b_, c_, -a_);
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  Mat2 r;
  r.a_ = x.a_ * y.a_ + x.b_ * y.c_;
  r.b_ = x.a_ * y.b_ + x.b_ * y.d_;
  r.c_ = x.c_ * y.a_ + x.d_ * y.c_;
  r.d_ = x.c_ * y.b_ + x.d_ * y.d_;
  return r;
}

std::string Mat2::to_string() const {
  return "(" + a_.get_str() + " " + b_.get_str() + "; " + c_.get_str() + " " + d_.get_str() + ")";
}

namespace gens {
Mat2 S() { return Mat2(0, 1, -1, 0); }
Mat2 U() { return Mat2(0, -1, 1, 1); }
Mat2 T() { return Mat2(1, 1, 0, 1); }
}  // namespace gens

Mat2 canonical_sign(const Mat2& m) {
  for (const Integer* e : {&m.a(), &m.b(), &m.c(), &m.d()}) {
    if (*e > 0) return m;
    if (*e < 0) return -m;
  }
  return m;  // unreachable for unimodular input
}

PslElement::PslElement(const Mat2& m) : rep_(canonical_sign(m)) {
  if (!m.is_special()) throw std::invalid_argument("PslElement: determinant must be 1");
}

bool operator<(const PslElement& x, const PslElement& y) {
  const Mat2& p = x.rep_;
  const Mat2& q = y.rep_;
  if (p.a() != q.a()) return p.a() < q.a();
  if (p.b() != q.b()) return p.b() < q.b();
  if (p.c() != q.c()) return p.c() < q.c();
  return p.d() < q.d();
}

// ---------------------------------------------------------------------------
// Words

GeneratorWord::GeneratorWord(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(alphabet), letters_(std::move(letters)) {
  for (Letter l : letters_) {
    bool psl_letter = l == Letter::S || l == Letter::U || l == Letter::U2;
    bool sl_letter = l == Letter::S || l == Letter::T || l == Letter::Tinv;
    if ((alphabet_ == Alphabet::psl && !psl_letter) || (alphabet_ == Alphabet::sl && !sl_letter))
      throw std::invalid_argument("GeneratorWord: letter outside alphabet");
  }
}

GeneratorWord GeneratorWord::parse(std::string_view text, Alphabet alphabet) {
  std::istringstream in{std::string(text)};
  std::vector<Letter> letters;
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    if (tok == "S")
      letters.push_back(Letter::S);
    else if (tok == "U")
      letters.push_back(Letter::U);
    else if (tok == "U2" || tok == "U^2" || tok == "U^-1")
      letters.push_back(Letter::U2);
    else if (tok == "T")
      letters.push_back(Letter::T);
    else if (tok == "T^-1" || tok == "Tinv")
      letters.push_back(Letter::Tinv);
    else
      throw std::invalid_argument("GeneratorWord: unknown token '" + tok + "'");
  }
  return GeneratorWord(alphabet, std::move(letters));
}

namespace {

int u_power(Letter l) { return l == Letter::U ? 1 : l == Letter::U2 ? 2 : 0; }

}  // namespace

GeneratorWord GeneratorWord::normalized() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  if (alphabet_ == Alphabet::psl) {
    for (Letter l : letters_) {
      if (!out.empty()) {
        Letter top = out.back();
        if (l == Letter::S && top == Letter::S) {
          out.pop_back();
          continue;
        }
        if (l != Letter::S && top != Letter::S) {
          int e = (u_power(top) + u_power(l)) % 3;
          out.pop_back();
          if (e == 1) out.push_back(Letter::U);
          if (e == 2) out.push_back(Letter::U2);
          continue;
        }
      }
      out.push_back(l);
    }
  } else {
    for (Letter l : letters_) {
      if (!out.empty() && ((l == Letter::T && out.back() == Letter::Tinv) ||
                           (l == Letter::Tinv && out.back() == Letter::T))) {
        out.pop_back();
        continue;
      }
      out.push_back(l);
      std::size_t k = out.size();
      if (k >= 4 && std::all_of(out.end() - 4, out.end(), [](Letter x) { return x == Letter::S; }))
        out.resize(k - 4);
    }
  }
  return GeneratorWord(alphabet_, std::move(out));
}

GeneratorWord GeneratorWord::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    switch (*it) {
      case Letter::S:
        if (alphabet_ == Alphabet::psl) {
          out.push_back(Letter::S);
        } else {
          out.insert(out.end(), 3, Letter::S);
        }
        break;
      case Letter::U: out.push_back(Letter::U2); break;
      case Letter::U2: out.push_back(Letter::U); break;
      case Letter::T: out.push_back(Letter::Tinv); break;
      case Letter::Tinv: out.push_back(Letter::T); break;
    }
  }
  return GeneratorWord(alphabet_, std::move(out));
}

GeneratorWord GeneratorWord::operator+(const GeneratorWord& rhs) const {
  if (alphabet_ != rhs.alphabet_) throw std::invalid_argument("GeneratorWord: alphabet mismatch");
  std::vector<Letter> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return GeneratorWord(alphabet_, std::move(out));
}

std::string GeneratorWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (Letter l : letters_) {
    if (!s.empty()) s += ' ';
    switch (l) {
      case Letter::S: s += "S"; break;
      case Letter::U: s += "U"; break;
      case Letter::U2: s += "U2"; break;
      case Letter::T: s += "T"; break;
      case Letter::Tinv: s += "T^-1"; break;
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Congruence data

void check_level(long m, long n) {
  if (m < 1 || n < 1) throw std::invalid_argument("level: m and n must be positive");
  if (m % n != 0)
    throw std::invalid_argument("level: n = " + std::to_string(n) + " does not divide m = " +
                                std::to_string(m));
}

std::vector<long> prime_divisors(long m) {
  std::vector<long> ps;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      ps.push_back(p);
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) ps.push_back(m);
  return ps;
}

namespace {

bool congruent(const Integer& x, long target, long mod) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), Integer(x - target).get_mpz_t(), static_cast<unsigned long>(mod));
  return r == 0;
}

}  // namespace

bool is_member(long m, long n, const Mat2& x) {
  check_level(m, n);
  if (!x.is_special()) return false;
  return congruent(x.a(), 1, m) && congruent(x.b(), 0, m) && congruent(x.c(), 0, n) &&
         congruent(x.d(), 1, n);
}

bool contains_minus_identity(long m, long n) {
  check_level(m, n);
  return 2 % m == 0;
}

Integer index_formula(long m, long n) {
  check_level(m, n);
  Integer r = Integer(n) * m * m;
  for (long p : prime_divisors(m)) {
    Integer p2 = Integer(p) * p;
    if (!mpz_divisible_p(r.get_mpz_t(), p2.get_mpz_t()))
      throw std::logic_error("index_formula: non-integral intermediate");
    r = r / p2 * (p2 - 1);
  }
  return r;
}

Integer psl_index_formula(long m, long n) {
  Integer sl = index_formula(m, n);
  return contains_minus_identity(m, n) ? sl : Integer(sl / 2);
}

// ---------------------------------------------------------------------------
// Matrix <-> word

GeneratorWord matrix_to_sl_word(const Mat2& x) {
  if (!x.is_special()) throw std::invalid_argument("matrix_to_sl_word: determinant must be 1");
  std::vector<Letter> out;
  auto push_t_power = [&out](const Integer& q) {
    Letter l = q > 0 ? Letter::T : Letter::Tinv;
    Integer k = abs(q);
    for (Integer i = 0; i < k; ++i) out.push_back(l);
  };

  // x = T^q * S * x' with x' = S^-1 T^-q x; the first column strictly shrinks.
  Integer a = x.a(), b = x.b(), c = x.c(), d = x.d();
  while (c != 0) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
    a -= q * c;
    b -= q * d;
    push_t_power(q);
    out.push_back(Letter::S);
    Integer na = -c, nb = -d;
    c = a;
    d = b;
    a = na;
    b = nb;
  }
  // (a b; 0 d) with a = d = +-1.
  if (a == 1) {
    push_t_power(b);
  } else {
    push_t_power(-b);
    out.push_back(Letter::S);
    out.push_back(Letter::S);
  }
  return GeneratorWord(Alphabet::sl, std::move(out)).normalized();
}

GeneratorWord matrix_to_word(const PslElement& x) {
  GeneratorWord sl = matrix_to_sl_word(x.rep());
  std::vector<Letter> out;
  out.reserve(sl.size() * 2);
  for (Letter l : sl.letters()) {
    switch (l) {
      case Letter::S: out.push_back(Letter::S); break;
      case Letter::T:
        out.push_back(Letter::S);
        out.push_back(Letter::U);
        break;
      case Letter::Tinv:
        out.push_back(Letter::U2);
        out.push_back(Letter::S);
        break;
      default: break;
    }
  }
  return GeneratorWord(Alphabet::psl, std::move(out)).normalized();
}

Mat2 evaluate(const GeneratorWord& w) {
  static const Mat2 s = gens::S(), u = gens::U(), t = gens::T();
  static const Mat2 u2 = gens::U() * gens::U(), tinv = gens::T().inverse();
  Mat2 r;
  for (Letter l : w.letters()) {
    switch (l) {
      case Letter::S: r = r * s; break;
      case Letter::U: r = r * u; break;
      case Letter::U2: r = r * u2; break;
      case Letter::T: r = r * t; break;
      case Letter::Tinv: r = r * tinv; break;
    }
  }
  return r;
}

PslElement word_to_matrix(const GeneratorWord& w) {
  if (w.alphabet() != Alphabet::psl) throw std::invalid_argument("word_to_matrix: PSL alphabet expected");
  return PslElement(evaluate(w));
}

}  // namespace modgroup

std::size_t std::hash<modgroup::PslElement>::operator()(const modgroup::PslElement& x) const noexcept {
  std::size_t h = 0;
  for (const modgroup::Integer* e : {&x.rep().a(), &x.rep().b(), &x.rep().c(), &x.rep().d()}) {
    std::size_t v = mpz_size(e->get_mpz_t()) == 0 ? 0 : mpz_getlimbn(e->get_mpz_t(), 0);
    v ^= static_cast<std::size_t>(mpz_sgn(e->get_mpz_t()) + 1) << 61;
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}
