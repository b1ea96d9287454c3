#include "modgroup/autf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace modgroup {

namespace {

constexpr int kX = 1, kY = 2;

int aut_letter(AutGen g, bool inverse = false) { return letter(static_cast<int>(g), inverse); }

Word power(int l, long k) {
  Word w;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) w.push_back(k < 0 ? -l : l);
  return w;
}

}  // namespace

FreeAut FreeAut::of(AutGen g, bool inv) {
  switch (g) {
    case AutGen::P: return {{kY}, {kX}};
    case AutGen::O: return {{-kX}, {kY}};
    case AutGen::R: return inv ? FreeAut{{kX, -kY}, {kY}} : FreeAut{{kX, kY}, {kY}};
    case AutGen::Ax: return inv ? FreeAut{{kX}, {-kX, kY, kX}} : FreeAut{{kX}, {kX, kY, -kX}};
    case AutGen::Ay: return inv ? FreeAut{{-kY, kX, kY}, {kY}} : FreeAut{{kY, kX, -kY}, {kY}};
  }
  throw std::invalid_argument("FreeAut::of: bad generator");
}

Word FreeAut::apply(const Word& w) const {
  Word out;
  for (int l : w) {
    const Word& img = letter_gen(l) == 0 ? x : y;
    if (l > 0) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      Word inv = inverse(img);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return free_reduce(out);
}

Mat2 FreeAut::rho() const {
  std::vector<long> ex = exponent_sums(x, 2), ey = exponent_sums(y, 2);
  return Mat2(ex[0], ey[0], ex[1], ey[1]);
}

FreeAut compose(const FreeAut& f, const FreeAut& g) { return {f.apply(g.x), f.apply(g.y)}; }

FreeAut aut_of(const Word& w) {
  FreeAut r;
  for (int l : w) r = compose(r, FreeAut::of(static_cast<AutGen>(letter_gen(l)), l < 0));
  return r;
}

std::optional<Word> inner_conjugator(const FreeAut& phi) {
  const Word& px = phi.x;
  if (px.size() % 2 == 0) return std::nullopt;
  std::size_t k = px.size() / 2;
  Word u(px.begin(), px.begin() + static_cast<long>(k));
  if (px[k] != kX || Word(px.begin() + static_cast<long>(k) + 1, px.end()) != inverse(u)) return std::nullopt;
  long bound = static_cast<long>(u.size() + phi.y.size()) + 1;
  for (long j = -bound; j <= bound; ++j) {
    Word g = free_reduce(concat(u, power(kX, j)));
    if (free_reduce(concat(concat(g, {kY}), inverse(g))) == phi.y) return g;
  }
  return std::nullopt;
}

Word inner_word(const Word& g) {
  Word w;
  for (int l : g) w.push_back(aut_letter(letter_gen(l) == 0 ? AutGen::Ax : AutGen::Ay, l < 0));
  return w;
}

namespace {

Word sub_s() { return {aut_letter(AutGen::P), aut_letter(AutGen::O, true)}; }
Word sub_u() { return {aut_letter(AutGen::R, true), aut_letter(AutGen::O), aut_letter(AutGen::P, true)}; }

Word sl_word_over_aut(const GeneratorWord& w) {
  const Word t = concat(sub_s(), sub_u());
  Word out;
  for (Letter l : w.letters()) {
    Word piece;
    switch (l) {
      case Letter::S: piece = sub_s(); break;
      case Letter::T: piece = t; break;
      case Letter::Tinv: piece = inverse(t); break;
      default: throw std::logic_error("sl_word_over_aut: unexpected letter");
    }
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return free_reduce(out);
}

}  // namespace

Word gl2_word(const Mat2& m) {
  if (m.is_special()) return sl_word_over_aut(matrix_to_sl_word(m));
  const Mat2 o = FreeAut::of(AutGen::O).rho();
  return free_reduce(concat(sl_word_over_aut(matrix_to_sl_word(m * o.inverse())), {aut_letter(AutGen::O)}));
}

namespace {

Word lift(const Word& gl2_relator) {
  Word r = free_reduce(gl2_relator);
  FreeAut phi = aut_of(r);
  std::optional<Word> g = inner_conjugator(phi);
  if (!g) throw std::logic_error("aut_f2_relators: relator does not lift to an inner automorphism");
  return free_reduce(concat(r, inverse(inner_word(*g))));
}

std::vector<Word> build_relators() {
  if (!(aut_of(sub_s()).rho() == gens::S()) || !(aut_of(sub_u()).rho() == gens::U()))
    throw std::logic_error("aut_f2_relators: S, U substitution does not match rho");
  const Word s = sub_s(), u = sub_u();
  const Word o{aut_letter(AutGen::O)};
  const Mat2 ro = FreeAut::of(AutGen::O).rho();
  auto pow = [](const Word& w, int k) {
    Word out;
    for (int i = 0; i < k; ++i) out = concat(out, w);
    return out;
  };

  std::vector<Word> gl2;
  gl2.push_back(pow(s, 4));
  gl2.push_back(concat(pow(s, 2), inverse(pow(u, 3))));
  gl2.push_back(pow(o, 2));
  gl2.push_back(concat(concat(concat(o, s), inverse(o)), inverse(gl2_word(ro * gens::S() * ro.inverse()))));
  gl2.push_back(concat(concat(concat(o, u), inverse(o)), inverse(gl2_word(ro * gens::U() * ro.inverse()))));
  for (AutGen g : {AutGen::R, AutGen::P})
    gl2.push_back(concat({aut_letter(g)}, inverse(gl2_word(FreeAut::of(g).rho()))));

  std::vector<Word> rels;
  for (const Word& r : gl2) rels.push_back(lift(r));
  for (AutGen gen : {AutGen::P, AutGen::O, AutGen::R}) {
    for (bool inv : {false, true}) {
      FreeAut sg = FreeAut::of(gen, inv);
      for (int v : {kX, kY}) {
        AutGen av = v == kX ? AutGen::Ax : AutGen::Ay;
        Word r{aut_letter(gen, inv), aut_letter(av), aut_letter(gen, !inv)};
        rels.push_back(free_reduce(concat(r, inverse(inner_word(sg.apply({v}))))));
      }
    }
  }
  for (Word& r : rels) {
    if (!aut_of(r).is_identity()) throw std::logic_error("aut_f2_relators: relator is not the identity");
    r = canonical_relator(r);
  }
  std::erase_if(rels, [](const Word& r) { return r.empty(); });
  std::sort(rels.begin(), rels.end());
  rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
  return rels;
}

}  // namespace

const std::vector<Word>& aut_f2_relators() {
  static const std::vector<Word> rels = build_relators();
  return rels;
}

bool relators_fix_all(const FiniteGroup& g) {
  for (const Epimorphism& e : epi_set(g))
    for (int sign : {1, -1})
      for (const Word& r : aut_f2_relators())
        if (!(act(g, r, SignedEpi{e, sign}) == SignedEpi{e, sign})) return false;
  return true;
}

std::string format_aut_word(const Word& w) {
  auto names = aut_gen_names();
  return format_word(w, names);
}

}  // namespace modgroup
