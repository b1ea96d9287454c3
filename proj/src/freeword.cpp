#include "modgroup/freeword.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace modgroup {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t i = 0, j = r.size();
  while (j - i >= 2 && r[i] == -r[j - 1]) {
    ++i;
    --j;
  }
  return Word(r.begin() + static_cast<long>(i), r.begin() + static_cast<long>(j));
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

Word concat(const Word& x, const Word& y) {
  Word out = x;
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

namespace {

Word least_rotation(const Word& w) {
  Word best = w;
  Word rot = w;
  for (std::size_t k = 1; k < w.size(); ++k) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return best;
}

}  // namespace

Word canonical_relator(const Word& w) {
  Word r = cyclic_reduce(w);
  if (r.empty()) return r;
  Word a = least_rotation(r);
  Word b = least_rotation(inverse(r));
  return std::min(a, b);
}

std::vector<long> exponent_sums(const Word& w, int n_gens) {
  std::vector<long> e(static_cast<std::size_t>(n_gens), 0);
  for (int l : w) e[static_cast<std::size_t>(letter_gen(l))] += l > 0 ? 1 : -1;
  return e;
}

std::string format_word(const Word& w, std::span<const std::string> names) {
  if (w.empty()) return "1";
  std::string s;
  for (int l : w) {
    if (!s.empty()) s += ' ';
    s += names[static_cast<std::size_t>(letter_gen(l))];
    if (l < 0) s += "^-1";
  }
  return s;
}

Word parse_word(std::string_view text, std::span<const std::string> names) {
  std::istringstream in{std::string(text)};
  Word w;
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    bool inv = false;
    if (tok.size() > 3 && tok.ends_with("^-1")) {
      inv = true;
      tok.resize(tok.size() - 3);
    }
    auto it = std::find(names.begin(), names.end(), tok);
    if (it == names.end()) throw std::invalid_argument("parse_word: unknown generator '" + tok + "'");
    w.push_back(letter(static_cast<int>(it - names.begin()), inv));
  }
  return w;
}

Word to_free_word(const GeneratorWord& w) {
  Word out;
  for (Letter l : w.letters()) {
    switch (l) {
      case Letter::S: out.push_back(letter(0)); break;
      case Letter::U: out.push_back(letter(1)); break;
      case Letter::U2: out.push_back(letter(1, true)); break;
      case Letter::T:
        out.push_back(letter(0));
        out.push_back(letter(1));
        break;
      case Letter::Tinv:
        out.push_back(letter(1, true));
        out.push_back(letter(0, true));
        break;
    }
  }
  return out;
}

GeneratorWord to_psl_word(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (int l : w) {
    if (letter_gen(l) == 0)
      out.push_back(Letter::S);
    else
      out.push_back(l > 0 ? Letter::U : Letter::U2);
  }
  return GeneratorWord(Alphabet::psl, std::move(out)).normalized();
}

Mat2 evaluate_sl(const Word& w) {
  static const Mat2 s = gens::S(), u = gens::U();
  static const Mat2 si = gens::S().inverse(), ui = gens::U().inverse();
  Mat2 r;
  for (int l : w) {
    bool is_s = letter_gen(l) == 0;
    if (l > 0)
      r = r * (is_s ? s : u);
    else
      r = r * (is_s ? si : ui);
  }
  return r;
}

}  // namespace modgroup
