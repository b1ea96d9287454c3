#include "modgroup/rewriting.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace modgroup {

namespace {

const std::vector<Word>& psl_relators() {
  static const std::vector<Word> rels{{1, 1}, {2, 2, 2}};
  return rels;
}

const std::vector<Word>& sl_relators() {
  // S^4, S^2 U^-3
  static const std::vector<Word> rels{{1, 1, 1, 1}, {1, 1, -2, -2, -2}};
  return rels;
}

std::vector<std::string> symbol_names(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  return names;
}

}  // namespace

SchreierTransversal transversal(const CosetTable& t) {
  SchreierTransversal tr;
  tr.tree = rs::bfs_transversal(t.action());
  tr.words.reserve(tr.tree.words.size());
  for (const Word& w : tr.tree.words) tr.words.push_back(to_psl_word(w));
  return tr;
}

std::vector<SchreierGenerator> schreier_generators(const CosetTable& t, const SchreierTransversal& tr) {
  rs::PermAction action = t.action();
  rs::SchreierSymbols sym = rs::schreier_symbols(action, tr.tree);
  std::vector<SchreierGenerator> out;
  out.reserve(static_cast<std::size_t>(sym.count()));
  for (auto [p, g] : sym.origin) {
    SchreierGenerator gen;
    gen.coset = p;
    gen.generator = g == 0 ? Letter::S : Letter::U;
    gen.word = to_psl_word(rs::schreier_word(action, tr.tree, p, g));
    gen.element = word_to_matrix(gen.word);
    out.push_back(std::move(gen));
  }
  return out;
}

// ---------------------------------------------------------------------------

AbelianInvariants KuroshDecomposition::abelianization() const {
  std::vector<Integer> orders;
  for (long i = 0; i < f2; ++i) orders.emplace_back(2);
  for (long i = 0; i < f3; ++i) orders.emplace_back(3);
  return AbelianInvariants::from_cyclic_orders(std::move(orders), free_rank);
}

std::string KuroshDecomposition::to_string() const {
  std::string s = free_rank == 0 ? "" : "F" + std::to_string(free_rank);
  for (long i = 0; i < f2; ++i) s += (s.empty() ? "" : " * ") + std::string("Z/2");
  for (long i = 0; i < f3; ++i) s += (s.empty() ? "" : " * ") + std::string("Z/3");
  return s.empty() ? "1" : s;
}

KuroshDecomposition kurosh_decompose(const CosetTable& t) {
  KuroshDecomposition k;
  k.index = t.size();
  SchreierTransversal tr = transversal(t);
  for (int c = 0; c < t.size(); ++c) {
    if (t.act(c, Letter::S) == c) {
      ++k.f2;
      k.witnesses.push_back({c, tr.words[static_cast<std::size_t>(c)], 2});
    }
  }
  for (int c = 0; c < t.size(); ++c) {
    if (t.act(c, Letter::U) == c) {
      ++k.f3;
      k.witnesses.push_back({c, tr.words[static_cast<std::size_t>(c)], 3});
    }
  }
  long six_k_minus_one = k.index - 3 * k.f2 - 4 * k.f3;
  if (six_k_minus_one % 6 != 0 || six_k_minus_one < -6)
    throw std::logic_error("kurosh_decompose: Euler characteristic gives rank (" +
                           std::to_string(six_k_minus_one) + ")/6 + 1; table is corrupt");
  k.free_rank = 1 + six_k_minus_one / 6;
  return k;
}

bool is_free(const CosetTable& t) {
  KuroshDecomposition k = kurosh_decompose(t);
  return k.f2 == 0 && k.f3 == 0;
}

long free_rank(const CosetTable& t) {
  KuroshDecomposition k = kurosh_decompose(t);
  if (k.f2 != 0 || k.f3 != 0) throw std::invalid_argument("free_rank: subgroup has torsion");
  return k.free_rank;
}

// ---------------------------------------------------------------------------

AbelianInvariants SubgroupPresentation::abelianization() const {
  std::vector<rs::SparseRow> rows;
  for (const Word& r : relators) {
    std::vector<long> e = exponent_sums(r, generator_count());
    rs::SparseRow row;
    for (std::size_t g = 0; g < e.size(); ++g)
      if (e[g] != 0) row.emplace_back(static_cast<int>(g), e[g]);
    rows.push_back(std::move(row));
  }
  return smith_invariants(rows, static_cast<std::size_t>(generator_count()));
}

namespace {

// Substitutes generator g by `value` in w.
Word substitute(const Word& w, int g, const Word& value) {
  Word out;
  for (int l : w) {
    if (letter_gen(l) != g) {
      out.push_back(l);
    } else if (l > 0) {
      out.insert(out.end(), value.begin(), value.end());
    } else {
      Word inv = inverse(value);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return out;
}

// Generators occurring exactly once in some relator are solved for and
// eliminated along with that relator.
void eliminate_generators(std::vector<Word>& relators, std::vector<char>& alive) {
  for (;;) {
    std::sort(relators.begin(), relators.end(),
              [](const Word& a, const Word& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
    relators.erase(std::unique(relators.begin(), relators.end()), relators.end());
    std::size_t which = relators.size();
    int gen = -1;
    for (std::size_t i = 0; i < relators.size() && gen < 0; ++i) {
      const Word& r = relators[i];
      for (int l : r) {
        int g = letter_gen(l);
        if (std::count_if(r.begin(), r.end(), [g](int x) { return letter_gen(x) == g; }) == 1) {
          gen = g;
          which = i;
          break;
        }
      }
    }
    if (gen < 0) return;
    Word r = relators[which];
    auto pos = std::find_if(r.begin(), r.end(), [gen](int x) { return letter_gen(x) == gen; });
    std::rotate(r.begin(), pos, r.end());
    // r = g^e w, so g^e = w^-1.
    Word rest(r.begin() + 1, r.end());
    Word value = r.front() > 0 ? inverse(rest) : rest;
    relators.erase(relators.begin() + static_cast<long>(which));
    std::vector<Word> next;
    for (const Word& other : relators) {
      Word w = canonical_relator(substitute(other, gen, value));
      if (!w.empty()) next.push_back(std::move(w));
    }
    relators = std::move(next);
    alive[static_cast<std::size_t>(gen)] = 0;
  }
}

}  // namespace

SubgroupPresentation subgroup_presentation(const CosetTable& t, const SchreierTransversal& tr, rs::Exec exec) {
  rs::PermAction action = t.action();
  rs::SchreierSymbols sym = rs::schreier_symbols(action, tr.tree);
  std::vector<Word> relators = rs::rewrite_relators(action, sym, psl_relators(), exec);
  std::vector<char> alive(static_cast<std::size_t>(sym.count()), 1);
  eliminate_generators(relators, alive);

  std::vector<int> fresh(alive.size(), -1);
  SubgroupPresentation pres;
  for (std::size_t s = 0; s < alive.size(); ++s) {
    if (!alive[s]) continue;
    fresh[s] = pres.generator_count();
    auto [p, g] = sym.origin[s];
    pres.witnesses.push_back(to_psl_word(rs::schreier_word(action, tr.tree, p, g)));
  }
  for (Word& r : relators) {
    for (int& l : r) l = letter(fresh[static_cast<std::size_t>(letter_gen(l))], l < 0);
    pres.relators.push_back(canonical_relator(r));
  }
  std::sort(pres.relators.begin(), pres.relators.end());
  return pres;
}

std::string serialize(const SubgroupPresentation& p) {
  std::ostringstream out;
  out << "gens " << p.generator_count() << "\n";
  for (const GeneratorWord& w : p.witnesses) out << w.to_string() << "\n";
  auto names = symbol_names(p.generator_count());
  out << "relators " << p.relators.size() << "\n";
  for (const Word& r : p.relators) out << format_word(r, names) << "\n";
  return out.str();
}

SubgroupPresentation parse_presentation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  auto next_line = [&]() {
    if (!std::getline(in, line)) throw std::invalid_argument("parse_presentation: truncated input");
    return line;
  };
  std::istringstream head(next_line());
  std::string tag;
  long g = -1;
  if (!(head >> tag >> g) || tag != "gens" || g < 0) throw std::invalid_argument("parse_presentation: expected 'gens g'");
  SubgroupPresentation p;
  for (long i = 0; i < g; ++i) p.witnesses.push_back(GeneratorWord::parse(next_line(), Alphabet::psl));
  std::istringstream rhead(next_line());
  long r = -1;
  if (!(rhead >> tag >> r) || tag != "relators" || r < 0)
    throw std::invalid_argument("parse_presentation: expected 'relators r'");
  auto names = symbol_names(static_cast<int>(g));
  for (long i = 0; i < r; ++i) p.relators.push_back(parse_word(next_line(), names));
  return p;
}

std::vector<GeneratorWord> subgroup_generator_words(const CosetTable& t) {
  std::vector<GeneratorWord> out;
  for (const SchreierGenerator& g : schreier_generators(t, transversal(t))) out.push_back(matrix_to_word(g.element));
  return out;
}

SlStructure sl_structure(long m, long n) {
  CosetTable t = congruence_table(m, n);
  KuroshDecomposition k = kurosh_decompose(t);
  SlStructure st;
  st.central_minus_identity = contains_minus_identity(m, n);
  st.free_part_rank = k.free_rank;
  if (st.central_minus_identity) {
    rs::PermAction action = t.action();
    rs::Transversal tree = rs::bfs_transversal(action);
    rs::SchreierSymbols sym = rs::schreier_symbols(action, tree);
    st.abelianization = smith_invariants(rs::relation_rows(action, sym, sl_relators()),
                                         static_cast<std::size_t>(sym.count()));
    st.free = false;
    st.tag = (k.f2 == 0 && k.f3 == 0) ? "free x central Z/2" : "central Z/2 extension of " + k.to_string();
  } else {
    st.free = k.f2 == 0 && k.f3 == 0;
    st.abelianization = k.abelianization();
    st.tag = st.free ? "free" : "isomorphic to " + k.to_string();
  }
  return st;
}

}  // namespace modgroup
