#include "modgroup/abelianize.hpp"

#include "modgroup/autf2.hpp"

namespace modgroup {

AbelianInvariants theorem1_predicted(long m, long n) {
  check_level(m, n);
  if (m < 2) throw std::invalid_argument("theorem1_predicted: G = Z/m x Z/n must be nontrivial");
  if (m == 2 && n == 1) return AbelianInvariants::from_cyclic_orders({2, 4}, 1);
  if (m == 3 && n == 1) return AbelianInvariants::from_cyclic_orders({3, 3}, 1);
  if (m == 2 && n == 2) return AbelianInvariants::from_cyclic_orders({2, 2, 2}, 2);
  Integer rank = 1 + index_formula(m, n) / 12;
  return AbelianInvariants::from_cyclic_orders({m, n}, rank.get_si());
}

AbelianInvariants hall_abelianization(long m, long n, rs::Exec exec) {
  check_level(m, n);
  if (m < 3 || (m == 3 && n == 1))
    throw std::invalid_argument("hall_abelianization: requires m >= 3 and (m,n) != (3,1)");
  CosetTable t = congruence_table(m, n);
  SubgroupPresentation pres = subgroup_presentation(t, transversal(t), exec);
  if (!pres.relators.empty()) throw std::logic_error("hall_abelianization: Gamma(m,n) presentation is not free");

  const std::size_t r = static_cast<std::size_t>(pres.generator_count());
  IntMatrix mat;
  auto row = [r](Integer u, Integer v) {
    std::vector<Integer> out(r + 2, 0);
    out[0] = std::move(u);
    out[1] = std::move(v);
    return out;
  };
  for (const GeneratorWord& w : pres.witnesses) {
    Mat2 x = evaluate_sl(to_free_word(w));
    if (!is_member(m, n, x)) x = -x;
    if (!is_member(m, n, x)) throw std::logic_error("hall_abelianization: generator outside Gamma(m,n)");
    mat.append_row(row(x.a() - 1, -x.c()));
    mat.append_row(row(-x.b(), x.d() - 1));
  }
  mat.append_row(row(m, 0));
  mat.append_row(row(0, n));
  return smith_invariants(mat, r + 2);
}

AbelianInvariants full_abelianization(const FiniteGroup& g, Epimorphism pi0, EnumerationOptions options,
                                      rs::Exec exec) {
  OrbitStabilizer os = orbit_stabilizer(g, pi0, {AutGen::P, AutGen::O, AutGen::R, AutGen::Ax, AutGen::Ay});
  if (static_cast<std::size_t>(os.signed_orbit_size) > options.ceiling) throw CeilingExceeded(options.ceiling);
  rs::SchreierSymbols sym = rs::schreier_symbols(os.action, os.transversal);
  auto rows = rs::relation_rows(os.action, sym, aut_f2_relators(), exec);
  return smith_invariants(rows, static_cast<std::size_t>(sym.count()));
}

Theorem2Verdict theorem2_verdict(const FiniteGroup& g, Epimorphism pi0, EnumerationOptions options) {
  if (g.is_perfect()) throw OutOfTheoremScope("theorem2_verdict: " + g.name() + " is perfect; out of theorem scope");
  CosetTable t = stabilizer_image_table(g, pi0, options);
  Theorem2Verdict v;
  v.image_index = t.size();
  v.kurosh = kurosh_decompose(t);
  v.image_abelianization = subgroup_presentation(t, transversal(t)).abelianization();
  if (!(v.image_abelianization == v.kurosh.abelianization()))
    throw std::logic_error("theorem2_verdict: presentation and Kurosh decomposition disagree");
  v.free_rank = v.image_abelianization.free_rank;
  v.certified = v.free_rank >= 1;
  return v;
}

SatohReport satoh_report(long m) {
  if (m < 3) throw std::invalid_argument("satoh_crosscheck: requires m >= 3");
  SatohReport rep;
  rep.m = m;
  rep.hall = hall_abelianization(m, m);
  rep.expected = AbelianInvariants::from_cyclic_orders({m, m}, free_rank(congruence_table(m, m)));
  rep.ok = rep.hall == rep.expected;
  if (prime_divisors(m) == std::vector<long>{m}) {
    rep.prime_rank = 1 + (m * m * m - m) / 12;
    rep.ok = rep.ok && rep.hall.free_rank == *rep.prime_rank;
  }
  return rep;
}

bool satoh_crosscheck(long m) { return satoh_report(m).ok; }

}  // namespace modgroup
