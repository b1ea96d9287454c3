#include "modgroup/properties.hpp"

#include <functional>
#include <numeric>

#include "modgroup/autf2.hpp"
#include "modgroup/rewriting.hpp"

namespace modgroup::props {

Mat2 random_sl2(std::mt19937_64& rng, long max_entry) {
  std::uniform_int_distribution<int> length(0, 200), step(-6, 6);
  const Mat2 s = gens::S();
  Mat2 x;
  int n = length(rng);
  for (int i = 0; i < n; ++i) {
    int k = step(rng);
    Mat2 y = k == 0 ? x * s : x * Mat2(1, k, 0, 1);
    bool ok = abs(y.a()) <= max_entry && abs(y.b()) <= max_entry && abs(y.c()) <= max_entry &&
              abs(y.d()) <= max_entry;
    if (ok) x = y;
  }
  return x;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long max_abs) {
  std::uniform_int_distribution<long> entry(-max_abs, max_abs);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
  return m;
}

namespace {

Integer det(const IntMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  if (rows.size() == 1) return m(rows[0], cols[0]);
  Integer total = 0;
  std::vector<std::size_t> rest(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (m(rows[0], cols[j]) == 0) continue;
    std::vector<std::size_t> sub;
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (k != j) sub.push_back(cols[k]);
    Integer term = m(rows[0], cols[j]) * det(m, rest, sub);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

AbelianInvariants determinantal_invariants(const IntMatrix& m) {
  const std::size_t kmax = std::min(m.rows(), m.cols());
  std::vector<Integer> factors;
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t k = 1; k <= kmax; ++k) {
    Integer d = 0;
    for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        Integer v = det(m, rows, cols);
        d = gcd(d, v);
      });
    });
    if (d == 0) break;
    factors.push_back(d / prev);
    prev = d;
    rank = k;
  }
  return AbelianInvariants::from_cyclic_orders(std::move(factors), static_cast<long>(m.cols() - rank));
}

bool euler_identity_holds(const CosetTable& t) {
  long f2 = 0, f3 = 0;
  for (int c = 0; c < t.size(); ++c) {
    f2 += t.s[static_cast<std::size_t>(c)] == c;
    f3 += t.u[static_cast<std::size_t>(c)] == c;
  }
  long rest = t.size() - 3 * f2 - 4 * f3;
  if (rest % 6 != 0 || rest < -6) return false;
  KuroshDecomposition k = kurosh_decompose(t);
  return t.size() == 6 * (k.free_rank - 1) + 3 * k.f2 + 4 * k.f3;
}

std::vector<FiniteGroup> test_groups() {
  std::vector<FiniteGroup> out;
  for (const char* spec : {"cyclic:2", "cyclic:3", "cyclic:4", "cyclic:6", "abelian:2,2", "abelian:4,2", "abelian:3,3",
                           "abelian:4,4", "dihedral:3", "dihedral:4", "dihedral:5", "dihedral:6", "quaternion",
                           "alt:4", "sym:4", "alt:5"})
    out.push_back(FiniteGroup::parse(spec));
  return out;
}

std::vector<std::string> check_euler_identity(long max_m) {
  std::vector<std::string> failures;
  auto check = [&](const CosetTable& t, const std::string& label) {
    try {
      if (!euler_identity_holds(t)) failures.push_back("Euler identity fails for " + label);
    } catch (const std::exception& e) {
      failures.push_back(label + ": " + e.what());
    }
  };
  for (long m = 1; m <= max_m; ++m) {
    for (long n = 1; n <= m; ++n)
      if (m % n == 0) check(congruence_table(m, n), "PG(" + std::to_string(m) + "," + std::to_string(n) + ")");
    check(gamma0_table(m), "PG0(" + std::to_string(m) + ")");
  }
  for (const FiniteGroup& g : test_groups())
    check(stabilizer_image_table(g, default_epimorphism(g)), "image for " + g.name());
  return failures;
}

std::vector<std::string> check_word_round_trips(std::uint64_t seed, int count, long max_entry) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> failures;
  for (int i = 0; i < count; ++i) {
    Mat2 x = random_sl2(rng, max_entry);
    PslElement e(x);
    if (!(word_to_matrix(matrix_to_word(e)) == e)) failures.push_back("PSL round trip fails for " + x.to_string());
    if (!(evaluate(matrix_to_sl_word(x)) == x)) failures.push_back("SL round trip fails for " + x.to_string());
  }
  return failures;
}

std::vector<std::string> check_snf_oracle(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  std::uniform_int_distribution<long> span(1, 9);
  std::vector<std::string> failures;
  for (int done = 0; done < count;) {
    IntMatrix m = random_matrix(rng, dim(rng), dim(rng), span(rng));
    AbelianInvariants expected = determinantal_invariants(m);
    Integer order = 1;
    for (const Integer& d : expected.torsion) order *= d;
    if (order > 10'000) continue;
    ++done;
    AbelianInvariants dense = smith_invariants(m, m.cols());
    std::vector<rs::SparseRow> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      rs::SparseRow row;
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (m(r, c) != 0) row.emplace_back(static_cast<int>(c), m(r, c).get_si());
      rows.push_back(std::move(row));
    }
    AbelianInvariants sparse = smith_invariants(rows, m.cols());
    if (!(dense == expected) || !(sparse == expected))
      failures.push_back("SNF mismatch: dense " + dense.to_string() + ", sparse " + sparse.to_string() +
                         ", oracle " + expected.to_string());
  }
  return failures;
}

std::vector<std::string> check_relator_soundness() {
  std::vector<std::string> failures;
  for (const FiniteGroup& g : test_groups())
    if (!relators_fix_all(g)) failures.push_back("relator moves a signed epimorphism onto " + g.name());
  return failures;
}

}  // namespace modgroup::props
